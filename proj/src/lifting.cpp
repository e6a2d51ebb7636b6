#include "pqr/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pqr/base.hpp"
#include "pqr/gf.hpp"

namespace pqr {

namespace {

// Cocycle model of a group of order p^(dim+1): elements (v, c) with
// v in F_p^dim and c in F_p, multiplied as (u,a)(v,b) = (u+v, a+b+f(u,v)).
// A point index packs the pair as c*p^dim + sum v_i p^i, so the group acts
// on itself by left translation and the dim basis translations generate it
// (their commutators reach the center because f has nondegenerate
// antisymmetrization).
struct EsForm {
    std::uint64_t p = 2;
    unsigned dim = 0;
    std::uint64_t vspace = 1;  // p^dim
    std::uint64_t points = 2;  // p^(dim+1)
    std::vector<unsigned> f;   // dim x dim, entries mod p

    unsigned fij(unsigned i, unsigned j) const { return f[i * dim + j]; }

    std::vector<unsigned> unpack(std::uint64_t venc) const {
        std::vector<unsigned> v(dim);
        for (unsigned i = 0; i < dim; ++i) {
            v[i] = unsigned(venc % p);
            venc /= p;
        }
        return v;
    }

    std::uint64_t pack(const std::vector<unsigned>& v) const {
        std::uint64_t enc = 0;
        for (unsigned i = dim; i-- > 0;) enc = enc * p + v[i] % p;
        return enc;
    }

    unsigned feval(const std::vector<unsigned>& u, const std::vector<unsigned>& v) const {
        std::uint64_t acc = 0;
        for (unsigned i = 0; i < dim; ++i) {
            if (u[i] == 0) continue;
            std::uint64_t row = 0;
            for (unsigned j = 0; j < dim; ++j) row += std::uint64_t(fij(i, j)) * v[j];
            acc += u[i] * (row % p);
        }
        return unsigned(acc % p);
    }

    std::uint64_t mult(std::uint64_t x, std::uint64_t y) const {
        auto u = unpack(x % vspace);
        auto v = unpack(y % vspace);
        std::vector<unsigned> w(dim);
        for (unsigned i = 0; i < dim; ++i) w[i] = unsigned((u[i] + v[i]) % p);
        std::uint64_t c = (x / vspace + y / vspace + feval(u, v)) % p;
        return c * vspace + pack(w);
    }

    Perm translation(std::uint64_t g) const {
        std::vector<std::uint16_t> img(points);
        for (std::uint64_t x = 0; x < points; ++x) img[x] = std::uint16_t(mult(g, x));
        return Perm::from_images(std::move(img));
    }

    std::vector<Perm> basis_translations() const {
        std::vector<Perm> gens;
        std::uint64_t e = 1;
        for (unsigned i = 0; i < dim; ++i, e *= p) gens.push_back(translation(e));
        return gens;
    }
};

EsForm blank_form(std::uint64_t p, unsigned n) {
    EsForm form;
    form.p = p;
    form.dim = 2 * n;
    form.vspace = 1;
    for (unsigned i = 0; i <= form.dim; ++i) {
        if (form.vspace > Perm::kMaxDegree / p)
            throw OverCapError("extraspecial degree p^(1+2n) exceeds the permutation degree cap");
        form.vspace *= p;
    }
    form.points = form.vspace;
    form.vspace /= p;
    form.f.assign(std::size_t(form.dim) * form.dim, 0);
    return form;
}

EsForm standard_form(std::uint64_t p, unsigned n, EsType type) {
    EsForm form = blank_form(p, n);
    const unsigned d = form.dim;
    if (type == EsType::minus) {
        // hyperbolic pairs plus one anisotropic block x^2 + xy + y^2
        for (unsigned i = 0; i + 1 < n; ++i) form.f[std::size_t(2 * i) * d + 2 * i + 1] = 1;
        form.f[std::size_t(d - 2) * d + d - 2] = 1;
        form.f[std::size_t(d - 2) * d + d - 1] = 1;
        form.f[std::size_t(d - 1) * d + d - 1] = 1;
    } else {
        // alternating pairs; for p = 2 the squaring form is hyperbolic
        for (unsigned i = 0; i < n; ++i) form.f[std::size_t(2 * i) * d + 2 * i + 1] = 1;
    }
    return form;
}

std::string es_name(std::uint64_t p, unsigned n, EsType type) {
    std::string s = std::to_string(p) + "^(1+" + std::to_string(2 * n) + ")";
    if (type == EsType::plus) s += "+";
    if (type == EsType::minus) s += "-";
    return s;
}

void check_es_request(std::uint64_t p, unsigned n, EsType type) {
    if (n == 0) throw PreconditionError("extraspecial groups need n >= 1");
    if (!is_prime_u64(p)) throw PreconditionError("extraspecial groups need a prime p");
    if (type == EsType::exp_p) {
        if (p == 2) throw PreconditionError("the exponent-p type needs an odd prime");
    } else if (type == EsType::plus || type == EsType::minus) {
        if (p != 2) throw PreconditionError("the plus and minus types are the p = 2 classes");
    } else {
        throw PreconditionError("unsupported extraspecial type request");
    }
}

GroupPtr group_from_form(const EsForm& form, std::uint64_t p, EsType type, const std::string& name) {
    auto G = Group::from_generators(form.basis_translations(), name);
    if (G->order() != BigInt(form.points))
        throw ValidationError("cocycle presentation generates the wrong order");
    if (extraspecial_type(G, p) != type)
        throw ValidationError("cocycle presentation has the wrong isomorphism type");
    return G;
}

// action of a dim x dim matrix mod p on digit vectors, row-major
struct VMat {
    std::uint64_t p = 2;
    unsigned dim = 0;
    std::vector<unsigned> a;

    std::vector<unsigned> apply(const std::vector<unsigned>& v) const {
        std::vector<unsigned> w(dim);
        for (unsigned i = 0; i < dim; ++i) {
            std::uint64_t acc = 0;
            for (unsigned j = 0; j < dim; ++j) acc += std::uint64_t(a[i * dim + j]) * v[j];
            w[i] = unsigned(acc % p);
        }
        return w;
    }

    bool is_identity() const {
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j)
                if (a[i * dim + j] % p != (i == j ? 1u : 0u)) return false;
        return true;
    }

    VMat times(const VMat& b) const {
        VMat c{p, dim, std::vector<unsigned>(std::size_t(dim) * dim, 0)};
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned k = 0; k < dim; ++k) {
                std::uint64_t aik = a[i * dim + k];
                if (aik == 0) continue;
                for (unsigned j = 0; j < dim; ++j)
                    c.a[i * dim + j] =
                        unsigned((c.a[i * dim + j] + aik * b.a[k * dim + j]) % p);
            }
        return c;
    }
};

std::uint64_t matrix_order(const VMat& m) {
    VMat acc = m;
    for (std::uint64_t k = 1; k <= 1000000; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.times(m);
    }
    throw ValidationError("automorphism matrix order out of range");
}

std::vector<unsigned> basis_vector(unsigned dim, unsigned i) {
    std::vector<unsigned> e(dim, 0);
    e[i] = 1;
    return e;
}

struct SemidirectParts {
    GroupPtr X;
    GroupPtr E;
    Perm aut;
    std::uint64_t aut_order;
};

// Extend the matrix action on V = E/Z(E) to an automorphism of the cocycle
// presentation: (v, c) -> (Mv, c + r(v)) where r solves the coboundary
// equation r(u+v) - r(u) - r(v) = f(Mu, Mv) - f(u, v).  For odd p the
// symmetric difference d(u, v) gives r(v) = d(v, v)/2; for p = 2 the form
// preservation kills the diagonal of d and r is the polarization sum.
SemidirectParts semidirect_from_form(const EsForm& form, const VMat& m, std::uint64_t p,
                                     EsType type, const std::string& base_name) {
    const unsigned dim = form.dim;

    // the matrix must preserve the commutator form, and for p = 2 the
    // squaring form as well (otherwise it is not an automorphism type at all)
    for (unsigned i = 0; i < dim; ++i) {
        auto mei = m.apply(basis_vector(dim, i));
        for (unsigned j = i + 1; j < dim; ++j) {
            auto mej = m.apply(basis_vector(dim, j));
            unsigned lhs = unsigned((form.feval(mei, mej) + p - form.feval(mej, mei)) % p);
            unsigned rhs = unsigned((form.fij(i, j) + p - form.fij(j, i)) % p);
            if (lhs != rhs) throw ValidationError("the matrix does not preserve the commutator form");
        }
    }
    if (p == 2) {
        for (std::uint64_t venc = 0; venc < form.vspace; ++venc) {
            auto v = form.unpack(venc);
            auto mv = m.apply(v);
            if (form.feval(mv, mv) != form.feval(v, v))
                throw ValidationError("the matrix does not preserve the squaring form");
        }
    }

    const std::uint64_t aut_order = matrix_order(m);

    std::vector<unsigned> r(form.vspace, 0);
    if (p % 2 == 1) {
        const unsigned inv2 = unsigned((p + 1) / 2);
        for (std::uint64_t venc = 0; venc < form.vspace; ++venc) {
            auto v = form.unpack(venc);
            auto mv = m.apply(v);
            unsigned d = unsigned((form.feval(mv, mv) + p - form.feval(v, v)) % p);
            r[venc] = unsigned((std::uint64_t(d) * inv2) % p);
        }
    } else {
        std::vector<unsigned> dtab(std::size_t(dim) * dim, 0);
        for (unsigned i = 0; i < dim; ++i) {
            auto mei = m.apply(basis_vector(dim, i));
            for (unsigned j = i + 1; j < dim; ++j) {
                auto mej = m.apply(basis_vector(dim, j));
                dtab[i * dim + j] =
                    (form.feval(mei, mej) ^ form.feval(basis_vector(dim, i), basis_vector(dim, j))) & 1u;
            }
        }
        for (std::uint64_t venc = 0; venc < form.vspace; ++venc) {
            unsigned acc = 0;
            for (unsigned i = 0; i < dim; ++i) {
                if (!((venc >> i) & 1)) continue;
                for (unsigned j = i + 1; j < dim; ++j)
                    if ((venc >> j) & 1) acc ^= dtab[i * dim + j];
            }
            r[venc] = acc;
        }
    }

    if (form.vspace <= 256) {
        for (std::uint64_t ue = 0; ue < form.vspace; ++ue) {
            auto u = form.unpack(ue);
            auto mu = m.apply(u);
            for (std::uint64_t ve = 0; ve < form.vspace; ++ve) {
                auto v = form.unpack(ve);
                std::vector<unsigned> w(dim);
                for (unsigned i = 0; i < dim; ++i) w[i] = unsigned((u[i] + v[i]) % p);
                unsigned lhs = unsigned((r[form.pack(w)] + 2 * p - r[ue] - r[ve]) % p);
                unsigned rhs = unsigned((form.feval(mu, m.apply(v)) + p - form.feval(u, v)) % p);
                if (lhs != rhs) throw ValidationError("center twist does not solve the coboundary equation");
            }
        }
    }

    std::vector<std::uint16_t> img(form.points);
    for (std::uint64_t x = 0; x < form.points; ++x) {
        std::uint64_t venc = x % form.vspace, c = x / form.vspace;
        auto w = m.apply(form.unpack(venc));
        img[x] = std::uint16_t(((c + r[venc]) % p) * form.vspace + form.pack(w));
    }
    Perm aut = Perm::from_images(std::move(img));

    // spot-check the automorphism identity on the generating translations
    Perm auti = aut.inverse();
    std::uint64_t e = 1;
    for (unsigned i = 0; i < dim; ++i, e *= p) {
        auto mei = m.apply(basis_vector(dim, i));
        std::uint64_t image_pt = std::uint64_t(r[e]) * form.vspace + form.pack(mei);
        if (aut * form.translation(e) * auti != form.translation(image_pt))
            throw ValidationError("the matrix does not induce an automorphism of the cocycle");
    }

    auto E = group_from_form(form, p, type, base_name);
    auto gens = form.basis_translations();
    gens.push_back(aut);
    auto X = Group::from_generators(std::move(gens),
                                    base_name + ":" + std::to_string(aut_order));
    if (X->order() != BigInt(form.points) * aut_order)
        throw ValidationError("semidirect product has the wrong order");
    return {std::move(X), std::move(E), std::move(aut), aut_order};
}

}  // namespace

GroupPtr extraspecial_group(std::uint64_t p, unsigned n, EsType type) {
    check_es_request(p, n, type);
    EsForm form = standard_form(p, n, type);
    return group_from_form(form, p, type, es_name(p, n, type));
}

GroupPtr extraspecial_semidirect(std::uint64_t p, unsigned n, EsType type,
                                 const std::vector<std::vector<unsigned>>& mat) {
    check_es_request(p, n, type);
    const unsigned dim = 2 * n;
    if (mat.size() != dim) throw PreconditionError("the action matrix must be 2n x 2n");
    VMat m{p, dim, {}};
    m.a.reserve(std::size_t(dim) * dim);
    for (const auto& row : mat) {
        if (row.size() != dim) throw PreconditionError("the action matrix must be 2n x 2n");
        for (unsigned x : row) m.a.push_back(unsigned(x % p));
    }
    EsForm form = standard_form(p, n, type);
    return semidirect_from_form(form, m, p, type, es_name(p, n, type)).X;
}

RamificationReport fully_ramified_check(const GroupPtr& parent, const GroupPtr& n,
                                        bool exhaust_all) {
    if (!is_normal(parent, n)) throw PreconditionError("the subgroup is not normal");
    auto fac = factorize(n->order_u64());
    if (fac.size() != 1) throw PreconditionError("the subgroup is not a p-group");
    if (n->is_abelian())
        throw NoneFoundError("no center character is nontrivial on the derived subgroup");

    auto Z = center(n);
    auto D = derived_subgroup(n);
    std::vector<Perm> central_commutators;
    for (const Perm& d : D->elements())
        if (!d.is_identity() && Z->contains(d)) central_commutators.push_back(d);
    if (central_commutators.empty())
        throw NoneFoundError("no center character is nontrivial on the derived subgroup");

    CharTable tz = character_table(Z);
    CharTable tn = character_table(n);
    const auto& ze = Z->elements();
    std::vector<std::uint32_t> zn_class(ze.size()), zz_class(ze.size());
    for (std::size_t t = 0; t < ze.size(); ++t) {
        zn_class[t] = n->class_of(ze[t]);
        zz_class[t] = Z->class_of(ze[t]);
    }
    const BigInt zorder = Z->order();
    const BigInt index = n->order() / zorder;
    const Cyclotomic one = Cyclotomic::integer(1);

    std::uint64_t first_e = 0;
    bool ok = true, seen = false;
    for (std::size_t phi = 0; phi < tz.size(); ++phi) {
        bool nontrivial = false;
        for (const Perm& d : central_commutators)
            if (tz.value(phi, Z->class_of(d)) != one) {
                nontrivial = true;
                break;
            }
        if (!nontrivial) continue;

        // Frobenius reciprocity: <phi^n, theta> = <phi, theta restricted to Z>
        std::size_t constituents = 0;
        BigInt e_val = 0;
        for (std::size_t th = 0; th < tn.size(); ++th) {
            Cyclotomic inner = Cyclotomic::integer(0);
            for (std::size_t t = 0; t < ze.size(); ++t)
                inner = inner + tn.value(th, zn_class[t]) * tz.value(phi, zz_class[t]).conjugated();
            if (inner.is_zero()) continue;
            ++constituents;
            if (!inner.is_rational())
                throw ValidationError("restriction inner product is not rational");
            BigRat mult = inner.rational_value() / BigRat(zorder);
            if (denominator(mult) != 1)
                throw ValidationError("restriction inner product is not an integer multiple of |Z|");
            if (constituents == 1) e_val = BigInt(numerator(mult));
        }
        bool this_ok = (constituents == 1) && (e_val * e_val == index);
        if (!seen) {
            first_e = constituents == 1 ? e_val.convert_to<std::uint64_t>() : 0;
            seen = true;
        }
        ok = ok && this_ok;
        if (!exhaust_all) break;
    }
    if (!seen) throw NoneFoundError("no center character is nontrivial on the derived subgroup");
    return {first_e, ok};
}

CoverScenario make_cover_scenario(GroupPtr X, GroupPtr F, bool check_frattini) {
    CoverScenario sc;
    sc.quot = quotient_action(X, F);
    sc.X = std::move(X);
    sc.F = std::move(F);
    auto fac = factorize(sc.F->order_u64());
    sc.kernel_prime = fac.size() == 1 ? fac[0].first : 0;
    if (check_frattini) {
        if (!subgroup_contains(frattini_subgroup(sc.X), sc.F))
            throw ValidationError("the kernel is not contained in the Frattini subgroup");
        sc.frattini_computed = true;
    }
    return sc;
}

CoverScenario sl2_zm(unsigned m) {
    std::uint64_t p = 0;
    if (m == 25) p = 5;
    if (m == 49) p = 7;
    if (p == 0) throw PreconditionError("supported moduli are odd prime squares 25 and 49");

    Zmod R(m);
    std::vector<RMat> mats;
    mats.push_back(RMat::from_rows(R, {{0, 1}, {m - 1, 0}}));
    mats.push_back(RMat::from_rows(R, {{1, 1}, {0, 1}}));
    auto gens = matrix_vector_action(R, mats);
    Perm t_gen = gens[1];
    auto X = Group::from_generators(std::move(gens), "SL2(Z/" + std::to_string(m) + ")");
    const std::uint64_t kernel_order = p * p * p;
    const std::uint64_t quotient_order = p * (p - 1) * (p + 1);
    if (X->order() != BigInt(kernel_order) * quotient_order)
        throw ValidationError("SL2 construction has the wrong order");

    // T^p lies in the reduction kernel; the closure fills it (order check)
    auto F = normal_closure(X, {t_gen.power(std::int64_t(p))});
    if (F->order_u64() != kernel_order)
        throw ValidationError("reduction kernel has the wrong order");

    auto sc = make_cover_scenario(std::move(X), std::move(F), false);
    sc.multiplier_coprime = true;  // the quotient's multiplier is trivial for p >= 5
    return sc;
}

LiftSet lift_set(const CoverScenario& sc, const Perm& g_rep) {
    if (!sc.quot.image->contains(g_rep))
        throw PreconditionError("the element is not in the quotient image");
    Perm x0 = sc.quot.lift_of(g_rep);
    LiftSet ls{sc.quot.image->class_of(g_rep), g_rep.order(), {}};
    for (const Perm& f : sc.F->elements()) {
        Perm x = x0 * f;
        if (x.order() == ls.order) ls.members.push_back(std::move(x));
    }
    std::sort(ls.members.begin(), ls.members.end());
    return ls;
}

LiftProductReport lift_product_set(const CoverScenario& sc, const std::vector<Perm>& g_reps) {
    Perm qprod = sc.quot.image->identity();
    for (const Perm& g : g_reps) {
        if (!sc.quot.image->contains(g))
            throw PreconditionError("tuple element outside the quotient image");
        qprod = qprod * g;
    }
    if (!qprod.is_identity())
        throw PreconditionError("the quotient tuple does not multiply to the identity");

    const std::uint64_t kernel_order = sc.F->order_u64();
    std::vector<LiftSet> sets;
    sets.reserve(g_reps.size());
    unsigned long long total = 1;
    for (const Perm& g : g_reps) {
        if (gcd_u64(g.order(), kernel_order) != 1)
            throw PreconditionError("tuple orders must be coprime to the kernel order");
        sets.push_back(lift_set(sc, g));
        if (sets.back().members.empty())
            throw ValidationError("a coprime-order quotient element has no same-order lift");
        if (total > caps().lift_products / sets.back().members.size())
            throw OverCapError("lift product set exceeds the product cap");
        total *= sets.back().members.size();
    }

    std::set<Perm> products{sc.X->identity()};
    for (const auto& ls : sets) {
        std::set<Perm> next;
        for (const Perm& s : products)
            for (const Perm& x : ls.members) next.insert(s * x);
        products = std::move(next);
    }
    for (const Perm& s : products)
        if (!sc.F->contains(s)) throw ValidationError("lift products escaped the kernel");

    auto J = commutator_subgroup(sc.F, sc.X);
    bool single = !products.empty() && products.size() == J->order_u64();
    if (single) {
        const Perm inv0 = products.begin()->inverse();
        for (const Perm& s : products)
            if (!J->contains(inv0 * s)) {
                single = false;
                break;
            }
    }
    return {std::vector<Perm>(products.begin(), products.end()), std::move(J), single};
}

bool abelian_coset_identity_check(const GroupPtr& g, const GroupPtr& n,
                                  const std::vector<Perm>& g_reps) {
    if (!is_normal(g, n))
        throw PreconditionError("hypothesis failed: the subgroup is not normal");
    if (!n->is_abelian())
        throw PreconditionError("hypothesis failed: the subgroup is not abelian");
    auto fac = factorize(n->order_u64());
    if (fac.size() != 1)
        throw PreconditionError("hypothesis failed: the subgroup is not a nontrivial p-group");
    const std::uint64_t p = fac[0].first;
    if (subgroup_contains(center(g), n))
        throw PreconditionError("hypothesis failed: the subgroup is central");
    if (minimal_noncentral_normal(g, n)->order() != n->order())
        throw PreconditionError(
            "hypothesis failed: the subgroup is not minimal among noncentral normal subgroups");

    std::vector<Perm> gens;
    for (const Perm& gi : g_reps) {
        if (!g->contains(gi))
            throw PreconditionError("hypothesis failed: a tuple element lies outside the group");
        if (!gi.is_identity()) gens.push_back(gi);
    }
    if (gens.empty() || Group::from_generators(gens)->order() != g->order())
        throw PreconditionError("hypothesis failed: the tuple does not generate the group");
    bool all_p_prime = true;
    for (const Perm& gi : g_reps) all_p_prime = all_p_prime && gi.order() % p != 0;
    if (!all_p_prime && p_residual(g, p)->order() != g->order())
        throw PreconditionError(
            "hypothesis failed: the tuple has p-singular entries and a proper p-residual");

    // g_i [g_i, n] is exactly the n-conjugacy class of g_i
    const auto& ne = n->elements();
    std::set<Perm> acc{g->identity()};
    Perm prod = g->identity();
    for (const Perm& gi : g_reps) {
        std::set<Perm> factor;
        for (const Perm& x : ne) factor.insert(gi.conjugated_by(x));
        std::set<Perm> next;
        for (const Perm& s : acc)
            for (const Perm& t : factor) next.insert(s * t);
        acc = std::move(next);
        prod = prod * gi;
    }
    std::set<Perm> coset;
    for (const Perm& x : ne) coset.insert(prod * x);
    return acc == coset;
}

static SemidirectParts value_scenario_parts(unsigned n, unsigned n_i) {
    if (n < 2 || n > 3 || n_i < 1 || n_i > n)
        throw PreconditionError("supported parameters are n in {2,3} and 1 <= n_i <= n");
    const unsigned dim = 2 * n, fdim = 2 * n_i, hdim = dim - fdim;
    const std::uint64_t cyc = (std::uint64_t(1) << n_i) + 1;

    // field block: F_{2^{2k}} with the minus-type form Tr(norm to F_{2^k});
    // multiplication by a norm-one element of order 2^k + 1 preserves it and
    // acts irreducibly because that element generates the full field over F_2
    GFq fq(2, fdim);
    auto qf = [&](unsigned v) -> unsigned {
        if (v == 0) return 0;
        unsigned t = fq.pow(v, cyc);
        unsigned acc = 0;
        for (unsigned k = 0; k < n_i; ++k) {
            acc = fq.add(acc, t);
            t = fq.mul(t, t);
        }
        if (acc > 1) throw ValidationError("subfield trace left the prime field");
        return acc;
    };

    EsForm form = blank_form(2, n);
    for (unsigned i = 0; i + 1 < hdim; i += 2) form.f[std::size_t(i) * dim + i + 1] = 1;
    for (unsigned i = 0; i < fdim; ++i) {
        form.f[std::size_t(hdim + i) * dim + hdim + i] = qf(1u << i);
        for (unsigned j = i + 1; j < fdim; ++j)
            form.f[std::size_t(hdim + i) * dim + hdim + j] =
                qf((1u << i) ^ (1u << j)) ^ qf(1u << i) ^ qf(1u << j);
    }

    unsigned mu = fq.pow(fq.generator(), (fq.q() - 1) / unsigned(cyc));
    if (fq.element_order(mu) != cyc) throw ValidationError("circle generator has the wrong order");
    VMat m{2, dim, std::vector<unsigned>(std::size_t(dim) * dim, 0)};
    for (unsigned i = 0; i < hdim; ++i) m.a[std::size_t(i) * dim + i] = 1;
    for (unsigned j = 0; j < fdim; ++j) {
        unsigned w = fq.mul(mu, 1u << j);
        for (unsigned i = 0; i < fdim; ++i)
            m.a[std::size_t(hdim + i) * dim + hdim + j] = (w >> i) & 1u;
    }

    return semidirect_from_form(form, m, 2, EsType::minus, es_name(2, n, EsType::minus));
}

GroupPtr value_scenario_group(unsigned n, unsigned n_i) {
    return value_scenario_parts(n, n_i).X;
}

ValueFormulaReport value_formula_check(unsigned n, unsigned n_i) {
    auto parts = value_scenario_parts(n, n_i);
    CharTable t = character_table(parts.X);
    const std::uint32_t aut_class = parts.X->class_of(parts.aut);
    const std::uint64_t target_degree = std::uint64_t(1) << n;
    const Cyclotomic want = Cyclotomic::integer(-(BigInt(1) << (n - n_i)));

    std::size_t rational_rows = 0;
    Cyclotomic got = Cyclotomic::integer(0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.degrees[i] != target_degree) continue;
        const Cyclotomic degval = Cyclotomic::integer(BigInt(t.degrees[i]));
        bool faithful = true;
        for (std::size_t k = 1; k < t.size() && faithful; ++k)
            if (t.value(i, k) == degval) faithful = false;
        if (!faithful) continue;
        const Cyclotomic& v = t.value(i, aut_class);
        if (v.is_rational()) {
            ++rational_rows;
            got = v;
        }
    }
    return {got, rational_rows == 1 && got == want};
}

}  // namespace pqr
