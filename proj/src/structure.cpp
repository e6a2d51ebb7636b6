#include "pqr/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "pqr/action.hpp"

namespace pqr {

namespace {

// subgroup spanned by the given elements, adding only elements that enlarge
// the running chain so the generator list stays short
GroupPtr span_of(unsigned degree, const std::vector<Perm>& elems, std::string name = "") {
    std::vector<Perm> gens;
    std::optional<BSGS> chain;
    for (const Perm& x : elems) {
        if (x.is_identity()) continue;
        if (chain && chain->contains(x)) continue;
        gens.push_back(x);
        chain.emplace(degree, gens);
    }
    if (gens.empty()) return Group::trivial(degree, std::move(name));
    return Group::from_generators(std::move(gens), std::move(name));
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

GroupPtr center(const GroupPtr& G) {
    std::vector<Perm> zs;
    for (const Perm& x : G->elements()) {
        bool commutes = true;
        for (const Perm& g : G->generators())
            if (x * g != g * x) {
                commutes = false;
                break;
            }
        if (commutes) zs.push_back(x);
    }
    return span_of(G->degree(), zs);
}

GroupPtr centralizer(const GroupPtr& G, const Perm& x) {
    std::vector<Perm> cs;
    for (const Perm& g : G->elements())
        if (g * x == x * g) cs.push_back(g);
    return span_of(G->degree(), cs);
}

GroupPtr normalizer(const GroupPtr& G, const GroupPtr& H) {
    std::vector<Perm> ns;
    for (const Perm& g : G->elements()) {
        bool keeps = true;
        for (const Perm& h : H->generators())
            if (!H->contains(h.conjugated_by(g))) {
                keeps = false;
                break;
            }
        if (keeps) ns.push_back(g);
    }
    return span_of(G->degree(), ns);
}

GroupPtr normal_closure(const GroupPtr& G, const std::vector<Perm>& seed) {
    for (const Perm& s : seed)
        if (!G->contains(s)) throw PreconditionError("closure seed outside the group");
    std::vector<Perm> gens;
    std::optional<BSGS> chain;
    std::vector<Perm> work(seed);
    for (std::size_t h = 0; h < work.size(); ++h) {
        const Perm x = work[h];
        if (x.is_identity()) continue;
        if (chain && chain->contains(x)) continue;
        gens.push_back(x);
        chain.emplace(G->degree(), gens);
        for (const Perm& g : G->generators()) work.push_back(x.conjugated_by(g));
    }
    if (gens.empty()) return Group::trivial(G->degree());
    return Group::from_generators(std::move(gens));
}

GroupPtr join_subgroups(const GroupPtr& G, const std::vector<GroupPtr>& parts) {
    std::vector<Perm> gens;
    for (const auto& P : parts)
        for (const Perm& g : P->generators()) gens.push_back(g);
    if (gens.empty()) return Group::trivial(G->degree());
    return Group::from_generators(std::move(gens));
}

GroupPtr commutator_subgroup(const GroupPtr& A, const GroupPtr& B) {
    std::vector<Perm> comms;
    for (const Perm& a : A->generators())
        for (const Perm& b : B->generators())
            comms.push_back(a.inverse() * b.inverse() * a * b);
    GroupPtr J = join_subgroups(A, {A, B});
    return normal_closure(J, comms);
}

GroupPtr derived_subgroup(const GroupPtr& G) {
    std::vector<Perm> comms;
    const auto& gs = G->generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
    if (comms.empty()) return Group::trivial(G->degree());  // cyclic
    return normal_closure(G, comms);
}

bool subgroup_contains(const GroupPtr& big, const GroupPtr& small) {
    for (const Perm& g : small->generators())
        if (!big->contains(g)) return false;
    return true;
}

bool is_normal(const GroupPtr& G, const GroupPtr& H) {
    for (const Perm& g : G->generators())
        for (const Perm& h : H->generators())
            if (!H->contains(h.conjugated_by(g))) return false;
    return true;
}

bool is_perfect(const GroupPtr& G) { return derived_subgroup(G)->order() == G->order(); }

SeriesReport derived_series(const GroupPtr& G) {
    SeriesReport rep{SeriesReport::Kind::derived, {G}, false};
    while (true) {
        GroupPtr D = derived_subgroup(rep.terms.back());
        if (D->order() == rep.terms.back()->order()) break;
        rep.terms.push_back(std::move(D));
    }
    rep.verdict = rep.terms.back()->is_trivial();
    return rep;
}

bool is_solvable(const GroupPtr& G) { return derived_series(G).verdict; }

bool is_nilpotent(const GroupPtr& G) {
    if (G->is_trivial()) return true;
    for (auto [p, e] : factorize(G->order_u64()))
        if (!is_normal(G, sylow_subgroup(G, p))) return false;
    return true;
}

bool is_elementary_abelian(const GroupPtr& G, std::uint64_t p) {
    if (G->is_trivial()) return true;
    if (!G->is_abelian() || !is_power_of(G->order_u64(), p)) return false;
    for (const Perm& g : G->generators())
        if (!g.power(static_cast<std::int64_t>(p)).is_identity()) return false;
    return true;
}

GroupPtr sylow_subgroup(const GroupPtr& G, std::uint64_t p) {
    {
        auto fac = factorize(p);
        if (fac.size() != 1 || fac[0].second != 1) throw PreconditionError("sylow needs a prime");
    }
    std::uint64_t n = G->order_u64();
    std::uint64_t target = 1;
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    if (target == 1) return Group::trivial(G->degree());

    GroupPtr P;
    for (const Perm& x : G->elements()) {
        std::uint64_t o = x.order();
        std::uint64_t rest = o;
        while (rest % p == 0) rest /= p;
        if (rest == o) continue;  // no p-part
        P = Group::from_generators({x.power(static_cast<std::int64_t>(rest))});
        break;
    }
    if (!P) throw ValidationError("no p-element found although p divides the order");

    while (P->order_u64() < target) {
        GroupPtr N = normalizer(G, P);
        bool grown = false;
        for (const Perm& y : N->elements()) {
            if (!is_power_of(y.order(), p) || y.is_identity() || P->contains(y)) continue;
            std::vector<Perm> gens = P->generators();
            gens.push_back(y);
            P = Group::from_generators(std::move(gens));
            grown = true;
            break;
        }
        // a proper p-subgroup grows inside its normalizer, so this cannot stall
        if (!grown) throw ValidationError("sylow climb stalled");
    }
    return P;
}

GroupPtr p_residual(const GroupPtr& G, std::uint64_t p) {
    const ClassData& cd = G->classes();
    std::vector<Perm> seeds;
    for (std::size_t k = 1; k < cd.count(); ++k)
        if (cd.element_orders[k] % p != 0) seeds.push_back(cd.reps[k]);
    if (seeds.empty()) return Group::trivial(G->degree());
    return normal_closure(G, seeds);
}

SeriesReport p_series(const GroupPtr& G, std::uint64_t p) {
    const ClassData& cd = G->classes();
    std::vector<GroupPtr> closures;
    for (std::size_t k = 1; k < cd.count(); ++k) closures.push_back(normal_closure(G, {cd.reps[k]}));

    std::vector<GroupPtr> tower{Group::trivial(G->degree())};
    while (tower.back()->order() < G->order()) {
        const GroupPtr& N = tower.back();
        bool grew = false;
        // extend by the largest normal subgroup over N with p'-factor, then
        // with p-power factor; stalling on both disproves p-solvability
        for (int mode = 0; mode < 2 && !grew; ++mode) {
            std::vector<GroupPtr> parts{N};
            for (const auto& C : closures) {
                GroupPtr M = join_subgroups(G, {N, C});
                std::uint64_t idx = (M->order() / N->order()).convert_to<std::uint64_t>();
                if (idx == 1) continue;
                bool ok = (mode == 0) ? (idx % p != 0) : is_power_of(idx, p);
                if (ok) parts.push_back(std::move(M));
            }
            if (parts.size() > 1) {
                GroupPtr next = join_subgroups(G, parts);
                if (next->order() > N->order()) {
                    tower.push_back(std::move(next));
                    grew = true;
                }
            }
        }
        if (!grew) break;
    }
    SeriesReport rep{SeriesReport::Kind::p_chief, {}, tower.back()->order() == G->order()};
    rep.terms.assign(tower.rbegin(), tower.rend());
    return rep;
}

bool is_p_solvable(const GroupPtr& G, std::uint64_t p) { return p_series(G, p).verdict; }

GroupPtr solvable_radical(const GroupPtr& G) {
    const ClassData& cd = G->classes();
    std::vector<GroupPtr> parts;
    for (std::size_t k = 1; k < cd.count(); ++k) {
        GroupPtr C = normal_closure(G, {cd.reps[k]});
        if (is_solvable(C)) parts.push_back(std::move(C));
    }
    if (parts.empty()) return Group::trivial(G->degree());
    return join_subgroups(G, parts);
}

namespace {

// Does every tuple of N-shifted generators still generate G?  True exactly
// when N lies in the Frattini subgroup.
bool all_lift_tuples_generate(const GroupPtr& G, const GroupPtr& N) {
    const auto& gens = G->generators();
    const std::size_t k = gens.size();
    const auto& nel = N->elements();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > caps().tuple_scan / nel.size()) throw OverCapError("lift tuple scan over cap");
        count *= nel.size();
    }
    const BigInt full = G->order();
    std::vector<std::size_t> digit(k, 0);
    while (true) {
        std::vector<Perm> tuple;
        tuple.reserve(k);
        for (std::size_t i = 0; i < k; ++i) tuple.push_back(gens[i] * nel[digit[i]]);
        if (BSGS(G->degree(), std::move(tuple)).order() != full) return false;
        std::size_t d = 0;
        while (d < k && ++digit[d] == nel.size()) digit[d++] = 0;
        if (d == k) break;
    }
    return true;
}

}  // namespace

GroupPtr frattini_subgroup_by_scan(const GroupPtr& G) {
    if (G->order() > BigInt(caps().subgroup_order)) throw OverCapError("frattini computation over cap");
    if (G->is_trivial()) return Group::trivial(G->degree());
    const ClassData& cd = G->classes();
    std::vector<GroupPtr> tried, keep;
    for (std::size_t k = 1; k < cd.count(); ++k) {
        GroupPtr N = normal_closure(G, {cd.reps[k]});
        if (N->order() == G->order()) continue;  // the whole group never omits
        bool dup = false;
        for (const auto& T : tried)
            if (T->order() == N->order() && subgroup_contains(T, N)) {
                dup = true;
                break;
            }
        if (dup) continue;
        tried.push_back(N);
        if (all_lift_tuples_generate(G, N)) keep.push_back(std::move(N));
    }
    if (keep.empty()) return Group::trivial(G->degree());
    return join_subgroups(G, keep);
}

GroupPtr frattini_subgroup(const GroupPtr& G) {
    if (G->order() > BigInt(caps().subgroup_order)) throw OverCapError("frattini computation over cap");
    if (G->is_trivial()) return Group::trivial(G->degree());
    auto fac = factorize(G->order_u64());
    if (fac.size() == 1) {
        // p-group: the quotient by generator powers and commutators is the
        // largest elementary abelian quotient
        const std::uint64_t p = fac[0].first;
        const auto& gs = G->generators();
        std::vector<Perm> seeds;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            seeds.push_back(gs[i].power(static_cast<std::int64_t>(p)));
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                seeds.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
        }
        return normal_closure(G, seeds);
    }
    if (is_nilpotent(G)) {
        std::vector<GroupPtr> parts;
        for (auto [p, e] : fac) parts.push_back(frattini_subgroup(sylow_subgroup(G, p)));
        return join_subgroups(G, parts);
    }
    return frattini_subgroup_by_scan(G);
}

namespace {

// exact closure size check, abandoning as soon as the count passes `want`
bool closes_with_order(const std::vector<Perm>& gens, std::uint64_t want) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    Perm id(gens.at(0).degree());
    seen.insert(id);
    queue.push_back(std::move(id));
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const Perm& g : gens) {
            Perm y = queue[h] * g;
            if (seen.insert(y).second) {
                if (seen.size() > want) return false;
                queue.push_back(std::move(y));
            }
        }
    return seen.size() == want;
}

}  // namespace

std::optional<GroupPtr> find_complement(const GroupPtr& G, const GroupPtr& N) {
    if (N->is_trivial()) return G;
    if (N->order() == G->order()) return Group::trivial(G->degree());
    CosetAction ca = quotient_action(G, N);

    const auto& gens = G->generators();
    const auto& nel = N->elements();
    const std::uint64_t want = ca.image->order_u64();

    // a complement meets each generator coset in an element of the same
    // order as the generator's image, so only those lifts need scanning
    std::vector<std::vector<Perm>> X(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::uint64_t oi = ca.gen_images[i].order();
        for (const Perm& n : nel) {
            Perm u = gens[i] * n;
            if (u.order() == oi) X[i].push_back(std::move(u));
        }
        if (X[i].empty()) return std::nullopt;
    }
    std::uint64_t count = 1;
    for (const auto& xi : X) {
        if (count > caps().tuple_scan / xi.size()) throw OverCapError("complement tuple scan over cap");
        count *= xi.size();
    }

    std::vector<std::size_t> digit(X.size(), 0);
    while (true) {
        std::vector<Perm> tuple;
        tuple.reserve(X.size());
        for (std::size_t i = 0; i < X.size(); ++i) tuple.push_back(X[i][digit[i]]);
        if (closes_with_order(tuple, want)) return Group::from_generators(std::move(tuple));
        std::size_t d = 0;
        while (d < X.size() && ++digit[d] == X[d].size()) digit[d++] = 0;
        if (d == X.size()) break;
    }
    return std::nullopt;
}

std::vector<GroupPtr> minimal_noncentral_normals(const GroupPtr& G, const GroupPtr& inside) {
    const ClassData& cd = G->classes();
    std::vector<GroupPtr> cands;
    for (std::size_t k = 1; k < cd.count(); ++k) {
        if (cd.sizes[k] == 1) continue;  // central element
        if (!inside->contains(cd.reps[k])) continue;
        GroupPtr N = normal_closure(G, {cd.reps[k]});
        if (!subgroup_contains(inside, N)) continue;
        bool dup = false;
        for (const auto& c : cands)
            if (c->order() == N->order() && subgroup_contains(c, N)) {
                dup = true;
                break;
            }
        if (!dup) cands.push_back(std::move(N));
    }
    std::vector<GroupPtr> out;
    for (const auto& c : cands) {
        bool minimal = true;
        for (const auto& d : cands)
            if (d->order() < c->order() && subgroup_contains(c, d)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

GroupPtr minimal_noncentral_normal(const GroupPtr& G, const GroupPtr& inside) {
    if (!is_normal(G, inside)) throw PreconditionError("search domain is not normal");
    auto mins = minimal_noncentral_normals(G, inside);
    if (mins.empty()) throw NoneFoundError("no noncentral normal subgroup in the search domain");
    GroupPtr best = mins.front();
    for (const auto& m : mins)
        if (m->order() < best->order()) best = m;
    return best;
}

EsType extraspecial_type(const GroupPtr& G, std::uint64_t p) {
    std::uint64_t n = G->order_u64();
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1 || e < 3 || e % 2 == 0) return EsType::none;  // needs order p^(1+2n)
    GroupPtr Z = center(G);
    if (Z->order_u64() != p) return EsType::none;
    if (derived_subgroup(G)->elements() != Z->elements()) return EsType::none;
    if (frattini_subgroup(G)->elements() != Z->elements()) return EsType::none;
    if (p != 2) return G->exponent() == p ? EsType::exp_p : EsType::exp_p2;

    std::uint64_t involutions = 0;
    for (const Perm& x : G->elements())
        if (x.order() == 2) ++involutions;
    const std::uint64_t half = std::uint64_t{1} << ((e - 1) / 2);
    if (involutions == half * (half + 1) - 1) return EsType::plus;
    if (involutions == half * (half - 1) - 1) return EsType::minus;
    throw ValidationError("involution census matches neither type");
}

}  // namespace pqr
