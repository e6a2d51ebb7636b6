#include "pqr/action.hpp"

#include <algorithm>

namespace pqr {

std::vector<std::uint16_t> point_orbit(const std::vector<Perm>& gens, std::uint16_t seed) {
    if (gens.empty()) return {seed};
    const unsigned degree = gens[0].degree();
    if (seed >= degree) throw PreconditionError("orbit seed out of range");
    std::vector<bool> in(degree, false);
    std::vector<std::uint16_t> q{seed};
    in[seed] = true;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (const Perm& g : gens) {
            std::uint16_t y = g[q[h]];
            if (!in[y]) {
                in[y] = true;
                q.push_back(y);
            }
        }
    std::sort(q.begin(), q.end());
    return q;
}

std::vector<std::vector<std::uint16_t>> point_orbits(const std::vector<Perm>& gens, unsigned degree) {
    std::vector<bool> seen(degree, false);
    std::vector<std::vector<std::uint16_t>> out;
    for (unsigned s = 0; s < degree; ++s) {
        if (seen[s]) continue;
        auto orb = point_orbit(gens, static_cast<std::uint16_t>(s));
        for (std::uint16_t p : orb) seen[p] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<Perm> restrict_to_points(const std::vector<Perm>& gens, const std::vector<std::uint16_t>& pts) {
    if (gens.empty()) throw PreconditionError("no generators to restrict");
    if (pts.empty() || !std::is_sorted(pts.begin(), pts.end())) throw PreconditionError("point set must be sorted");
    const unsigned degree = gens[0].degree();
    std::vector<std::int32_t> newid(degree, -1);
    for (std::size_t s = 0; s < pts.size(); ++s) {
        if (pts[s] >= degree) throw PreconditionError("point out of range");
        newid[pts[s]] = static_cast<std::int32_t>(s);
    }
    std::vector<Perm> out;
    out.reserve(gens.size());
    for (const Perm& g : gens) {
        std::vector<std::uint16_t> img(pts.size());
        for (std::size_t s = 0; s < pts.size(); ++s) {
            std::uint16_t y = g[pts[s]];
            if (newid[y] < 0) throw PreconditionError("point set is not invariant");
            img[s] = static_cast<std::uint16_t>(newid[y]);
        }
        out.push_back(Perm::from_images(std::move(img)));
    }
    return out;
}

namespace {

std::uint64_t vec_encode(const std::vector<unsigned>& v, unsigned radix) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * radix + v[i];
    return idx;
}

std::vector<unsigned> vec_decode(std::uint64_t idx, unsigned radix, unsigned n) {
    std::vector<unsigned> v(n);
    for (unsigned i = 0; i < n; ++i) {
        v[i] = static_cast<unsigned>(idx % radix);
        idx /= radix;
    }
    return v;
}

std::uint64_t sig_hash(const std::vector<std::uint16_t>& sig) {
    std::uint64_t h = 14695981039346656037ULL;
    for (std::uint16_t v : sig) {
        h = (h ^ (v & 0xff)) * 1099511628211ULL;
        h = (h ^ (v >> 8)) * 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::vector<Perm> matrix_vector_action(const Ring& R, const std::vector<RMat>& mats) {
    if (mats.empty()) throw PreconditionError("no matrices");
    const unsigned n = mats[0].n();
    const std::uint64_t degree = ipow_checked(R.size(), n);
    if (degree > Perm::kMaxDegree) throw PreconditionError("vector space too large for a permutation domain");
    std::vector<Perm> out;
    out.reserve(mats.size());
    for (const RMat& M : mats) {
        if (M.n() != n) throw PreconditionError("matrix dimension mismatch");
        std::vector<std::uint16_t> img(degree);
        for (std::uint64_t idx = 0; idx < degree; ++idx)
            img[idx] = static_cast<std::uint16_t>(vec_encode(M.apply(vec_decode(idx, R.size(), n)), R.size()));
        out.push_back(Perm::from_images(std::move(img)));
    }
    return out;
}

std::vector<Perm> matrix_projective_action(const Ring& R, const std::vector<RMat>& mats) {
    if (mats.empty()) throw PreconditionError("no matrices");
    const unsigned n = mats[0].n();
    const std::uint64_t space = ipow_checked(R.size(), n);
    if (space > (1u << 22)) throw PreconditionError("vector space too large to scan");

    auto normalize = [&](std::vector<unsigned> v) {
        for (unsigned i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            auto c = R.inv(v[i]);
            if (!c) throw PreconditionError("projective normalization hit a non-unit scalar");
            for (unsigned j = 0; j < n; ++j) v[j] = R.mul(*c, v[j]);
            return v;
        }
        throw PreconditionError("zero vector has no projective point");
    };

    std::vector<std::int32_t> pid(space, -1);
    std::vector<std::vector<unsigned>> pts;
    for (std::uint64_t idx = 1; idx < space; ++idx) {
        auto v = vec_decode(idx, R.size(), n);
        if (vec_encode(normalize(v), R.size()) == idx) {
            pid[idx] = static_cast<std::int32_t>(pts.size());
            pts.push_back(std::move(v));
        }
    }
    if (pts.size() > Perm::kMaxDegree) throw PreconditionError("projective space too large");

    std::vector<Perm> out;
    out.reserve(mats.size());
    for (const RMat& M : mats) {
        if (M.n() != n) throw PreconditionError("matrix dimension mismatch");
        std::vector<std::uint16_t> img(pts.size());
        for (std::size_t p = 0; p < pts.size(); ++p) {
            std::uint64_t w = vec_encode(normalize(M.apply(pts[p])), R.size());
            img[p] = static_cast<std::uint16_t>(pid[w]);
        }
        out.push_back(Perm::from_images(std::move(img)));
    }
    return out;
}

std::vector<std::uint16_t> CosetAction::signature(const Perm& x) const {
    std::vector<std::uint16_t> sig;
    sig.reserve(x.degree());
    for (const auto& orb : sub_orbits) {
        std::size_t start = sig.size();
        for (std::uint16_t p : orb) sig.push_back(x[p]);
        std::sort(sig.begin() + static_cast<std::ptrdiff_t>(start), sig.end());
    }
    return sig;
}

namespace {
std::optional<std::uint32_t> locate_coset(const CosetAction& ca, const Perm& g) {
    auto it = ca.by_sig.find(sig_hash(ca.signature(g)));
    if (it == ca.by_sig.end()) return std::nullopt;
    for (std::uint32_t c : it->second)
        if (ca.sub->contains(ca.reps[c].inverse() * g)) return c;
    return std::nullopt;
}
}  // namespace

std::uint32_t CosetAction::coset_of(const Perm& g) const {
    auto c = locate_coset(*this, g);
    if (!c) throw PreconditionError("element lies in no coset (not a parent member?)");
    return *c;
}

Perm CosetAction::image_of(const Perm& g) const {
    std::vector<std::uint16_t> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        img[i] = static_cast<std::uint16_t>(coset_of(g * reps[i]));
    return Perm::from_images(std::move(img));
}

Perm CosetAction::lift_of(const Perm& q) const {
    if (q.degree() != reps.size()) throw PreconditionError("quotient element degree mismatch");
    if (image->order() != BigInt(reps.size()))
        throw PreconditionError("lift_of requires a regular coset action");
    return reps[q[0]];
}

CosetAction coset_action(const GroupPtr& G, const GroupPtr& H) {
    if (G->degree() != H->degree()) throw PreconditionError("coset action needs a common point set");
    for (const Perm& h : H->generators())
        if (!G->contains(h)) throw PreconditionError("subgroup generator outside parent");
    BigInt idx_big = G->order() / H->order();
    if (idx_big * H->order() != G->order()) throw ValidationError("subgroup order does not divide parent order");
    if (idx_big > BigInt(std::min<std::uint64_t>(caps().coset_index, Perm::kMaxDegree)))
        throw OverCapError("coset index over cap: " + idx_big.str());
    const std::uint32_t index = idx_big.convert_to<std::uint32_t>();

    CosetAction ca;
    ca.parent = G;
    ca.sub = H;
    ca.sub_orbits = point_orbits(H->generators(), G->degree());

    const auto& gens = G->generators();
    std::vector<std::vector<std::uint16_t>> imgs(gens.size(), std::vector<std::uint16_t>(index));
    ca.reps.push_back(Perm(G->degree()));
    ca.by_sig[sig_hash(ca.signature(ca.reps[0]))].push_back(0);
    for (std::uint32_t i = 0; i < ca.reps.size(); ++i) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Perm y = gens[gi] * ca.reps[i];
            auto c = locate_coset(ca, y);
            if (!c) {
                c = static_cast<std::uint32_t>(ca.reps.size());
                if (*c >= index) throw ValidationError("coset walk found more cosets than the index");
                ca.by_sig[sig_hash(ca.signature(y))].push_back(*c);
                ca.reps.push_back(std::move(y));
            }
            imgs[gi][i] = static_cast<std::uint16_t>(*c);
        }
    }
    if (ca.reps.size() != index) throw ValidationError("coset walk did not reach every coset");

    std::vector<Perm> gen_images;
    gen_images.reserve(gens.size());
    for (auto& img : imgs) gen_images.push_back(Perm::from_images(std::move(img)));
    ca.gen_images = gen_images;
    std::string qname;
    if (!G->name().empty() && !H->name().empty()) qname = G->name() + "/" + H->name();
    ca.image = gen_images.empty() ? Group::trivial(index, qname)
                                  : Group::from_generators(std::move(gen_images), qname);
    return ca;
}

CosetAction quotient_action(const GroupPtr& G, const GroupPtr& H) {
    for (const Perm& g : G->generators())
        for (const Perm& h : H->generators())
            if (!H->contains(h.conjugated_by(g))) throw PreconditionError("quotient by a non-normal subgroup");
    CosetAction ca = coset_action(G, H);
    if (ca.image->order() * H->order() != G->order())
        throw ValidationError("quotient image order disagrees with the index");
    return ca;
}

}  // namespace pqr
