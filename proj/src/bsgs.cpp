#include "pqr/bsgs.hpp"

#include <algorithm>

namespace pqr {

namespace {
std::uint16_t lowest_moved_point(const Perm& p) {
    for (unsigned i = 0; i < p.degree(); ++i)
        if (p[i] != i) return static_cast<std::uint16_t>(i);
    throw PreconditionError("identity moves no point");
}
}  // namespace

BSGS::BSGS(unsigned degree, std::vector<Perm> gens) : degree_(degree) {
    if (degree == 0 || degree > Perm::kMaxDegree) throw PreconditionError("degree out of range");
    std::vector<Perm> gs;
    for (auto& g : gens) {
        if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
        if (!g.is_identity()) gs.push_back(std::move(g));
    }
    if (!gs.empty()) {
        std::uint16_t b = static_cast<std::uint16_t>(degree_ - 1);
        for (const auto& g : gs) b = std::min(b, lowest_moved_point(g));
        levels_.push_back(BSGSLevel{b, {}, {}, {}, std::move(gs)});
        process();
    }
    order_ = 1;
    for (const auto& L : levels_) order_ *= static_cast<std::uint64_t>(L.orbit.size());
}

void BSGS::rebuild_orbit(std::size_t li) {
    BSGSLevel& L = levels_[li];
    L.orbit.clear();
    L.transversal.clear();
    L.slot.assign(degree_, -1);
    L.orbit.push_back(L.base);
    L.transversal.push_back(Perm(degree_));
    L.slot[L.base] = 0;
    for (std::size_t s = 0; s < L.orbit.size(); ++s) {
        for (const Perm& g : L.gens) {
            std::uint16_t q = g[L.orbit[s]];
            if (L.slot[q] < 0) {
                L.slot[q] = static_cast<std::int32_t>(L.orbit.size());
                L.orbit.push_back(q);
                L.transversal.push_back(g * L.transversal[s]);
            }
        }
    }
}

std::pair<Perm, std::size_t> BSGS::strip(Perm p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const BSGSLevel& L = levels_[l];
        std::uint16_t q = p[L.base];
        if (q == L.base) continue;
        if (L.slot[q] < 0) return {std::move(p), l};
        p = L.transversal[static_cast<std::size_t>(L.slot[q])].inverse() * p;
    }
    return {std::move(p), levels_.size()};
}

void BSGS::process() {
    std::ptrdiff_t i = 0;
    while (i >= 0) {
        rebuild_orbit(static_cast<std::size_t>(i));
        bool complete = true;
        const std::size_t ii = static_cast<std::size_t>(i);
        const std::size_t orbit_n = levels_[ii].orbit.size();
        for (std::size_t s = 0; s < orbit_n && complete; ++s) {
            const std::size_t gen_n = levels_[ii].gens.size();
            for (std::size_t gi = 0; gi < gen_n && complete; ++gi) {
                // Schreier generator for (orbit point, generator); fixes base
                const Perm& g = levels_[ii].gens[gi];
                std::uint16_t q = g[levels_[ii].orbit[s]];
                Perm schreier =
                    levels_[ii].transversal[static_cast<std::size_t>(levels_[ii].slot[q])].inverse() *
                    (g * levels_[ii].transversal[s]);
                if (schreier.is_identity()) continue;
                auto [r, j] = strip(std::move(schreier), ii + 1);
                if (r.is_identity()) continue;
                // r fixes bases 0..j-1: install as a strong generator down to
                // level j, creating that level if the chain ends before it
                if (j == levels_.size())
                    levels_.push_back(BSGSLevel{lowest_moved_point(r), {}, {}, {}, {}});
                for (std::size_t l = ii + 1; l <= j; ++l) levels_[l].gens.push_back(r);
                i = static_cast<std::ptrdiff_t>(j);
                complete = false;
            }
        }
        if (complete) --i;
    }
}

std::uint64_t BSGS::order_u64() const {
    if (order_ > BigInt(UINT64_MAX)) throw Error("group order exceeds 64 bits");
    return order_.convert_to<std::uint64_t>();
}

Perm BSGS::sift(const Perm& p) const {
    if (p.degree() != degree_) throw PreconditionError("degree mismatch in sift");
    return strip(p, 0).first;
}

bool BSGS::contains(const Perm& p) const { return sift(p).is_identity(); }

}  // namespace pqr
