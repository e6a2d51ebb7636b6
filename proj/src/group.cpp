#include "pqr/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pqr/kernels.hpp"

namespace pqr {

Group::Group(std::vector<Perm> gens, unsigned degree, std::string name)
    : name_(std::move(name)), degree_(degree), gens_(), bsgs_(degree, gens) {
    for (auto& g : gens)
        if (!g.is_identity()) gens_.push_back(std::move(g));
}

GroupPtr Group::from_generators(std::vector<Perm> gens, std::string name) {
    if (gens.empty()) throw PreconditionError("no generators; use trivial() for the identity group");
    unsigned degree = gens[0].degree();
    return GroupPtr(new Group(std::move(gens), degree, std::move(name)));
}

GroupPtr Group::trivial(unsigned degree, std::string name) {
    return GroupPtr(new Group({}, degree, std::move(name)));
}

bool Group::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    return true;
}

void Group::build_elements() const {
    if (order() > BigInt(caps().elements))
        throw OverCapError("element enumeration over cap: order " + order().str());
    const std::size_t expect = static_cast<std::size_t>(order_u64());

    std::unordered_set<Perm, PermHash> seen;
    seen.reserve(expect * 2);
    std::vector<Perm> queue;
    queue.reserve(expect);
    Perm id(degree_);
    seen.insert(id);
    queue.push_back(std::move(id));
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (const Perm& g : gens_) {
            Perm y = queue[h] * g;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    if (queue.size() != expect) throw ValidationError("closure size disagrees with stabilizer chain order");
    std::sort(queue.begin(), queue.end());
    elems_ = std::move(queue);

    std::size_t cap = 1;
    while (cap < elems_.size() * 2) cap <<= 1;
    lookup_.assign(cap, 0);
    PermHash H;
    for (std::uint32_t idx = 0; idx < elems_.size(); ++idx) {
        std::size_t b = H(elems_[idx]) & (cap - 1);
        while (lookup_[b] != 0) b = (b + 1) & (cap - 1);
        lookup_[b] = idx + 1;
    }
}

const std::vector<Perm>& Group::elements() const {
    std::call_once(elems_flag_, [this] { build_elements(); });
    return elems_;
}

std::optional<std::uint32_t> Group::try_element_index(const Perm& p) const {
    elements();
    if (p.degree() != degree_) throw PreconditionError("degree mismatch in element lookup");
    const std::size_t mask = lookup_.size() - 1;
    for (std::size_t b = PermHash{}(p) & mask;; b = (b + 1) & mask) {
        std::uint32_t v = lookup_[b];
        if (v == 0) return std::nullopt;
        if (elems_[v - 1] == p) return v - 1;
    }
}

std::uint32_t Group::element_index(const Perm& p) const {
    auto idx = try_element_index(p);
    if (!idx) throw PreconditionError("permutation is not a group element");
    return *idx;
}

void Group::build_classes() const {
    elements();
    const std::size_t n = elems_.size();
    constexpr std::uint32_t kUnset = UINT32_MAX;

    std::vector<Perm> gens_inv;
    gens_inv.reserve(gens_.size());
    for (const Perm& g : gens_) gens_inv.push_back(g.inverse());

    ClassData cd;
    cd.class_of.assign(n, kUnset);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (cd.class_of[i] != kUnset) continue;
        const std::uint32_t cls = static_cast<std::uint32_t>(cd.members.size());
        cd.class_of[i] = cls;
        std::vector<std::uint32_t> mem{i};
        std::vector<std::uint32_t> frontier{i};
        while (!frontier.empty()) {
            std::vector<Perm> xs;
            xs.reserve(frontier.size());
            for (std::uint32_t e : frontier) xs.push_back(elems_[e]);
            std::vector<Perm> edges = kernels::conjugation_edges(xs, gens_, gens_inv);
            frontier.clear();
            for (const Perm& y : edges) {
                std::uint32_t yi = element_index(y);
                if (cd.class_of[yi] == kUnset) {
                    cd.class_of[yi] = cls;
                    mem.push_back(yi);
                    frontier.push_back(yi);
                }
            }
        }
        std::sort(mem.begin(), mem.end());
        cd.members.push_back(std::move(mem));
    }

    const std::size_t r = cd.members.size();
    cd.reps.reserve(r);
    cd.sizes.reserve(r);
    cd.element_orders.reserve(r);
    std::uint64_t total = 0;
    for (const auto& mem : cd.members) {
        cd.reps.push_back(elems_[mem[0]]);
        cd.sizes.push_back(mem.size());
        cd.element_orders.push_back(elems_[mem[0]].order());
        total += mem.size();
    }
    if (total != n) throw ValidationError("class sizes do not sum to group order");

    // canonical class order: (element order, size, representative)
    std::vector<std::uint32_t> by(r);
    std::iota(by.begin(), by.end(), 0);
    std::sort(by.begin(), by.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (cd.element_orders[a] != cd.element_orders[b]) return cd.element_orders[a] < cd.element_orders[b];
        if (cd.sizes[a] != cd.sizes[b]) return cd.sizes[a] < cd.sizes[b];
        return cd.reps[a] < cd.reps[b];
    });
    ClassData out;
    out.class_of.assign(n, kUnset);
    std::vector<std::uint32_t> newid(r);
    for (std::uint32_t pos = 0; pos < r; ++pos) newid[by[pos]] = pos;
    for (std::uint32_t pos = 0; pos < r; ++pos) {
        std::uint32_t old = by[pos];
        out.reps.push_back(std::move(cd.reps[old]));
        out.sizes.push_back(cd.sizes[old]);
        out.element_orders.push_back(cd.element_orders[old]);
        out.members.push_back(std::move(cd.members[old]));
    }
    for (std::size_t e = 0; e < n; ++e) out.class_of[e] = newid[cd.class_of[e]];
    classes_ = std::move(out);
}

const ClassData& Group::classes() const {
    std::call_once(classes_flag_, [this] { build_classes(); });
    return *classes_;
}

std::uint32_t Group::class_of(const Perm& p) const { return classes().class_of[element_index(p)]; }

std::uint64_t Group::exponent() const {
    std::uint64_t e = 1;
    for (std::uint64_t o : classes().element_orders) e = lcm_checked(e, o);
    return e;
}

}  // namespace pqr
