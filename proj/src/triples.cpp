#include "pqr/triples.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "pqr/base.hpp"
#include "pqr/kernels.hpp"
#include "pqr/structure.hpp"

namespace pqr {

namespace {

bool is_nontrivial_power_of(std::uint64_t n, std::uint64_t p) {
    if (n <= 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

// class indices whose representative order is a nontrivial power of p, ascending
std::vector<std::uint32_t> prime_power_classes(const ClassData& cd, std::uint64_t p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < cd.count(); ++k)
        if (is_nontrivial_power_of(cd.element_orders[k], p)) out.push_back(k);
    return out;
}

// First (x, y) in C_i x C_j with (xy)^{-1} in C_k, by ascending element index.
std::array<Perm, 3> extract_witness(const Group& G, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    const ClassData& cd = G.classes();
    if (cd.sizes[i] * cd.sizes[j] > caps().pair_products)
        throw OverCapError("witness scan exceeds the pair product cap");
    const auto& elems = G.elements();
    for (std::uint32_t a : cd.members[i]) {
        const Perm& x = elems[a];
        for (std::uint32_t b : cd.members[j]) {
            Perm z = (x * elems[b]).inverse();
            if (G.class_of(z) == k) return {x, elems[b], std::move(z)};
        }
    }
    throw ValidationError("positive triple count but the class pair scan found no witness");
}

// Ascending (i, j, k) over class triples with the prescribed prime-power
// orders; the first positive count wins, so reports are deterministic.
std::optional<TripleReport> find_triple(const CharTable& t, std::array<std::uint64_t, 3> primes) {
    const ClassData& cd = t.group->classes();
    std::array<std::vector<std::uint32_t>, 3> lists;
    for (int r = 0; r < 3; ++r) {
        lists[r] = prime_power_classes(cd, primes[r]);
        if (lists[r].empty()) return std::nullopt;
    }
    for (std::uint32_t i : lists[0])
        for (std::uint32_t j : lists[1])
            for (std::uint32_t k : lists[2]) {
                BigInt c = triple_count(t, i, j, k);
                if (c > 0) {
                    TripleReport rep;
                    rep.primes = primes;
                    rep.class_triple = std::array<std::uint32_t, 3>{i, j, k};
                    rep.count = std::move(c);
                    rep.witness = extract_witness(*t.group, i, j, k);
                    rep.method = TripleReport::Method::character_formula;
                    return rep;
                }
            }
    return std::nullopt;
}

void check_prime_triple(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    if (!is_prime_u64(p) || !is_prime_u64(q) || !is_prime_u64(r))
        throw PreconditionError("triple search needs prime arguments");
    if (p == q || q == r || p == r) throw PreconditionError("triple search needs distinct primes");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

const char* method_name(TripleReport::Method m) {
    switch (m) {
        case TripleReport::Method::character_formula: return "characterFormula";
        case TripleReport::Method::brute_force: return "bruteForce";
        default: return "constructive";
    }
}

}  // namespace

BigInt triple_count(const CharTable& t, std::size_t i, std::size_t j, std::size_t k) {
    if (i >= t.size() || j >= t.size() || k >= t.size()) throw PreconditionError("class index out of range");
    // abc = 1 with c in C_k means ab lands in the inverse class of k
    std::size_t kinv = t.inverse_map[k];
    return class_mult_coefficient(t, i, j, kinv) * BigInt(t.classes().sizes[kinv]);
}

BigInt triple_count_bruteforce(const GroupPtr& g, std::size_t i, std::size_t j, std::size_t k) {
    const ClassData& cd = g->classes();
    if (i >= cd.count() || j >= cd.count() || k >= cd.count())
        throw PreconditionError("class index out of range");
    std::uint32_t kinv = g->class_of(cd.reps[k].inverse());
    auto hist = kernels::pair_product_histogram(*g, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    return BigInt(hist[kinv]);
}

std::optional<TripleReport> pqr_triple_exists(const GroupPtr& g, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    check_prime_triple(p, q, r);
    // vacuous cases need no character table
    const ClassData& cd = g->classes();
    for (std::uint64_t pr : {p, q, r})
        if (prime_power_classes(cd, pr).empty()) return std::nullopt;
    CharTable t = character_table(g);
    return find_triple(t, {p, q, r});
}

std::optional<TripleReport> pqr_triple_exists(const CharTable& t, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    check_prime_triple(p, q, r);
    return find_triple(t, {p, q, r});
}

GateVerdict solvability_gate(const GroupPtr& g) {
    GateVerdict v{true, 0, std::nullopt, false};
    auto primes = prime_divisors(g->order_u64());
    if (primes.size() >= 3) {
        CharTable t = character_table(g);
        for (std::size_t a = 0; a < primes.size() && v.solvable; ++a)
            for (std::size_t b = a + 1; b < primes.size() && v.solvable; ++b)
                for (std::size_t c = b + 1; c < primes.size() && v.solvable; ++c)
                    if (auto rep = find_triple(t, {primes[a], primes[b], primes[c]})) {
                        v.solvable = false;
                        v.witness = std::move(rep);
                    }
    }
    v.cross_check = (v.solvable == is_solvable(g));
    return v;
}

std::optional<TripleReport> main3_witness(const GroupPtr& g) {
    if (is_solvable(g)) return std::nullopt;
    std::uint64_t n = g->order_u64();
    auto primes = prime_divisors(n);
    CharTable t = character_table(g);
    for (std::uint64_t p2 : {std::uint64_t{3}, std::uint64_t{5}}) {
        if (n % p2 != 0) continue;
        for (std::uint64_t p3 : primes)
            if (p3 > p2)
                if (auto rep = find_triple(t, {2, p2, p3})) return rep;
    }
    return std::nullopt;
}

GateVerdict psolvable_gate(const GroupPtr& g, std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw PreconditionError("the p-solvability gate needs an odd prime");
    GateVerdict v{true, p, std::nullopt, false};
    std::uint64_t n = g->order_u64();
    if (n % p == 0 && n % 2 == 0) {
        std::vector<std::uint64_t> odd;
        for (std::uint64_t q : prime_divisors(n))
            if (q != 2 && q != p) odd.push_back(q);
        if (!odd.empty()) {
            CharTable t = character_table(g);
            for (std::uint64_t q : odd)
                if (auto rep = find_triple(t, {2, p, q})) {
                    v.solvable = false;
                    v.witness = std::move(rep);
                    break;
                }
        }
    }
    v.cross_check = (v.solvable == is_p_solvable(g, p));
    return v;
}

SylowProductReport sylow_product_test(const GroupPtr& g, std::uint64_t p1, std::uint64_t p2, std::uint64_t p3) {
    std::array<std::uint64_t, 3> ps{p1, p2, p3};
    for (std::uint64_t p : ps)
        if (!is_prime_u64(p)) throw PreconditionError("Sylow product test needs prime arguments");
    if (p1 == p2 || p2 == p3 || p1 == p3) throw PreconditionError("Sylow product test needs distinct primes");

    const auto& elems = g->elements();
    std::uint64_t full = 1;
    std::array<std::vector<std::vector<std::uint32_t>>, 3> families;
    for (int t = 0; t < 3; ++t) {
        GroupPtr base = sylow_subgroup(g, ps[t]);
        full *= base->order_u64();
        std::vector<std::uint32_t> idx;
        idx.reserve(static_cast<std::size_t>(base->order_u64()));
        for (const Perm& x : base->elements()) idx.push_back(g->element_index(x));
        std::sort(idx.begin(), idx.end());
        std::set<std::vector<std::uint32_t>> uniq;
        for (const Perm& c : elems) {
            std::vector<std::uint32_t> img;
            img.reserve(idx.size());
            for (std::uint32_t ei : idx) img.push_back(g->element_index(elems[ei].conjugated_by(c)));
            std::sort(img.begin(), img.end());
            uniq.insert(std::move(img));
        }
        families[t].assign(uniq.begin(), uniq.end());
    }
    if (full > caps().lift_products) throw OverCapError("Sylow triple product exceeds the product set cap");

    auto to_group = [&](const std::vector<std::uint32_t>& set, std::uint64_t p) {
        std::vector<Perm> gens;
        for (std::uint32_t ei : set)
            if (ei != 0) gens.push_back(elems[ei]);
        std::string name = "P" + std::to_string(p);
        if (gens.empty()) return Group::trivial(g->degree(), name);
        return Group::from_generators(std::move(gens), name);
    };

    for (const auto& s1 : families[0])
        for (const auto& s2 : families[1]) {
            auto bm12 = kernels::product_set_bitmap(*g, s1, s2);
            std::vector<std::uint32_t> s12;
            for (std::size_t w = 0; w < bm12.size(); ++w)
                for (std::uint64_t word = bm12[w]; word != 0; word &= word - 1)
                    s12.push_back(static_cast<std::uint32_t>(64 * w + std::countr_zero(word)));
            for (const auto& s3 : families[2]) {
                auto bm = kernels::product_set_bitmap(*g, s12, s3);
                std::uint64_t cnt = 0;
                for (std::uint64_t word : bm) cnt += std::popcount(word);
                if (cnt != full)
                    return {false, std::array<GroupPtr, 3>{to_group(s1, p1), to_group(s2, p2), to_group(s3, p3)}};
            }
        }
    return {true, std::nullopt};
}

TripleReport alt_triple_construct(std::uint64_t p, std::uint64_t q) {
    if (p == 2 || q == 2 || !is_prime_u64(p) || !is_prime_u64(q) || q >= p)
        throw PreconditionError("alternating triple needs odd primes q < p");
    std::uint64_t s = p / q, tail = p % q;  // p = sq + tail, 0 < tail < q
    auto deg = static_cast<unsigned>(p);

    // y: s disjoint q-cycles on the blocks [iq, iq+q), tail points fixed
    std::vector<std::uint16_t> yi(deg);
    for (unsigned a = 0; a < deg; ++a) yi[a] = static_cast<std::uint16_t>(a);
    for (std::uint64_t i = 0; i < s; ++i)
        for (std::uint64_t a = 0; a < q; ++a) yi[i * q + a] = static_cast<std::uint16_t>(i * q + (a + 1) % q);

    // x: transpositions chaining consecutive blocks, then pairing each tail
    // point with the lowest unused block point
    std::vector<std::uint16_t> xi(deg);
    for (unsigned a = 0; a < deg; ++a) xi[a] = static_cast<std::uint16_t>(a);
    std::vector<char> used(deg, 0);
    auto swap2 = [&](std::uint64_t a, std::uint64_t b) {
        xi[a] = static_cast<std::uint16_t>(b);
        xi[b] = static_cast<std::uint16_t>(a);
        used[a] = used[b] = 1;
    };
    for (std::uint64_t i = 1; i < s; ++i) swap2(i * q - 1, i * q);
    std::vector<std::uint64_t> avail;
    for (std::uint64_t a = 0; a < s * q; ++a)
        if (!used[a]) avail.push_back(a);
    for (std::uint64_t m = 0; m < tail; ++m) swap2(s * q + m, avail[m]);

    Perm x = Perm::from_images(std::move(xi));
    Perm y = Perm::from_images(std::move(yi));
    if (x.order() != 2 || x.ind() != s + tail - 1 || (s + tail - 1) % 2 != 0)
        throw ValidationError("transposition part is not an even involution");
    if (y.order() != q || y.ind() != s * (q - 1)) throw ValidationError("cycle part has the wrong shape");
    Perm prod = x * y;
    if (prod.ind() != p - 1) throw ValidationError("the product is not a single p-cycle");
    Perm z = prod.inverse();
    if (z.order() != p) throw ValidationError("the product has the wrong order");
    if (x.ind() + y.ind() + prod.ind() != 2 * p - 2)
        throw ValidationError("index sum misses the sharp bound");

    TripleReport rep;
    rep.primes = {2, q, p};
    rep.class_triple = std::nullopt;
    rep.count = 1;
    rep.witness = std::array<Perm, 3>{std::move(x), std::move(y), std::move(z)};
    rep.method = TripleReport::Method::constructive;
    return rep;
}

bool gow_coverage_check(const GroupPtr& g, std::uint64_t char_prime, std::size_t i, std::size_t j) {
    if (!is_prime_u64(char_prime)) throw PreconditionError("the characteristic must be prime");
    const ClassData& cd = g->classes();
    if (i >= cd.count() || j >= cd.count()) throw PreconditionError("class index out of range");
    auto regular_semisimple = [&](std::size_t k) {
        return cd.sizes[k] > 1 && cd.element_orders[k] % char_prime != 0;
    };
    if (!regular_semisimple(i) || !regular_semisimple(j))
        throw PreconditionError("class is central or not coprime to the characteristic");
    CharTable t = character_table(g);
    for (std::size_t k = 0; k < cd.count(); ++k) {
        if (!regular_semisimple(k)) continue;
        // covering C_k is the same as a product-one triple against its inverse
        if (triple_count(t, i, j, t.inverse_map[k]) == 0) return false;
    }
    return true;
}

std::string render_report(const TripleReport& r) {
    std::array<std::uint64_t, 3> ps = r.primes;
    std::sort(ps.begin(), ps.end());
    std::ostringstream os;
    os << "{\"primes\":[" << ps[0] << "," << ps[1] << "," << ps[2] << "]";
    os << ",\"method\":\"" << method_name(r.method) << "\"";
    os << ",\"count\":\"" << r.count.str() << "\"";
    if (r.class_triple) {
        const auto& ct = *r.class_triple;
        os << ",\"classTriple\":[" << ct[0] << "," << ct[1] << "," << ct[2] << "]";
    } else {
        os << ",\"classTriple\":null";
    }
    if (r.witness) {
        const auto& w = *r.witness;
        os << ",\"witness\":[\"" << w[0].to_cycle_string() << "\",\"" << w[1].to_cycle_string() << "\",\""
           << w[2].to_cycle_string() << "\"]";
    } else {
        os << ",\"witness\":null";
    }
    os << "}";
    return os.str();
}

std::string render_verdict(const GateVerdict& v) {
    std::ostringstream os;
    os << "{\"gate\":\"" << (v.prime ? "pSolvability" : "solvability") << "\"";
    os << ",\"prime\":";
    if (v.prime)
        os << v.prime;
    else
        os << "null";
    os << ",\"solvable\":" << (v.solvable ? "true" : "false");
    os << ",\"crossCheck\":" << (v.cross_check ? "true" : "false");
    os << ",\"witness\":" << (v.witness ? render_report(*v.witness) : "null") << "}";
    return os.str();
}

}  // namespace pqr
