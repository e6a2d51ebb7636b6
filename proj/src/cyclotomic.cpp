#include "pqr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pqr {

namespace {

// quotient of monic-divisor polynomial long division; remainder must vanish
std::vector<BigInt> exact_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<BigInt> q(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        BigInt c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw ValidationError("polynomial division left a remainder");
    return q;
}

std::map<std::uint32_t, std::vector<BigInt>>& phi_cache() {
    static std::map<std::uint32_t, std::vector<BigInt>> m;
    return m;
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

const std::vector<BigInt>& cyclotomic_locked(std::uint32_t e) {
    auto it = phi_cache().find(e);
    if (it != phi_cache().end()) return it->second;
    std::vector<BigInt> poly(e + 1);
    poly[0] = -1;
    poly[e] = 1;
    for (std::uint32_t d = 1; d < e; ++d)
        if (e % d == 0) poly = exact_div(std::move(poly), cyclotomic_locked(d));
    return phi_cache().emplace(e, std::move(poly)).first->second;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::uint32_t e) {
    if (e == 0) throw PreconditionError("conductor must be positive");
    std::lock_guard<std::mutex> lock(table_mutex());
    return cyclotomic_locked(e);
}

const ConductorTables& conductor_tables(std::uint32_t e) {
    if (e == 0) throw PreconditionError("conductor must be positive");
    static std::map<std::uint32_t, ConductorTables> cache;
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    ConductorTables t;
    t.e = e;
    t.poly = cyclotomic_locked(e);
    t.phi = static_cast<std::uint32_t>(t.poly.size() - 1);
    std::vector<BigInt> cur(t.phi);  // power-basis coordinates of zeta^k
    // the int64 ceiling keeps room for the integer accumulations layered on top
    const BigInt limit = BigInt(1) << 40;
    for (std::uint32_t k = 0; k < e; ++k) {
        if (k < t.phi) {
            std::fill(cur.begin(), cur.end(), BigInt(0));
            cur[k] = 1;
        } else {
            BigInt lead = cur[t.phi - 1];
            for (std::uint32_t j = t.phi - 1; j > 0; --j) cur[j] = cur[j - 1] - lead * t.poly[j];
            cur[0] = -lead * t.poly[0];
        }
        std::vector<std::int64_t> row(t.phi);
        for (std::uint32_t j = 0; j < t.phi; ++j) {
            if (abs(cur[j]) > limit) throw ValidationError("cyclotomic reduction coefficients too large");
            row[j] = cur[j].convert_to<std::int64_t>();
        }
        t.rows.push_back(std::move(row));
    }
    return cache.emplace(e, std::move(t)).first->second;
}

Cyclotomic Cyclotomic::integer(const BigInt& n) { return rational(BigRat(n)); }

Cyclotomic Cyclotomic::rational(const BigRat& q) {
    Cyclotomic c;
    c.c_[0] = q;
    return c;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t e, std::uint64_t k) {
    if (e == 0) throw PreconditionError("conductor must be positive");
    std::vector<BigRat> raw(e);
    raw[k % e] = 1;
    return from_cyclic(e, raw);
}

Cyclotomic Cyclotomic::from_cyclic(std::uint32_t e, const std::vector<BigRat>& coeffs) {
    if (e == 0) throw PreconditionError("conductor must be positive");
    const ConductorTables& t = conductor_tables(e);
    Cyclotomic c;
    c.e_ = e;
    c.c_.assign(t.phi, BigRat(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto& row = t.rows[k % e];
        for (std::uint32_t j = 0; j < t.phi; ++j)
            if (row[j] != 0) c.c_[j] += coeffs[k] * BigRat(BigInt(row[j]));
    }
    return c;
}

Cyclotomic Cyclotomic::from_cyclic_counts(std::uint32_t e, const std::vector<std::int64_t>& coeffs) {
    std::vector<BigRat> raw(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) raw[i] = BigRat(BigInt(coeffs[i]));
    return from_cyclic(e, raw);
}

Cyclotomic Cyclotomic::lifted_to(std::uint32_t e2) const {
    if (e2 % e_ != 0) throw PreconditionError("conductor does not divide the lift target");
    if (e2 == e_) return *this;
    const std::uint32_t step = e2 / e_;
    std::vector<BigRat> raw(e2);
    for (std::size_t t = 0; t < c_.size(); ++t) raw[t * step] = c_[t];
    return from_cyclic(e2, raw);
}

Cyclotomic Cyclotomic::conjugated() const { return e_ == 1 ? *this : galois(e_ - 1); }

Cyclotomic Cyclotomic::galois(std::uint64_t u) const {
    if (gcd_u64(u % e_, e_) != 1 && e_ != 1) throw PreconditionError("galois exponent not coprime to conductor");
    std::vector<BigRat> raw(e_);
    for (std::size_t t = 0; t < c_.size(); ++t) raw[(t * (u % e_)) % e_] += c_[t];
    return from_cyclic(e_, raw);
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

BigRat Cyclotomic::rational_value() const {
    if (!is_rational()) throw PreconditionError("value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint32_t e = static_cast<std::uint32_t>(lcm_checked(a.e_, b.e_));
    Cyclotomic x = a.lifted_to(e), y = b.lifted_to(e);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint32_t e = static_cast<std::uint32_t>(lcm_checked(a.e_, b.e_));
    Cyclotomic x = a.lifted_to(e), y = b.lifted_to(e);
    std::vector<BigRat> raw(e);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            raw[(i + j) % e] += x.c_[i] * y.c_[j];
        }
    }
    return Cyclotomic::from_cyclic(e, raw);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint32_t e = static_cast<std::uint32_t>(lcm_checked(a.e_, b.e_));
    return a.lifted_to(e).c_ == b.lifted_to(e).c_;
}

namespace {

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

}  // namespace

std::string Cyclotomic::to_string() const {
    if (is_rational()) return rat_str(c_[0]);
    std::string out;
    for (std::size_t t = 0; t < c_.size(); ++t) {
        if (c_[t] == 0) continue;
        BigRat q = c_[t];
        if (out.empty()) {
            if (q < 0) out += "-";
        } else {
            out += q < 0 ? "-" : "+";
        }
        if (q < 0) q = -q;
        if (t == 0) {
            out += rat_str(q);
            continue;
        }
        if (q != 1) out += rat_str(q) + "*";
        out += "E(" + std::to_string(e_) + ")";
        if (t > 1) out += "^" + std::to_string(t);
    }
    return out;
}

}  // namespace pqr
