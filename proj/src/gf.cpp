#include "pqr/gf.hpp"

#include <algorithm>

namespace pqr {

unsigned Ring::pow(unsigned a, std::uint64_t e) const {
    unsigned acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

Zmod::Zmod(unsigned m) : m_(m) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
}

std::optional<unsigned> Zmod::inv(unsigned a) const {
    a %= m_;
    // extended Euclid
    long long r0 = m_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) return std::nullopt;
    return static_cast<unsigned>(((s0 % m_) + m_) % m_);
}

namespace {

// polynomials over F_p as little-endian coefficient vectors, no trailing zeros
using Poly = std::vector<unsigned>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, unsigned p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    return poly_trim(std::move(h));
}

// remainder of f by monic g
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
    f = poly_trim(std::move(f));
    while (f.size() >= g.size()) {
        unsigned c = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = (f[shift + i] + p * p - c * g[i] % p) % p;
        f = poly_trim(std::move(f));
    }
    return f;
}

bool poly_irreducible(const Poly& f, unsigned p) {
    unsigned deg = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(c % p); c /= p; }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

GFq::GFq(unsigned p, unsigned k) : p_(p), k_(k) {
    if (k == 0) throw PreconditionError("field extension degree must be positive");
    auto fac = factorize(p);
    if (fac.size() != 1 || fac[0].second != 1) throw PreconditionError("characteristic must be prime");
    std::uint64_t q = ipow_checked(p, k);
    if (q > 81) throw PreconditionError("field size above 81 not supported");
    q_ = static_cast<unsigned>(q);

    // lexicographically first irreducible monic polynomial of degree k
    Poly mod(k + 1, 0);
    mod[k] = 1;
    if (k > 1) {
        bool found = false;
        for (unsigned code = 0; code < q_ && !found; ++code) {
            unsigned c = code;
            for (unsigned i = 0; i < k; ++i) { mod[i] = c % p; c /= p; }
            if (poly_irreducible(mod, p)) found = true;
        }
        if (!found) throw ValidationError("no irreducible polynomial found");
    }

    auto decode = [&](unsigned a) {
        Poly f(k_, 0);
        for (unsigned i = 0; i < k_; ++i) { f[i] = a % p_; a /= p_; }
        return poly_trim(std::move(f));
    };
    auto encode = [&](const Poly& f) {
        unsigned a = 0;
        for (std::size_t i = f.size(); i-- > 0;) a = a * p_ + f[i];
        return a;
    };

    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b)
            mul_[a * q_ + b] = encode(poly_rem(poly_mul(decode(a), decode(b), p_), mod, p_));

    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }

    gen_ = 0;
    for (unsigned a = 1; a < q_; ++a)
        if (element_order(a) == q_ - 1) { gen_ = a; break; }
    if (gen_ == 0 && q_ > 2) throw ValidationError("no multiplicative generator found");
    if (q_ == 2) gen_ = 1;
}

unsigned GFq::add(unsigned a, unsigned b) const {
    unsigned r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

unsigned GFq::neg(unsigned a) const {
    unsigned r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::optional<unsigned> GFq::inv(unsigned a) const {
    if (a == 0) return std::nullopt;
    return inv_[a];
}

unsigned GFq::element_order(unsigned a) const {
    if (a == 0) throw PreconditionError("zero has no multiplicative order");
    unsigned ord = 1, x = a;
    while (x != 1) { x = mul(x, a); ++ord; }
    return ord;
}

RMat::RMat(const Ring& R, unsigned n) : R_(&R), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n == 0 || n > 6) throw PreconditionError("matrix dimension out of range");
}

RMat RMat::identity(const Ring& R, unsigned n) {
    RMat m(R, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RMat RMat::from_rows(const Ring& R, const std::vector<std::vector<unsigned>>& rows) {
    RMat m(R, static_cast<unsigned>(rows.size()));
    for (unsigned i = 0; i < m.n_; ++i) {
        if (rows[i].size() != m.n_) throw PreconditionError("ragged matrix rows");
        for (unsigned j = 0; j < m.n_; ++j) {
            if (rows[i][j] >= R.size()) throw PreconditionError("matrix entry outside ring");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

RMat RMat::operator*(const RMat& b) const {
    if (R_ != b.R_ || n_ != b.n_) throw PreconditionError("matrix mismatch");
    RMat r(*R_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
            unsigned s = 0;
            for (unsigned k = 0; k < n_; ++k) s = R_->add(s, R_->mul(at(i, k), b.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

RMat RMat::pow(std::uint64_t e) const {
    RMat base = *this, acc = identity(*R_, n_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

unsigned RMat::det() const {
    // cofactor expansion along the first row of the submatrix given by `rows`/`cols`
    std::vector<unsigned> cols(n_);
    for (unsigned j = 0; j < n_; ++j) cols[j] = j;
    // recursive lambda over remaining column set, rows consumed top-down
    auto rec = [&](auto&& self, unsigned row, std::vector<unsigned>& cs) -> unsigned {
        if (cs.size() == 1) return at(row, cs[0]);
        unsigned s = 0;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            unsigned c = cs[j];
            if (at(row, c) == 0) continue;
            std::vector<unsigned> rest;
            rest.reserve(cs.size() - 1);
            for (std::size_t t = 0; t < cs.size(); ++t)
                if (t != j) rest.push_back(cs[t]);
            unsigned minor = self(self, row + 1, rest);
            unsigned term = R_->mul(at(row, c), minor);
            s = R_->add(s, (j % 2 == 0) ? term : R_->neg(term));
        }
        return s;
    };
    return rec(rec, 0, cols);
}

std::vector<unsigned> RMat::apply(const std::vector<unsigned>& v) const {
    if (v.size() != n_) throw PreconditionError("vector length mismatch");
    std::vector<unsigned> r(n_, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            r[i] = R_->add(r[i], R_->mul(at(i, j), v[j]));
    return r;
}

}  // namespace pqr
