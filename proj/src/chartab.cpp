#include "pqr/chartab.hpp"

#include <algorithm>
#include <sstream>

#include "pqr/kernels.hpp"

namespace pqr {

namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return (a + (l - b)) % l; }

// Reduced row echelon form in place (entries already reduced mod l); returns
// the pivot column of each surviving row.
std::vector<std::size_t> echelonize(std::vector<Vec>& rows, std::uint64_t l) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t n = rows[0].size(), done = 0;
    for (std::size_t col = 0; col < n && done < rows.size(); ++col) {
        std::size_t sel = done;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[done], rows[sel]);
        std::uint64_t inv = invmod_u64(rows[done][col], l);
        for (auto& x : rows[done]) x = mulmod_u64(x, inv, l);
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == done || rows[q][col] == 0) continue;
            std::uint64_t f = rows[q][col];
            for (std::size_t c = 0; c < n; ++c)
                rows[q][c] = sub_mod(rows[q][c], mulmod_u64(f, rows[done][c], l), l);
        }
        pivots.push_back(col);
        ++done;
    }
    rows.resize(done);
    return pivots;
}

// Characteristic polynomial det(xI - A) mod l, ascending coefficients, monic.
// Hessenberg reduction divides only by pivots, so any prime l works even when
// the dimension reaches or exceeds l.
Vec charpoly(std::vector<Vec> m, std::uint64_t l) {
    std::size_t n = m.size();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && m[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(m[piv], m[j + 1]);
            for (std::size_t q = 0; q < n; ++q) std::swap(m[q][piv], m[q][j + 1]);
        }
        std::uint64_t pinv = invmod_u64(m[j + 1][j], l);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (m[i][j] == 0) continue;
            std::uint64_t f = mulmod_u64(m[i][j], pinv, l);
            // row_i -= f * row_{j+1}, then col_{j+1} += f * col_i keeps similarity
            for (std::size_t c = 0; c < n; ++c) m[i][c] = sub_mod(m[i][c], mulmod_u64(f, m[j + 1][c], l), l);
            for (std::size_t q = 0; q < n; ++q) m[q][j + 1] = (m[q][j + 1] + mulmod_u64(f, m[q][i], l)) % l;
        }
    }
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        p[k].assign(k + 1, 0);
        std::uint64_t hkk = m[k - 1][k - 1];
        for (std::size_t c = 0; c < k; ++c) {
            p[k][c + 1] = (p[k][c + 1] + p[k - 1][c]) % l;
            p[k][c] = sub_mod(p[k][c], mulmod_u64(hkk, p[k - 1][c], l), l);
        }
        std::uint64_t prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = mulmod_u64(prod, m[i + 1][i], l);
            if (prod == 0) break;
            std::uint64_t coef = mulmod_u64(m[i][k - 1], prod, l);
            if (coef == 0) continue;
            for (std::size_t c = 0; c <= i; ++c) p[k][c] = sub_mod(p[k][c], mulmod_u64(coef, p[i][c], l), l);
        }
    }
    return p[n];
}

std::uint64_t poly_eval(const Vec& p, std::uint64_t x, std::uint64_t l) {
    std::uint64_t acc = 0;
    for (std::size_t c = p.size(); c-- > 0;) acc = (mulmod_u64(acc, x, l) + p[c]) % l;
    return acc;
}

// Basis of the nullspace of a square matrix mod l, echelonized coordinates.
std::vector<Vec> nullspace(std::vector<Vec> m, std::uint64_t l) {
    std::size_t n = m.size();
    auto pivots = echelonize(m, l);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t q = 0; q < pivots.size(); ++q) v[pivots[q]] = sub_mod(0, m[q][free], l);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One simultaneous-eigenvector subspace, kept in reduced row echelon form so
// coordinates can be read off at the pivot columns.
struct Space {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
};

// Split W into the eigenspaces of A (r x r, reduced mod l) restricted to W.
std::vector<Space> split_space(const Space& w, const std::vector<Vec>& a, std::uint64_t l) {
    std::size_t r = a.size(), d = w.basis.size();
    std::vector<Vec> img(d, Vec(r, 0));
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < r; ++k) acc = (acc + mulmod_u64(a[j][k], w.basis[t][k], l)) % l;
            img[t][j] = acc;
        }
    // coordinates of each image in the rref basis come from the pivot columns
    std::vector<Vec> rmat(d, Vec(d));
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) rmat[s][t] = img[t][w.pivots[s]];
    for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t s = 0; s < d; ++s) acc = (acc + mulmod_u64(rmat[s][t], w.basis[s][j], l)) % l;
            if (acc != img[t][j]) throw ValidationError("class matrix does not preserve the subspace");
        }
    }
    auto cp = charpoly(rmat, l);
    std::vector<Space> out;
    std::size_t found = 0;
    for (std::uint64_t lambda = 0; lambda < l && found < d; ++lambda) {
        if (poly_eval(cp, lambda, l) != 0) continue;
        auto shifted = rmat;
        for (std::size_t s = 0; s < d; ++s) shifted[s][s] = sub_mod(shifted[s][s], lambda, l);
        auto kern = nullspace(std::move(shifted), l);
        if (kern.empty()) continue;
        Space ns;
        for (const auto& coords : kern) {
            Vec v(r, 0);
            for (std::size_t s = 0; s < d; ++s)
                if (coords[s] != 0)
                    for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + mulmod_u64(coords[s], w.basis[s][j], l)) % l;
            ns.basis.push_back(std::move(v));
        }
        found += ns.basis.size();
        ns.pivots = echelonize(ns.basis, l);
        if (ns.pivots.size() != kern.size()) throw ValidationError("dependent eigenvectors");
        out.push_back(std::move(ns));
    }
    if (found != d) throw ValidationError("class matrix is not diagonalizable on the subspace");
    return out;
}

// Convolve two root-multiplicity vectors (the second conjugated) into a
// length-e cyclic accumulator: a at conductor ma, b at conductor mb, both
// embedded through zeta_m = zeta_e^(e/m).
void accumulate_conjugated_product(std::vector<std::int64_t>& acc, const std::vector<std::uint32_t>& a,
                                   std::uint64_t ma, const std::vector<std::uint32_t>& b, std::uint64_t mb,
                                   std::int64_t weight) {
    std::uint64_t e = acc.size(), sa = e / ma, sb = e / mb;
    for (std::uint64_t u = 0; u < ma; ++u) {
        if (a[u] == 0) continue;
        std::int64_t au = weight * static_cast<std::int64_t>(a[u]);
        std::uint64_t base = u * sa;
        for (std::uint64_t v = 0; v < mb; ++v) {
            if (b[v] == 0) continue;
            acc[(base + e - v * sb) % e] += au * static_cast<std::int64_t>(b[v]);
        }
    }
}

// Reduce a length-e cyclic integer vector into the power basis of Q(zeta_e)
// and test it against the rational constant `expect`.
bool reduces_to_constant(const std::vector<std::int64_t>& acc, const ConductorTables& ct, std::int64_t expect) {
    std::vector<__int128> red(ct.phi, 0);
    for (std::uint64_t t = 0; t < ct.e; ++t) {
        if (acc[t] == 0) continue;
        const auto& row = ct.rows[t];
        for (std::uint32_t j = 0; j < ct.phi; ++j) red[j] += static_cast<__int128>(acc[t]) * row[j];
    }
    if (red[0] != expect) return false;
    for (std::uint32_t j = 1; j < ct.phi; ++j)
        if (red[j] != 0) return false;
    return true;
}

}  // namespace

CharTable character_table(const GroupPtr& G) {
    const ClassData& cd = G->classes();
    const std::size_t r = cd.count();
    const std::uint64_t n = G->order_u64();
    const std::uint64_t e = G->exponent();
    if (e > 0xFFFFFFFFull) throw OverCapError("group exponent too large for cyclotomic tables");

    std::uint64_t s = isqrt(n);
    if (s * s < n) ++s;
    const std::uint64_t l = prime_in_progression(e, 2 * s);

    // split F_l^r into the simultaneous eigenspaces of the class matrices
    std::vector<Space> spaces(1);
    spaces[0].basis.assign(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        spaces[0].basis[i][i] = 1;
        spaces[0].pivots.push_back(i);
    }
    for (std::uint32_t ci = 1; ci < r; ++ci) {
        bool done = true;
        for (const auto& w : spaces)
            if (w.basis.size() > 1) done = false;
        if (done) break;
        auto raw = kernels::class_matrix(*G, ci);
        std::vector<Vec> a(r, Vec(r));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) a[j][k] = raw[j * r + k] % l;
        std::vector<Space> next;
        for (auto& w : spaces) {
            if (w.basis.size() == 1) {
                next.push_back(std::move(w));
                continue;
            }
            for (auto& piece : split_space(w, a, l)) next.push_back(std::move(piece));
        }
        spaces = std::move(next);
    }
    for (const auto& w : spaces)
        if (w.basis.size() != 1) throw ValidationError("class matrices failed to separate the characters");

    std::vector<std::uint32_t> inverse_map(r);
    for (std::size_t k = 0; k < r; ++k) inverse_map[k] = G->class_of(cd.reps[k].inverse());

    std::vector<std::uint64_t> csize(r), csize_inv(r);
    for (std::size_t k = 0; k < r; ++k) {
        csize[k] = cd.sizes[k] % l;
        csize_inv[k] = invmod_u64(csize[k], l);
    }

    // eigenvectors normalized at the identity class carry w_k = |C_k| chi(x_k) / chi(1)
    std::vector<Vec> omega(r);
    for (std::size_t i = 0; i < r; ++i) {
        Vec v = spaces[i].basis[0];
        if (v[0] == 0) throw ValidationError("eigenvector vanishes at the identity class");
        std::uint64_t f = invmod_u64(v[0], l);
        for (auto& x : v) x = mulmod_u64(x, f, l);
        omega[i] = std::move(v);
    }

    // degrees: sum_k w_k w_{k^-1} / |C_k| = |G| / d^2, and d <= sqrt(|G|) < l/2
    // pins d among the residue's square roots
    std::vector<std::uint64_t> degrees(r);
    std::vector<Vec> valmod(r, Vec(r));  // chi_i(x_k) mod l
    const std::uint64_t nmod = n % l;
    for (std::size_t i = 0; i < r; ++i) {
        std::uint64_t t = 0;
        for (std::size_t k = 0; k < r; ++k)
            t = (t + mulmod_u64(mulmod_u64(omega[i][k], omega[i][inverse_map[k]], l), csize_inv[k], l)) % l;
        if (t == 0) throw ValidationError("degenerate norm sum for an eigenvector");
        std::uint64_t d2 = mulmod_u64(nmod, invmod_u64(t, l), l);
        std::uint64_t d = 0;
        for (std::uint64_t cand = 1; cand * cand <= n; ++cand)
            if (mulmod_u64(cand % l, cand % l, l) == d2) {
                d = cand;
                break;
            }
        if (d == 0) throw ValidationError("no admissible degree for an eigenvector");
        degrees[i] = d;
        for (std::size_t k = 0; k < r; ++k) valmod[i][k] = mulmod_u64(mulmod_u64(d % l, omega[i][k], l), csize_inv[k], l);
    }

    std::vector<std::vector<std::uint32_t>> power_classes(r);
    for (std::size_t k = 0; k < r; ++k) {
        std::uint64_t m = cd.element_orders[k];
        power_classes[k].reserve(m);
        Perm y(G->degree());
        for (std::uint64_t t = 0; t < m; ++t) {
            power_classes[k].push_back(G->class_of(y));
            y = y * cd.reps[k];
        }
    }

    // multiplicity of zeta_m^u among the eigenvalues at class k, by the
    // inverse transform over the cyclic group generated by the representative
    const std::uint64_t eta = root_of_order(l, e);
    std::vector<std::vector<std::vector<std::uint32_t>>> mults(r);
    for (std::size_t i = 0; i < r; ++i) {
        mults[i].resize(r);
        for (std::size_t k = 0; k < r; ++k) {
            std::uint64_t m = cd.element_orders[k];
            std::uint64_t eta_m = powmod_u64(eta, e / m, l);
            std::uint64_t eta_m_inv = powmod_u64(eta_m, m - 1, l);
            std::uint64_t m_inv = invmod_u64(m % l, l);
            auto& out = mults[i][k];
            out.resize(m);
            std::uint64_t total = 0;
            for (std::uint64_t u = 0; u < m; ++u) {
                std::uint64_t w = powmod_u64(eta_m_inv, u, l), x = 1, acc = 0;
                for (std::uint64_t t = 0; t < m; ++t) {
                    acc = (acc + mulmod_u64(valmod[i][power_classes[k][t]], x, l)) % l;
                    x = mulmod_u64(x, w, l);
                }
                std::uint64_t nu = mulmod_u64(m_inv, acc, l);
                if (nu > degrees[i]) throw ValidationError("eigenvalue multiplicity out of range");
                out[u] = static_cast<std::uint32_t>(nu);
                total += nu;
            }
            if (total != degrees[i]) throw ValidationError("eigenvalue multiplicities do not sum to the degree");
        }
    }

    // canonical row order: principal first, the rest by degree then payload
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
    std::size_t principal = r;
    for (std::size_t i = 0; i < r; ++i) {
        if (degrees[i] != 1) continue;
        bool flat = true;
        for (std::size_t k = 0; k < r && flat; ++k)
            for (std::size_t u = 0; u < mults[i][k].size() && flat; ++u)
                if (mults[i][k][u] != (u == 0 ? 1u : 0u)) flat = false;
        if (flat) {
            principal = i;
            break;
        }
    }
    if (principal == r) throw ValidationError("no principal character found");
    order.erase(std::find(order.begin(), order.end(), principal));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        return mults[a] < mults[b];
    });
    order.insert(order.begin(), principal);

    CharTable t;
    t.group = G;
    t.exponent = e;
    t.prime = l;
    t.inverse_map = std::move(inverse_map);
    t.power_classes = std::move(power_classes);
    t.degrees.resize(r);
    t.root_mults.resize(r);
    t.values.assign(r, {});
    for (std::size_t i = 0; i < r; ++i) {
        t.degrees[i] = degrees[order[i]];
        t.root_mults[i] = std::move(mults[order[i]]);
        t.values[i].reserve(r);
        for (std::size_t k = 0; k < r; ++k) {
            const auto& mv = t.root_mults[i][k];
            std::vector<std::int64_t> counts(mv.begin(), mv.end());
            t.values[i].push_back(Cyclotomic::from_cyclic_counts(static_cast<std::uint32_t>(mv.size()), counts));
        }
    }
    return t;
}

BigInt class_mult_coefficient(const CharTable& t, std::size_t i, std::size_t j, std::size_t k) {
    const ClassData& cd = t.group->classes();
    const std::size_t r = t.size();
    if (i >= r || j >= r || k >= r) throw PreconditionError("class index out of range");
    const std::uint64_t n = t.group->order_u64();
    const std::uint64_t e = t.exponent;

    // the count lies in [0, |C_i||C_j|], so one residue at a larger prime is exact
    const std::uint64_t pairs = cd.sizes[i] * cd.sizes[j];
    const std::uint64_t lp = prime_in_progression(e, std::max(n, pairs));
    const std::uint64_t w = root_of_order(lp, e);

    auto column = [&](std::size_t c, bool conjugate) {
        std::uint64_t m = cd.element_orders[c];
        std::uint64_t wm = powmod_u64(w, e / m, lp);
        if (conjugate) wm = powmod_u64(wm, m - 1, lp);
        Vec out(r);
        for (std::size_t row = 0; row < r; ++row) {
            std::uint64_t acc = 0, x = 1;
            for (std::uint64_t u = 0; u < m; ++u) {
                acc = (acc + mulmod_u64(t.root_mults[row][c][u], x, lp)) % lp;
                x = mulmod_u64(x, wm, lp);
            }
            out[row] = acc;
        }
        return out;
    };
    Vec vi = column(i, false), vj = column(j, false), vk = column(k, true);

    std::uint64_t sum = 0;
    for (std::size_t row = 0; row < r; ++row) {
        std::uint64_t term = mulmod_u64(mulmod_u64(vi[row], vj[row], lp), vk[row], lp);
        sum = (sum + mulmod_u64(term, invmod_u64(t.degrees[row] % lp, lp), lp)) % lp;
    }
    std::uint64_t c = mulmod_u64(pairs % lp, invmod_u64(n % lp, lp), lp);
    c = mulmod_u64(c, sum, lp);
    if (c > pairs) throw ValidationError("character sum exceeds the pair count range");
    return BigInt(c);
}

bool verify_orthogonality(const CharTable& t) {
    try {
        if (!t.group) return false;
        const ClassData& cd = t.group->classes();
        const std::size_t r = cd.count();
        if (r == 0 || t.degrees.size() != r || t.root_mults.size() != r || t.values.size() != r ||
            t.inverse_map.size() != r || t.power_classes.size() != r)
            return false;
        const std::uint64_t n = t.group->order_u64();
        const std::uint32_t e = static_cast<std::uint32_t>(t.exponent);
        const ConductorTables& ct = conductor_tables(e);

        BigInt square_sum = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (t.degrees[i] == 0 || n % t.degrees[i] != 0) return false;
            square_sum += BigInt(t.degrees[i]) * t.degrees[i];
        }
        if (square_sum != BigInt(n)) return false;

        // shape, identity column, principal row, value consistency
        for (std::size_t k = 0; k < r; ++k) {
            if (t.inverse_map[k] >= r || t.inverse_map[t.inverse_map[k]] != k) return false;
            if (cd.element_orders[k] == 0 || e % cd.element_orders[k] != 0) return false;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (t.values[i].size() != r || t.root_mults[i].size() != r) return false;
            for (std::size_t k = 0; k < r; ++k) {
                const auto& mv = t.root_mults[i][k];
                const std::uint64_t m = cd.element_orders[k];
                if (mv.size() != m) return false;
                std::vector<std::int64_t> counts(mv.begin(), mv.end());
                if (t.values[i][k] != Cyclotomic::from_cyclic_counts(static_cast<std::uint32_t>(m), counts))
                    return false;
                if (i == 0 && (mv[0] != 1 || std::count(mv.begin(), mv.end(), 0u) + 1 != static_cast<long>(m)))
                    return false;
            }
            if (t.root_mults[i][0].size() != 1 || t.root_mults[i][0][0] != t.degrees[i]) return false;
        }
        if (t.degrees[0] != 1) return false;

        // values at inverse classes are the conjugates, and rows are
        // conjugate-closed as a set
        auto conj_mults = [&](const std::vector<std::vector<std::uint32_t>>& row) {
            auto out = row;
            for (std::size_t k = 0; k < r; ++k) {
                const std::size_t m = row[k].size();
                for (std::size_t u = 1; u < m; ++u) out[k][u] = row[k][m - u];
            }
            return out;
        };
        for (std::size_t i = 0; i < r; ++i) {
            auto conj = conj_mults(t.root_mults[i]);
            for (std::size_t k = 0; k < r; ++k)
                if (t.root_mults[i][t.inverse_map[k]] != conj[k]) return false;
            bool present = false;
            for (std::size_t i2 = 0; i2 < r && !present; ++i2) present = (t.root_mults[i2] == conj);
            if (!present) return false;
        }

        // first orthogonality: sum_k |C_k| chi_i(x_k) conj(chi_j(x_k)) = delta_ij |G|
        std::vector<std::int64_t> acc(e);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (std::size_t k = 0; k < r; ++k)
                    accumulate_conjugated_product(acc, t.root_mults[i][k], cd.element_orders[k],
                                                  t.root_mults[j][k], cd.element_orders[k],
                                                  static_cast<std::int64_t>(cd.sizes[k]));
                if (!reduces_to_constant(acc, ct, i == j ? static_cast<std::int64_t>(n) : 0)) return false;
            }

        // second orthogonality: sum_i chi_i(x_k) conj(chi_i(x_q)) = delta_kq |C_G(x_k)|
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t q = k; q < r; ++q) {
                std::fill(acc.begin(), acc.end(), 0);
                for (std::size_t i = 0; i < r; ++i)
                    accumulate_conjugated_product(acc, t.root_mults[i][k], cd.element_orders[k],
                                                  t.root_mults[i][q], cd.element_orders[q], 1);
                if (n % cd.sizes[k] != 0) return false;
                std::int64_t expect = (k == q) ? static_cast<std::int64_t>(n / cd.sizes[k]) : 0;
                if (!reduces_to_constant(acc, ct, expect)) return false;
            }
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::string render_table(const CharTable& t) {
    const ClassData& cd = t.group->classes();
    const std::size_t r = t.size();
    std::ostringstream os;
    os << "group " << (t.group->name().empty() ? "(unnamed)" : t.group->name()) << " order " << t.group->order()
       << " classes " << r << " exponent " << t.exponent << " prime " << t.prime << "\n";
    for (std::size_t k = 0; k < r; ++k)
        os << "class " << k << ": order " << cd.element_orders[k] << " size " << cd.sizes[k] << " rep "
           << cd.reps[k].to_cycle_string() << " inverse " << t.inverse_map[k] << "\n";
    for (std::size_t i = 0; i < r; ++i) {
        os << "chi." << i << " degree " << t.degrees[i] << ":";
        for (std::size_t k = 0; k < r; ++k) os << " " << t.values[i][k].to_string();
        os << "\n";
    }
    return os.str();
}

}  // namespace pqr
