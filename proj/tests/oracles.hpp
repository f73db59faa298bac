// Test-only oracles, kept independent of the library code paths they check.
#ifndef FJUMP_TESTS_ORACLES_HPP
#define FJUMP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fjump/groebner.hpp"
#include "fjump/jumping.hpp"

namespace fjump::oracles {

// Exact binomial through Pascal's triangle, no GMP binomial call, no Lucas.
inline Integer pascal_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Integer(0);
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = std::min<std::uint64_t>(i, k); j > 0; --j) row[j] += row[j - 1];
    return row[k];
}

// Membership by exact linear algebra: is f a combination sum h_j g_j with
// deg(h_j g_j) <= degree_cap? Gaussian elimination over F_p.
inline bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                              std::uint64_t degree_cap) {
    const RingPtr& ring = f.ring();
    const std::uint64_t p = ring->prime().value();
    const std::size_t n = ring->nvars();

    // All monomials of total degree <= bound, in a fixed enumeration order.
    auto monomials_up_to = [&](std::uint64_t bound) {
        std::vector<Monomial> out;
        std::vector<std::uint64_t> exps(n, 0);
        for (;;) {
            std::uint64_t total = 0;
            for (auto e : exps) total += e;
            if (total <= bound) out.push_back(Monomial(exps));
            std::size_t i = 0;
            while (i < n && ++exps[i] > bound) exps[i++] = 0;
            if (i == n) break;
        }
        return out;
    };

    std::vector<Monomial> rows = monomials_up_to(degree_cap);
    std::map<std::vector<std::uint64_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r].exps()] = r;

    // One column per (generator, shift monomial) pair.
    std::vector<std::vector<std::uint64_t>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::uint64_t dg = g.total_degree();
        if (dg > degree_cap) continue;
        for (const auto& shift : monomials_up_to(degree_cap - dg)) {
            std::vector<std::uint64_t> col(rows.size(), 0);
            bool in_range = true;
            for (const auto& t : g.terms()) {
                Monomial m = t.mono * shift;
                auto it = row_of.find(m.exps());
                if (it == row_of.end()) { in_range = false; break; }
                col[it->second] = t.coeff.get_ui() % p;
            }
            if (in_range) cols.push_back(std::move(col));
        }
    }

    std::vector<std::uint64_t> target(rows.size(), 0);
    for (const auto& t : f.terms()) {
        auto it = row_of.find(t.mono.exps());
        if (it == row_of.end()) return false; // degree above the cap
        target[it->second] = t.coeff.get_ui() % p;
    }

    // Eliminate: augmented matrix [cols | target], solvable iff no pivot in
    // the target column.
    std::size_t nrows = rows.size(), ncols = cols.size();
    std::vector<std::vector<std::uint64_t>> m(nrows, std::vector<std::uint64_t>(ncols + 1, 0));
    for (std::size_t c = 0; c < ncols; ++c)
        for (std::size_t r = 0; r < nrows; ++r) m[r][c] = cols[c][r];
    for (std::size_t r = 0; r < nrows; ++r) m[r][ncols] = target[r];

    std::size_t rank_row = 0;
    for (std::size_t c = 0; c < ncols && rank_row < nrows; ++c) {
        std::size_t pivot = rank_row;
        while (pivot < nrows && m[pivot][c] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[rank_row], m[pivot]);
        std::uint64_t inv = inv_mod_p(m[rank_row][c], ring->prime());
        for (std::size_t cc = c; cc <= ncols; ++cc)
            m[rank_row][cc] = (m[rank_row][cc] * inv) % p;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank_row || m[r][c] == 0) continue;
            std::uint64_t factor = m[r][c];
            for (std::size_t cc = c; cc <= ncols; ++cc)
                m[r][cc] = (m[r][cc] + (p - factor) * m[rank_row][cc]) % p;
        }
        ++rank_row;
    }
    for (std::size_t r = rank_row; r < nrows; ++r)
        if (m[r][ncols] != 0) return false;
    return true;
}

// nu by full explicit powers and Groebner membership in m^{[p^e]}; no
// support shortcut, no incremental state shared with the library path.
inline std::uint64_t nu_by_expansion(const Polynomial& f, unsigned e) {
    const RingPtr& ring = f.ring();
    std::uint64_t pe = prime_power_u64(ring->prime(), e);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(power(Polynomial::variable(ring, i), pe));
    Ideal bracket(ring, gens);
    std::uint64_t r = 0;
    while (!ideal_contains_poly(bracket, power(f, r + 1))) ++r;
    return r;
}

// Minimal-denominator rational in (lo, hi] by a plain denominator scan.
inline std::optional<Rational> min_den_scan(const Rational& lo, const Rational& hi,
                                            std::uint64_t max_den) {
    for (std::uint64_t d = 1; d <= max_den; ++d) {
        Integer den(d);
        Integer a = lo.num() * den;
        mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), lo.den().get_mpz_t());
        a += 1;
        for (; Rational(a, den) <= hi; a += 1) {
            Rational q(a, den);
            if (q.den() == den) return q;
        }
    }
    return std::nullopt;
}

// Standard monomials of a monomial ideal by direct lattice counting.
inline Integer monomial_colength(const std::vector<Monomial>& leads, std::size_t nvars,
                                 std::uint64_t box_bound) {
    std::vector<std::uint64_t> idx(nvars, 0);
    Integer count(0);
    for (;;) {
        Monomial m{std::vector<std::uint64_t>(idx)};
        bool div = false;
        for (const auto& l : leads)
            if (Monomial::divides(l, m)) { div = true; break; }
        if (!div) count += 1;
        std::size_t i = 0;
        while (i < nvars && ++idx[i] >= box_bound) idx[i++] = 0;
        if (i == nvars) break;
    }
    return count;
}

} // namespace fjump::oracles

#endif // FJUMP_TESTS_ORACLES_HPP
