#include "fjump/random_poly.hpp"

namespace fjump {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty sampling range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
    for (;;) {
        std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint64_t degree_bound,
                             std::size_t term_bound) {
    if (term_bound == 0) throw std::invalid_argument("term_bound must be positive");
    const std::size_t n = ring->nvars();
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::size_t k = 1 + rng.below(term_bound);
        std::vector<Term> terms;
        terms.reserve(k);
        for (std::size_t t = 0; t < k; ++t) {
            // Rejection keeps exponent tuples uniform over the simplex.
            std::vector<std::uint64_t> exps(n);
            for (;;) {
                std::uint64_t total = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    exps[i] = rng.below(degree_bound + 1);
                    total += exps[i];
                }
                if (total <= degree_bound) break;
            }
            Integer coeff;
            if (ring->is_prime_field()) {
                coeff = Integer(1 + rng.below(ring->prime().value() - 1));
            } else {
                std::uint64_t v = rng.below(18); // {-9..-1, 1..9}
                coeff = v < 9 ? Integer(-static_cast<long>(9 - v)) : Integer(static_cast<long>(v - 8));
            }
            terms.push_back(Term{Monomial(exps), coeff});
        }
        Polynomial f = Polynomial::make(ring, std::move(terms));
        if (!f.is_zero()) return f;
    }
    throw std::logic_error("random polynomial generation kept cancelling");
}

} // namespace fjump
