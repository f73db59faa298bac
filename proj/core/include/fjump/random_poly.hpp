#ifndef FJUMP_RANDOM_POLY_HPP
#define FJUMP_RANDOM_POLY_HPP

#include <random>

#include "fjump/polyring.hpp"

namespace fjump {

// Deterministic stream: identical seeds give identical draws on every
// platform. Bounded sampling is hand-rolled because the standard library
// distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform value in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

// Nonzero polynomial with at most term_bound terms, total degree at most
// degree_bound. Coefficients are uniform nonzero residues over F_p and
// uniform nonzero values in [-9, 9] over the integers.
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint64_t degree_bound,
                             std::size_t term_bound);

} // namespace fjump

#endif // FJUMP_RANDOM_POLY_HPP
