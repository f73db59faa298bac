#ifndef FJUMP_FROBENIUS_HPP
#define FJUMP_FROBENIUS_HPP

#include <map>

#include "fjump/groebner.hpp"

namespace fjump {

// f = sum_a g_a^{p^e} x^a over basis monomials a with all exponents < p^e.
// Over F_p the coefficient roots are the coefficients themselves.
struct RootDecomposition {
    unsigned e = 0;
    std::map<Monomial, Polynomial, GrevlexLess> parts;
};

RootDecomposition pe_decompose(const Polynomial& f, unsigned e,
                               const ResourceCaps& caps = default_caps());

// Rebuilds sum_a g_a^{p^e} x^a; equals the decomposed input exactly.
Polynomial recompose(const RingPtr& ring, const RootDecomposition& dec,
                     const ResourceCaps& caps = default_caps());

// Smallest ideal J with f in J^{[p^e]}: generated by the decomposition parts.
Ideal frobenius_root_poly(const Polynomial& f, unsigned e,
                          const ResourceCaps& caps = default_caps());

// I_e(f^a) by base-p digit recursion, never expanding f^a itself.
Ideal frobenius_root_power(const Polynomial& f, std::uint64_t a, unsigned e,
                           const ResourceCaps& caps = default_caps());

// Oracle route: expand f^a and decompose directly.
Ideal frobenius_root_power_direct(const Polynomial& f, std::uint64_t a, unsigned e,
                                  const ResourceCaps& caps = default_caps());

// Generator-wise sum of roots; the smallest J with I contained in J^{[p^e]}.
Ideal frobenius_root_ideal(const Ideal& I, unsigned e,
                           const ResourceCaps& caps = default_caps());

} // namespace fjump

#endif // FJUMP_FROBENIUS_HPP
