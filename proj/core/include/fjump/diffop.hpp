#ifndef FJUMP_DIFFOP_HPP
#define FJUMP_DIFFOP_HPP

#include "fjump/polyring.hpp"

namespace fjump {

// Divided-power operator of order m in variable var: sends x_i^l to
// C(l, m) * x_i^{l-m}. Order 0 is the identity. Defined through binomial
// coefficients directly, never as (1/m!) d^m.
struct DividedPowerOp {
    std::uint64_t order = 0;
    std::size_t var = 0;
};

Polynomial divided_power(const Polynomial& f, const DividedPowerOp& op);
Polynomial divided_power(const Polynomial& f, std::uint64_t m, std::size_t var);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// D_{m,i}(fg) - sum_{l=0}^{m} D_{l,i}(f) D_{m-l,i}(g). Zero when the Leibniz
// rule holds; a nonzero value is the witness.
Polynomial leibniz_residual(const Polynomial& f, const Polynomial& g, std::uint64_t m,
                            std::size_t var, const ResourceCaps& caps = default_caps());

// sum_{l=0}^{m} (l-1) D_{l,i}(f) D_{m-l,i}(f^{m-1}) for m >= 1. Zero when the
// identity holds, over either coefficient domain.
Polynomial key_identity_residual(const Polynomial& f, std::uint64_t m, std::size_t var,
                                 const ResourceCaps& caps = default_caps());

// D_{m,i}(D_{k,i}(f)) - C(m+k, m) D_{m+k,i}(f). Zero when the composition law
// holds.
Polynomial composition_residual(const Polynomial& f, std::uint64_t m, std::uint64_t k,
                                std::size_t var);

// The n+1 generators (f, df/dx_1, ..., df/dx_n), unnormalized. Vanishing
// partials are kept in place.
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

} // namespace fjump

#endif // FJUMP_DIFFOP_HPP
