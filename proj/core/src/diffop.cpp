#include "fjump/diffop.hpp"

namespace fjump {

Polynomial divided_power(const Polynomial& f, const DividedPowerOp& op) {
    return divided_power(f, op.order, op.var);
}

Polynomial divided_power(const Polynomial& f, std::uint64_t m, std::size_t var) {
    const auto& ring = f.ring();
    if (var >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    if (m == 0) return f;
    bool fp = ring->is_prime_field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        std::uint64_t l = t.mono[var];
        if (l < m) continue;
        Integer factor = fp ? Integer(binom_mod_p(l, m, ring->prime()))
                            : binom_exact(Integer(l), m);
        if (factor == 0) continue;
        out.push_back(Term{t.mono.with_exp(var, l - m), t.coeff * factor});
    }
    return Polynomial::make(ring, std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    return divided_power(f, 1, var);
}

Polynomial leibniz_residual(const Polynomial& f, const Polynomial& g, std::uint64_t m,
                            std::size_t var, const ResourceCaps& caps) {
    Polynomial lhs = divided_power(mul(f, g, caps), m, var);
    Polynomial rhs = Polynomial::zero(f.ring());
    for (std::uint64_t l = 0; l <= m; ++l)
        rhs = rhs + mul(divided_power(f, l, var), divided_power(g, m - l, var), caps);
    return lhs - rhs;
}

Polynomial key_identity_residual(const Polynomial& f, std::uint64_t m, std::size_t var,
                                 const ResourceCaps& caps) {
    if (m == 0) throw std::invalid_argument("key identity needs m >= 1");
    Polynomial fm1 = power(f, m - 1, caps);
    Polynomial acc = Polynomial::zero(f.ring());
    for (std::uint64_t l = 0; l <= m; ++l) {
        Integer weight = Integer(l) - 1;
        if (weight == 0) continue;
        Polynomial prod = mul(divided_power(f, l, var), divided_power(fm1, m - l, var), caps);
        acc = acc + prod.scalar_mul(weight);
    }
    return acc;
}

Polynomial composition_residual(const Polynomial& f, std::uint64_t m, std::uint64_t k,
                                std::size_t var) {
    Polynomial lhs = divided_power(divided_power(f, k, var), m, var);
    bool fp = f.ring()->is_prime_field();
    Integer factor = fp ? Integer(binom_mod_p(m + k, m, f.ring()->prime()))
                        : binom_exact(Integer(m + k), m);
    Polynomial rhs = divided_power(f, m + k, var).scalar_mul(factor);
    return lhs - rhs;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("jacobian of the zero polynomial");
    std::vector<Polynomial> gens;
    gens.reserve(f.ring()->nvars() + 1);
    gens.push_back(f);
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
        gens.push_back(partial_derivative(f, i));
    return gens;
}

} // namespace fjump
