#include "fjump/frobenius.hpp"

namespace fjump {

namespace {

void require_prime_field(const Polynomial& f) {
    if (!f.ring()->is_prime_field())
        throw std::invalid_argument("Frobenius roots require a prime-field ring");
}

} // namespace

RootDecomposition pe_decompose(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    require_prime_field(f);
    std::uint64_t pe = prime_power_u64(f.ring()->prime(), e, caps);
    std::size_t n = f.ring()->nvars();

    std::map<Monomial, std::vector<Term>, GrevlexLess> buckets;
    for (const auto& t : f.terms()) {
        std::vector<std::uint64_t> basis(n), quot(n);
        for (std::size_t i = 0; i < n; ++i) {
            basis[i] = t.mono[i] % pe;
            quot[i] = t.mono[i] / pe;
        }
        buckets[Monomial(std::move(basis))].push_back(Term{Monomial(std::move(quot)), t.coeff});
    }

    RootDecomposition dec;
    dec.e = e;
    for (auto& [basis, terms] : buckets) {
        Polynomial g = Polynomial::make(f.ring(), std::move(terms));
        if (!g.is_zero()) dec.parts.emplace(basis, std::move(g));
    }
    return dec;
}

Polynomial recompose(const RingPtr& ring, const RootDecomposition& dec,
                     const ResourceCaps& caps) {
    Polynomial acc = Polynomial::zero(ring);
    for (const auto& [basis, g] : dec.parts) {
        Polynomial piece = frobenius_power(g, dec.e, caps);
        acc = acc + mul(piece, Polynomial::make(ring, {Term{basis, Integer(1)}}), caps);
    }
    return acc;
}

Ideal frobenius_root_poly(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    require_prime_field(f);
    if (f.is_zero()) return Ideal::zero(f.ring());
    RootDecomposition dec = pe_decompose(f, e, caps);
    std::vector<Polynomial> gens;
    gens.reserve(dec.parts.size());
    for (auto& [basis, g] : dec.parts) gens.push_back(g);
    return interreduced(Ideal(f.ring(), std::move(gens)), caps);
}

namespace {

// I_e(f^a * (w_1, ..., w_k)) by peeling one base-p digit of a per level,
// via I_1(f^{pq+r} w) = f^q * I_1(f^r w).
Ideal froot_scaled(const Polynomial& f, std::uint64_t a, unsigned e,
                   std::vector<Polynomial> multipliers, const ResourceCaps& caps) {
    const RingPtr& ring = f.ring();
    if (e == 0) {
        Polynomial fa = power(f, a, caps);
        std::vector<Polynomial> gens;
        gens.reserve(multipliers.size());
        for (const auto& w : multipliers) gens.push_back(mul(fa, w, caps));
        return interreduced(Ideal(ring, std::move(gens)), caps);
    }

    std::uint64_t p = ring->prime().value();
    std::uint64_t q = a / p, r = a % p;
    Polynomial fr = power(f, r, caps);

    std::vector<Polynomial> next;
    for (const auto& w : multipliers) {
        RootDecomposition dec = pe_decompose(mul(fr, w, caps), 1, caps);
        for (auto& [basis, g] : dec.parts) next.push_back(g);
    }
    // Interreduce to keep the generator set small across levels.
    Ideal level(ring, std::move(next));
    if (level.is_zero_ideal()) return level;
    return froot_scaled(f, q, e - 1,
                        level.groebner_basis(MonomialOrder{MonomialOrderKind::grevlex}, caps),
                        caps);
}

} // namespace

Ideal frobenius_root_power(const Polynomial& f, std::uint64_t a, unsigned e,
                           const ResourceCaps& caps) {
    require_prime_field(f);
    if (f.is_zero() && a > 0) return Ideal::zero(f.ring());
    prime_power_u64(f.ring()->prime(), e, caps); // cap check up front
    return froot_scaled(f, a, e, {Polynomial::constant(f.ring(), Integer(1))}, caps);
}

Ideal frobenius_root_power_direct(const Polynomial& f, std::uint64_t a, unsigned e,
                                  const ResourceCaps& caps) {
    require_prime_field(f);
    return frobenius_root_poly(power(f, a, caps), e, caps);
}

Ideal frobenius_root_ideal(const Ideal& I, unsigned e, const ResourceCaps& caps) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        RootDecomposition dec = pe_decompose(g, e, caps);
        for (auto& [basis, part] : dec.parts) gens.push_back(part);
    }
    Ideal out(I.ring(), std::move(gens));
    if (out.is_zero_ideal()) return out;
    return interreduced(out, caps);
}

} // namespace fjump
