#ifndef FJUMP_GROEBNER_HPP
#define FJUMP_GROEBNER_HPP

#include <map>
#include <mutex>

#include "fjump/polyring.hpp"

namespace fjump {

// Finitely generated ideal over a prime-field polynomial ring, with a lazily
// computed reduced Groebner basis per monomial order. Treat instances as
// immutable after construction; the cache fill is internally synchronized.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    Ideal(const Ideal& other);
    Ideal& operator=(const Ideal& other);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Reduced basis: monic leads, no lead divides another, tails fully
    // reduced; sorted ascending by leading monomial. Unique per order.
    const std::vector<Polynomial>& groebner_basis(
        MonomialOrder order = MonomialOrder{MonomialOrderKind::grevlex},
        const ResourceCaps& caps = default_caps()) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex cache_mutex_;
    mutable std::map<MonomialOrderKind, std::vector<Polynomial>> gb_cache_;
};

// Remainder of multivariate division: deterministic, divisors tried in list
// order, the leading term is reduced first.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order);

// Buchberger with the normal selection strategy (minimal lcm degree, ties by
// pair index), coprime-lead and chain criteria, then full interreduction.
std::vector<Polynomial> buchberger_reduced_gb(const RingPtr& ring,
                                              std::vector<Polynomial> generators,
                                              MonomialOrder order,
                                              const ResourceCaps& caps = default_caps());

bool ideal_contains_poly(const Ideal& I, const Polynomial& f,
                         MonomialOrder order = MonomialOrder{MonomialOrderKind::grevlex},
                         const ResourceCaps& caps = default_caps());

bool ideal_equal(const Ideal& I, const Ideal& J, const ResourceCaps& caps = default_caps());

// Every generator of I lies in J.
bool ideal_subset(const Ideal& I, const Ideal& J, const ResourceCaps& caps = default_caps());

Ideal ideal_sum(const Ideal& I, const Ideal& J);

// Ideal generated by g^{p^e} over the generators of I.
Ideal bracket_power(const Ideal& I, unsigned e, const ResourceCaps& caps = default_caps());

// dim_k(R/I) as the number of standard monomials; infinite unless every
// variable has a pure power among the leading terms.
class Colength {
public:
    static Colength infinite() { return Colength(std::nullopt); }
    static Colength finite(Integer v) { return Colength(std::move(v)); }
    bool is_finite() const { return value_.has_value(); }
    const Integer& value() const;
    std::string str() const;
    friend bool operator==(const Colength&, const Colength&) = default;

private:
    explicit Colength(std::optional<Integer> v) : value_(std::move(v)) {}
    std::optional<Integer> value_;
};

Colength colength(const Ideal& I,
                  MonomialOrder order = MonomialOrder{MonomialOrderKind::grevlex},
                  const ResourceCaps& caps = default_caps());

// Ideal with generators replaced by the reduced grevlex basis; same ideal,
// canonical readable generators.
Ideal interreduced(const Ideal& I, const ResourceCaps& caps = default_caps());

} // namespace fjump

#endif // FJUMP_GROEBNER_HPP
