#ifndef FJUMP_JUMPING_HPP
#define FJUMP_JUMPING_HPP

#include <optional>

#include "fjump/diffop.hpp"
#include "fjump/frobenius.hpp"

namespace fjump {

// Half-open rational interval (lo, hi].
struct RatInterval {
    Rational lo, hi;
    bool contains(const Rational& t) const { return lo < t && t <= hi; }
    bool operator==(const RatInterval&) const = default;
};

// Largest r with f^r outside J^{[p^e]}; J defaults to the maximal ideal
// (x_1, ..., x_n).
struct NuValue {
    Polynomial f;
    unsigned e;
    Ideal base;
    std::uint64_t value;
};

NuValue nu_value(const Polynomial& f, unsigned e, const Ideal& J,
                 const ResourceCaps& caps = default_caps());
NuValue nu_value(const Polynomial& f, unsigned e, const ResourceCaps& caps = default_caps());

Ideal maximal_ideal(const RingPtr& ring);

// Level-e approximation I_e(f^{ceil(t p^e)}) of the test ideal, with the
// ascending chain of levels up to e_used and a stabilization flag.
struct TestIdealResult {
    Rational t;
    unsigned e_used = 0;
    Ideal ideal;
    bool certified = false;
    std::vector<Ideal> chain; // levels 1..e_used
};

TestIdealResult test_ideal(const Polynomial& f, const Rational& t, unsigned e_max,
                           const ResourceCaps& caps = default_caps(),
                           unsigned stable_window = 2);

// I_e(f^{p^e - 1}), the level-e test ideal at t = 1 - 1/p^e.
Ideal tau_one_minus(const Polynomial& f, unsigned e, const ResourceCaps& caps = default_caps());

struct FptEstimate {
    std::vector<RatInterval> intervals; // one per level, nested
    std::optional<Rational> candidate;
};

FptEstimate fpt_estimate(const Polynomial& f, unsigned e_max,
                         const ResourceCaps& caps = default_caps(),
                         std::uint64_t max_den = 64);

// The chain I_e(f^a) for a = 0..p^e.
std::vector<Ideal> ideal_chain(const Polynomial& f, unsigned e,
                               const ResourceCaps& caps = default_caps());

struct JumpEntry {
    RatInterval interval;
    std::optional<Rational> candidate;
    bool certified = false;
    Ideal ideal_before;
    Ideal ideal_after;
};

struct JumpReport {
    std::vector<JumpEntry> entries;
    unsigned e_max = 0;
    std::size_t count = 0;
};

JumpReport jumping_numbers(const Polynomial& f, unsigned e_max,
                           const ResourceCaps& caps = default_caps(),
                           std::uint64_t max_den = 64);

// Containment of every Jacobian generator in I_e(f^{p^e - 1}); failures carry
// the generator and its nonzero normal form.
struct MainTheoremCheck {
    bool holds = false;
    std::vector<std::pair<Polynomial, Polynomial>> witnesses;
};

MainTheoremCheck verify_main_theorem(const Polynomial& f, unsigned e,
                                     const ResourceCaps& caps = default_caps());

// Observed distinct test ideals on (0,1] against colength(Jac(f)) + 1.
// Vacuously true when the Jacobian ideal is not zero-dimensional.
struct CorollaryCheck {
    bool isolated = false;
    Integer bound;   // colength + 1 when isolated, 0 otherwise
    Integer observed;
    bool holds = false;
};

CorollaryCheck verify_corollary_bound(const Polynomial& f, unsigned e_max,
                                      const ResourceCaps& caps = default_caps());

} // namespace fjump

#endif // FJUMP_JUMPING_HPP
