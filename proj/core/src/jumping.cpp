#include "fjump/jumping.hpp"

#include <algorithm>

namespace fjump {

namespace {

const MonomialOrder kGrevlex{MonomialOrderKind::grevlex};

void require_fp(const Polynomial& f) {
    if (!f.ring()->is_prime_field())
        throw std::invalid_argument("prime-field ring required");
}

bool is_maximal_ideal(const Ideal& J, const ResourceCaps& caps) {
    const auto& gb = J.groebner_basis(kGrevlex, caps);
    if (gb.size() != J.ring()->nvars()) return false;
    std::vector<bool> seen(J.ring()->nvars(), false);
    for (const auto& g : gb) {
        if (g.term_count() != 1) return false;
        const Monomial& m = g.terms()[0].mono;
        if (m.total_degree() != 1) return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == 1) seen[i] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Some term has all exponents < p^e, i.e. the term survives outside m^{[p^e]}.
bool outside_bracket_maximal(const Polynomial& f, std::uint64_t pe) {
    for (const auto& t : f.terms()) {
        bool alive = true;
        for (std::size_t i = 0; i < t.mono.size() && alive; ++i)
            if (t.mono[i] >= pe) alive = false;
        if (alive) return true;
    }
    return false;
}

} // namespace

Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

NuValue nu_value(const Polynomial& f, unsigned e, const Ideal& J, const ResourceCaps& caps) {
    require_fp(f);
    if (f.is_zero() || f.is_unit())
        throw std::invalid_argument("nu requires a nonzero non-unit polynomial");
    if (!same_ring(f.ring(), J.ring())) throw std::invalid_argument("ring mismatch");
    if (ideal_contains_poly(J, Polynomial::constant(J.ring(), Integer(1)), kGrevlex, caps))
        throw std::invalid_argument("nu requires a proper ideal");

    std::uint64_t pe = prime_power_u64(f.ring()->prime(), e, caps);
    bool shortcut = is_maximal_ideal(J, caps);
    Ideal bracket = shortcut ? J : bracket_power(J, e, caps);

    auto inside = [&](const Polynomial& fr) {
        if (shortcut) return !outside_bracket_maximal(fr, pe);
        return ideal_contains_poly(bracket, fr, kGrevlex, caps);
    };

    // f^{r+1} in J^{[p^e]} is monotone in r, so scan upward.
    std::uint64_t limit =
        (f.total_degree() + f.ring()->nvars() + 1) * pe; // generous termination bound
    Polynomial fr = f;
    std::uint64_t r = 0;
    while (!inside(fr)) {
        ++r;
        if (r > limit)
            throw ResourceError("nu did not terminate; f may lie outside the radical of J");
        fr = mul(fr, f, caps);
    }
    return NuValue{f, e, J, r};
}

NuValue nu_value(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    return nu_value(f, e, maximal_ideal(f.ring()), caps);
}

TestIdealResult test_ideal(const Polynomial& f, const Rational& t, unsigned e_max,
                           const ResourceCaps& caps, unsigned stable_window) {
    require_fp(f);
    if (f.is_zero()) throw std::invalid_argument("test ideal of the zero polynomial");
    if (t.is_negative()) throw std::invalid_argument("test ideal needs t >= 0");
    if (e_max == 0) throw std::invalid_argument("e_max must be at least 1");

    Prime p = f.ring()->prime();
    TestIdealResult result{t, 0, Ideal::zero(f.ring()), false, {}};
    unsigned run_length = 0;
    for (unsigned e = 1; e <= e_max; ++e) {
        Natural scaled = ceil_scale(t, p, e, caps);
        if (!scaled.fits_ulong_p())
            throw ResourceError("ceil(t p^e) too large: " + scaled.get_str());
        Ideal level = frobenius_root_power(f, scaled.get_ui(), e, caps);
        if (e > 1 && ideal_equal(level, result.ideal, caps)) {
            ++run_length;
        } else {
            run_length = 1;
        }
        result.ideal = level;
        result.e_used = e;
        result.chain.push_back(std::move(level));
        if (run_length >= stable_window) break;
    }
    result.certified = run_length >= stable_window;
    return result;
}

Ideal tau_one_minus(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    require_fp(f);
    if (f.is_zero()) throw std::invalid_argument("tau of the zero polynomial");
    std::uint64_t pe = prime_power_u64(f.ring()->prime(), e, caps);
    return frobenius_root_power(f, pe - 1, e, caps);
}

FptEstimate fpt_estimate(const Polynomial& f, unsigned e_max, const ResourceCaps& caps,
                         std::uint64_t max_den) {
    require_fp(f);
    if (f.is_zero() || f.is_unit())
        throw std::invalid_argument("fpt requires a nonzero non-unit polynomial");
    if (f.constant_coefficient() != 0)
        throw std::invalid_argument(
            "fpt is computed at the origin; translate coordinates so that f(0) = 0");
    if (e_max == 0) throw std::invalid_argument("e_max must be at least 1");

    Prime p = f.ring()->prime();
    Ideal m = maximal_ideal(f.ring());
    FptEstimate out;
    for (unsigned e = 1; e <= e_max; ++e) {
        std::uint64_t nu = nu_value(f, e, m, caps).value;
        Integer pe = prime_power(p, e, caps);
        out.intervals.push_back(RatInterval{Rational(Integer(nu), pe),
                                            Rational(Integer(nu + 1), pe)});
    }

    const RatInterval& last = out.intervals.back();
    auto candidate = simplest_in_halfopen(last.lo, last.hi, max_den);
    if (candidate) {
        bool consistent = std::all_of(out.intervals.begin(), out.intervals.end(),
                                      [&](const RatInterval& iv) { return iv.contains(*candidate); });
        if (consistent) out.candidate = candidate;
    }
    return out;
}

std::vector<Ideal> ideal_chain(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    require_fp(f);
    std::uint64_t pe = prime_power_u64(f.ring()->prime(), e, caps);
    std::vector<Ideal> chain;
    chain.reserve(pe + 1);
    for (std::uint64_t a = 0; a <= pe; ++a)
        chain.push_back(frobenius_root_power(f, a, e, caps));
    return chain;
}

namespace {

// Jump intervals ((a-1)/p^e, a/p^e] observed in the level-e chain.
std::vector<RatInterval> chain_jump_intervals(const std::vector<Ideal>& chain, Prime p,
                                              unsigned e, const ResourceCaps& caps) {
    std::vector<RatInterval> out;
    Integer pe = prime_power(p, e, caps);
    for (std::size_t a = 1; a < chain.size(); ++a) {
        if (!ideal_equal(chain[a], chain[a - 1], caps))
            out.push_back(RatInterval{Rational(Integer(a - 1), pe), Rational(Integer(a), pe)});
    }
    return out;
}

// Minimal-denominator rational in the interval that every cross-level jump
// interval also contains. Searches denominators upward, numerators leftward.
std::optional<Rational> cross_level_candidate(const RatInterval& interval,
                                              const std::vector<std::vector<RatInterval>>& coarse,
                                              std::uint64_t max_den) {
    for (std::uint64_t d = 1; d <= max_den; ++d) {
        Integer den(d);
        // Numerators with lo < a/d <= hi.
        Integer first = interval.lo.num() * den;
        mpz_fdiv_q(first.get_mpz_t(), first.get_mpz_t(), interval.lo.den().get_mpz_t());
        first += 1;
        for (Integer a = first; Rational(a, den) <= interval.hi; a += 1) {
            Rational q(a, den);
            if (q.den() != den) continue; // not in lowest terms at this denominator
            bool ok = true;
            for (const auto& level : coarse) {
                bool hit = std::any_of(level.begin(), level.end(),
                                       [&](const RatInterval& iv) { return iv.contains(q); });
                if (!hit) {
                    ok = false;
                    break;
                }
            }
            if (ok) return q;
        }
    }
    return std::nullopt;
}

} // namespace

JumpReport jumping_numbers(const Polynomial& f, unsigned e_max, const ResourceCaps& caps,
                           std::uint64_t max_den) {
    require_fp(f);
    if (f.is_zero() || f.is_unit())
        throw std::invalid_argument("jumping numbers require a nonzero non-unit polynomial");
    if (e_max == 0) throw std::invalid_argument("e_max must be at least 1");

    Prime p = f.ring()->prime();
    std::vector<Ideal> chain = ideal_chain(f, e_max, caps);

    // Coarser-level jump intervals for the cross-level consistency filter.
    std::vector<std::vector<RatInterval>> coarse;
    for (unsigned back = 1; back <= 2 && back < e_max; ++back) {
        unsigned e = e_max - back;
        coarse.push_back(chain_jump_intervals(ideal_chain(f, e, caps), p, e, caps));
    }

    JumpReport report;
    report.e_max = e_max;
    Integer pe = prime_power(p, e_max, caps);
    for (std::size_t a = 1; a < chain.size(); ++a) {
        if (ideal_equal(chain[a], chain[a - 1], caps)) continue;
        JumpEntry entry{RatInterval{Rational(Integer(a - 1), pe), Rational(Integer(a), pe)},
                        std::nullopt,
                        false,
                        chain[a - 1],
                        chain[a]};
        entry.candidate = cross_level_candidate(entry.interval, coarse, max_den);
        if (entry.candidate) {
            TestIdealResult at_candidate = test_ideal(f, *entry.candidate, e_max, caps);
            TestIdealResult at_left = test_ideal(f, entry.interval.lo, e_max, caps);
            entry.certified = at_candidate.certified &&
                              !ideal_equal(at_candidate.ideal, at_left.ideal, caps);
        }
        report.entries.push_back(std::move(entry));
    }
    report.count = report.entries.size();
    return report;
}

MainTheoremCheck verify_main_theorem(const Polynomial& f, unsigned e, const ResourceCaps& caps) {
    require_fp(f);
    if (f.is_zero()) throw std::invalid_argument("nonzero polynomial required");
    Ideal tau = tau_one_minus(f, e, caps);
    MainTheoremCheck check;
    check.holds = true;
    const auto& gb = tau.groebner_basis(kGrevlex, caps);
    for (const auto& g : jacobian_generators(f)) {
        if (g.is_zero()) continue;
        Polynomial nf = gb.empty() ? g : normal_form(g, gb, kGrevlex);
        if (!nf.is_zero()) {
            check.holds = false;
            check.witnesses.emplace_back(g, nf);
        }
    }
    return check;
}

CorollaryCheck verify_corollary_bound(const Polynomial& f, unsigned e_max,
                                      const ResourceCaps& caps) {
    require_fp(f);
    if (f.is_zero() || f.is_unit())
        throw std::invalid_argument("nonzero non-unit polynomial required");

    CorollaryCheck check;
    Ideal jac(f.ring(), jacobian_generators(f));
    Colength len = colength(jac, kGrevlex, caps);
    check.isolated = len.is_finite();
    if (!check.isolated) {
        // The bound only applies to isolated singularities.
        check.bound = 0;
        check.observed = 0;
        check.holds = true;
        return check;
    }
    check.bound = len.value() + 1;

    std::vector<Ideal> chain = ideal_chain(f, e_max, caps);
    Integer jumps(0);
    for (std::size_t a = 1; a < chain.size(); ++a)
        if (!ideal_equal(chain[a], chain[a - 1], caps)) jumps += 1;
    check.observed = jumps;
    check.holds = check.observed <= check.bound;
    return check;
}

} // namespace fjump
