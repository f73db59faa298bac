// Acceptance suite: one criterion per check, each printed as a pass/fail
// line. Every comparison is exact; runtime targets are enforced alongside.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "../../tools/cli.hpp"
#include "../oracles.hpp"
#include "fjump/expr_parser.hpp"
#include "fjump/jumping.hpp"
#include "fjump/random_poly.hpp"

using namespace fjump;

namespace {

struct CorpusItem {
    std::vector<std::string> vars;
    std::string expr;
};

const std::vector<CorpusItem> kCorpus = {
    {{"x"}, "x"},
    {{"x"}, "x^2"},
    {{"x", "y"}, "x*y"},
    {{"x", "y"}, "x^2+y^3"},
    {{"x", "y"}, "x^3+y^3"},
    {{"x", "y"}, "x^2+y^5"},
    {{"x", "y"}, "x^2*y+x*y^2+x^4+y^4"}};

RingPtr ring_for(std::uint64_t p, const std::vector<std::string>& vars) {
    return PolyRing::fp(Prime(p), vars);
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t p, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = p; v <= cap; v *= p) out.push_back(v);
    return out;
}

// ------------------------------------------------------------ criteria ----

// Key identity: residual of sum (l-1) D_l(f) D_{m-l}(f^{m-1}) is exactly
// zero, over Z and over F_p, including every m = p^e <= 25.
bool criterion_key_identity(std::string& detail) {
    std::size_t trials = 0;
    auto run_domain = [&](const RingPtr& ring, const std::string& tag, Rng& rng,
                          const std::vector<std::uint64_t>& forced) {
        std::vector<std::uint64_t> ms;
        for (int t = 0; t < 40; ++t) ms.push_back(1 + rng.below(12));
        ms.insert(ms.end(), forced.begin(), forced.end());
        for (std::uint64_t m : ms) {
            std::size_t nv = 1 + rng.below(3);
            std::vector<std::string> names{"x", "y", "z"};
            names.resize(nv);
            RingPtr r = ring->is_prime_field() ? PolyRing::fp(ring->prime(), names)
                                               : PolyRing::integers(names);
            Polynomial f = random_polynomial(rng, r, 6, 4);
            std::size_t i = rng.below(nv);
            Polynomial residual = key_identity_residual(f, m, i);
            ++trials;
            if (!residual.is_zero()) {
                detail = tag + ": nonzero residual for f=" + render_polynomial(f) +
                         ", m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    };

    Rng rng(20260810);
    std::vector<std::uint64_t> all_pe;
    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t pe : prime_powers_up_to(p, 25)) all_pe.push_back(pe);
    if (!run_domain(PolyRing::integers({"x"}), "Z", rng, all_pe)) return false;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        if (!run_domain(ring_for(p, {"x"}), "F_" + std::to_string(p), rng,
                        prime_powers_up_to(p, 25)))
            return false;
    }
    if (trials < 200) {
        detail = "only " + std::to_string(trials) + " trials";
        return false;
    }
    detail = std::to_string(trials) + " residuals, all exactly zero";
    return true;
}

// Leibniz rule and the composition law, residuals exactly zero.
bool criterion_leibniz_composition(std::string& detail) {
    std::size_t trials = 0;
    Rng rng(7341);
    std::vector<RingPtr> domains{PolyRing::integers({"x", "y"})};
    for (std::uint64_t p : {2, 3, 5, 7}) domains.push_back(ring_for(p, {"x", "y"}));
    for (const auto& ring : domains) {
        for (int t = 0; t < 40; ++t) {
            Polynomial f = random_polynomial(rng, ring, 5, 4);
            Polynomial g = random_polynomial(rng, ring, 5, 4);
            std::uint64_t m = rng.below(9);
            std::size_t i = rng.below(2);
            ++trials;
            if (!leibniz_residual(f, g, m, i).is_zero()) {
                detail = "Leibniz residual nonzero for f=" + render_polynomial(f) +
                         ", g=" + render_polynomial(g) + ", m=" + std::to_string(m);
                return false;
            }
            std::uint64_t m2 = rng.below(9);
            if (!composition_residual(f, m, m2, i).is_zero()) {
                detail = "composition residual nonzero for f=" + render_polynomial(f);
                return false;
            }
        }
    }
    detail = std::to_string(trials) + " trials, residuals exactly zero in both laws";
    return trials >= 200;
}

// D_{p^e,i}(f^{p^e}) = (df/dx_i)^{p^e} and R^{p^e}-linearity below p^e.
bool criterion_lemma31_linearity(std::string& detail) {
    std::size_t trials = 0;
    Rng rng(5150);
    for (std::uint64_t p : {2, 3, 5}) {
        auto ring = ring_for(p, {"x", "y"});
        for (unsigned e = 1; e <= 2; ++e) {
            std::uint64_t pe = prime_power_u64(Prime(p), e);
            for (int t = 0; t < 17; ++t) {
                Polynomial f = random_polynomial(rng, ring, 5, 4);
                std::size_t i = rng.below(2);
                ++trials;
                if (divided_power(frobenius_power(f, e), pe, i) !=
                    frobenius_power(partial_derivative(f, i), e)) {
                    detail = "root-of-power rule failed for f=" + render_polynomial(f) +
                             ", p=" + std::to_string(p) + ", e=" + std::to_string(e);
                    return false;
                }
                Polynomial g = random_polynomial(rng, ring, 3, 3);
                Polynomial gpe = frobenius_power(g, e);
                std::uint64_t m = rng.below(pe);
                if (divided_power(gpe * f, m, i) != gpe * divided_power(f, m, i)) {
                    detail = "linearity failed for m=" + std::to_string(m) +
                             " below p^e=" + std::to_string(pe);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(trials) + " trials, both equalities exact";
    return trials >= 100;
}

// Every Jacobian generator lies in I_e(f^{p^e-1}), full corpus.
bool criterion_main_theorem(std::string& detail) {
    std::size_t cells = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (const auto& item : kCorpus) {
            auto ring = ring_for(p, item.vars);
            Polynomial f = parse_polynomial(item.expr, ring);
            for (unsigned e = 1; e <= 2; ++e) {
                auto check = verify_main_theorem(f, e);
                ++cells;
                if (!check.holds) {
                    detail = "containment failed for f=" + item.expr +
                             ", p=" + std::to_string(p) + ", e=" + std::to_string(e) +
                             ", witness generator=" +
                             render_polynomial(check.witnesses.front().first);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(cells) + " corpus cells, every generator contained";
    return true;
}

// Observed distinct test ideals on (0,1] bounded by colength + 1, with the
// equality case x^2 at p = 3.
bool criterion_corollary_bound(std::string& detail) {
    std::size_t isolated_cells = 0;
    std::ostringstream seen;
    for (std::uint64_t p : {5, 7}) {
        for (const auto& item : kCorpus) {
            auto ring = ring_for(p, item.vars);
            Polynomial f = parse_polynomial(item.expr, ring);
            auto check = verify_corollary_bound(f, 3);
            if (!check.isolated) continue;
            ++isolated_cells;
            if (!check.holds) {
                detail = "bound violated for f=" + item.expr + ", p=" + std::to_string(p) +
                         ": observed " + check.observed.get_str() + " > bound " +
                         check.bound.get_str();
                return false;
            }
            seen << " " << item.expr << "@p" << p << ":" << check.observed.get_str() << "<="
                 << check.bound.get_str();
        }
    }
    auto equality = verify_corollary_bound(
        parse_polynomial("x^2", ring_for(3, {"x"})), 3);
    if (!(equality.isolated && equality.observed == 2 && equality.bound == 2)) {
        detail = "equality case x^2 at p=3: observed " + equality.observed.get_str() +
                 ", bound " + equality.bound.get_str();
        return false;
    }
    detail = std::to_string(isolated_cells) + " isolated cells hold; x^2@p3 meets the bound with equality";
    return isolated_cells >= 8;
}

// fpt candidates reproduce the brute-force oracle exactly.
bool criterion_fpt_oracle(std::string& detail) {
    auto e_max_for = [](std::uint64_t p) -> unsigned {
        switch (p) {
            case 2: return 6;
            case 3: return 4;
            default: return 3; // 5^3, 7^3 give grids finer than any den <= 6 gap
        }
    };

    auto oracle_check = [&](const Polynomial& f, unsigned e_max, const Rational& expected,
                            std::string& why) {
        // Independent route: expansion-based nu, plain denominator scan.
        std::vector<RatInterval> intervals;
        for (unsigned e = 1; e <= e_max; ++e) {
            std::uint64_t nu = oracles::nu_by_expansion(f, e);
            Integer pe = prime_power(f.ring()->prime(), e);
            intervals.push_back(
                RatInterval{Rational(Integer(nu), pe), Rational(Integer(nu + 1), pe)});
        }
        auto oracle_candidate =
            oracles::min_den_scan(intervals.back().lo, intervals.back().hi, 64);
        if (!oracle_candidate || *oracle_candidate != expected) {
            why = "oracle candidate disagrees with the expected value " + expected.str();
            return false;
        }
        auto est = fpt_estimate(f, e_max);
        if (!est.candidate || *est.candidate != *oracle_candidate) {
            why = "fpt_estimate disagrees with the oracle candidate " + oracle_candidate->str();
            return false;
        }
        if (est.intervals.size() != intervals.size()) {
            why = "level count mismatch";
            return false;
        }
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            if (!(est.intervals[i] == intervals[i])) {
                why = "interval mismatch at level " + std::to_string(i + 1);
                return false;
            }
            if (!est.intervals[i].contains(*est.candidate)) {
                why = "interval at level " + std::to_string(i + 1) + " misses the candidate";
                return false;
            }
        }
        return true;
    };

    std::size_t cases = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto ring = ring_for(p, {"x"});
        for (std::uint64_t a = 1; a <= 6; ++a) {
            Polynomial f = power(Polynomial::variable(ring, 0), a);
            std::string why;
            ++cases;
            if (!oracle_check(f, e_max_for(p), Rational(Integer(1), Integer(a)), why)) {
                detail = "x^" + std::to_string(a) + " at p=" + std::to_string(p) + ": " + why;
                return false;
            }
        }
    }
    const std::vector<std::pair<std::uint64_t, Rational>> cusp_values = {
        {2, Rational(Integer(1), Integer(2))},
        {3, Rational(Integer(2), Integer(3))},
        {5, Rational(Integer(4), Integer(5))},
        {7, Rational(Integer(5), Integer(6))}};
    for (const auto& [p, expected] : cusp_values) {
        auto ring = ring_for(p, {"x", "y"});
        Polynomial f = parse_polynomial("x^2+y^3", ring);
        std::string why;
        ++cases;
        if (!oracle_check(f, e_max_for(p), expected, why)) {
            detail = "x^2+y^3 at p=" + std::to_string(p) + ": " + why;
            return false;
        }
    }
    detail = std::to_string(cases) + " fpt values reproduced exactly";
    return true;
}

// Digit recursion against direct expansion of f^a.
bool criterion_froot_oracle(std::string& detail) {
    Rng rng(424242);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    std::size_t trials = 0;
    for (int t = 0; t < 100; ++t) {
        std::uint64_t p = primes[t % 4];
        auto ring = ring_for(p, {"x", "y"});
        Polynomial f = random_polynomial(rng, ring, 3, 4);
        std::uint64_t a = rng.below(p * p + 1);
        unsigned e = 1 + static_cast<unsigned>(rng.below(2));
        ++trials;
        if (!ideal_equal(frobenius_root_power(f, a, e),
                         frobenius_root_power_direct(f, a, e))) {
            detail = "recursion mismatch for f=" + render_polynomial(f) + ", a=" +
                     std::to_string(a) + ", e=" + std::to_string(e) + ", p=" + std::to_string(p);
            return false;
        }
    }
    detail = std::to_string(trials) + " random roots agree with direct expansion";
    return trials >= 100;
}

// Groebner membership against the linear-algebra oracle.
bool criterion_membership_oracle(std::string& detail) {
    Rng rng(31415);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    std::size_t instances = 0;
    for (int t = 0; t < 50; ++t) {
        std::uint64_t p = primes[t % 4];
        auto ring = ring_for(p, {"x", "y"});
        std::vector<Polynomial> gens;
        std::size_t k = 1 + rng.below(3);
        for (std::size_t j = 0; j < k; ++j) gens.push_back(random_polynomial(rng, ring, 3, 3));
        Ideal I(ring, gens);
        Polynomial query = Polynomial::zero(ring);
        if (t % 2 == 0) {
            for (const auto& g : gens) query = query + g * random_polynomial(rng, ring, 3, 2);
            if (query.is_zero() || query.total_degree() > 6)
                query = random_polynomial(rng, ring, 6, 4);
        } else {
            query = random_polynomial(rng, ring, 6, 4);
        }
        bool gb_says = ideal_contains_poly(I, query);
        bool la_says = oracles::linear_membership(query, gens, 6);
        ++instances;
        if (gb_says != la_says) {
            // Certificates over the raw generators may need degree above 6;
            // escalate the oracle before declaring disagreement.
            bool found = gb_says && (oracles::linear_membership(query, gens, 12) ||
                                     oracles::linear_membership(query, gens, 24) ||
                                     oracles::linear_membership(query, gens, 36));
            if (!found) {
                detail = "membership disagreement at p=" + std::to_string(p) +
                         ", query=" + render_polynomial(query);
                return false;
            }
        }
    }
    detail = std::to_string(instances) + " instances agree";
    return instances >= 50;
}

// Minimality: f in J^{[p^e]} forces I_e(f) inside J.
bool criterion_minimality(std::string& detail) {
    Rng rng(2718);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    std::size_t trials = 0;
    while (trials < 100) {
        std::uint64_t p = primes[trials % 4];
        auto ring = ring_for(p, {"x", "y"});
        Ideal J(ring, {random_polynomial(rng, ring, 2, 3), random_polynomial(rng, ring, 2, 3)});
        unsigned e = 1 + static_cast<unsigned>(rng.below(2));
        Polynomial f = Polynomial::zero(ring);
        for (const auto& g : J.generators())
            f = f + frobenius_power(g, e) * random_polynomial(rng, ring, 2, 2);
        if (f.is_zero()) continue;
        ++trials;
        if (!ideal_contains_poly(bracket_power(J, e), f)) {
            detail = "construction broke: f not in J^{[p^e]}";
            return false;
        }
        if (!ideal_subset(frobenius_root_poly(f, e), J)) {
            detail = "minimality failed at p=" + std::to_string(p) + ", e=" + std::to_string(e) +
                     ", f=" + render_polynomial(f);
            return false;
        }
    }
    detail = "100 constructed memberships, root always contained";
    return true;
}

// Byte-identical verify reports for identical seeds.
bool criterion_determinism(std::string& detail) {
    auto run_once = [](const std::vector<std::string>& argv, std::string& out) {
        std::ostringstream o, e;
        int code = cli::run_command(argv, o, e);
        out = o.str();
        return code;
    };
    for (const std::string& fmt : {"json", "text", "csv"}) {
        std::vector<std::string> argv{"verify", "identity", "--prime", "3",   "--vars",
                                      "x,y",    "--trials", "15",      "--seed", "7",
                                      "--format", fmt};
        std::string first, second;
        if (run_once(argv, first) != 0 || run_once(argv, second) != 0) {
            detail = "verify exited nonzero in format " + fmt;
            return false;
        }
        if (first != second) {
            detail = "reports differ between identical runs in format " + fmt;
            return false;
        }
        if (first.empty()) {
            detail = "empty report";
            return false;
        }
    }
    detail = "three formats byte-identical across repeated runs";
    return true;
}

struct Criterion {
    int id;
    std::string name;
    double seconds_limit;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "key identity residual is exactly zero", 60, criterion_key_identity},
        {2, "Leibniz rule and composition law", 30, criterion_leibniz_composition},
        {3, "root-of-power rule and p^e-linearity", 60, criterion_lemma31_linearity},
        {4, "Jacobian generators lie in I_e(f^{p^e-1})", 300, criterion_main_theorem},
        {5, "jump count bounded by colength + 1", 600, criterion_corollary_bound},
        {6, "fpt reproduces the brute-force oracle", 300, criterion_fpt_oracle},
        {7, "digit recursion equals direct expansion", 120, criterion_froot_oracle},
        {8, "membership agrees with linear algebra", 120, criterion_membership_oracle},
        {9, "Frobenius root minimality", 120, criterion_minimality},
        {10, "verify reports replay byte-identically", 120, criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = elapsed < c.seconds_limit;
        bool pass = ok && in_time;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name
                  << "  (" << elapsed << "s < " << c.seconds_limit << "s)";
        if (!detail.empty()) std::cout << "  -- " << detail;
        if (!in_time) std::cout << "  -- exceeded the runtime target";
        std::cout << "\n";
        if (!pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
