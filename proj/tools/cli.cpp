#include "cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fjump/corpus.hpp"
#include "fjump/expr_parser.hpp"
#include "fjump/jumping.hpp"
#include "fjump/random_poly.hpp"

namespace fjump::cli {

namespace {

using nlohmann::json;

enum class Format { text, json_fmt, csv };

struct RunConfig {
    std::uint64_t prime = 5;
    std::string vars = "x,y";
    std::string order = "grevlex";
    unsigned e = 1;
    unsigned e_max = 2;
    std::uint64_t seed = 1;
    std::uint64_t trials = 100;
    std::uint64_t power_exp = 1;
    std::string t_text = "1/2";
    std::uint64_t max_den = 64;
    ResourceCaps caps;
    std::string format = "text";
    bool timing = false;
    bool direct = false;
    bool with_colength = false;
    std::string corpus_path;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    json witness; // null unless failing or informative
    double ms = 0.0;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(piece);
    return out;
}

MonomialOrder order_of(const RunConfig& cfg) {
    if (cfg.order == "lex") return MonomialOrder{MonomialOrderKind::lex};
    if (cfg.order == "grevlex") return MonomialOrder{MonomialOrderKind::grevlex};
    throw std::invalid_argument("unknown order: " + cfg.order);
}

Format format_of(const RunConfig& cfg, bool is_verify) {
    if (cfg.format == "text") return Format::text;
    if (cfg.format == "json") return Format::json_fmt;
    if (cfg.format == "csv") {
        if (!is_verify) throw std::invalid_argument("csv format applies to verify reports only");
        return Format::csv;
    }
    throw std::invalid_argument("unknown format: " + cfg.format);
}

RingPtr ring_of(const RunConfig& cfg) {
    return PolyRing::fp(Prime(cfg.prime), split_csv(cfg.vars));
}

json config_json(const RunConfig& cfg) {
    return json{{"prime", cfg.prime},
                {"vars", split_csv(cfg.vars)},
                {"order", cfg.order},
                {"e_max", cfg.e_max},
                {"seed", cfg.seed},
                {"trials", cfg.trials},
                {"caps",
                 {{"max_terms", cfg.caps.max_terms},
                  {"max_pairs", cfg.caps.max_pairs},
                  {"max_pe", cfg.caps.max_pe}}},
                {"format", cfg.format}};
}

json ideal_json(const Ideal& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(render_polynomial(g));
    return gens;
}

std::string ideal_text(const Ideal& I) {
    if (I.generators().empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) out += ", ";
        out += render_polynomial(I.generators()[i]);
    }
    return out + ")";
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

// Timing fields are emitted only on request so identical runs stay
// byte-identical.
void emit_report(std::ostream& out, const RunConfig& cfg, const std::string& command,
                 const std::vector<CheckResult>& results, Format fmt) {
    if (fmt == Format::json_fmt) {
        json doc{{"command", command}, {"config", config_json(cfg)}};
        json arr = json::array();
        for (const auto& r : results) {
            json entry{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}};
            if (!r.witness.is_null()) entry["witness"] = r.witness;
            if (cfg.timing) entry["timing_ms"] = r.ms;
            arr.push_back(std::move(entry));
        }
        doc["results"] = std::move(arr);
        out << doc.dump(2) << "\n";
        return;
    }
    if (fmt == Format::csv) {
        out << "name,status,witness,timing_ms\n";
        for (const auto& r : results) {
            out << csv_escape(r.name) << "," << (r.pass ? "pass" : "fail") << ","
                << (r.witness.is_null() ? "" : csv_escape(r.witness.dump())) << ",";
            if (cfg.timing) out << r.ms;
            out << "\n";
        }
        return;
    }
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "pass" : "FAIL") << "  " << r.name;
        if (cfg.timing) out << "  (" << r.ms << " ms)";
        out << "\n";
        if (!r.pass && !r.witness.is_null()) out << "      witness: " << r.witness.dump() << "\n";
        if (!r.pass) ++failed;
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
}

int finish(std::ostream& out, const RunConfig& cfg, const std::string& command,
           const std::vector<CheckResult>& results) {
    emit_report(out, cfg, command, results, format_of(cfg, true));
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

void run_check(std::vector<CheckResult>& results, const std::string& name,
               const std::function<std::pair<bool, json>()>& body) {
    auto start = std::chrono::steady_clock::now();
    auto [pass, witness] = body();
    auto stop = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.pass = pass;
    r.witness = std::move(witness);
    r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    results.push_back(std::move(r));
}

// ---------------------------------------------------------------- verify --

struct VerifyDomain {
    RingPtr ring;
    std::string tag;
};

std::vector<VerifyDomain> identity_domains(const RunConfig& cfg) {
    auto vars = split_csv(cfg.vars);
    return {{PolyRing::integers(vars), "Z"},
            {ring_of(cfg), "F" + std::to_string(cfg.prime)}};
}

std::vector<std::uint64_t> forced_prime_powers(std::uint64_t p, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = p; v <= cap; v *= p) out.push_back(v);
    return out;
}

json trial_witness(const Polynomial& f, std::uint64_t m, std::size_t i,
                   const Polynomial& residual) {
    return json{{"f", render_polynomial(f)},
                {"m", m},
                {"var", f.ring()->vars()[i]},
                {"residual", render_polynomial(residual)}};
}

void verify_identity(const RunConfig& cfg, std::vector<CheckResult>& results) {
    for (const auto& dom : identity_domains(cfg)) {
        Rng rng(cfg.seed);
        std::size_t n = dom.ring->nvars();
        auto one_trial = [&](const std::string& name, std::uint64_t m) {
            Polynomial f = random_polynomial(rng, dom.ring, 6, 4);
            std::size_t i = rng.below(n);
            run_check(results, name, [&]() -> std::pair<bool, json> {
                Polynomial residual = key_identity_residual(f, m, i, cfg.caps);
                if (residual.is_zero()) return {true, json()};
                return {false, trial_witness(f, m, i, residual)};
            });
        };
        for (std::uint64_t t = 0; t < cfg.trials; ++t)
            one_trial("identity/" + dom.tag + "/trial" + std::to_string(t), 1 + rng.below(12));
        // All prime-power orders up to 25 in the matching characteristic.
        std::vector<std::uint64_t> forced;
        if (dom.tag == "Z")
            for (std::uint64_t p : {2, 3, 5, 7})
                for (std::uint64_t pe : forced_prime_powers(p, 25)) forced.push_back(pe);
        else
            forced = forced_prime_powers(cfg.prime, 25);
        for (std::uint64_t m : forced)
            one_trial("identity/" + dom.tag + "/m" + std::to_string(m), m);
    }
}

void verify_leibniz(const RunConfig& cfg, std::vector<CheckResult>& results) {
    for (const auto& dom : identity_domains(cfg)) {
        Rng rng(cfg.seed);
        std::size_t n = dom.ring->nvars();
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            Polynomial f = random_polynomial(rng, dom.ring, 5, 4);
            Polynomial g = random_polynomial(rng, dom.ring, 5, 4);
            std::uint64_t m = rng.below(9);
            std::size_t i = rng.below(n);
            run_check(results, "leibniz/" + dom.tag + "/trial" + std::to_string(t),
                      [&]() -> std::pair<bool, json> {
                          Polynomial residual = leibniz_residual(f, g, m, i, cfg.caps);
                          if (residual.is_zero()) return {true, json()};
                          json w = trial_witness(f, m, i, residual);
                          w["g"] = render_polynomial(g);
                          return {false, w};
                      });
            std::uint64_t m2 = rng.below(9);
            run_check(results, "composition/" + dom.tag + "/trial" + std::to_string(t),
                      [&]() -> std::pair<bool, json> {
                          Polynomial residual = composition_residual(f, m, m2, i);
                          if (residual.is_zero()) return {true, json()};
                          json w = trial_witness(f, m, i, residual);
                          w["m2"] = m2;
                          return {false, w};
                      });
        }
    }
}

void verify_lemma31(const RunConfig& cfg, std::vector<CheckResult>& results) {
    RingPtr ring = ring_of(cfg);
    Rng rng(cfg.seed);
    std::size_t n = ring->nvars();
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        Polynomial f = random_polynomial(rng, ring, 5, 4);
        unsigned e = 1 + static_cast<unsigned>(rng.below(2));
        std::size_t i = rng.below(n);
        run_check(results, "lemma31/e" + std::to_string(e) + "/trial" + std::to_string(t),
                  [&]() -> std::pair<bool, json> {
                      std::uint64_t pe = prime_power_u64(ring->prime(), e, cfg.caps);
                      Polynomial lhs = divided_power(frobenius_power(f, e, cfg.caps), pe, i);
                      Polynomial rhs = frobenius_power(partial_derivative(f, i), e, cfg.caps);
                      if (lhs == rhs) return {true, json()};
                      return {false, trial_witness(f, pe, i, lhs - rhs)};
                  });
    }
}

void verify_linearity(const RunConfig& cfg, std::vector<CheckResult>& results) {
    RingPtr ring = ring_of(cfg);
    Rng rng(cfg.seed);
    std::size_t n = ring->nvars();
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        Polynomial f = random_polynomial(rng, ring, 5, 4);
        Polynomial g = random_polynomial(rng, ring, 3, 3);
        unsigned e = 1 + static_cast<unsigned>(rng.below(2));
        std::size_t i = rng.below(n);
        run_check(results, "linearity/e" + std::to_string(e) + "/trial" + std::to_string(t),
                  [&]() -> std::pair<bool, json> {
                      std::uint64_t pe = prime_power_u64(ring->prime(), e, cfg.caps);
                      std::uint64_t m = rng.below(pe);
                      Polynomial gpe = frobenius_power(g, e, cfg.caps);
                      Polynomial lhs = divided_power(mul(gpe, f, cfg.caps), m, i);
                      Polynomial rhs = mul(gpe, divided_power(f, m, i), cfg.caps);
                      if (lhs == rhs) return {true, json()};
                      json w = trial_witness(f, m, i, lhs - rhs);
                      w["g"] = render_polynomial(g);
                      return {false, w};
                  });
    }
}

std::vector<std::pair<std::string, std::string>> builtin_corpus() {
    return {{"x", "x"},
            {"x", "x^2"},
            {"x,y", "x*y"},
            {"x,y", "x^2+y^3"},
            {"x,y", "x^3+y^3"},
            {"x,y", "x^2+y^5"},
            {"x,y", "x^2*y+x*y^2+x^4+y^4"}};
}

std::vector<CorpusEntry> corpus_for(const RunConfig& cfg) {
    if (!cfg.corpus_path.empty()) return load_corpus_file(cfg.corpus_path, cfg.caps);
    std::vector<CorpusEntry> entries;
    unsigned line = 0;
    for (const auto& [vars, expr] : builtin_corpus()) {
        RingPtr ring = PolyRing::fp(Prime(cfg.prime), split_csv(vars));
        entries.push_back(CorpusEntry{ring, parse_polynomial(expr, ring, cfg.caps), ++line});
    }
    return entries;
}

void verify_main(const RunConfig& cfg, std::vector<CheckResult>& results) {
    for (const auto& entry : corpus_for(cfg)) {
        for (unsigned e = 1; e <= cfg.e_max; ++e) {
            std::string name = "main/" + entry.ring->description() + "/" +
                               render_polynomial(entry.f) + "/e" + std::to_string(e);
            run_check(results, name, [&]() -> std::pair<bool, json> {
                auto check = verify_main_theorem(entry.f, e, cfg.caps);
                if (check.holds) return {true, json()};
                json w = json::array();
                for (const auto& [gen, nf] : check.witnesses)
                    w.push_back(json{{"generator", render_polynomial(gen)},
                                     {"normal_form", render_polynomial(nf)}});
                return {false, w};
            });
        }
    }
}

void verify_corollary(const RunConfig& cfg, std::vector<CheckResult>& results) {
    for (const auto& entry : corpus_for(cfg)) {
        std::string name = "corollary/" + entry.ring->description() + "/" +
                           render_polynomial(entry.f) + "/e_max" + std::to_string(cfg.e_max);
        run_check(results, name, [&]() -> std::pair<bool, json> {
            auto check = verify_corollary_bound(entry.f, cfg.e_max, cfg.caps);
            json info{{"isolated", check.isolated},
                      {"bound", check.bound.get_str()},
                      {"observed", check.observed.get_str()}};
            return {check.holds, info};
        });
    }
}

// ------------------------------------------------------------- compute ----

int cmd_froot(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    Polynomial f = parse_polynomial(expr, ring, cfg.caps);
    Ideal I = cfg.direct ? frobenius_root_power_direct(f, cfg.power_exp, cfg.e, cfg.caps)
                         : frobenius_root_power(f, cfg.power_exp, cfg.e, cfg.caps);
    if (format_of(cfg, false) == Format::json_fmt) {
        json doc{{"command", "froot"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "froot"},
                                    {"status", "ok"},
                                    {"value",
                                     {{"e", cfg.e},
                                      {"power", cfg.power_exp},
                                      {"generators", ideal_json(I)}}}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "I_" << cfg.e << "(f^" << cfg.power_exp << ") over " << ring->description()
            << " = " << ideal_text(I) << "\n";
    }
    return 0;
}

int cmd_tau(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    Polynomial f = parse_polynomial(expr, ring, cfg.caps);
    Rational t = Rational::parse(cfg.t_text);
    TestIdealResult r = test_ideal(f, t, cfg.e_max, cfg.caps);
    if (format_of(cfg, false) == Format::json_fmt) {
        json doc{{"command", "tau"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "tau"},
                                    {"status", "ok"},
                                    {"value",
                                     {{"t", t.str()},
                                      {"e_used", r.e_used},
                                      {"certified", r.certified},
                                      {"generators", ideal_json(r.ideal)}}}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "tau(f^(" << t.str() << ")) over " << ring->description() << " = "
            << ideal_text(r.ideal) << "\n";
        out << "e_used: " << r.e_used << "  certified: " << (r.certified ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_fpt(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    Polynomial f = parse_polynomial(expr, ring, cfg.caps);
    FptEstimate est = fpt_estimate(f, cfg.e_max, cfg.caps, cfg.max_den);
    if (format_of(cfg, false) == Format::json_fmt) {
        json intervals = json::array();
        for (const auto& iv : est.intervals)
            intervals.push_back(json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}});
        json value{{"intervals", intervals}};
        value["candidate"] = est.candidate ? json(est.candidate->str()) : json();
        json doc{{"command", "fpt"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "fpt"}, {"status", "ok"}, {"value", value}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "fpt intervals for f over " << ring->description() << ":\n";
        for (unsigned e = 0; e < est.intervals.size(); ++e)
            out << "  e=" << (e + 1) << ": (" << est.intervals[e].lo.str() << ", "
                << est.intervals[e].hi.str() << "]\n";
        out << "candidate: " << (est.candidate ? est.candidate->str() : "none") << "\n";
    }
    return 0;
}

int cmd_jumps(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    Polynomial f = parse_polynomial(expr, ring, cfg.caps);
    JumpReport report = jumping_numbers(f, cfg.e_max, cfg.caps, cfg.max_den);
    if (format_of(cfg, false) == Format::json_fmt) {
        json entries = json::array();
        for (const auto& en : report.entries) {
            json e{{"interval", {{"lo", en.interval.lo.str()}, {"hi", en.interval.hi.str()}}},
                   {"certified", en.certified},
                   {"ideal_before", ideal_json(en.ideal_before)},
                   {"ideal_after", ideal_json(en.ideal_after)}};
            e["candidate"] = en.candidate ? json(en.candidate->str()) : json();
            entries.push_back(std::move(e));
        }
        json doc{{"command", "jumps"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "jumps"},
                                    {"status", "ok"},
                                    {"value",
                                     {{"e_max", report.e_max},
                                      {"count", report.count},
                                      {"entries", entries}}}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "jump report for f over " << ring->description() << " (e_max=" << report.e_max
            << ", count=" << report.count << ")\n";
        for (const auto& en : report.entries) {
            out << "  (" << en.interval.lo.str() << ", " << en.interval.hi.str() << "]"
                << "  candidate=" << (en.candidate ? en.candidate->str() : "none")
                << "  certified=" << (en.certified ? "yes" : "no") << "\n";
            out << "    before " << ideal_text(en.ideal_before) << "  after "
                << ideal_text(en.ideal_after) << "\n";
        }
    }
    return 0;
}

int cmd_jacobian(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    Polynomial f = parse_polynomial(expr, ring, cfg.caps);
    auto gens = jacobian_generators(f);
    std::optional<std::string> len_text;
    if (cfg.with_colength) {
        Ideal jac(ring, gens);
        len_text = colength(jac, order_of(cfg), cfg.caps).str();
    }
    if (format_of(cfg, false) == Format::json_fmt) {
        json gl = json::array();
        for (const auto& g : gens) gl.push_back(render_polynomial(g));
        json value{{"generators", gl}};
        if (len_text) value["colength"] = *len_text;
        json doc{{"command", "jacobian"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "jacobian"}, {"status", "ok"}, {"value", value}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "Jac(f) over " << ring->description() << " = (";
        for (std::size_t i = 0; i < gens.size(); ++i)
            out << (i ? ", " : "") << render_polynomial(gens[i]);
        out << ")\n";
        if (len_text) out << "colength: " << *len_text << "\n";
    }
    return 0;
}

int cmd_gb(const RunConfig& cfg, const std::string& expr, std::ostream& out) {
    RingPtr ring = ring_of(cfg);
    auto gens = parse_polynomial_list(expr, ring, cfg.caps);
    auto basis = buchberger_reduced_gb(ring, gens, order_of(cfg), cfg.caps);
    if (format_of(cfg, false) == Format::json_fmt) {
        json gl = json::array();
        for (const auto& g : basis) gl.push_back(render_polynomial(g));
        json doc{{"command", "gb"},
                 {"config", config_json(cfg)},
                 {"results",
                  json::array({json{{"name", "gb"},
                                    {"status", "ok"},
                                    {"value", {{"order", cfg.order}, {"basis", gl}}}}})}};
        out << doc.dump(2) << "\n";
    } else {
        out << "reduced " << cfg.order << " basis over " << ring->description() << ":\n";
        if (basis.empty()) out << "  (zero ideal)\n";
        for (const auto& g : basis) out << "  " << render_polynomial(g) << "\n";
    }
    return 0;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out = "fjump";
    for (const auto& a : args) {
        out += " ";
        out += a;
    }
    return out;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string expr;
    std::string verify_what;

    CLI::App app{"Frobenius roots, test ideals and F-jumping coefficients over F_p"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_expr) {
        sub->add_option("--prime", cfg.prime, "field characteristic");
        sub->add_option("--vars", cfg.vars, "comma-separated variable names");
        sub->add_option("--order", cfg.order, "monomial order: grevlex or lex");
        sub->add_option("--format", cfg.format, "output format: text, json or csv");
        sub->add_option("--max-terms", cfg.caps.max_terms, "polynomial term cap");
        sub->add_option("--max-pairs", cfg.caps.max_pairs, "Buchberger pair cap");
        sub->add_option("--max-pe", cfg.caps.max_pe, "largest allowed p^e");
        sub->add_flag("--timing", cfg.timing, "include timing_ms in reports");
        if (needs_expr) sub->add_option("poly", expr, "polynomial expression")->required();
    };

    CLI::App* froot = app.add_subcommand("froot", "Frobenius root I_e(f^a)");
    add_common(froot, true);
    froot->add_option("--e", cfg.e, "root level e");
    froot->add_option("--power", cfg.power_exp, "exponent a");
    froot->add_flag("--direct", cfg.direct, "expand f^a instead of the digit recursion");

    CLI::App* tau = app.add_subcommand("tau", "test ideal at rational t");
    add_common(tau, true);
    tau->add_option("--t", cfg.t_text, "exponent t as num/den")->required();
    tau->add_option("--e-max", cfg.e_max, "largest level to try");

    CLI::App* fpt = app.add_subcommand("fpt", "F-pure threshold estimate");
    add_common(fpt, true);
    fpt->add_option("--e-max", cfg.e_max, "largest level");
    fpt->add_option("--max-den", cfg.max_den, "candidate denominator cap");

    CLI::App* jumps = app.add_subcommand("jumps", "F-jumping coefficients in (0,1]");
    add_common(jumps, true);
    jumps->add_option("--e-max", cfg.e_max, "grid level");
    jumps->add_option("--max-den", cfg.max_den, "candidate denominator cap");

    CLI::App* jacobian = app.add_subcommand("jacobian", "Jacobian ideal generators");
    add_common(jacobian, true);
    jacobian->add_flag("--colength", cfg.with_colength, "also print dim_k(R/Jac(f))");

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of ';'-separated generators");
    add_common(gb, true);

    CLI::App* verify = app.add_subcommand("verify", "randomized and corpus verification");
    add_common(verify, false);
    verify
        ->add_option("what", verify_what,
                     "identity, leibniz, lemma31, linearity, main or corollary")
        ->required();
    verify->add_option("--trials", cfg.trials, "number of random trials");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--e-max", cfg.e_max, "largest level for main/corollary");
    verify->add_option("--corpus", cfg.corpus_path, "corpus file (p=..; vars=..; f=..)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (froot->parsed()) return cmd_froot(cfg, expr, out);
        if (tau->parsed()) return cmd_tau(cfg, expr, out);
        if (fpt->parsed()) return cmd_fpt(cfg, expr, out);
        if (jumps->parsed()) return cmd_jumps(cfg, expr, out);
        if (jacobian->parsed()) return cmd_jacobian(cfg, expr, out);
        if (gb->parsed()) return cmd_gb(cfg, expr, out);
        if (verify->parsed()) {
            format_of(cfg, true); // validate before running anything
            std::vector<CheckResult> results;
            if (verify_what == "identity") verify_identity(cfg, results);
            else if (verify_what == "leibniz") verify_leibniz(cfg, results);
            else if (verify_what == "lemma31") verify_lemma31(cfg, results);
            else if (verify_what == "linearity") verify_linearity(cfg, results);
            else if (verify_what == "main") verify_main(cfg, results);
            else if (verify_what == "corollary") verify_corollary(cfg, results);
            else throw std::invalid_argument("unknown verify target: " + verify_what);
            return finish(out, cfg, join_args(args), results);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace fjump::cli
