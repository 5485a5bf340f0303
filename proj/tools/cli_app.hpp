#pragma once

// Command-line front end: zeta | code | prospect | verify-lemma | asymptotic.
//
// Exit codes: 0 success, 2 validation error, 3 size-guard refusal,
// 4 verification failure. JSON and CSV outputs are byte-stable for a given
// command line; text output is for humans only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hermitian/hermitian.hpp"

namespace hermitian::cli {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string subcommand;
    std::optional<long long> q;
    std::optional<long long> t;
    std::optional<long long> l;
    std::optional<long long> t_max;
    long long kmax = 10;
    std::string criterion = "exact";
    long long k_min = 1;
    long long eval = 4;
    std::optional<long long> s;
    std::optional<long long> m;
    bool exact_distance = false;
    bool matrix = false;
    Format format = Format::Json;
    std::string out_path;
    bool force_size = false;
    unsigned threads = 0;
    double q_eps = 2.0;
    double slack = 1e-6;

    std::uint64_t field_guard() const { return force_size ? kMaxFieldCardinality : kDefaultFieldGuard; }
    std::uint64_t enumeration_guard() const {
        return force_size ? std::numeric_limits<std::uint64_t>::max() : kDefaultEnumerationGuard;
    }
};

inline std::string big(const BigInt& v) { return v.str(); }

inline std::vector<std::string> big_list(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(big(x));
    return out;
}

inline long long require(const std::optional<long long>& v, const char* flag) {
    if (!v) throw ValidationError(std::string("missing required flag ") + flag);
    return *v;
}

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    return s + '\n';
}

inline std::string key_value_csv(const ordered_json& obj) {
    std::string s = csv_join({"key", "value"});
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.value().is_structured()) continue;
        std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        s += csv_join({it.key(), v});
    }
    return s;
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + '\n'; }

// ---------------------------------------------------------------------------
// zeta

inline std::string cmd_zeta(const RunConfig& cfg) {
    const long long q = require(cfg.q, "--q");
    if (cfg.kmax < 0) throw RangeError("--kmax must be nonnegative");
    const ZetaProfile z = zeta_profile(q, cfg.kmax);

    std::vector<AkBoundReport> checks;
    for (long long k = 0; k <= cfg.kmax; ++k) checks.push_back(check_Ak_bound(q, k));

    if (cfg.format == Format::Csv) {
        std::string s = csv_join({"k", "A_k", "bound_numerator", "bound_denominator", "holds"});
        for (const auto& c : checks)
            s += csv_join({std::to_string(c.k), big(c.a_k), big(c.bound_numerator), big(c.bound_denominator),
                           c.holds ? "true" : "false"});
        return s;
    }
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        os << "Hermitian curve over F_" << q * q << "  (q = " << q << ", genus " << z.genus << ")\n";
        os << "L(T) = (1 + " << q << "T)^" << 2 * z.genus << "\n";
        os << "class number h = " << z.class_number << "\n";
        for (const auto& c : checks) {
            os << "A_" << c.k << " = " << c.a_k << "   bound h*q^(2k+2-2g) = " << c.bound_numerator;
            if (c.bound_denominator != 1) os << "/" << c.bound_denominator;
            os << "   " << (c.holds ? "holds" : "FAILS") << "\n";
        }
        return os.str();
    }
    ordered_json j;
    j["command"] = "zeta";
    j["q"] = q;
    j["genus"] = z.genus;
    j["l_polynomial"] = big_list(z.l_polynomial);
    j["class_number"] = big(z.class_number);
    j["kmax"] = cfg.kmax;
    j["A"] = big_list(z.a);
    auto arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json row;
        row["k"] = c.k;
        row["A_k"] = big(c.a_k);
        row["bound_numerator"] = big(c.bound_numerator);
        row["bound_denominator"] = big(c.bound_denominator);
        row["holds"] = c.holds;
        arr.push_back(row);
    }
    j["bound_check"] = arr;
    return dump(j);
}

// ---------------------------------------------------------------------------
// code

inline std::string cmd_code(const RunConfig& cfg) {
    const long long q = require(cfg.q, "--q");
    const long long t = require(cfg.t, "--t");
    goppa_bound(q, t);  // range check before any enumeration
    LinearCode code = generator_matrix(q, t, cfg.field_guard());
    const auto basis = monomial_basis(q, t);
    const long long g = genus(q);
    std::optional<Interval> band;
    if (t > 2 * g - 1) band = yang_kumar_band(q, t);
    std::optional<DistanceResult> dist;
    if (cfg.exact_distance) {
        WeightOptions opts;
        opts.guard = cfg.enumeration_guard();
        opts.threads = cfg.threads;
        dist = min_distance_exact(code, opts);
        code.d_exact = dist->d;
    }
    const FieldSpec& f = *code.field();

    if (cfg.format == Format::Csv) {
        std::vector<std::string> header{"monomial", "pole_order"};
        for (std::size_t c = 0; c < code.n; ++c) header.push_back("c" + std::to_string(c));
        std::string s = csv_join(header);
        for (std::size_t r = 0; r < code.generator.rows(); ++r) {
            std::vector<std::string> row{basis[r].to_string(), std::to_string(basis[r].pole_order(q))};
            for (std::size_t c = 0; c < code.n; ++c) row.push_back(f.coefficient_string(code.generator.raw(r, c)));
            s += csv_join(row);
        }
        return s;
    }
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        os << "one-point Hermitian code C_L(" << t << " P_inf, D) over F_" << q * q << "\n";
        os << "[n, k] = [" << code.n << ", " << code.k << "], genus " << g << "\n";
        os << "Goppa bound d >= " << code.d_lower << "\n";
        if (band) os << "distance band [" << band->lo << ", " << band->hi << ")\n";
        if (dist) os << "exact minimum distance d = " << dist->d << " (" << dist->codewords_enumerated
                     << " codewords enumerated)\n";
        if (cfg.matrix) {
            os << "generator matrix (rows: ";
            for (std::size_t r = 0; r < basis.size(); ++r) os << (r ? ", " : "") << basis[r].to_string();
            os << ")\n";
            for (std::size_t r = 0; r < code.generator.rows(); ++r) {
                for (std::size_t c = 0; c < code.n; ++c) os << (c ? " " : "  ") << f.pretty(code.generator.raw(r, c));
                os << "\n";
            }
        }
        return os.str();
    }
    ordered_json j;
    j["command"] = "code";
    j["q"] = q;
    j["t"] = t;
    j["genus"] = g;
    j["n"] = code.n;
    j["k"] = code.k;
    j["goppa_bound"] = code.d_lower;
    if (band) {
        j["yang_kumar_band"] = {{"lo", band->lo}, {"hi", band->hi}};
    } else {
        j["yang_kumar_band"] = nullptr;
    }
    auto names = ordered_json::array();
    for (const auto& m : basis) names.push_back(m.to_string());
    j["basis"] = names;
    if (dist) {
        auto witness = ordered_json::array();
        for (const auto& w : dist->witness) witness.push_back(f.coefficient_string(w.value()));
        j["exact_distance"] = {{"d", dist->d},
                               {"codewords_enumerated", dist->codewords_enumerated},
                               {"witness", witness}};
    } else {
        j["exact_distance"] = nullptr;
    }
    if (cfg.matrix) {
        auto rows = ordered_json::array();
        for (std::size_t r = 0; r < code.generator.rows(); ++r) {
            auto row = ordered_json::array();
            for (std::size_t c = 0; c < code.n; ++c) row.push_back(f.coefficient_string(code.generator.raw(r, c)));
            rows.push_back(row);
        }
        j["generator_matrix"] = rows;
    }
    return dump(j);
}

// ---------------------------------------------------------------------------
// prospect

inline std::string prospect_footer(const ProspectReport& rep) {
    std::ostringstream os;
    os << "best improvement over the Goppa bound: " << rep.best_improvement() << " (rows: " << rep.rows.size()
       << "); earlier constructions reach roughly g - q = " << rep.genus - rep.q
       << "; the large-q parameter choice targets g - 4 = " << rep.genus - 4;
    return os.str();
}

inline std::string cmd_prospect(const RunConfig& cfg) {
    const long long q = require(cfg.q, "--q");
    const Criterion crit = parse_criterion(cfg.criterion);
    SearchOptions opts;
    opts.k_min = cfg.k_min;
    if (cfg.t_max) {
        if (*cfg.t_max < 0) throw RangeError("--t-max must be nonnegative");
        opts.t_max = *cfg.t_max;
    }
    if (cfg.l) {
        if (*cfg.l < 1) throw RangeError("--l must be at least 1");
        opts.only_l = *cfg.l;
    }
    const ProspectReport rep = search(q, crit, opts);

    if (cfg.format == Format::Csv) {
        std::string s = csv_join({"l", "t", "s", "k", "d_lower", "goppa_d_lower", "improvement", "criterion"});
        for (const auto& r : rep.rows)
            s += csv_join({std::to_string(r.l), std::to_string(r.t), std::to_string(r.s), std::to_string(r.k),
                           std::to_string(r.d_lower), std::to_string(r.goppa_d_lower), std::to_string(r.improvement),
                           to_string(r.criterion)});
        return s;
    }
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        os << "criterion " << to_string(crit) << ", q = " << q << ", n = " << rep.n << ", g = " << rep.genus
           << ", k >= " << rep.k_min << ", t <= " << rep.t_max << "\n";
        os << std::setw(6) << "l" << std::setw(6) << "t" << std::setw(7) << "s" << std::setw(7) << "k"
           << std::setw(9) << "d>=" << std::setw(9) << "goppa" << std::setw(8) << "gain" << "\n";
        for (const auto& r : rep.rows)
            os << std::setw(6) << r.l << std::setw(6) << r.t << std::setw(7) << r.s << std::setw(7) << r.k
               << std::setw(9) << r.d_lower << std::setw(9) << r.goppa_d_lower << std::setw(8) << r.improvement
               << "\n";
        os << prospect_footer(rep) << "\n";
        return os.str();
    }
    ordered_json j;
    j["command"] = "prospect";
    j["q"] = q;
    j["genus"] = rep.genus;
    j["n"] = rep.n;
    j["criterion"] = to_string(crit);
    j["k_min"] = rep.k_min;
    j["t_max"] = rep.t_max;
    auto rows = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json o;
        o["l"] = r.l;
        o["t"] = r.t;
        o["s"] = r.s;
        o["k"] = r.k;
        o["d_lower"] = r.d_lower;
        o["goppa_d_lower"] = r.goppa_d_lower;
        o["improvement"] = r.improvement;
        o["criterion"] = to_string(r.criterion);
        rows.push_back(o);
    }
    j["rows"] = rows;
    j["best_improvement"] = rep.best_improvement();
    j["reference_g_minus_q"] = rep.genus - rep.q;
    j["note"] = prospect_footer(rep);
    return dump(j);
}

// ---------------------------------------------------------------------------
// verify-lemma

inline ordered_json point_json(const picard::ECPoint& p) {
    if (p.is_infinity()) return "inf";
    const FieldSpec& f = *p.x().spec();
    return {{"x", f.coefficient_string(p.x().value())}, {"y", f.coefficient_string(p.y().value())}};
}

inline std::string cmd_verify_lemma(const RunConfig& cfg) {
    const long long q = require(cfg.q, "--q");
    if (q != picard::kToyQ) throw ScopeError("verify-lemma supports only q = 2 (the genus-1 curve)");
    const long long s = require(cfg.s, "--s");
    const long long m = require(cfg.m, "--m");
    if (m < 1) throw RangeError("--m must be at least 1");
    if (cfg.eval < 1 || cfg.eval > 8) throw RangeError("--eval must be between 1 and 8");
    const auto eval_set = picard::default_eval_set(static_cast<std::size_t>(cfg.eval));
    WeightOptions opts;
    opts.threads = cfg.threads;
    opts.guard = cfg.enumeration_guard();
    const auto rep = picard::build_and_verify(eval_set, s, m, opts);
    const std::string status = rep.passed ? "pass" : "no-good-class";
    const FieldSpec& f = *picard::toy_curve().field;

    ordered_json j;
    j["command"] = "verify-lemma";
    j["q"] = q;
    j["s"] = s;
    j["m"] = m;
    j["n"] = rep.n;
    j["hit_count"] = rep.hit_count;
    j["class_number"] = rep.class_number;
    j["status"] = status;
    j["required_distance"] = rep.required_distance;
    if (rep.code) {
        j["k"] = rep.code->k;
        j["exact_distance"] = rep.distance->d;
    } else {
        j["k"] = nullptr;
        j["exact_distance"] = nullptr;
    }

    if (cfg.format == Format::Csv) return key_value_csv(j);
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        os << "evaluation set:";
        for (const auto& p : eval_set) os << " " << p.to_string();
        os << "\nN_{" << s << "," << m << "} = " << rep.hit_count << " of h = " << rep.class_number << " classes\n";
        if (!rep.good_class) {
            os << "every class is hit; no divisor G exists for these parameters\n";
            return os.str();
        }
        os << "class: degree " << rep.good_class->degree << ", Abel-Jacobi point " << rep.good_class->z.to_string()
           << "\nG = " << rep.representative->divisor().to_string() << "\nL(G) basis:\n";
        for (const auto& fn : rep.basis) os << "  " << fn.to_string() << "\n";
        os << "code [" << rep.n << ", " << rep.code->k << ", " << rep.distance->d << "], required d >= "
           << rep.required_distance << ": " << status << "\n";
        return os.str();
    }

    auto pts = ordered_json::array();
    for (const auto& p : eval_set) pts.push_back(point_json(p));
    j["eval_set"] = pts;
    if (rep.good_class) {
        j["good_class"] = {{"degree", rep.good_class->degree}, {"z", point_json(rep.good_class->z)}};
        auto terms = ordered_json::array();
        const auto divisor = rep.representative->divisor();
        for (const auto& [p, mult] : divisor.terms())
            terms.push_back({{"point", point_json(p)}, {"multiplicity", mult}});
        j["divisor"] = terms;
        auto basis = ordered_json::array();
        for (const auto& fn : rep.basis) {
            auto num = ordered_json::array();
            for (const auto& [c, mono] : fn.numerator)
                num.push_back({{"coefficient", f.coefficient_string(c.value())}, {"a", mono.a}, {"b", mono.b}});
            auto den = ordered_json::array();
            for (const auto& r : fn.denominator_roots) den.push_back(f.coefficient_string(r.value()));
            basis.push_back({{"numerator", num}, {"denominator_roots", den}});
        }
        j["basis"] = basis;
        auto rows = ordered_json::array();
        for (std::size_t r = 0; r < rep.code->generator.rows(); ++r) {
            auto row = ordered_json::array();
            for (std::size_t c = 0; c < rep.code->n; ++c)
                row.push_back(f.coefficient_string(rep.code->generator.raw(r, c)));
            rows.push_back(row);
        }
        j["generator_matrix"] = rows;
    } else {
        j["good_class"] = nullptr;
        j["divisor"] = nullptr;
        j["basis"] = nullptr;
        j["generator_matrix"] = nullptr;
    }
    return dump(j);
}

// ---------------------------------------------------------------------------
// asymptotic

inline std::string cmd_asymptotic(const RunConfig& cfg) {
    const long long q = require(cfg.q, "--q");
    AsymptoticOptions opts;
    opts.q_eps = cfg.q_eps;
    opts.slack = cfg.slack;
    const auto p = theorem_profile(q, opts);

    ordered_json j;
    j["command"] = "asymptotic";
    j["q"] = p.q;
    j["genus"] = p.genus;
    j["n"] = p.n;
    j["q_eps"] = p.q_eps;
    j["alpha"] = p.alpha;
    j["entropy"] = p.entropy;
    j["theta_star"] = p.theta_star;
    j["theta"] = p.theta;
    j["margin"] = p.margin;
    j["l"] = p.l;
    j["t"] = p.t;
    j["s"] = p.s;
    j["k"] = p.k;
    j["d_lower"] = p.d_lower;
    j["k_plus_d"] = p.k_plus_d;
    j["improvement"] = p.improvement;
    j["predicted_improvement"] = p.predicted_improvement;
    j["k_positive"] = p.k_positive;
    j["theta_in_unit_interval"] = p.theta_in_unit_interval;

    if (cfg.format == Format::Csv) return key_value_csv(j);
    if (cfg.format == Format::Text) {
        std::ostringstream os;
        os << std::setprecision(12);
        os << "q = " << p.q << ", n = " << p.n << ", g = " << p.genus << "\n";
        os << "alpha = " << p.alpha << " (n alpha = " << p.q_eps << "), H2(alpha) = " << p.entropy << "\n";
        os << "theta* = " << p.theta_star << ", theta = " << p.theta << ", margin = " << p.margin << "\n";
        os << "l = " << p.l << ", t = " << p.t << ", k = " << p.k << ", d >= " << p.d_lower
           << ", k + d >= " << p.k_plus_d << " (n - " << p.n - p.k_plus_d << ")\n";
        os << "improvement over Goppa = " << p.improvement << " vs g - 4 = " << p.predicted_improvement << "\n";
        if (!p.k_positive) os << "warning: k = " << p.k << " <= 0, the code is not certified nontrivial\n";
        if (!p.theta_in_unit_interval) os << "note: theta lies outside (0, 1)\n";
        return os.str();
    }
    return dump(j);
}

// ---------------------------------------------------------------------------

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SizeGuard*>(&e)) return 3;
    if (dynamic_cast<const AssertionFailure*>(&e)) return 4;
    return 2;
}

/// Parses argv, runs one subcommand, writes its emission. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermitian-curve AG codes: zeta counts, one-point codes, existence search"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "json";
    app.add_option("--q", cfg.q, "subfield size q (code alphabet F_{q^2})");
    app.add_option("--t", cfg.t, "degree t of t*P_inf");
    app.add_option("--l", cfg.l, "restrict the search to this l");
    app.add_option("--t-max", cfg.t_max, "largest t searched (default 2g)");
    app.add_option("--kmax", cfg.kmax, "largest k in the A_k table");
    app.add_option("--criterion", cfg.criterion, "prop23 | exact")->check(CLI::IsMember({"prop23", "exact"}));
    app.add_option("--k-min", cfg.k_min, "smallest dimension reported");
    app.add_option("--eval", cfg.eval, "evaluation set size for verify-lemma");
    app.add_option("--s", cfg.s, "degree s of G");
    app.add_option("--m", cfg.m, "subset size m");
    app.add_flag("--exact-distance", cfg.exact_distance, "compute the exact minimum distance");
    app.add_flag("--matrix", cfg.matrix, "include the generator matrix");
    app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "write to this file instead of stdout");
    app.add_flag("--force-size", cfg.force_size, "lift the enumeration size guards");
    app.add_option("--threads", cfg.threads, "worker threads for distance enumeration (0 = all cores)");
    app.add_option("--q-eps", cfg.q_eps, "n*alpha for the asymptotic profile (> 1)");
    app.add_option("--slack", cfg.slack, "theta = theta* - slack");

    const std::vector<std::pair<std::string, std::string>> subs{
        {"zeta", "L-polynomial, class number and A_k table"},
        {"code", "one-point code C_L(t P_inf, D)"},
        {"prospect", "search (l, t) satisfying an existence criterion"},
        {"verify-lemma", "constructive check on the q = 2 curve"},
        {"asymptotic", "large-q parameter profile"}};
    for (const auto& [name, desc] : subs) app.add_subcommand(name, desc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;

    std::string emission;
    try {
        if (cfg.subcommand == "zeta") emission = cmd_zeta(cfg);
        else if (cfg.subcommand == "code") emission = cmd_code(cfg);
        else if (cfg.subcommand == "prospect") emission = cmd_prospect(cfg);
        else if (cfg.subcommand == "verify-lemma") emission = cmd_verify_lemma(cfg);
        else emission = cmd_asymptotic(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }

    if (cfg.out_path.empty()) {
        out << emission;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << " for writing\n";
            return 2;
        }
        file << emission;
    }
    return 0;
}

}  // namespace hermitian::cli
