#include "meandrics/cli.hpp"

#include "meandrics/exponents.hpp"
#include "meandrics/hirota.hpp"
#include "meandrics/matrix_one.hpp"
#include "meandrics/meander.hpp"
#include "meandrics/numeric.hpp"
#include "meandrics/seqfit.hpp"
#include "meandrics/temperley_lieb.hpp"
#include "meandrics/wick.hpp"
#include "meandrics/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace meandrics {
namespace {

using njson = nlohmann::ordered_json;

// Floating-point fields carry 15 significant digits, serialized as strings
// so the byte stream never depends on a JSON library's float formatter.
std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

Rational parse_rational_text(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return ratio(BigInt(text.substr(0, slash)),
                     BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a rational number: '" + text + "'");
    }
}

std::uint64_t default_work_limit() {
    const char* env = std::getenv("MEANDRICS_MAX_WORK");
    if (env == nullptr || *env == '\0') return kDefaultMaxWork;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
        throw ValidationError(
            "MEANDRICS_MAX_WORK must be a positive decimal integer");
    return value;
}

std::string dump(const njson& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file: " + cfg.out_path);
    file << payload;
    file.close();
    if (!file) throw ValidationError("failed writing output file: " + cfg.out_path);
}

std::string component_payload(const RunConfig& cfg, const char* head,
                              const njson& meta, const ComponentPolynomial& poly) {
    if (cfg.format == "csv") {
        std::string s = "loops,count\n";
        for (const auto& [k, c] : poly)
            s += std::to_string(k) + "," + c.get_str() + "\n";
        return s;
    }
    njson j = meta;
    njson terms = njson::array();
    for (const auto& [k, c] : poly) terms.push_back(njson::array({k, c.get_str()}));
    j[head] = terms;
    return dump(j);
}

std::string table1_payload(const RunConfig& cfg, const SemiMeanderTable& table) {
    if (cfg.format == "csv") return table.csv();
    njson j;
    j["n_max"] = table.n_max;
    njson rows = njson::array();
    for (const auto& [key, c] : table.rows)
        rows.push_back(njson::array({key[0], key[1], key[2], c.get_str()}));
    j["rows"] = rows;
    return dump(j);
}

// Canonical text form: terms by decreasing power, integer or num/den
// coefficients, '*' between coefficient and power of q.
std::string qpoly_text(const QPolynomial& a) {
    if (a.coeffs.empty()) return "0";
    std::string s;
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
        const int e = it->first;
        const Rational& c = it->second;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        const bool unit = mag == 1;
        if (!unit || e == 0) s += mag.get_str();
        if (e > 0) {
            if (!unit) s += "*";
            s += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

// Sorted [exponent, numerator, denominator] triples.
njson qpoly_json(const QPolynomial& a) {
    njson arr = njson::array();
    for (const auto& [e, c] : a.coeffs)
        arr.push_back(
            njson::array({e, c.get_num().get_str(), c.get_den().get_str()}));
    return arr;
}

njson laurent_json(const LaurentN& l) {
    njson arr = njson::array();
    for (const auto& [power, c] : l)
        arr.push_back(
            njson::array({power, c.get_num().get_str(), c.get_den().get_str()}));
    return arr;
}

// Canonical monomial-sorted text form: keys (da, db, dn) in increasing
// lexicographic order; every coefficient of these polynomials is positive.
std::string omega_text(const OmegaPolynomial& om) {
    static const char* const names[3] = {"a", "b", "n"};
    std::string s;
    for (const auto& [key, c] : om.coeffs) {
        if (!s.empty()) s += " + ";
        std::string term;
        if (c != 1) term = c.get_str();
        for (int axis = 0; axis < 3; ++axis) {
            if (key[static_cast<std::size_t>(axis)] == 0) continue;
            if (!term.empty()) term += "*";
            term += names[axis];
            if (key[static_cast<std::size_t>(axis)] > 1)
                term += "^" + std::to_string(key[static_cast<std::size_t>(axis)]);
        }
        s += term.empty() ? "1" : term;
    }
    return s.empty() ? "0" : s;
}

Rational json_rational(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational_text(v.get<std::string>());
    throw ValidationError(
        "propagator entries must be integers or \"num/den\" strings");
}

struct WickInput {
    StarSystem stars;
    PropagatorTable propagator;
};

WickInput load_wick_input(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed JSON input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("stars") || !j.contains("propagator"))
        throw ValidationError(
            "input must be an object with \"stars\" and \"propagator\"");

    WickInput in;
    if (!j["stars"].is_array())
        throw ValidationError("\"stars\" must be an array of label arrays");
    for (const auto& star : j["stars"]) {
        if (!star.is_array())
            throw ValidationError("each star must be an array of labels");
        std::vector<int> pockets;
        for (const auto& label : star) {
            if (!label.is_number_integer() || label.get<int>() < 1)
                throw ValidationError("star labels must be integers >= 1");
            pockets.push_back(label.get<int>());
        }
        in.stars.stars.push_back(std::move(pockets));
    }

    if (!j["propagator"].is_array())
        throw ValidationError("\"propagator\" must be a square array of rows");
    for (const auto& row : j["propagator"]) {
        if (!row.is_array())
            throw ValidationError("\"propagator\" must be a square array of rows");
        std::vector<Rational> weights;
        for (const auto& entry : row) weights.push_back(json_rational(entry));
        in.propagator.p.push_back(std::move(weights));
    }
    const std::size_t k = in.propagator.p.size();
    for (const auto& row : in.propagator.p)
        if (row.size() != k)
            throw ValidationError("propagator table must be square");
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = r + 1; c < k; ++c)
            if (in.propagator.p[r][c] != in.propagator.p[c][r])
                throw ValidationError("propagator table must be symmetric");
    if (in.stars.max_color() > static_cast<int>(k))
        throw ValidationError("star labels exceed the propagator size");
    return in;
}

// Sequence file reader for the fit subcommand: one value per row (the last
// comma-separated field), with an optional non-numeric header row.
struct SequenceFile {
    std::vector<BigInt> integers;
    std::vector<double> reals;
    bool integral = false;
};

SequenceFile load_sequence(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open input file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto comma = line.rfind(',');
        std::string token =
            comma == std::string::npos ? line : line.substr(comma + 1);
        if (!token.empty()) tokens.push_back(std::move(token));
    }
    if (!tokens.empty()) {
        // Drop a header row: a first token that parses neither way.
        char* end = nullptr;
        std::strtod(tokens.front().c_str(), &end);
        if (end == tokens.front().c_str()) tokens.erase(tokens.begin());
    }
    if (tokens.empty()) throw ValidationError("input contains no sequence terms");

    SequenceFile seq;
    seq.integral = true;
    for (const auto& token : tokens) {
        try {
            seq.integers.emplace_back(token);
        } catch (const std::invalid_argument&) {
            seq.integral = false;
            break;
        }
    }
    if (seq.integral) return seq;

    seq.integers.clear();
    for (const auto& token : tokens) {
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw ValidationError("not a numeric sequence term: '" + token + "'");
        }
        if (used != token.size())
            throw ValidationError("not a numeric sequence term: '" + token + "'");
        seq.reals.push_back(value);
    }
    return seq;
}

std::string fit_payload(const RunConfig& cfg, const FitResult& fit) {
    if (cfg.format == "csv") {
        std::string s = "r_estimate,alpha_estimate,window_lo,window_hi\n";
        s += fmt_double(fit.r_estimate) + "," + fmt_double(fit.alpha_estimate) +
             "," + std::to_string(fit.window_lo) + "," +
             std::to_string(fit.window_hi) + "\n";
        return s;
    }
    njson j;
    j["r_estimate"] = fmt_double(fit.r_estimate);
    j["alpha_estimate"] = fmt_double(fit.alpha_estimate);
    j["window_lo"] = fit.window_lo;
    j["window_hi"] = fit.window_hi;
    auto stream = [](const std::vector<double>& values) {
        njson arr = njson::array();
        for (double v : values) arr.push_back(fmt_double(v));
        return arr;
    };
    j["r_raw"] = stream(fit.r_raw);
    j["alpha_raw"] = stream(fit.alpha_raw);
    j["r_refined"] = stream(fit.r_refined);
    j["alpha_refined"] = stream(fit.alpha_refined);
    return dump(j);
}

std::string series_terms_csv(const char* head, const TSeries& x) {
    std::string s = std::string("power,") + head + "\n";
    for (int k = 0; k <= x.order(); ++k)
        s += std::to_string(k) + "," + x.at(k).get_str() + "\n";
    return s;
}

njson series_terms_json(const TSeries& x) {
    njson arr = njson::array();
    for (int k = 0; k <= x.order(); ++k)
        arr.push_back(njson::array({k, x.at(k).get_str()}));
    return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    RunConfig cfg;
    try {
        cfg.max_work = default_work_limit();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{
        "Meanders, planar matchings, matrix integrals, and their asymptotics"};
    app.name("meandrics");
    app.require_subcommand(1);

    const auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--threads", cfg.threads, "worker threads")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--max-work", cfg.max_work,
                        "work-unit budget before the computation aborts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", cfg.out_path,
                        "write output to this file instead of stdout");
        cmd->add_option("--seed", cfg.seed,
                        "seed for sampled cross-checks (reserved)");
    };

    int n = 0;
    int n_max = 0;
    int genus = -1;
    int m_omega = 1;
    int order = 12;
    int n_size = 0;
    int stride = 1;
    int q_colors = 0;
    bool semi_table = false;
    bool want_table2 = false;
    double q_real = 0.0;
    double p_real = 0.0;
    double large_q = 0.0;
    std::string mode = "both";
    std::string q_rational;
    std::string x1_text = "1", x2_text = "1", x3_text = "1";
    std::string input_path;
    std::string emit_name;

    CLI::App* meander_cmd = app.add_subcommand(
        "meander", "loop-count polynomial of closed meanders of order n");
    meander_cmd->add_option("--n", n, "meander order (bridges = 2n)")
        ->required()
        ->check(CLI::PositiveNumber);
    meander_cmd->add_option("--genus", genus,
                            "restrict matching pairs to this glued genus");
    add_common(meander_cmd);

    CLI::App* semi_cmd = app.add_subcommand(
        "semimeander", "loop-count polynomial of semi-meanders of order n");
    semi_cmd->add_option("--n", n, "semi-meander order")
        ->check(CLI::PositiveNumber);
    add_common(semi_cmd);
    CLI::App* semi_table_cmd = semi_cmd->add_subcommand(
        "table1", "counts by order, loops, and winding up to --n-max");
    semi_table_cmd->add_option("--n-max", n_max, "deepest order")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(semi_table_cmd);

    CLI::App* table_cmd = app.add_subcommand(
        "table1", "semi-meander counts by order, loops, and winding");
    table_cmd->add_option("--n-max", n_max, "deepest order")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(table_cmd);

    CLI::App* tl_cmd = app.add_subcommand(
        "tl-det", "Gram determinant of the noncrossing-matching basis");
    tl_cmd->add_option("--n", n, "number of arches (basis is Catalan(n) big)")
        ->required()
        ->check(CLI::PositiveNumber);
    tl_cmd->add_option("--mode", mode,
                       "symbolic route: elimination, product formula, or both")
        ->check(CLI::IsMember({"direct", "formula", "both"}))
        ->capture_default_str();
    tl_cmd->add_option("--q", q_rational,
                       "evaluate at this exact rational loop weight instead");
    add_common(tl_cmd);

    CLI::App* words_cmd = app.add_subcommand(
        "words", "loop polynomials rebuilt from multi-letter trace words");
    words_cmd->add_option("--n", n, "half-length of the words")
        ->required()
        ->check(CLI::PositiveNumber);
    words_cmd->add_option("--q", q_colors, "number of letters")
        ->required()
        ->check(CLI::NonNegativeNumber);
    words_cmd->add_flag("--semi", semi_table,
                        "sum gamma(w ++ reverse(w)) instead of gamma(w)^2");
    add_common(words_cmd);

    CLI::App* wick_cmd = app.add_subcommand(
        "wick", "Gaussian average of a star system from a JSON description");
    wick_cmd->add_option("--input", input_path,
                         "JSON file with \"stars\" and \"propagator\"")
        ->required();
    add_common(wick_cmd);

    CLI::App* one_cmd = app.add_subcommand(
        "onematrix", "quartic one-matrix free energy (planar or finite size)");
    one_cmd->add_option("--order", order, "truncation order in the coupling")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    one_cmd->add_option("--n-size", n_size,
                        "matrix size for the finite-size free energy");
    add_common(one_cmd);

    CLI::App* exp_cmd = app.add_subcommand(
        "exponents", "closed-form configuration exponents");
    exp_cmd->add_flag("--table2", want_table2,
                      "five reference rows of single-river asymptotics");
    CLI::Option* exp_q = exp_cmd->add_option(
        "--q", q_real, "road loop weight in [0, 2]");
    exp_cmd->add_option("--p", p_real, "river loop weight in [0, 2]")
        ->capture_default_str();
    add_common(exp_cmd);

    CLI::App* hirota_cmd = app.add_subcommand(
        "hirota", "bicolored-map generating functions");
    hirota_cmd->require_subcommand(1);
    CLI::App* omega_cmd = hirota_cmd->add_subcommand(
        "omega", "free-energy coefficient polynomial in (a, b, n)");
    omega_cmd->add_option("--m", m_omega, "coefficient index")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(omega_cmd);
    CLI::App* f0_cmd = hirota_cmd->add_subcommand(
        "f0", "planar free energy of the three-variable genus-zero system");
    f0_cmd->add_option("--x1", x1_text, "first weight (rational)")
        ->capture_default_str();
    f0_cmd->add_option("--x2", x2_text, "second weight (rational)")
        ->capture_default_str();
    f0_cmd->add_option("--x3", x3_text, "third weight (rational)")
        ->capture_default_str();
    f0_cmd->add_option("--order", order, "truncation order in t")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(f0_cmd);

    CLI::App* fit_cmd = app.add_subcommand(
        "fit", "growth-rate and exponent estimation for integer sequences");
    fit_cmd->add_option("--input", input_path,
                        "CSV of sequence terms (last field per row)");
    fit_cmd->add_option("--stride", stride,
                        "index steps per unit of the growth exponent")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    fit_cmd->add_option("--emit", emit_name,
                        "write a built-in sequence instead of fitting")
        ->check(CLI::IsMember({"catalan", "catalan-squared", "semimeander"}));
    fit_cmd->add_option("--n-max", n_max, "length of the emitted sequence")
        ->check(CLI::PositiveNumber);
    CLI::Option* fit_q = fit_cmd->add_option(
        "--large-q", large_q, "evaluate the printed large-q radius expansions");
    add_common(fit_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(meander_cmd)) {
            cfg.subcommand = "meander";
            const ComponentPolynomial poly =
                genus >= 0 ? genus_meander_polynomial(n, genus, cfg.max_work)
                           : meander_polynomial(n, cfg.threads, cfg.max_work);
            njson meta;
            meta["n"] = n;
            if (genus >= 0) meta["genus"] = genus;
            emit(cfg, out, component_payload(cfg, "terms", meta, poly));
        } else if (app.got_subcommand(semi_cmd) &&
                   semi_cmd->got_subcommand(semi_table_cmd)) {
            cfg.subcommand = "semimeander table1";
            const SemiMeanderTable table =
                semimeander_table(n_max, cfg.threads, cfg.max_work);
            emit(cfg, out, table1_payload(cfg, table));
        } else if (app.got_subcommand(semi_cmd)) {
            cfg.subcommand = "semimeander";
            if (semi_cmd->count("--n") == 0)
                throw ValidationError(
                    "semimeander needs --n or the table1 subcommand");
            const ComponentPolynomial poly =
                semimeander_polynomial(n, cfg.max_work);
            njson meta;
            meta["n"] = n;
            emit(cfg, out, component_payload(cfg, "terms", meta, poly));
        } else if (app.got_subcommand(table_cmd)) {
            cfg.subcommand = "table1";
            const SemiMeanderTable table =
                semimeander_table(n_max, cfg.threads, cfg.max_work);
            emit(cfg, out, table1_payload(cfg, table));
        } else if (app.got_subcommand(tl_cmd)) {
            cfg.subcommand = "tl-det";
            if (tl_cmd->count("--q") > 0) {
                const Rational q = parse_rational_text(q_rational);
                const Rational det =
                    tl_cmd->count("--max-work") > 0
                        ? meander_determinant_value(n, q, cfg.max_work)
                        : meander_determinant_value(n, q);
                if (cfg.format == "csv") {
                    emit(cfg, out,
                         "n,q,determinant\n" + std::to_string(n) + "," +
                             q.get_str() + "," + det.get_str() + "\n");
                } else {
                    njson j;
                    j["n"] = n;
                    j["q"] = q.get_str();
                    j["determinant"] = det.get_str();
                    emit(cfg, out, dump(j));
                }
            } else {
                njson j;
                j["n"] = n;
                std::string csv = "method,determinant\n";
                if (mode == "direct" || mode == "both") {
                    const QPolynomial det =
                        tl_cmd->count("--max-work") > 0
                            ? meander_determinant_direct(n, cfg.max_work)
                            : meander_determinant_direct(n);
                    csv += "direct," + qpoly_text(det) + "\n";
                    j["direct"] = qpoly_json(det);
                }
                if (mode == "formula" || mode == "both") {
                    const QPolynomial det = meander_determinant_formula(n);
                    csv += "formula," + qpoly_text(det) + "\n";
                    j["formula"] = qpoly_json(det);
                }
                emit(cfg, out, cfg.format == "csv" ? csv : dump(j));
            }
        } else if (app.got_subcommand(words_cmd)) {
            cfg.subcommand = "words";
            const BigInt total =
                semi_table
                    ? semimeander_poly_via_words(n, q_colors, cfg.threads,
                                                 cfg.max_work)
                    : meander_poly_via_words(n, q_colors, cfg.threads,
                                             cfg.max_work);
            const char* kind = semi_table ? "semimeander" : "meander";
            if (cfg.format == "csv") {
                emit(cfg, out,
                     "kind,n,q,total\n" + std::string(kind) + "," +
                         std::to_string(n) + "," + std::to_string(q_colors) +
                         "," + total.get_str() + "\n");
            } else {
                njson j;
                j["kind"] = kind;
                j["n"] = n;
                j["q"] = q_colors;
                j["total"] = total.get_str();
                emit(cfg, out, dump(j));
            }
        } else if (app.got_subcommand(wick_cmd)) {
            cfg.subcommand = "wick";
            const WickInput in = load_wick_input(input_path);
            const LaurentN avg = gaussian_average(in.stars, in.propagator,
                                                  cfg.max_work, cfg.threads);
            if (cfg.format == "csv") {
                std::string s = "power,coefficient\n";
                for (const auto& [power, c] : avg)
                    s += std::to_string(power) + "," + c.get_str() + "\n";
                emit(cfg, out, s);
            } else {
                njson j;
                j["average"] = laurent_json(avg);
                emit(cfg, out, dump(j));
            }
        } else if (app.got_subcommand(one_cmd)) {
            cfg.subcommand = "onematrix";
            if (n_size > 0) {
                const CouplingSeries fe =
                    finite_free_energy(quartic_potential(), n_size, order);
                if (cfg.format == "csv") {
                    std::string s = "order,coefficient\n";
                    for (const auto& [key, c] : fe.terms)
                        s += std::to_string(key[0]) + "," + c.get_str() + "\n";
                    emit(cfg, out, s);
                } else {
                    njson j;
                    j["n_size"] = n_size;
                    j["order"] = order;
                    njson terms = njson::array();
                    for (const auto& [key, c] : fe.terms)
                        terms.push_back(njson::array({key[0], c.get_str()}));
                    j["terms"] = terms;
                    emit(cfg, out, dump(j));
                }
            } else {
                const QuarticCritical crit = quartic_critical(order);
                if (cfg.format == "csv") {
                    std::string s = "n,f0\n";
                    for (int i = 1; i <= order; ++i)
                        s += std::to_string(i) + "," +
                             crit.f0[static_cast<std::size_t>(i)].get_str() +
                             "\n";
                    emit(cfg, out, s);
                } else {
                    njson j;
                    j["g_c"] = crit.g_c.get_str();
                    j["singular_exponent"] = crit.singular_exponent.get_str();
                    njson terms = njson::array();
                    for (int i = 1; i <= order; ++i)
                        terms.push_back(njson::array(
                            {i,
                             crit.f0[static_cast<std::size_t>(i)].get_str()}));
                    j["f0"] = terms;
                    emit(cfg, out, dump(j));
                }
            }
        } else if (app.got_subcommand(exp_cmd)) {
            cfg.subcommand = "exponents";
            if (want_table2) {
                const std::vector<RiverTableRow> rows = table_two();
                if (cfg.format == "csv") {
                    std::string s =
                        "q,f,r,alpha,q_closed_form,f_closed_form,"
                        "r_closed_form,alpha_closed_form\n";
                    for (const RiverTableRow& row : rows)
                        s += fmt_double(row.q) + "," + fmt_double(row.f) + "," +
                             fmt_double(row.r) + "," + fmt_double(row.alpha) +
                             "," + row.q_exact + "," + row.f_exact + "," +
                             row.r_exact + "," + row.alpha_exact + "\n";
                    emit(cfg, out, s);
                } else {
                    njson arr = njson::array();
                    for (const RiverTableRow& row : rows) {
                        njson j;
                        j["q"] = fmt_double(row.q);
                        j["f"] = fmt_double(row.f);
                        j["r"] = fmt_double(row.r);
                        j["alpha"] = fmt_double(row.alpha);
                        j["q_closed_form"] = row.q_exact;
                        j["f_closed_form"] = row.f_exact;
                        j["r_closed_form"] = row.r_exact;
                        j["alpha_closed_form"] = row.alpha_exact;
                        arr.push_back(j);
                    }
                    emit(cfg, out, dump(arr));
                }
            } else {
                if (exp_q->count() == 0)
                    throw ValidationError("exponents needs --table2 or --q");
                const ExponentRecord rec = exponent_point(q_real, p_real);
                if (cfg.format == "csv") {
                    std::string s = "q,p,e,f,c,gamma,alpha,alpha_bar,r_q1\n";
                    s += fmt_double(rec.q) + "," + fmt_double(rec.p) + "," +
                         fmt_double(rec.e) + "," + fmt_double(rec.f) + "," +
                         fmt_double(rec.c) + "," + fmt_double(rec.gamma) + "," +
                         fmt_double(rec.alpha) + "," +
                         fmt_double(rec.alpha_bar) + "," +
                         fmt_double(rec.r_q1) + "\n";
                    emit(cfg, out, s);
                } else {
                    njson j;
                    j["q"] = fmt_double(rec.q);
                    j["p"] = fmt_double(rec.p);
                    j["e"] = fmt_double(rec.e);
                    j["f"] = fmt_double(rec.f);
                    j["c"] = fmt_double(rec.c);
                    j["gamma"] = fmt_double(rec.gamma);
                    j["alpha"] = fmt_double(rec.alpha);
                    j["alpha_bar"] = fmt_double(rec.alpha_bar);
                    j["r_q1"] = fmt_double(rec.r_q1);
                    emit(cfg, out, dump(j));
                }
            }
        } else if (app.got_subcommand(hirota_cmd)) {
            if (hirota_cmd->got_subcommand(omega_cmd)) {
                cfg.subcommand = "hirota omega";
                const std::vector<OmegaPolynomial> omegas =
                    omega_polynomials(m_omega);
                const OmegaPolynomial& om =
                    omegas[static_cast<std::size_t>(m_omega - 1)];
                if (cfg.format == "csv") {
                    emit(cfg, out,
                         "m,polynomial\n" + std::to_string(om.m) + "," +
                             omega_text(om) + "\n");
                } else {
                    njson j;
                    j["m"] = om.m;
                    j["text"] = omega_text(om);
                    njson terms = njson::array();
                    for (const auto& [key, c] : om.coeffs)
                        terms.push_back(njson::array(
                            {key[0], key[1], key[2], c.get_str()}));
                    j["terms"] = terms;
                    emit(cfg, out, dump(j));
                }
            } else {
                cfg.subcommand = "hirota f0";
                const GenusZeroTricolor gz = genus_zero_system(
                    parse_rational_text(x1_text), parse_rational_text(x2_text),
                    parse_rational_text(x3_text), order);
                if (cfg.format == "csv") {
                    emit(cfg, out, series_terms_csv("coefficient", gz.f0));
                } else {
                    njson j;
                    j["x1"] = parse_rational_text(x1_text).get_str();
                    j["x2"] = parse_rational_text(x2_text).get_str();
                    j["x3"] = parse_rational_text(x3_text).get_str();
                    j["order"] = order;
                    j["f0"] = series_terms_json(gz.f0);
                    emit(cfg, out, dump(j));
                }
            }
        } else if (app.got_subcommand(fit_cmd)) {
            cfg.subcommand = "fit";
            const int modes = (fit_cmd->count("--input") > 0 ? 1 : 0) +
                              (fit_cmd->count("--emit") > 0 ? 1 : 0) +
                              (fit_q->count() > 0 ? 1 : 0);
            if (modes != 1)
                throw ValidationError(
                    "fit needs exactly one of --input, --emit, --large-q");
            if (fit_q->count() > 0) {
                const LargeQReference ref = large_q_reference(large_q);
                if (cfg.format == "csv") {
                    emit(cfg, out,
                         "q,r,rbar\n" + fmt_double(large_q) + "," +
                             fmt_double(ref.r) + "," + fmt_double(ref.rbar) +
                             "\n");
                } else {
                    njson j;
                    j["q"] = fmt_double(large_q);
                    j["r"] = fmt_double(ref.r);
                    j["rbar"] = fmt_double(ref.rbar);
                    emit(cfg, out, dump(j));
                }
            } else if (fit_cmd->count("--emit") > 0) {
                if (fit_cmd->count("--n-max") == 0)
                    throw ValidationError("--emit needs --n-max");
                std::vector<BigInt> terms;
                if (emit_name == "catalan") {
                    for (int i = 1; i <= n_max; ++i) terms.push_back(catalan(i));
                } else if (emit_name == "catalan-squared") {
                    for (int i = 1; i <= n_max; ++i)
                        terms.push_back(catalan(i) * catalan(i));
                } else {
                    const SemiMeanderTable table =
                        semimeander_table(n_max, cfg.threads, cfg.max_work);
                    for (int i = 1; i <= n_max; ++i) {
                        const ComponentPolynomial poly = table.marginal(i);
                        const auto one_loop = poly.find(1);
                        terms.push_back(one_loop == poly.end() ? BigInt(0)
                                                               : one_loop->second);
                    }
                }
                if (cfg.format == "csv") {
                    std::string s = "index,term\n";
                    for (int i = 1; i <= n_max; ++i)
                        s += std::to_string(i) + "," +
                             terms[static_cast<std::size_t>(i - 1)].get_str() +
                             "\n";
                    emit(cfg, out, s);
                } else {
                    njson j;
                    j["sequence"] = emit_name;
                    njson arr = njson::array();
                    for (int i = 1; i <= n_max; ++i)
                        arr.push_back(njson::array(
                            {i,
                             terms[static_cast<std::size_t>(i - 1)].get_str()}));
                    j["terms"] = arr;
                    emit(cfg, out, dump(j));
                }
            } else {
                const SequenceFile seq = load_sequence(input_path);
                const FitResult fit = seq.integral
                                          ? fit_power_law(seq.integers, stride)
                                          : fit_power_law(seq.reals, stride);
                emit(cfg, out, fit_payload(cfg, fit));
            }
        }
        return 0;
    } catch (const TableLimitError& e) {
        try {
            emit(cfg, out, table1_payload(cfg, e.partial));
        } catch (const ValidationError&) {
            // The partial table is best effort; the limit is still reported.
        }
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace meandrics
