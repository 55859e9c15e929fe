#include "hocauchy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hocauchy/bernoulli.hpp"
#include "hocauchy/cauchy.hpp"
#include "hocauchy/series.hpp"
#include "hocauchy/stirling.hpp"
#include "hocauchy/verifier.hpp"

namespace hocauchy {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json, text };

const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}, {"text", Format::text}};

struct Options {
    std::string family;
    std::optional<int> order;
    std::optional<long> alpha;
    int n_max = 10;
    std::optional<int> n;
    int terms = 10;
    Format format = Format::csv;
    bool format_given = false;
    std::string name;
    std::string checks = "all";
    std::string grid;
    std::string config;
    bool parallel = false;
};

int require_order(const Options& o) {
    if (!o.order) throw UsageError("family '" + o.family + "' needs --order");
    if (*o.order < 1) throw UsageError("--order must be >= 1");
    return *o.order;
}

long require_alpha(const Options& o) {
    if (!o.alpha) throw UsageError("family '" + o.family + "' needs --alpha");
    return *o.alpha;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

// -- table -----------------------------------------------------------------

void render_scalar_table(const std::vector<Rational>& values, Format f, std::ostream& out) {
    switch (f) {
    case Format::csv:
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].to_string() << '\n';
        break;
    case Format::json: {
        ojson arr = ojson::array();
        for (std::size_t n = 0; n < values.size(); ++n) arr.push_back({{"n", n}, {"value", values[n].to_string()}});
        out << arr.dump() << '\n';
        break;
    }
    case Format::text: {
        const std::size_t w = std::to_string(values.size()).size() + 1;
        for (std::size_t n = 0; n < values.size(); ++n) out << pad(std::to_string(n), w) << "  " << values[n].to_string() << '\n';
        break;
    }
    }
}

void render_triangle(const std::vector<std::vector<Rational>>& rows, Format f, std::ostream& out) {
    switch (f) {
    case Format::csv:
        out << "n,values\n";
        for (std::size_t n = 0; n < rows.size(); ++n) {
            out << n;
            for (const auto& v : rows[n]) out << ',' << v.to_string();
            out << '\n';
        }
        break;
    case Format::json: {
        ojson arr = ojson::array();
        for (std::size_t n = 0; n < rows.size(); ++n) arr.push_back({{"n", n}, {"values", to_strings(rows[n])}});
        out << arr.dump() << '\n';
        break;
    }
    case Format::text:
        for (std::size_t n = 0; n < rows.size(); ++n) {
            out << pad(std::to_string(n), 3) << " ";
            for (const auto& v : rows[n]) out << ' ' << v.to_string();
            out << '\n';
        }
        break;
    }
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.n_max < 0) throw UsageError("--n-max must be >= 0");
    const auto sequence = [&](const std::function<Rational(int)>& value) {
        std::vector<Rational> v;
        for (int n = 0; n <= o.n_max; ++n) v.push_back(value(n));
        render_scalar_table(v, o.format, out);
    };
    const auto triangle = [&](BigInt (*entry)(long, long)) {
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(o.n_max) + 1);
        for (int n = 0; n <= o.n_max; ++n)
            for (int l = 0; l <= n; ++l) rows[static_cast<std::size_t>(n)].emplace_back(entry(n, l));
        render_triangle(rows, o.format, out);
    };

    const std::string& f = o.family;
    if (f == "cauchy1") sequence([](int n) { return cauchy1(n); });
    else if (f == "cauchy2") sequence([](int n) { return cauchy2(n); });
    else if (f == "cauchy_hi1") sequence([k = require_order(o)](int n) { return cauchy_hi1(n, k); });
    else if (f == "cauchy_hi2") sequence([k = require_order(o)](int n) { return cauchy_hi2(n, k); });
    else if (f == "poly_cauchy1") sequence([k = require_order(o)](int n) { return poly_cauchy1(n, k); });
    else if (f == "poly_cauchy2") sequence([k = require_order(o)](int n) { return poly_cauchy2(n, k); });
    else if (f == "stirling1") triangle(stirling1_signed);
    else if (f == "stirling2") triangle(stirling2);
    else if (f == "bernoulli_hi") render_scalar_table(bernoulli_hi_numbers(o.n_max, require_alpha(o)), o.format, out);
    else throw UsageError("unknown table family '" + f +
                          "' (cauchy1, cauchy2, cauchy_hi1, cauchy_hi2, poly_cauchy1, poly_cauchy2, stirling1, stirling2, bernoulli_hi)");
    return kExitOk;
}

// -- poly / series -----------------------------------------------------------

void render_coefficients(const std::vector<std::string>& coeffs, Format f, std::ostream& out, const std::string& pretty) {
    switch (f) {
    case Format::csv:
        out << "power,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
        break;
    case Format::json: out << ojson(coeffs).dump() << '\n'; break;
    case Format::text: out << pretty << '\n'; break;
    }
}

int cmd_poly(const Options& o, std::ostream& out) {
    if (!o.n) throw UsageError("poly needs --n");
    if (*o.n < 0) throw UsageError("--n must be >= 0");
    RatPolynomial p;
    if (o.family == "cauchy_hi_poly1") p = cauchy_hi_poly1(*o.n, require_order(o));
    else if (o.family == "cauchy_hi_poly2") p = cauchy_hi_poly2(*o.n, require_order(o));
    else if (o.family == "bernoulli_hi_poly") p = bernoulli_hi_poly(*o.n, require_alpha(o));
    else throw UsageError("unknown poly family '" + o.family + "' (cauchy_hi_poly1, cauchy_hi_poly2, bernoulli_hi_poly)");
    render_coefficients(p.coeff_strings(), o.format, out, p.to_string("x"));
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.terms < 1) throw UsageError("--terms must be >= 1");
    std::vector<std::string> coeffs;
    try {
        coeffs = to_strings(named_series(o.name, o.terms, o.alpha).coeffs());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string pretty;
    for (std::size_t i = 0; i < coeffs.size(); ++i) pretty += (i ? " " : "") + coeffs[i];
    render_coefficients(coeffs, o.format, out, pretty);
    return kExitOk;
}

// -- verify ------------------------------------------------------------------

void apply_grid_json(const ojson& j, Grid& g) {
    if (j.contains("n_max")) g.n_max = j.at("n_max").get<int>();
    if (j.contains("k_max")) g.k_max = j.at("k_max").get<int>();
    if (j.contains("alpha_max")) g.alpha_max = j.at("alpha_max").get<int>();
    if (j.contains("x_samples")) {
        g.x_samples.clear();
        for (const auto& x : j.at("x_samples")) g.x_samples.push_back(Rational::parse(x.get<std::string>()));
    }
}

/// "n=5,k=2,alpha=1"
void apply_grid_string(const std::string& text, Grid& g) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad --grid entry '" + item + "'");
        const std::string key = item.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("bad --grid value in '" + item + "'");
        }
        if (key == "n" || key == "n_max") g.n_max = value;
        else if (key == "k" || key == "k_max") g.k_max = value;
        else if (key == "alpha" || key == "alpha_max") g.alpha_max = value;
        else throw UsageError("unknown --grid key '" + key + "' (n, k, alpha)");
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig cfg;
    cfg.parallel = o.parallel;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw UsageError("cannot read config '" + o.config + "'");
        try {
            const ojson j = ojson::parse(in);
            apply_grid_json(j.contains("grid") ? j.at("grid") : j, cfg.grid);
            if (j.contains("parallel")) cfg.parallel = cfg.parallel || j.at("parallel").get<bool>();
        } catch (const std::exception& e) {
            throw UsageError("bad config '" + o.config + "': " + e.what());
        }
    }
    if (!o.grid.empty()) apply_grid_string(o.grid, cfg.grid);

    if (o.checks != "all") {
        std::stringstream ss(o.checks);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                cfg.checks.push_back(parse_check_id(item));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        if (cfg.checks.empty()) throw UsageError("--checks is empty");
    }

    const auto reports = run_suite(cfg);
    const Format f = o.format_given ? o.format : Format::text;
    switch (f) {
    case Format::json: out << reports_to_json(reports) << '\n'; break;
    case Format::csv: out << reports_to_csv(reports); break;
    case Format::text: out << reports_to_text(reports); break;
    }
    return any_failed(reports) ? kExitVerificationFailed : kExitOk;
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "csv, json or text")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact higher-order Cauchy numbers, polynomials and identity checks", "hocauchy"};
    app.require_subcommand(1);
    Options o;

    auto* table = app.add_subcommand("table", "number sequences and triangles, one row per n");
    table->add_option("--family", o.family)->required();
    table->add_option("--order,-k", o.order, "k for the Cauchy families");
    table->add_option("--alpha,-a", o.alpha, "order of the Bernoulli numbers");
    table->add_option("--n-max", o.n_max);
    add_format(table, o);

    auto* poly = app.add_subcommand("poly", "polynomial coefficients, constant term first");
    poly->add_option("--family", o.family)->required();
    poly->add_option("--n", o.n)->required();
    poly->add_option("--order,-k", o.order);
    poly->add_option("--alpha,-a", o.alpha);
    add_format(poly, o);

    auto* series = app.add_subcommand("series", "ordinary coefficients of a named series");
    series->add_option("name,--name", o.name, "e.g. log1p, cauchy1_gf, bernoulli_gf(2)")->required();
    series->add_option("--terms", o.terms);
    series->add_option("--alpha,-a", o.alpha);
    add_format(series, o);

    auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
    verify_cmd->add_option("--checks", o.checks, "comma separated ids, or all");
    verify_cmd->add_option("--grid", o.grid, "n=..,k=..,alpha=..");
    verify_cmd->add_option("--config", o.config, "JSON file with a default grid");
    verify_cmd->add_flag("--parallel", o.parallel);
    add_format(verify_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (auto* cmd : {table, poly, series, verify_cmd})
        if (auto* opt = cmd->get_option_no_throw("--format"); opt && opt->count() > 0) o.format_given = true;

    try {
        if (table->parsed()) return cmd_table(o, out);
        if (poly->parsed()) return cmd_poly(o, out);
        if (series->parsed()) return cmd_series(o, out);
        return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hocauchy
