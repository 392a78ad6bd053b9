// Command line front end: evaluate the special means, the Ostrowski-type
// bounds, and the certified quadrature rule, emitting CSV or JSON rows.
//
// Exit codes: 0 when every evaluated inequality holds, 2 when at least one
// is violated, 1 for usage or domain errors. Output is deterministic for a
// fixed configuration and seed.

#include "ostrowski/bounds.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/pompeiu.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/report.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstddef>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace ostrowski;

constexpr const char* tool_version = "1.0.0";

using kv_list = std::vector<std::pair<std::string, std::string>>;

void emit(const std::string& format, const char* csv_header,
          const std::vector<std::string>& csv_rows,
          const std::vector<std::string>& json_rows, const kv_list& config) {
    if (format == "json") {
        std::string out = "{\"version\":\"";
        out += tool_version;
        out += "\",\"config\":{";
        bool first = true;
        for (const auto& [k, v] : config) {
            if (!first) out += ',';
            first = false;
            out += '"';
            out += json_escape(k);
            out += "\":\"";
            out += json_escape(v);
            out += '"';
        }
        out += "},\"rows\":[";
        first = true;
        for (const auto& row : json_rows) {
            if (!first) out += ',';
            first = false;
            out += row;
        }
        out += "]}";
        std::cout << out << '\n';
    } else {
        std::cout << csv_header << '\n';
        for (const auto& row : csv_rows) std::cout << row << '\n';
    }
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    return v;
}

weight_model parse_weight(const std::string& spec) {
    if (spec == "1" || spec == "one") return {[](double) { return 1.0; }, "1"};
    if (spec == "t") return {[](double t) { return t; }, "t"};
    if (spec == "t2" || spec == "t^2") return {[](double t) { return t * t; }, "t^2"};
    if (spec.rfind("const:", 0) == 0) {
        const double c = parse_double(spec.substr(6), "weight const");
        if (c < 0.0) throw std::invalid_argument("weight const: constant must be >= 0");
        return {[c](double) { return c; }, "const:" + format_g12(c)};
    }
    if (spec.rfind("bump:", 0) == 0) {
        const std::string args = spec.substr(5);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("weight bump: expected bump:center,halfwidth");
        const double c = parse_double(args.substr(0, comma), "weight bump center");
        const double d = parse_double(args.substr(comma + 1), "weight bump halfwidth");
        if (!(d > 0.0)) throw std::invalid_argument("weight bump: halfwidth must be > 0");
        return {[c, d](double t) {
                    const double u = (t - c) / d;
                    const double v = 1.0 - u * u;
                    return v > 0.0 ? v * v : 0.0;
                },
                "bump:" + format_g12(c) + "," + format_g12(d),
                {c - d, c + d}};
    }
    throw std::invalid_argument("unknown weight '" + spec +
                                "' (use 1, t, t^2, const:c, bump:center,halfwidth)");
}

std::vector<double> parse_x_values(const std::string& spec, const interval& iv) {
    if (spec.rfind("grid:", 0) == 0) {
        const double n_raw = parse_double(spec.substr(5), "--x grid");
        const int n = static_cast<int>(n_raw);
        if (n_raw != n || n < 2 || n > 1000000)
            throw std::invalid_argument("--x grid: point count must be an integer in [2, 1e6]");
        std::vector<double> xs(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            xs[static_cast<std::size_t>(j)] =
                j == n - 1 ? iv.b() : iv.a() + j * iv.width() / (n - 1);
        return xs;
    }
    const double x = parse_double(spec, "--x");
    if (!iv.contains(x)) throw std::invalid_argument("--x: point must lie in [a, b]");
    return {x};
}

std::vector<double> parse_node_list(const std::string& spec) {
    std::vector<double> nodes;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string piece =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        nodes.push_back(parse_double(piece, "--nodes"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return nodes;
}

// ---------------------------------------------------------------- means ---

int run_means(double a, double b, const std::string& p_spec, const std::string& format) {
    positive_pair pr(a, b);
    const double am = arithmetic_mean(pr);
    const double gm = geometric_mean(pr);
    const double hm = harmonic_mean(pr);
    const double lm = logarithmic_mean(pr);
    const double im = identric_mean(pr);
    const bool chain_ok = hm <= gm && gm <= lm && lm <= im && im <= am;

    kv_list config{{"command", "means"}, {"a", format_g12(a)}, {"b", format_g12(b)}};
    std::string header = "a,b,arithmetic,geometric,harmonic,logarithmic,identric";
    std::string csv = format_g12(a) + "," + format_g12(b) + "," + format_g12(am) + "," +
                      format_g12(gm) + "," + format_g12(hm) + "," + format_g12(lm) + "," +
                      format_g12(im);
    std::string json = "{\"a\":" + json_number(a) + ",\"b\":" + json_number(b) +
                       ",\"arithmetic\":" + json_number(am) + ",\"geometric\":" + json_number(gm) +
                       ",\"harmonic\":" + json_number(hm) + ",\"logarithmic\":" + json_number(lm) +
                       ",\"identric\":" + json_number(im);
    if (!p_spec.empty()) {
        const double p = parse_double(p_spec, "--p");
        const double lp = p_logarithmic_mean(pr, p);
        config.emplace_back("p", format_g12(p));
        header += ",p_logarithmic";
        csv += "," + format_g12(lp);
        json += ",\"p_logarithmic\":" + json_number(lp);
    }
    header += ",chain_ok";
    csv += chain_ok ? ",true" : ",false";
    json += std::string(",\"chain_ok\":") + (chain_ok ? "true" : "false") + "}";

    emit(format, header.c_str(), {csv}, {json}, config);
    return chain_ok ? 0 : 2;
}

// ---------------------------------------------------------------- bound ---

int run_bound(const std::string& eq, const std::string& fn_spec, double a, double b,
              const std::string& x_spec, const std::string& w_spec, const std::string& m_spec,
              const std::string& p_spec, double rhs_scale, const std::string& format) {
    kv_list config{{"command", "bound"}, {"eq", eq}, {"a", format_g12(a)}, {"b", format_g12(b)}};
    std::vector<bound_report> reports;

    if (eq == "6.2" || eq == "6.3" || eq == "6.4") {
        positive_pair pr(a, b);
        if (eq == "6.2") {
            if (p_spec.empty()) throw std::invalid_argument("--eq 6.2 requires --p");
            const double p = parse_double(p_spec, "--p");
            config.emplace_back("p", format_g12(p));
            reports.push_back(p_mean_inequality(pr, p));
        } else if (eq == "6.3") {
            reports.push_back(log_mean_inequality(pr));
        } else {
            reports.push_back(identric_mean_inequality(pr));
        }
    } else {
        if (fn_spec.empty()) throw std::invalid_argument("--eq " + eq + " requires --fn");
        const function_model f = parse_function(fn_spec);
        const interval iv(a, b);
        config.emplace_back("fn", fn_spec);

        if (eq == "1.1") {
            if (x_spec.empty()) throw std::invalid_argument("--eq 1.1 requires --x");
            config.emplace_back("x", x_spec);
            double m = 0.0;
            if (m_spec.empty()) {
                m = numeric_sup_derivative(f, iv);
            } else {
                m = parse_double(m_spec, "--M");
                config.emplace_back("M", format_g12(m));
            }
            for (double x : parse_x_values(x_spec, iv))
                reports.push_back(classic_bound(f, iv, x, m));
        } else if (eq == "3.1") {
            if (x_spec.empty()) throw std::invalid_argument("--eq 3.1 requires --x");
            config.emplace_back("x", x_spec);
            for (double x : parse_x_values(x_spec, iv))
                reports.push_back(pompeiu_bound(f, iv, x));
        } else if (eq == "3.6") {
            reports.push_back(midpoint_bound(f, iv));
        } else if (eq == "4.1") {
            if (x_spec.empty()) throw std::invalid_argument("--eq 4.1 requires --x");
            config.emplace_back("x", x_spec);
            config.emplace_back("w", w_spec);
            const weight_model w = parse_weight(w_spec);
            for (double x : parse_x_values(x_spec, iv))
                reports.push_back(weighted_bound(f, iv, w, x));
        } else if (eq == "4.4") {
            config.emplace_back("w", w_spec);
            const weight_model w = parse_weight(w_spec);
            reports.push_back(weighted_midpoint_bound(f, iv, w));
        } else {
            throw std::invalid_argument("unknown --eq '" + eq +
                                        "' (use 1.1, 3.1, 3.6, 4.1, 4.4, 6.2, 6.3, 6.4)");
        }
    }

    if (rhs_scale != 1.0) {
        config.emplace_back("rhs_scale", format_g12(rhs_scale));
        for (auto& r : reports) {
            r.rhs *= rhs_scale;
            r.slack = r.rhs - r.lhs;
        }
    }

    bool all_hold = true;
    std::vector<std::string> csv_rows, json_rows;
    csv_rows.reserve(reports.size());
    json_rows.reserve(reports.size());
    for (const auto& r : reports) {
        all_hold = all_hold && holds(r);
        csv_rows.push_back(to_csv(r));
        json_rows.push_back(to_json(r));
    }
    emit(format, bound_csv_header(), csv_rows, json_rows, config);
    return all_hold ? 0 : 2;
}

// ----------------------------------------------------------------- quad ---

int run_quad(const std::string& fn_spec, double a, double b, const std::string& eps_spec,
             const std::string& n_spec, const std::string& nodes_spec, const std::string& rule_spec,
             const std::string& format) {
    const function_model f = parse_function(fn_spec);
    const interval iv_check(a, b);
    if (!iv_check.positive())
        throw std::invalid_argument("quad: quadrature requires 0 < a < b");

    const int chosen = (!eps_spec.empty()) + (!n_spec.empty()) + (!nodes_spec.empty());
    if (chosen != 1)
        throw std::invalid_argument("quad: give exactly one of --eps, --n, --nodes");

    kv_list config{{"command", "quad"},
                   {"fn", fn_spec},
                   {"a", format_g12(a)},
                   {"b", format_g12(b)}};

    quadrature_result result;
    if (!eps_spec.empty()) {
        const double eps = parse_double(eps_spec, "--eps");
        config.emplace_back("eps", format_g12(eps));
        result = integrate_with_certificate(f, iv_check, eps);
    } else if (!n_spec.empty()) {
        const double n_raw = parse_double(n_spec, "--n");
        const auto n = static_cast<std::size_t>(n_raw);
        if (n_raw != static_cast<double>(n) || n < 1 || n > 100000000)
            throw std::invalid_argument("--n: need an integer in [1, 1e8]");
        intermediate_rule rule = intermediate_rule::midpoint;
        if (rule_spec == "left")
            rule = intermediate_rule::left;
        else if (rule_spec == "right")
            rule = intermediate_rule::right;
        else if (rule_spec != "midpoint")
            throw std::invalid_argument("--rule: use midpoint, left or right");
        config.emplace_back("n", std::to_string(n));
        config.emplace_back("rule", rule_spec);
        const partition p = uniform_partition(iv_check, n, rule);
        const quadrature_kind kind = rule == intermediate_rule::midpoint
                                         ? quadrature_kind::midpoint
                                         : quadrature_kind::general;
        result = evaluate_partition(f, p, kind);
    } else {
        config.emplace_back("nodes", nodes_spec);
        std::vector<double> nodes = parse_node_list(nodes_spec);
        if (nodes.size() < 2) throw std::invalid_argument("--nodes: need at least two nodes");
        if (nodes.front() != a || nodes.back() != b)
            throw std::invalid_argument("--nodes: first and last node must equal --a and --b");
        std::vector<double> xi(nodes.size() - 1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            xi[i] = 0.5 * (nodes[i] + nodes[i + 1]);
        const partition p(std::move(nodes), std::move(xi));
        result = evaluate_partition(f, p, quadrature_kind::midpoint);
    }

    emit(format, quadrature_csv_header(), {to_csv(result)}, {to_json(result)}, config);
    const double margin = 1e-9 * std::max(1.0, std::abs(result.reference));
    const bool ok = result.actual_error <= result.tier1 + margin &&
                    result.tier1 <= result.tier2 && result.tier2 <= result.tier3;
    return ok ? 0 : 2;
}

// ------------------------------------------------------------ sharpness ---

int run_sharpness(double a, double b, int grid, double beta, const std::string& format) {
    const interval iv(a, b);
    if (grid < 2 || grid > 100000)
        throw std::invalid_argument("--grid: need an integer in [2, 1e5]");
    double max_k = -std::numeric_limits<double>::infinity();
    double argmax = iv.a();
    for (int j = 0; j < grid; ++j) {
        const double x = j == grid - 1 ? iv.b() : iv.a() + j * iv.width() / (grid - 1);
        const double k = sharpness_probe(iv, beta, x);
        if (k > max_k) {
            max_k = k;
            argmax = x;
        }
    }
    const bool endpoint = argmax == iv.a() || argmax == iv.b();
    const bool quarter = std::abs(max_k - 0.25) <= 1e-9;

    kv_list config{{"command", "sharpness"},
                   {"a", format_g12(a)},
                   {"b", format_g12(b)},
                   {"beta", format_g12(beta)},
                   {"grid", std::to_string(grid)}};
    const std::string csv = format_g12(a) + "," + format_g12(b) + "," + format_g12(beta) + "," +
                            std::to_string(grid) + "," + format_g12(max_k) + "," +
                            format_g12(argmax) + "," + (endpoint ? "true" : "false");
    const std::string json = "{\"a\":" + json_number(a) + ",\"b\":" + json_number(b) +
                             ",\"beta\":" + json_number(beta) +
                             ",\"grid\":" + std::to_string(grid) +
                             ",\"max_k\":" + json_number(max_k) +
                             ",\"argmax_x\":" + json_number(argmax) +
                             ",\"endpoint_attained\":" + (endpoint ? "true" : "false") + "}";
    emit(format, "a,b,beta,grid,max_k,argmax_x,endpoint_attained", {csv}, {json}, config);
    return endpoint && quarter ? 0 : 2;
}

// -------------------------------------------------------------- pompeiu ---

int run_pompeiu(const std::string& fn_spec, double x1, double x2, double tol,
                const std::string& format) {
    const function_model f = parse_function(fn_spec);
    const pompeiu_point pt = find_pompeiu_point(f, x1, x2, tol);
    const bool interior = x1 < pt.xi && pt.xi < x2;
    const bool ok = interior && std::abs(pt.residual) <= 1e-6 * std::max(1.0, std::abs(pt.quotient));

    kv_list config{{"command", "pompeiu"},
                   {"fn", fn_spec},
                   {"a", format_g12(x1)},
                   {"b", format_g12(x2)},
                   {"tol", format_g12(tol)}};
    const std::string csv = fn_spec + "," + format_g12(x1) + "," + format_g12(x2) + "," +
                            format_g12(pt.xi) + "," + format_g12(pt.quotient) + "," +
                            format_g12(pt.residual) + "," + (interior ? "true" : "false");
    const std::string json = "{\"fn\":\"" + json_escape(fn_spec) + "\",\"x1\":" + json_number(x1) +
                             ",\"x2\":" + json_number(x2) + ",\"xi\":" + json_number(pt.xi) +
                             ",\"quotient\":" + json_number(pt.quotient) +
                             ",\"residual\":" + json_number(pt.residual) +
                             ",\"interior\":" + (interior ? "true" : "false") + "}";
    emit(format, "fn,x1,x2,xi,quotient,residual,interior", {csv}, {json}, config);
    return ok ? 0 : 2;
}

// --------------------------------------------------------------- verify ---

struct check_row {
    std::string name;
    long cases = 0;
    long violations = 0;
    double worst = 0.0; ///< most adverse margin seen; negative means violated
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

interval random_interval(std::mt19937_64& rng) {
    const double lo = uniform(rng, 0.1, 5.0);
    const double hi = std::min(10.0, lo + uniform(rng, 0.05, 10.0 - lo));
    return interval(lo, hi);
}

positive_pair random_pair(std::mt19937_64& rng) {
    const double x = std::exp(uniform(rng, std::log(1e-3), std::log(1e3)));
    const double y = std::exp(uniform(rng, std::log(1e-3), std::log(1e3)));
    return positive_pair(x, y == x ? y * 1.5 : y);
}

std::vector<function_model> verify_families() {
    std::vector<function_model> fams;
    fams.push_back(function_model::affine(2.0, 3.0));
    fams.push_back(function_model::power(2.0));
    fams.push_back(function_model::power(-2.0));
    fams.push_back(function_model::reciprocal());
    fams.push_back(function_model::logarithm());
    return fams;
}

void track(check_row& row, double margin) {
    if (row.cases == 0) row.worst = margin;
    ++row.cases;
    row.worst = std::min(row.worst, margin);
    if (margin < 0.0) ++row.violations;
}

check_row verify_eq31_validity(std::mt19937_64& rng) {
    check_row row{"eq31_validity"};
    const auto fams = verify_families();
    for (const auto& f : fams) {
        for (int i = 0; i < 50; ++i) {
            const interval iv = random_interval(rng);
            for (int j = 0; j < 101; ++j) {
                const double x = j == 100 ? iv.b() : iv.a() + j * iv.width() / 100.0;
                const auto r = pompeiu_bound(f, iv, x);
                track(row, r.slack + verification_margin(r));
            }
        }
    }
    return row;
}

check_row verify_affine_endpoint(std::mt19937_64& rng) {
    check_row row{"eq31_affine_endpoint"};
    for (int i = 0; i < 50; ++i) {
        const interval iv = random_interval(rng);
        double beta = uniform(rng, -4.0, 4.0);
        if (std::abs(beta) < 0.1) beta = 0.5;
        const auto f = function_model::affine(uniform(rng, -3.0, 3.0), beta);
        for (double x : {iv.a(), iv.b()}) {
            const auto r = pompeiu_bound(f, iv, x);
            const double tol = 1e-12 * std::max(1.0, std::abs(r.rhs));
            track(row, tol - std::abs(r.slack));
        }
    }
    return row;
}

check_row verify_sharpness(std::mt19937_64& rng) {
    check_row row{"sharpness_quarter"};
    for (int i = 0; i < 30; ++i) {
        const interval iv = random_interval(rng);
        const double beta = uniform(rng, 0.5, 4.0);
        double max_k = -std::numeric_limits<double>::infinity();
        double argmax = iv.a();
        for (int j = 0; j < 101; ++j) {
            const double x = j == 100 ? iv.b() : iv.a() + j * iv.width() / 100.0;
            const double k = sharpness_probe(iv, beta, x);
            if (k > max_k) {
                max_k = k;
                argmax = x;
            }
        }
        const bool endpoint = argmax == iv.a() || argmax == iv.b();
        const double margin = 1e-9 - std::abs(max_k - 0.25);
        track(row, endpoint ? margin : std::min(margin, -1.0));
    }
    return row;
}

check_row verify_means_chain(std::mt19937_64& rng) {
    check_row row{"means_chain"};
    for (int i = 0; i < 2000; ++i) {
        const positive_pair pr = random_pair(rng);
        const double chain[] = {harmonic_mean(pr), geometric_mean(pr), logarithmic_mean(pr),
                                identric_mean(pr), arithmetic_mean(pr)};
        double margin = std::numeric_limits<double>::infinity();
        for (int k = 0; k + 1 < 5; ++k) {
            const double rel = (chain[k + 1] - chain[k]) / std::max(1.0, chain[k + 1]);
            margin = std::min(margin, rel + 1e-12);
        }
        for (double m : chain)
            if (!(pr.lo() <= m && m <= pr.hi())) margin = std::min(margin, -1.0);
        track(row, margin);
    }
    return row;
}

check_row verify_lp_monotone(std::mt19937_64& rng) {
    check_row row{"lp_monotone"};
    const double ps[] = {-3.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25, 0.0,
                         0.25, 0.5,  1.0,  1.5,  2.0,   3.0};
    for (int i = 0; i < 300; ++i) {
        const positive_pair pr = random_pair(rng);
        double margin = std::numeric_limits<double>::infinity();
        double prev = p_logarithmic_mean(pr, ps[0]);
        for (std::size_t k = 1; k < std::size(ps); ++k) {
            const double cur = p_logarithmic_mean(pr, ps[k]);
            margin = std::min(margin, (cur - prev) / std::max(1.0, cur) + 1e-11);
            prev = cur;
        }
        track(row, margin);
    }
    return row;
}

check_row verify_mean_bounds(std::mt19937_64& rng, const std::string& name) {
    check_row row{name};
    const double ps[] = {-3.0, -2.0, -0.5, 0.5, 2.0, 3.0};
    for (int i = 0; i < 500; ++i) {
        const positive_pair pr = random_pair(rng);
        if (name == "means_62") {
            for (double p : ps) {
                const auto r = p_mean_inequality(pr, p);
                track(row, r.slack + verification_margin(r));
            }
        } else if (name == "means_63") {
            const auto r = log_mean_inequality(pr);
            double margin = r.slack + verification_margin(r);
            margin = std::min(margin, r.lhs + 1e-12 * std::max(1.0, r.rhs));
            track(row, margin);
        } else {
            const auto r = identric_mean_inequality(pr);
            double margin = r.slack + verification_margin(r);
            margin = std::min(margin, r.lhs - 1.0 + 1e-12);
            track(row, margin);
        }
    }
    return row;
}

check_row verify_bracket_identity(std::mt19937_64& rng) {
    check_row row{"bracket_identity"};
    for (int i = 0; i < 5; ++i) {
        const interval pos = random_interval(rng);
        const interval neg(-pos.b(), -pos.a());
        std::vector<weight_model> weights;
        weights.push_back(parse_weight("1"));
        weights.push_back(parse_weight("t^2"));
        weights.push_back(parse_weight("bump:" + format_g12(pos.midpoint()) + "," +
                                       format_g12(std::max(0.02, pos.width() / 4.0))));
        for (const interval* iv : {&pos, &neg}) {
            for (const auto& w : weights) {
                for (int j = 0; j < 7; ++j) {
                    const double x = uniform(rng, iv->a(), iv->b());
                    const double lhs = weighted_bracket(*iv, w, x);
                    std::vector<double> cuts = w.breakpoints;
                    cuts.push_back(x);
                    const double rhs =
                        oracle::integrate_split(
                            [&](double t) { return w(t) * std::abs(x - t); }, iv->a(),
                            iv->b(), cuts)
                            .value /
                        std::abs(x);
                    const double scale = std::max(1.0, std::abs(rhs));
                    track(row, 1e-8 - std::abs(lhs - rhs) / scale);
                }
            }
        }
    }
    return row;
}

check_row verify_weighted_reduction(std::mt19937_64& rng) {
    check_row row{"weighted_reduction"};
    const auto fams = verify_families();
    const weight_model one = parse_weight("1");
    for (const auto& f : fams) {
        for (int i = 0; i < 5; ++i) {
            const interval iv = random_interval(rng);
            for (int j = 0; j < 5; ++j) {
                const double x = uniform(rng, iv.a(), iv.b());
                const auto rw = weighted_bound(f, iv, one, x);
                const auto rp = pompeiu_bound(f, iv, x);
                const double ls = std::max(1.0, std::abs(rw.lhs));
                const double rs = std::max(1.0, std::abs(rw.rhs));
                const double m1 = 1e-8 - std::abs(rw.lhs - iv.width() * rp.lhs) / ls;
                const double m2 = 1e-8 - std::abs(rw.rhs - iv.width() * rp.rhs) / rs;
                track(row, std::min(m1, m2));
            }
        }
    }
    return row;
}

check_row verify_quad_certified(std::mt19937_64& rng) {
    check_row row{"quad_certified"};
    const auto fams = verify_families();
    const intermediate_rule rules[] = {intermediate_rule::midpoint, intermediate_rule::left,
                                       intermediate_rule::right};
    for (const auto& f : fams) {
        const interval fixed(0.5, 3.0);
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u}) {
            for (auto rule : rules) {
                const partition p = uniform_partition(fixed, n, rule);
                const auto r = evaluate_partition(
                    f, p,
                    rule == intermediate_rule::midpoint ? quadrature_kind::midpoint
                                                        : quadrature_kind::general);
                double margin =
                    r.tier1 + 1e-9 * std::max(1.0, std::abs(r.reference)) - r.actual_error;
                if (!(r.tier1 <= r.tier2 && r.tier2 <= r.tier3)) margin = std::min(margin, -1.0);
                if (rule == intermediate_rule::midpoint && r.value != midpoint_rule(f, p))
                    margin = std::min(margin, -1.0);
                track(row, margin);
            }
        }
        for (int i = 0; i < 5; ++i) {
            const interval iv = random_interval(rng);
            const partition p = uniform_partition(iv, 7, rules[i % 3]);
            const auto r = evaluate_partition(f, p,
                                              rules[i % 3] == intermediate_rule::midpoint
                                                  ? quadrature_kind::midpoint
                                                  : quadrature_kind::general);
            double margin = r.tier1 + 1e-9 * std::max(1.0, std::abs(r.reference)) - r.actual_error;
            if (!(r.tier1 <= r.tier2 && r.tier2 <= r.tier3)) margin = std::min(margin, -1.0);
            track(row, margin);
        }
    }
    return row;
}

check_row verify_oracle_consistency(std::mt19937_64& rng) {
    check_row row{"oracle_consistency"};
    const auto fams = verify_families();
    for (int i = 0; i < 20; ++i) {
        const interval iv = random_interval(rng);
        const auto& f = fams[static_cast<std::size_t>(i) % fams.size()];
        const auto& g = fams[static_cast<std::size_t>(i + 2) % fams.size()];
        auto feval = [&](double t) { return f(t); };
        const double c = uniform(rng, iv.a(), iv.b());
        const double whole = oracle::integrate(feval, iv.a(), iv.b()).value;
        const double split = oracle::integrate(feval, iv.a(), c).value +
                             oracle::integrate(feval, c, iv.b()).value;
        double margin = 5e-10 - std::abs(whole - split);
        const double alpha = uniform(rng, -2.0, 2.0);
        const double beta = uniform(rng, -2.0, 2.0);
        const double combo =
            oracle::integrate([&](double t) { return alpha * f(t) + beta * g(t); }, iv.a(), iv.b())
                .value;
        const double parts = alpha * whole +
                             beta * oracle::integrate([&](double t) { return g(t); }, iv.a(), iv.b()).value;
        margin = std::min(margin, 5e-10 * std::max(1.0, std::abs(parts)) - std::abs(combo - parts));
        track(row, margin);
    }
    return row;
}

int run_verify(unsigned long seed, const std::string& format) {
    std::mt19937_64 rng(seed);
    std::vector<check_row> rows;
    rows.push_back(verify_eq31_validity(rng));
    rows.push_back(verify_affine_endpoint(rng));
    rows.push_back(verify_sharpness(rng));
    rows.push_back(verify_means_chain(rng));
    rows.push_back(verify_lp_monotone(rng));
    rows.push_back(verify_mean_bounds(rng, "means_62"));
    rows.push_back(verify_mean_bounds(rng, "means_63"));
    rows.push_back(verify_mean_bounds(rng, "means_64"));
    rows.push_back(verify_bracket_identity(rng));
    rows.push_back(verify_weighted_reduction(rng));
    rows.push_back(verify_quad_certified(rng));
    rows.push_back(verify_oracle_consistency(rng));

    kv_list config{{"command", "verify"}, {"seed", std::to_string(seed)}};
    std::vector<std::string> csv_rows, json_rows;
    long total_violations = 0;
    for (const auto& r : rows) {
        total_violations += r.violations;
        csv_rows.push_back(r.name + "," + std::to_string(r.cases) + "," +
                           std::to_string(r.violations) + "," + format_g12(r.worst));
        json_rows.push_back("{\"check\":\"" + json_escape(r.name) +
                            "\",\"cases\":" + std::to_string(r.cases) +
                            ",\"violations\":" + std::to_string(r.violations) +
                            ",\"worst\":" + json_number(r.worst) + "}");
    }
    emit(format, "check,cases,violations,worst", csv_rows, json_rows, config);
    return total_violations == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pompeiu mean value theorem toolkit: special means, Ostrowski-type bounds, "
                 "certified quadrature"};
    app.require_subcommand(1);

    std::string format = "csv";
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* means_sub = app.add_subcommand("means", "Evaluate the special means A, G, H, L, I");
    double means_a = 0.0, means_b = 0.0;
    std::string means_p;
    means_sub->add_option("--a", means_a, "First value (> 0)")->required();
    means_sub->add_option("--b", means_b, "Second value (> 0)")->required();
    means_sub->add_option("--p", means_p, "Also evaluate the p-logarithmic mean L_p");

    auto* bound_sub = app.add_subcommand("bound", "Evaluate one inequality as lhs/rhs/slack");
    std::string bound_eq, bound_fn, bound_x, bound_w = "1", bound_m, bound_p;
    double bound_a = 0.0, bound_b = 0.0, rhs_scale = 1.0;
    bound_sub->add_option("--eq", bound_eq, "Inequality id: 1.1, 3.1, 3.6, 4.1, 4.4, 6.2, 6.3, 6.4")
        ->required();
    bound_sub->add_option("--a", bound_a, "Left endpoint")->required();
    bound_sub->add_option("--b", bound_b, "Right endpoint")->required();
    bound_sub->add_option("--fn", bound_fn, "Function family: affine:A,B power:P reciprocal log");
    bound_sub->add_option("--x", bound_x, "Evaluation point, or grid:N for N uniform points");
    bound_sub->add_option("--w", bound_w, "Weight: 1, t, t^2, const:c, bump:center,halfwidth");
    bound_sub->add_option("--M", bound_m, "Sup of |f'| for eq 1.1 (default: sampled estimate)");
    bound_sub->add_option("--p", bound_p, "Exponent for eq 6.2");
    bound_sub->add_option("--rhs-scale", rhs_scale)->group("");

    auto* quad_sub = app.add_subcommand("quad", "Pompeiu-rule quadrature with remainder tiers");
    std::string quad_fn, quad_eps, quad_n, quad_nodes, quad_rule = "midpoint";
    double quad_a = 0.0, quad_b = 0.0;
    quad_sub->add_option("--fn", quad_fn, "Function family")->required();
    quad_sub->add_option("--a", quad_a, "Left endpoint (> 0)")->required();
    quad_sub->add_option("--b", quad_b, "Right endpoint")->required();
    quad_sub->add_option("--eps", quad_eps, "Certify |error| <= eps, choosing n automatically");
    quad_sub->add_option("--n", quad_n, "Number of uniform subintervals");
    quad_sub->add_option("--nodes", quad_nodes, "Explicit comma-separated nodes");
    quad_sub->add_option("--rule", quad_rule, "Intermediate points for --n: midpoint, left, right");

    auto* verify_sub = app.add_subcommand("verify", "Run the randomized invariant sweep");
    unsigned long seed = 12345;
    verify_sub->add_option("--seed", seed, "Random seed (default 12345)");

    auto* sharp_sub = app.add_subcommand("sharpness", "Probe the sharp 1/4 constant on a grid");
    double sharp_a = 0.0, sharp_b = 0.0, sharp_beta = 3.0;
    int sharp_grid = 101;
    sharp_sub->add_option("--a", sharp_a, "Left endpoint")->required();
    sharp_sub->add_option("--b", sharp_b, "Right endpoint")->required();
    sharp_sub->add_option("--grid", sharp_grid, "Grid points (default 101)");
    sharp_sub->add_option("--beta", sharp_beta, "Affine intercept (default 3)");

    auto* pomp_sub = app.add_subcommand("pompeiu", "Locate the mean value point xi");
    std::string pomp_fn;
    double pomp_a = 0.0, pomp_b = 0.0, pomp_tol = 1e-10;
    pomp_sub->add_option("--fn", pomp_fn, "Function family")->required();
    pomp_sub->add_option("--a", pomp_a, "Left endpoint")->required();
    pomp_sub->add_option("--b", pomp_b, "Right endpoint")->required();
    pomp_sub->add_option("--tol", pomp_tol, "Residual tolerance (default 1e-10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*means_sub) return run_means(means_a, means_b, means_p, format);
        if (*bound_sub)
            return run_bound(bound_eq, bound_fn, bound_a, bound_b, bound_x, bound_w, bound_m,
                             bound_p, rhs_scale, format);
        if (*quad_sub)
            return run_quad(quad_fn, quad_a, quad_b, quad_eps, quad_n, quad_nodes, quad_rule,
                            format);
        if (*verify_sub) return run_verify(seed, format);
        if (*sharp_sub) return run_sharpness(sharp_a, sharp_b, sharp_grid, sharp_beta, format);
        if (*pomp_sub) return run_pompeiu(pomp_fn, pomp_a, pomp_b, pomp_tol, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
