#include "holant/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "holant/barvinok.hpp"
#include "holant/checks/selftest.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/exptype.hpp"
#include "holant/limits.hpp"
#include "holant/parallel.hpp"
#include "holant/serialize.hpp"

namespace holant {

namespace {

struct RunConfig {
    std::string graph_file;
    std::string edges;
    std::vector<std::string> families;
    std::string model = "ones";
    int colors = 2;
    double eps = 1e-3;
    std::string mode = "mult";
    std::string method = "auto";
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string format = "json";

    std::string q = "2";
    std::string v = "1";
    std::string x;
    std::string spec = "tutte:v=1,0";
    std::optional<double> radius;
    bool estimate_radius = false;
    bool qhat = false;
    double tol = 1e-2;
    bool log_potential = false;
    double eta = 0.9;
    std::optional<double> theta;
    int samples = 0;
};

cplx parse_complex(const std::string &text)
{
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        const std::string re_text = text.substr(0, comma);
        const double re = std::stod(re_text, &used);
        if (used != re_text.size()) {
            throw ParseError("");
        }
        double im = 0.0;
        if (comma != std::string::npos) {
            const std::string im_text = text.substr(comma + 1);
            im = std::stod(im_text, &used);
            if (used != im_text.size()) {
                throw ParseError("");
            }
        }
        return {re, im};
    } catch (const std::exception &) {
        throw ParseError("expected a complex number '<re>' or '<re>,<im>', got '" + text + "'");
    }
}

std::string format_complex(cplx z)
{
    std::ostringstream s;
    s << std::setprecision(17) << z.real();
    if (z.imag() != 0.0) {
        s << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return s.str();
}

std::string format_double(double x)
{
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

Multigraph load_graph(const RunConfig &cfg)
{
    const int sources = !cfg.graph_file.empty() + !cfg.edges.empty() + !cfg.families.empty();
    if (sources != 1) {
        throw ParseError("give exactly one of --graph, --edges, --family");
    }
    if (!cfg.graph_file.empty()) {
        return read_edge_list_file(cfg.graph_file);
    }
    if (!cfg.edges.empty()) {
        return parse_inline_graph(cfg.edges);
    }
    if (cfg.families.size() != 1) {
        throw ParseError("this subcommand takes a single --family");
    }
    return generate(parse_family(cfg.families.front()));
}

ApproxMode parse_mode(const std::string &mode)
{
    if (mode == "mult") {
        return ApproxMode::Multiplicative;
    }
    if (mode == "add") {
        return ApproxMode::Additive;
    }
    throw ParseError("--mode must be mult or add");
}

DerivativeMethod parse_method(const std::string &method)
{
    if (method == "auto") {
        return DerivativeMethod::Auto;
    }
    if (method == "subsets") {
        return DerivativeMethod::Subsets;
    }
    if (method == "clusters") {
        return DerivativeMethod::Clusters;
    }
    throw ParseError("--method must be auto, subsets or clusters");
}

void emit(std::ostream &out, const RunConfig &cfg, const json &j)
{
    if (cfg.format == "json") {
        out << j.dump() << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << ": ";
        const json &v = it.value();
        if (v.is_object() && v.contains("re") && v.size() == 2) {
            out << format_complex(complex_from_json(v));
        } else if (v.is_number_float()) {
            out << format_double(v.get<double>());
        } else if (v.is_string()) {
            out << v.get<std::string>();
        } else {
            out << v.dump();
        }
        out << "\n";
    }
}

int cmd_exact(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    const EdgeColoringModel h = load_model(cfg.model, cfg.colors, g.max_degree());
    const cplx value = exact_partition(g, h);
    emit(out, cfg,
         json{{"value", complex_to_json(value)},
              {"vertices", g.num_vertices()},
              {"edges", g.num_edges()},
              {"engine", "exact"}});
    return 0;
}

int cmd_approx(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    const EdgeColoringModel h = load_model(cfg.model, cfg.colors, g.max_degree());
    emit(out, cfg,
         certificate_to_json(
             approx_partition(g, h, cfg.eps, parse_mode(cfg.mode), parse_method(cfg.method))));
    return 0;
}

int cmd_tutte(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    const cplx q = parse_complex(cfg.q), v = parse_complex(cfg.v);
    emit(out, cfg, json{{"value", complex_to_json(tutte_direct(g, q, v))}});
    return 0;
}

int cmd_exptype(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    ExpTypeSpec spec = parse_exptype_spec(cfg.spec);
    if (cfg.radius) {
        spec.root_radius = *cfg.radius;
    } else if (cfg.estimate_radius) {
        const RootRadiusEstimate est = estimate_root_radius(spec, g.max_degree(), {g});
        spec.root_radius = est.radius;
        spec.heuristic_radius = true;
    }
    const ApproxCertificate cert =
        eval_exp_type(g, spec, parse_complex(cfg.x), cfg.eps, parse_mode(cfg.mode));
    json j = certificate_to_json(cert);
    j["spec"] = spec.name;
    j["root_radius"] = *spec.root_radius;
    emit(out, cfg, j);
    return 0;
}

int cmd_limits(const RunConfig &cfg, std::ostream &out)
{
    if (cfg.families.size() > 1 || (!cfg.families.empty() && !cfg.log_potential &&
                                     cfg.graph_file.empty() && cfg.edges.empty())) {
        std::vector<GraphFamilySpec> family;
        int degree = 0;
        for (const std::string &f : cfg.families) {
            family.push_back(parse_family(f));
            degree = std::max(degree, family.back().declared_max_degree());
        }
        const EdgeColoringModel h = load_model(cfg.model, cfg.colors, degree);
        emit(out, cfg, report_to_json(convergence_run(family, h, cfg.eps, cfg.tol)));
        return 0;
    }
    const Multigraph g = load_graph(cfg);
    const EdgeColoringModel h = load_model(cfg.model, cfg.colors, g.max_degree());
    json j{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
    if (cfg.log_potential) {
        const LogPotentialResult r = log_potential_check(g, h);
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["discrepancy"] = r.discrepancy;
        j["normalized_pf"] = r.rhs + static_cast<double>(g.num_edges()) / g.num_vertices() *
                                         std::log(static_cast<double>(h.colors()));
    } else {
        j["normalized_pf"] = normalized_pf(g, h);
    }
    emit(out, cfg, j);
    return 0;
}

int cmd_roots(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    const EdgeColoringModel h = load_model(cfg.model, cfg.colors, g.max_degree());
    const ComplexPoly q = exact_poly_by_interpolation(g, h);
    std::vector<cplx> coeffs = q.coefficients();
    if (cfg.qhat) {
        const int n = g.num_vertices();
        const double scale = std::pow(static_cast<double>(h.colors()), -g.num_edges());
        coeffs.assign(n + 1, cplx(0.0));
        for (int j = 0; j <= n; j++) {
            coeffs[j] = scale * q[n - j];
        }
    }
    const ComplexPoly p(coeffs);
    json jc = json::array(), jr = json::array();
    for (const cplx &c : coeffs) {
        jc.push_back(complex_to_json(c));
    }
    double smallest = std::numeric_limits<double>::infinity();
    if (p.degree() >= 1) {
        for (const cplx &z : poly_roots(p)) {
            jr.push_back(complex_to_json(z));
            smallest = std::min(smallest, std::abs(z));
        }
    }
    emit(out, cfg,
         json{{"polynomial", cfg.qhat ? "qhat" : "q"},
              {"coefficients", jc},
              {"roots", jr},
              {"min_modulus", number_or_null(smallest)}});
    return 0;
}

int cmd_region_check(const RunConfig &cfg, std::ostream &out)
{
    const Multigraph g = load_graph(cfg);
    const EdgeColoringModel h = load_model(cfg.model, cfg.colors, g.max_degree());
    const RadiusInfo info = radius_info(h, g.max_degree());
    json j = radius_to_json(info);
    j["max_degree"] = g.max_degree();
    if (cfg.samples > 0) {
        const double theta = cfg.theta.value_or(zero_free_constants().theta_star);
        const RegionParams params = RegionParams::for_degree(g.max_degree(), cfg.eta, theta);
        const ZeroFreeReport rep = verify_zero_free(g, params, h.colors(), cfg.samples, cfg.seed);
        j["zero_free"] = json{{"samples", rep.samples},
                              {"delta", params.delta()},
                              {"bound", rep.bound},
                              {"min_abs", number_or_null(rep.min_abs)},
                              {"zero_violations", rep.zero_violations},
                              {"bound_violations", rep.bound_violations},
                              {"membership_failures", rep.membership_failures}};
    }
    emit(out, cfg, j);
    return info.M > 1.0 ? 0 : 1;
}

int cmd_constants(const RunConfig &cfg, std::ostream &out)
{
    const ZeroFreeConstants c = zero_free_constants();
    json beta = json::array();
    for (int d = 1; d <= 8; d++) {
        beta.push_back(c.beta_star(d));
    }
    emit(out, cfg, json{{"theta_star", c.theta_star}, {"x_star", c.x_star}, {"beta_star", beta}});
    return 0;
}

int cmd_selftest(const RunConfig &cfg, std::ostream &out)
{
    const auto results = checks::run_selftest(cfg.format == "text" ? &out : nullptr);
    bool ok = true;
    json rows = json::array();
    for (const auto &r : results) {
        ok = ok && r.passed;
        rows.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (cfg.format == "json") {
        out << json{{"passed", ok}, {"checks", rows}}.dump() << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Edge-coloring partition functions: exact evaluation and certified approximation"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto graph_opts = [&](CLI::App *sub) {
        sub->add_option("--graph", cfg.graph_file, "edge-list file");
        sub->add_option("--edges", cfg.edges, "inline graph, e.g. 3:0-1,1-2,2-0");
        sub->add_option("--family", cfg.families, "family spec, e.g. cycle:8 or torus2d:3x4")
            ->delimiter(',');
    };
    auto model_opts = [&](CLI::App *sub) {
        sub->add_option("--model", cfg.model,
                        "model file or built-in: ones, matching, dregular:<d>, ones+uniform:<r>:<seed>");
        sub->add_option("--colors", cfg.colors, "number of colors k")->check(CLI::Range(1, 64));
    };
    auto common = [&](CLI::App *sub) {
        sub->add_option("--budget", cfg.budget, "term budget (default 1e8 or HOLANT_BUDGET)");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--format", cfg.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto approx_opts = [&](CLI::App *sub) {
        sub->add_option("--eps", cfg.eps, "target accuracy")->check(CLI::PositiveNumber);
        sub->add_option("--mode", cfg.mode, "mult or add")->check(CLI::IsMember({"mult", "add"}));
    };

    auto *exact = app.add_subcommand("exact", "exact partition function");
    graph_opts(exact);
    model_opts(exact);
    common(exact);

    auto *approx = app.add_subcommand("approx", "certified approximation");
    graph_opts(approx);
    model_opts(approx);
    common(approx);
    approx_opts(approx);
    approx->add_option("--method", cfg.method, "derivatives: auto, subsets or clusters");

    auto *tutte = app.add_subcommand("tutte", "Z(G)(q, v) by edge-subset enumeration");
    graph_opts(tutte);
    common(tutte);
    tutte->add_option("--q", cfg.q, "q as <re>[,<im>]");
    tutte->add_option("--v", cfg.v, "v as <re>[,<im>]");

    auto *exptype = app.add_subcommand("exptype", "certified evaluation of an exponential-type polynomial");
    graph_opts(exptype);
    common(exptype);
    approx_opts(exptype);
    exptype->add_option("--spec", cfg.spec, "tutte:v=<re>,<im> or chromatic");
    exptype->add_option("--x", cfg.x, "evaluation point <re>[,<im>]")->required();
    exptype->add_option("--radius", cfg.radius, "proven bound c on the root moduli");
    exptype->add_flag("--estimate-radius", cfg.estimate_radius,
                      "estimate c from the graph's own roots (heuristic)");

    auto *limits = app.add_subcommand("limits", "normalized partition functions and convergence runs");
    graph_opts(limits);
    model_opts(limits);
    common(limits);
    limits->add_option("--eps", cfg.eps, "additive accuracy for non-cycle families")
        ->check(CLI::PositiveNumber);
    limits->add_option("--tol", cfg.tol, "Cauchy tolerance");
    limits->add_flag("--log-potential", cfg.log_potential, "root-measure log-potential check");

    auto *roots = app.add_subcommand("roots", "roots of q(z) = p(G)(I + z(h - I))");
    graph_opts(roots);
    model_opts(roots);
    common(roots);
    roots->add_flag("--qhat", cfg.qhat, "use k^-|E| z^|V| q(1/z) instead");

    auto *region = app.add_subcommand("region-check", "certified radius and zero-free sampling");
    graph_opts(region);
    model_opts(region);
    common(region);
    region->add_option("--samples", cfg.samples, "random members of the zero-free region to test");
    region->add_option("--eta", cfg.eta, "eta for the sampled region");
    region->add_option("--theta", cfg.theta, "theta for the sampled region (default theta*)");

    auto *constants = app.add_subcommand("constants", "theta*, x*, beta*(1..8)");
    common(constants);

    auto *selftest = app.add_subcommand("selftest", "oracle-equivalence suite");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    if (cfg.budget != 0) {
        set_budget(cfg.budget);
    }
    if (cfg.threads != 0) {
        set_threads(cfg.threads);
    }
    try {
        if (exact->parsed()) return cmd_exact(cfg, out);
        if (approx->parsed()) return cmd_approx(cfg, out);
        if (tutte->parsed()) return cmd_tutte(cfg, out);
        if (exptype->parsed()) return cmd_exptype(cfg, out);
        if (limits->parsed()) return cmd_limits(cfg, out);
        if (roots->parsed()) return cmd_roots(cfg, out);
        if (region->parsed()) return cmd_region_check(cfg, out);
        if (constants->parsed()) return cmd_constants(cfg, out);
        if (selftest->parsed()) return cmd_selftest(cfg, out);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError &e) {
        err << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}

}  // namespace holant
