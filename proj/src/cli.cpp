#include "cmapqk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cmapqk/fields.hpp"
#include "cmapqk/geometry.hpp"
#include "cmapqk/quatarith.hpp"
#include "cmapqk/sampling.hpp"
#include "cmapqk/volume.hpp"

namespace cmapqk::cli {

using nlohmann::json;

namespace {

constexpr double kKillingRelTol = 1e-6;
constexpr double kEinsteinRelTol = 1e-4;
constexpr double kLambdaAgreeTol = 1e-4;
constexpr double kVolumeRelTol = 1e-8;
constexpr double kKillingStep = 1e-5;
constexpr double kCurvatureStep = 3e-4;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ModelParams params_of(const RunConfig& cfg) {
    ModelParams p{cfg.n, cfg.effective_c()};
    p.validate();
    return p;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw std::invalid_argument("format '" + cfg.format + "' is not supported by command '" + cfg.command + "'");
}

double max_abs(const Eigen::MatrixXd& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ExactC parse_exact_c(const std::string& s) {
    const auto p1 = s.find(':');
    const auto p2 = p1 == std::string::npos ? std::string::npos : s.find(':', p1 + 1);
    if (p2 == std::string::npos || s.find(':', p2 + 1) != std::string::npos)
        throw std::invalid_argument("--c-exact expects lambda:a:b, got '" + s + "'");
    ExactC e;
    try {
        e.lambda = Rational(s.substr(0, p1));
        e.lambda.canonicalize();
        e.a = std::stoll(s.substr(p1 + 1, p2 - p1 - 1));
        e.b = std::stoll(s.substr(p2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--c-exact: cannot parse '" + s + "'");
    }
    if (sgn(e.lambda) < 0) throw std::invalid_argument("--c-exact: lambda must be non-negative");
    if (e.a <= 0 || e.b <= 0) throw std::invalid_argument("--c-exact: a and b must be positive");
    return e;
}

double RunConfig::effective_c() const {
    if (c_exact) return c_compatible({c_exact->a, c_exact->b}, c_exact->lambda).c;
    return c;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify-killing", "structure", "center",
                                                "curvature",      "lattice",   "volume-table"};
    return names;
}

void RunConfig::validate() const {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
        throw std::invalid_argument("unknown command '" + command + "'");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!std::isfinite(c) || c < 0.0) throw std::invalid_argument("c must be finite and >= 0");
    if (points < 1) throw std::invalid_argument("points must be >= 1");
    if (step && !(*step > 0.0 && *step < 0.1)) throw std::invalid_argument("step must lie in (0, 0.1)");
    if (bound < 0 || bound > 1000) throw std::invalid_argument("bound must lie in [0, 1000]");
    if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
    if (a <= 0 || b <= 0) throw std::invalid_argument("a and b must be positive");
    if (!(vd > 0.0) || !std::isfinite(vd)) throw std::invalid_argument("vd must be positive");
    if (rho_grid.empty()) throw std::invalid_argument("rho grid must not be empty");
    for (double r : rho_grid)
        if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("rho grid values must be positive");
}

void apply_json(RunConfig& cfg, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    for (const auto& [key, v] : j.items()) {
        try {
            if (key == "command") cfg.command = v.get<std::string>();
            else if (key == "n") cfg.n = v.get<int>();
            else if (key == "c") cfg.c = v.get<double>();
            else if (key == "c_exact" || key == "c-exact") cfg.c_exact = parse_exact_c(v.get<std::string>());
            else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
            else if (key == "points") cfg.points = v.get<int>();
            else if (key == "step") cfg.step = v.get<double>();
            else if (key == "bound") cfg.bound = v.get<std::int64_t>();
            else if (key == "out") cfg.out = v.get<std::string>();
            else if (key == "format") cfg.format = v.get<std::string>();
            else if (key == "a") cfg.a = v.get<std::int64_t>();
            else if (key == "b") cfg.b = v.get<std::int64_t>();
            else if (key == "vd") cfg.vd = v.get<double>();
            else if (key == "rho_grid" || key == "rho-grid") cfg.rho_grid = v.get<std::vector<double>>();
            else if (key == "inject_control" || key == "inject-control") cfg.inject_control = v.get<bool>();
            else throw std::invalid_argument("config: unknown key '" + key + "'");
        } catch (const json::exception& e) {
            throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
        }
    }
}

json center_json(const CenterVector& v) {
    return {{"two_pi_R", to_string(v.u)}, {"two_pi_Z", v.m.get_si()}, {"four_pi_c", to_string(v.z)}};
}

// ---------------------------------------------------------------- verify-killing

CommandResult cmd_verify_killing(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const ModelParams params = params_of(cfg);
    const double step = cfg.step.value_or(kKillingStep);
    PointSampler sampler(cfg.seed);
    const auto pts = sampler.points(cfg.n, cfg.points);

    struct Row {
        std::string name;
        double max_residual = 0.0;  // max over points of |L g|_max / |g|_max
    };
    std::vector<Row> rows;
    auto scan = [&](const std::string& name, auto&& lie) {
        Row r{name};
        for (const auto& p : pts) {
            const double gn = max_abs(metric_gram(p, params));
            r.max_residual = std::max(r.max_residual, max_abs(lie(p)) / gn);
        }
        rows.push_back(r);
    };
    for (const auto& [name, F] : real_catalogue(params))
        scan(name, [&](const PointBarN& p) { return lie_derivative_metric(F, p, params, step); });
    if (cfg.inject_control) {
        const int d = chart::dim(cfg.n);
        scan("d/drho (control)", [&](const PointBarN& p) {
            Eigen::VectorXd F = Eigen::VectorXd::Zero(d);
            F(chart::rho()) = 1.0;
            return lie_derivative_chart(F, Eigen::MatrixXd::Zero(d, d), p, params, step);
        });
    }

    CommandResult res;
    std::ostringstream os;
    json arr = json::array();
    if (cfg.format == "csv") os << "generator,max_residual,tolerance,pass\n";
    for (const auto& r : rows) {
        const bool pass = r.max_residual <= kKillingRelTol;
        if (!pass) res.status = 1;
        if (cfg.format == "csv")
            os << '"' << r.name << "\"," << format_double(r.max_residual) << ',' << format_double(kKillingRelTol)
               << ',' << (pass ? "true" : "false") << '\n';
        else
            arr.push_back({{"generator", r.name},
                           {"max_residual", r.max_residual},
                           {"tolerance", kKillingRelTol},
                           {"pass", pass}});
    }
    if (cfg.format == "json") {
        json j{{"command", "verify-killing"}, {"n", cfg.n},       {"c", params.c},
               {"seed", cfg.seed},            {"points", cfg.points}, {"step", step},
               {"residual_scale", "max|L_X g| / max|g| per point"},   {"results", arr},
               {"pass", res.status == 0}};
        os << dump(j);
    }
    res.body = os.str();
    return res;
}

// ---------------------------------------------------------------- structure

CommandResult cmd_structure(const RunConfig& cfg) {
    require_format(cfg, {"json"});
    const StructureReport rep = structure_check(ModelParams{cfg.n, 0.0});  // c is carried symbolically
    CommandResult res;
    res.status = rep.mismatches.empty() ? 0 : 1;
    json j{{"command", "structure"},
           {"n", rep.n},
           {"c", "symbolic"},
           {"pairs_checked", rep.pairs_checked},
           {"mismatch_count", rep.mismatches.size()},
           {"mismatches", rep.mismatches},
           {"pass", res.status == 0}};
    res.body = dump(j);
    return res;
}

// ---------------------------------------------------------------- center

CommandResult cmd_center(const RunConfig& cfg) {
    require_format(cfg, {"json"});
    const CBranch branch = cfg.effective_c() > 0.0 ? CBranch::Positive : CBranch::Zero;
    json j{{"command", "center"}, {"n", cfg.n}, {"branch", branch == CBranch::Positive ? "c>0" : "c=0"}};
    json kernel = json::array(), pretty = json::array();
    std::vector<CenterVector> gens;
    if (cfg.n == 1) {
        gens.push_back(kernel_generator_n1(branch));
        j["F"] = f_generator_n1(branch).pretty();
        j["F_vector"] = center_json(f_generator_n1(branch));
    } else {
        for (const auto& v : kernel_generators(cfg.n, branch)) gens.push_back(v);
        const CenterVector F = f_generator(cfg.n, branch), Fp = fprime_generator(cfg.n, branch);
        j["ker_cap_su"] = ker_cap_su(cfg.n).pretty();
        j["F"] = F.pretty();
        j["Fprime"] = Fp.pretty();
        j["F_vector"] = center_json(F);
        j["Fprime_vector"] = center_json(Fp);
    }
    for (const auto& v : gens) {
        kernel.push_back(center_json(v));
        pretty.push_back(v.pretty());
    }
    j["kernel"] = kernel;
    j["kernel_pretty"] = pretty;
    if (branch == CBranch::Positive) {
        const auto flows = kernel_from_flows(cfg.n);
        json fp = json::array();
        for (const auto& v : flows) fp.push_back(v.pretty());
        j["kernel_from_flows"] = fp;
        j["kernel_matches_flows"] = same_lattice(gens, flows);
    }
    CommandResult res;
    res.body = dump(j);
    return res;
}

// ---------------------------------------------------------------- curvature

CommandResult cmd_curvature(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const ModelParams params = params_of(cfg);
    const double step = cfg.step.value_or(kCurvatureStep);
    PointSampler sampler(cfg.seed);
    const auto pts = sampler.points(cfg.n, cfg.points);

    std::vector<EinsteinResidual> rs;
    for (const auto& p : pts) rs.push_back(einstein_residual(p, params, step));
    const double lam0 = rs.front().lambda;
    bool pass = true;
    std::ostringstream os;
    json arr = json::array();
    if (cfg.format == "csv") os << "point,lambda,residual,g_norm,pass\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto& r = rs[i];
        const bool ok = r.residual <= kEinsteinRelTol * r.g_norm && r.lambda < 0.0 &&
                        std::abs(r.lambda - lam0) <= kLambdaAgreeTol * std::abs(lam0);
        pass = pass && ok;
        if (cfg.format == "csv")
            os << i << ',' << format_double(r.lambda) << ',' << format_double(r.residual) << ','
               << format_double(r.g_norm) << ',' << (ok ? "true" : "false") << '\n';
        else
            arr.push_back({{"lambda", r.lambda}, {"residual", r.residual}, {"g_norm", r.g_norm}, {"pass", ok}});
    }
    if (cfg.format == "json")
        os << dump({{"command", "curvature"},
                    {"n", cfg.n},
                    {"c", params.c},
                    {"seed", cfg.seed},
                    {"step", step},
                    {"tolerance", kEinsteinRelTol},
                    {"lambda_agreement", kLambdaAgreeTol},
                    {"points", arr},
                    {"pass", pass}});
    CommandResult res;
    res.status = pass ? 0 : 1;
    res.body = os.str();
    return res;
}

// ---------------------------------------------------------------- lattice

CommandResult cmd_lattice(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const QuatParams qp{cfg.a, cfg.b};
    CommandResult res;
    try {
        if (!is_nonresidue(cfg.a, cfg.b))
            res.warnings.push_back("is_nonresidue=false: a=" + std::to_string(cfg.a) + " is a square mod b=" +
                                   std::to_string(cfg.b) + " (division-algebra hypothesis unmet)");
    } catch (const std::invalid_argument& e) {
        res.warnings.push_back(std::string("residue test skipped: ") + e.what());
    }
    std::ostringstream os;
    json rows = json::array();
    if (cfg.format == "csv") os << "q0,q1,q2,q3,norm,su11_ok,preserves_gamma2\n";
    for (const auto& x : enumerate_norm_one(qp, cfg.bound)) {
        const bool su = su11_check(x);
        const bool pg = preserves_gamma2(x);
        if (!su || !pg) res.status = 1;
        if (cfg.format == "csv")
            os << x.q[0] << ',' << x.q[1] << ',' << x.q[2] << ',' << x.q[3] << ',' << reduced_norm(x) << ','
               << (su ? "true" : "false") << ',' << (pg ? "true" : "false") << '\n';
        else
            rows.push_back({{"q", x.q}, {"norm", reduced_norm(x)}, {"su11_ok", su}, {"preserves_gamma2", pg}});
    }
    if (cfg.format == "json")
        os << dump({{"command", "lattice"}, {"a", cfg.a}, {"b", cfg.b}, {"bound", cfg.bound}, {"elements", rows},
                    {"pass", res.status == 0}});
    res.body = os.str();
    return res;
}

// ---------------------------------------------------------------- volume-table

CommandResult cmd_volume_table(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const ModelParams params = params_of(cfg);
    const double k = far_constant(params, cfg.vd);
    CommandResult res;
    std::ostringstream os;
    json rows = json::array();
    if (cfg.format == "csv") os << "rho,density,closed_tail,quadrature_tail,ratio_to_asymptote\n";
    for (double rho : cfg.rho_grid) {
        const double f = density(rho, params);
        const double closed = tail_closed(rho, params, cfg.vd);
        const double quad = tail_quadrature(rho, params, cfg.vd);
        const double ratio = std::pow(rho, cfg.n + 1) * closed / k;
        if (std::abs(quad - closed) > kVolumeRelTol * std::abs(closed)) res.status = 1;
        if (cfg.format == "csv")
            os << format_double(rho) << ',' << format_double(f) << ',' << format_double(closed) << ','
               << format_double(quad) << ',' << format_double(ratio) << '\n';
        else
            rows.push_back({{"rho", rho},
                            {"density", f},
                            {"closed_tail", closed},
                            {"quadrature_tail", quad},
                            {"ratio_to_asymptote", ratio}});
    }
    if (cfg.format == "json")
        os << dump({{"command", "volume-table"}, {"n", cfg.n}, {"c", params.c}, {"vd", cfg.vd},
                    {"tolerance", kVolumeRelTol}, {"rows", rows}, {"pass", res.status == 0}});
    res.body = os.str();
    return res;
}

CommandResult run(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.command == "verify-killing") return cmd_verify_killing(cfg);
    if (cfg.command == "structure") return cmd_structure(cfg);
    if (cfg.command == "center") return cmd_center(cfg);
    if (cfg.command == "curvature") return cmd_curvature(cfg);
    if (cfg.command == "lattice") return cmd_lattice(cfg);
    return cmd_volume_table(cfg);
}

}  // namespace cmapqk::cli
