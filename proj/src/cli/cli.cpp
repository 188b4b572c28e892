#include "hmsphere/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <numbers>
#include <sstream>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/limits.hpp"
#include "hmsphere/period.hpp"
#include "hmsphere/profile.hpp"
#include "hmsphere/verify_suite.hpp"

#ifndef HMSPHERE_VERSION
#define HMSPHERE_VERSION "0.0.0"
#endif

namespace hmsphere::cli {
namespace {

using json = nlohmann::ordered_json;
using std::numbers::pi;

class Emitter {
public:
    Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

    std::string number(double x) const {
        std::ostringstream os;
        os << std::setprecision(config_.precision) << x;
        return os.str();
    }

    void write(const std::string& text) const {
        if (config_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(config_.out_path, std::ios::binary);
        if (!file) {
            throw DomainError("cannot open output file '" + config_.out_path + "'");
        }
        file << text;
    }

private:
    const RunConfig& config_;
    std::ostream& out_;
};

json echo_inputs(const RunConfig& c, double tol) {
    json in;
    in["command"] = command_name(c.command);
    in["n"] = c.n;
    in["m"] = c.m;
    switch (c.command) {
        case Command::bracket:
            break;
        case Command::verify:
            in["hm"] = c.hm;
            in["seed"] = c.seed;
            in["identity_samples"] = c.identity_samples;
            break;
        default:
            in["hm"] = c.hm;
            break;
    }
    if (c.k) in["k"] = *c.k;
    if (c.c) in["c"] = *c.c;
    if (c.command == Command::period || c.command == Command::solve ||
        c.command == Command::profile) {
        in["tol"] = tol;
    }
    if (c.command == Command::profile) {
        in["samples"] = c.samples;
        in["embed"] = c.embed;
        in["circle_samples"] = c.circle_samples;
    }
    in["precision"] = c.precision;
    return in;
}

json envelope(const RunConfig& c, double tol, json result, json err_estimate, json nodes) {
    json doc;
    doc["inputs"] = echo_inputs(c, tol);
    doc["result"] = std::move(result);
    doc["err_estimate"] = std::move(err_estimate);
    doc["nodes"] = std::move(nodes);
    doc["version"] = version();
    return doc;
}

// Flat record: JSON envelope or a one-row CSV with the result keys as header.
void emit_record(const RunConfig& c, const Emitter& emit, double tol, const json& result,
                 const json& err_estimate, const json& nodes) {
    if (c.format.value_or(Format::json) == Format::json) {
        emit.write(envelope(c, tol, result, err_estimate, nodes).dump(2) + "\n");
        return;
    }
    std::string header;
    std::string row;
    auto add = [&](const std::string& key, const json& value) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += key;
        if (value.is_number_float()) {
            row += emit.number(value.get<double>());
        } else if (value.is_null()) {
        } else {
            row += value.dump();
        }
    };
    for (const auto& [key, value] : result.items()) add(key, value);
    add("err_estimate", err_estimate);
    add("nodes", nodes);
    emit.write(header + "\n" + row + "\n");
}

void require_k(const RunConfig& c) {
    if (!c.k) throw DomainError("--k is required for this command");
}

int cmd_critical(const RunConfig& c, const Emitter& emit) {
    const Params p = validate({c.n, c.m, c.hm});
    const CriticalData crit = critical_data(p);
    json r;
    r["f0"] = crit.f0;
    r["v0"] = crit.v0;
    r["c0"] = crit.c0;
    r["a"] = crit.a;
    emit_record(c, emit, 0.0, r, nullptr, nullptr);
    return kExitOk;
}

int cmd_limits(const RunConfig& c, const Emitter& emit) {
    const Params p = validate({c.n, c.m, c.hm});
    const CriticalData crit = critical_data(p);
    json r;
    r["a_val"] = limit_at_infinity(p);
    r["b_val"] = limit_at_c0(p, crit);
    r["b_unreduced"] = limit_at_c0_unreduced(p, crit);
    r["f0"] = crit.f0;
    r["c0"] = crit.c0;
    emit_record(c, emit, 0.0, r, nullptr, nullptr);
    return kExitOk;
}

int cmd_bracket(const RunConfig& c, const Emitter& emit) {
    require_k(c);
    const Bracket b = bracket_endpoints(c.n, c.m, *c.k);
    json r;
    r["k"] = b.k;
    r["h_low"] = b.h_low;
    r["h_high"] = b.h_high;
    r["empty"] = b.empty();
    emit_record(c, emit, 0.0, r, nullptr, nullptr);
    return kExitOk;
}

int cmd_period(const RunConfig& c, const Emitter& emit) {
    if (!c.c) throw DomainError("--c is required for period");
    const double tol = c.tol.value_or(kDefaultQuadratureTol);
    const Params p = validate({c.n, c.m, c.hm});
    const PeriodKernel kernel(p, *c.c);
    const PeriodResult res = period(kernel, tol);
    const PeriodResult half = half_period(kernel, tol);
    const Limits lim = limits(p);
    json r;
    r["value"] = res.value;
    r["half_period"] = half.value;
    r["t1"] = kernel.roots().t1;
    r["t2"] = kernel.roots().t2;
    r["c0"] = kernel.critical().c0;
    r["a_val"] = lim.a_val;
    r["b_val"] = lim.b_val;
    r["tolerance_applied"] = res.tolerance;
    emit_record(c, emit, tol, r, res.err_estimate, res.nodes);
    return kExitOk;
}

int cmd_solve(const RunConfig& c, const Emitter& emit) {
    require_k(c);
    const double tol = c.tol.value_or(kDefaultSolveTol);
    const SolveResult s = solve_period_equation(validate({c.n, c.m, c.hm}), *c.k, tol);
    json r;
    r["c_star"] = s.c_star;
    r["p_achieved"] = s.p_achieved;
    r["target"] = 2.0 * pi / s.k;
    r["residual"] = std::abs(s.p_achieved - 2.0 * pi / s.k);
    r["iterations"] = s.iterations;
    r["k"] = s.k;
    emit_record(c, emit, tol, r, s.err_estimate, s.nodes);
    return kExitOk;
}

int cmd_profile(const RunConfig& c, const Emitter& emit, std::ostream& err) {
    require_k(c);
    const double tol = c.tol.value_or(kDefaultSolveTol);
    const Params p = validate({c.n, c.m, c.hm});
    json err_estimate = nullptr;
    json nodes = nullptr;
    double cval;
    if (c.c) {
        cval = *c.c;
    } else {
        const SolveResult s = solve_period_equation(p, *c.k, tol);
        cval = s.c_star;
        err_estimate = s.err_estimate;
        nodes = s.nodes;
    }
    const Profile profile = generate_profile(p, cval, *c.k, c.samples);
    if (profile.closure_warning) {
        err << "warning: profile does not close, |k P - 2 pi| = " << profile.closure_error << "\n";
    }
    std::optional<PointCloud> cloud;
    if (c.embed) cloud = embed_points(profile, c.circle_samples);

    if (c.format.value_or(Format::csv) == Format::csv) {
        std::string text = "s,g,r,lambda,theta";
        if (cloud) {
            for (int i = 1; i <= cloud->dim(); ++i) text += ",x" + std::to_string(i);
        }
        text += '\n';
        for (std::size_t i = 0; i < profile.samples.size(); ++i) {
            const ProfileSample& x = profile.samples[i];
            const std::string base = emit.number(x.s) + ',' + emit.number(x.g) + ',' +
                                     emit.number(x.r) + ',' + emit.number(x.lambda) + ',' +
                                     emit.number(x.theta);
            if (!cloud) {
                text += base + '\n';
                continue;
            }
            for (int j = 0; j < cloud->circle_samples(); ++j) {
                text += base;
                for (double v : cloud->point(i, j)) text += ',' + emit.number(v);
                text += '\n';
            }
        }
        emit.write(text);
        return kExitOk;
    }

    json r;
    r["c"] = profile.c;
    r["k"] = profile.k;
    r["t_half"] = profile.t_half;
    r["period_p"] = profile.period_p;
    r["closure_error"] = profile.closure_error;
    r["closure_warning"] = profile.closure_warning;
    json samples;
    for (const char* key : {"s", "g", "r", "lambda", "theta"}) samples[key] = json::array();
    for (const ProfileSample& x : profile.samples) {
        samples["s"].push_back(x.s);
        samples["g"].push_back(x.g);
        samples["r"].push_back(x.r);
        samples["lambda"].push_back(x.lambda);
        samples["theta"].push_back(x.theta);
    }
    r["samples"] = std::move(samples);
    if (cloud) {
        json points = json::array();
        for (std::size_t i = 0; i < cloud->size(); ++i) {
            const auto pt = cloud->point(i);
            points.push_back(std::vector<double>(pt.begin(), pt.end()));
        }
        r["points"] = std::move(points);
    }
    emit.write(envelope(c, tol, std::move(r), err_estimate, nodes).dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const RunConfig& c, const Emitter& emit, std::ostream& err) {
    SuiteOptions opt;
    opt.seed = c.seed;
    opt.h_m = c.hm;
    opt.identity_samples = c.identity_samples;
    const SuiteReport report = run_verification_suite(c.n, c.m, opt);

    if (c.format && *c.format == Format::json) {
        json checks = json::array();
        for (const SuiteCheck& s : report.checks) {
            json j;
            j["name"] = s.name;
            j["value"] = s.value;
            j["threshold"] = s.threshold;
            j["passed"] = s.passed;
            j["detail"] = s.detail;
            checks.push_back(std::move(j));
        }
        json r;
        r["all_passed"] = report.all_passed();
        r["checks"] = std::move(checks);
        emit.write(envelope(c, 0.0, std::move(r), nullptr, nullptr).dump(2) + "\n");
    } else if (c.format && *c.format == Format::csv) {
        std::string text = "check,value,threshold,status\n";
        for (const SuiteCheck& s : report.checks) {
            text += s.name + ',' + emit.number(s.value) + ',' + emit.number(s.threshold) + ',' +
                    (s.passed ? "pass" : "FAIL") + '\n';
        }
        emit.write(text);
    } else {
        std::ostringstream os;
        os << "verify n=" << report.n << " m=" << report.m << " seed=" << report.seed << "\n";
        os << std::left << std::setw(26) << "check" << std::setw(24) << "value" << std::setw(12)
           << "threshold" << "status\n";
        for (const SuiteCheck& s : report.checks) {
            os << std::left << std::setw(26) << s.name << std::setw(24) << emit.number(s.value)
               << std::setw(12) << emit.number(s.threshold) << (s.passed ? "pass" : "FAIL");
            if (!s.detail.empty()) os << "  (" << s.detail << ")";
            os << "\n";
        }
        os << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
        emit.write(os.str());
    }
    for (const SuiteCheck& s : report.checks) {
        if (!s.passed) err << "FAILED: " << s.name << " (" << s.detail << ")\n";
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

const char* version() { return HMSPHERE_VERSION; }

const char* command_name(Command command) {
    switch (command) {
        case Command::critical: return "critical";
        case Command::limits: return "limits";
        case Command::bracket: return "bracket";
        case Command::period: return "period";
        case Command::solve: return "solve";
        case Command::profile: return "profile";
        case Command::verify: return "verify";
    }
    return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const Emitter emit(config, out);
    try {
        switch (config.command) {
            case Command::critical: return cmd_critical(config, emit);
            case Command::limits: return cmd_limits(config, emit);
            case Command::bracket: return cmd_bracket(config, emit);
            case Command::period: return cmd_period(config, emit);
            case Command::solve: return cmd_solve(config, emit);
            case Command::profile: return cmd_profile(config, emit, err);
            case Command::verify: return cmd_verify(config, emit, err);
        }
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const BracketError& e) {
        err << "bracket error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitCheckFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (const char* env = std::getenv("HM_PERIOD_PRECISION")) {
        try {
            config.precision = std::stoi(env);
        } catch (const std::exception&) {
            err << "HM_PERIOD_PRECISION must be an integer (got '" << env << "')\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Rotational hypersurfaces of constant m-th mean curvature in S^(n+1)", "hmsphere"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    double c_value = 0.0;
    double tol_value = 0.0;
    int k_value = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format: csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", config.out_path, "Write output to this file instead of stdout");
        sub->add_option("--precision", config.precision,
                        "Significant digits in CSV/table output (default 15, env HM_PERIOD_PRECISION)")
            ->check(CLI::Range(1, 17));
    };
    auto dims = [&](CLI::App* sub) {
        sub->add_option("--n", config.n, "Hypersurface dimension, n >= 2")->required();
        sub->add_option("--m", config.m, "Curvature order, 1 <= m <= n-1")->required();
    };
    auto hm = [&](CLI::App* sub) {
        sub->add_option("--hm", config.hm, "Constant m-th mean curvature H_m > 0")->required();
    };
    auto k = [&](CLI::App* sub) {
        return sub->add_option("--k", k_value, "Number of oscillations k; k >= 2 unless profile is given --c")->required();
    };

    auto* critical = app.add_subcommand("critical", "Critical point F0, v0, c0, a of q");
    dims(critical);
    hm(critical);
    common(critical);

    auto* lim = app.add_subcommand("limits", "Limits A (C -> inf) and B (C -> c0+) of the period");
    dims(lim);
    hm(lim);
    common(lim);

    auto* bracket = app.add_subcommand("bracket", "Interval (h_low, h_high) of H_m for period 2pi/k");
    dims(bracket);
    k(bracket);
    common(bracket);

    auto* per = app.add_subcommand("period", "Period P(H_m, n, C) and half period T/2");
    dims(per);
    hm(per);
    per->add_option("--c", c_value, "Constant C > c0")->required();
    per->add_option("--tol", tol_value, "Quadrature refinement tolerance (default 1e-12)");
    common(per);

    auto* solve = app.add_subcommand("solve", "Solve P(H_m, n, C) = 2pi/k for C");
    dims(solve);
    hm(solve);
    k(solve);
    solve->add_option("--tol", tol_value, "Tolerance on |P - 2pi/k| (default 1e-10)");
    common(solve);

    auto* prof = app.add_subcommand("profile", "Closed profile curve, optionally embedded in R^(n+2)");
    dims(prof);
    hm(prof);
    k(prof);
    prof->add_option("--c", c_value, "Use this C instead of solving for it");
    prof->add_option("--tol", tol_value, "Solver tolerance when C is solved for (default 1e-10)");
    prof->add_option("--samples", config.samples, "Samples per half oscillation (default 256)")
        ->check(CLI::Range(16, 1 << 20));
    prof->add_flag("--embed", config.embed, "Append embedded coordinates x1..x(n+2)");
    prof->add_option("--circle-samples", config.circle_samples,
                     "Points per rotation circle with --embed (default 16)")
        ->check(CLI::Range(3, 1 << 16));
    common(prof);

    auto* ver = app.add_subcommand("verify", "Run the identity and numerical property checks");
    dims(ver);
    config.hm = 1.0;
    ver->add_option("--hm", config.hm, "Base H_m for the identity checks (default 1)");
    ver->add_option("--seed", config.seed, "Seed for randomized checks (default 0)");
    ver->add_option("--samples", config.identity_samples,
                    "Random instances for the identity checks (default 50)")
        ->check(CLI::Range(0, 100000));
    common(ver);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const std::map<CLI::App*, Command> commands{
        {critical, Command::critical}, {lim, Command::limits},    {bracket, Command::bracket},
        {per, Command::period},        {solve, Command::solve},   {prof, Command::profile},
        {ver, Command::verify}};
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) config.command = command;
    }
    auto* active = app.get_subcommands().front();
    auto given = [&](const char* name) {
        const CLI::Option* opt = active->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--c")) config.c = c_value;
    if (given("--tol")) config.tol = tol_value;
    if (given("--k")) config.k = k_value;
    return run(config, out, err);
}

}  // namespace hmsphere::cli
