// lwsurf - rotational linear Weingarten surfaces in Minkowski 3-space.
//
// Subcommands:
//   solve     integrate a generating profile and write it as CSV
//   verify    residual report |a*H + b*K - c| for the solved surface
//   mesh      export the revolved surface as OBJ or CSV
//   classify  causal character of the revolved surface
//
// Exit codes: 0 success, 1 usage error, 2 mathematical/domain failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lws/errors.hpp"
#include "lws/format.hpp"
#include "lws/mesh.hpp"
#include "lws/rotational.hpp"
#include "lws/surface.hpp"
#include "lws/verify.hpp"
#include "lws/weingarten.hpp"

namespace {

struct CommonFlags {
    std::string axis;
    double a = 0.0, b = 0.0, c = 0.0;
    int epsilon = 1;
    double lambda = 0.0, mu = 0.0;
    std::string branch = "plus";
    std::string u_range;
    std::string v_range;
    int samples = 200;
    int v_samples = 0; // 0: per-axis default
    double tol = 1e-10;
    std::string format = "csv";
    std::string output;
};

void add_problem_flags(CLI::App* cmd, CommonFlags& f, bool need_axis = true) {
    auto* axis = cmd->add_option("--axis", f.axis, "rotation axis kind")
                     ->check(CLI::IsMember(
                         {"timelike", "spacelike-i", "spacelike-ii", "lightlike"}));
    if (need_axis) axis->required();
    cmd->add_option("--a", f.a, "coefficient a of aH+bK=c");
    cmd->add_option("--b", f.b, "coefficient b of aH+bK=c");
    cmd->add_option("--c", f.c, "coefficient c of aH+bK=c");
    cmd->add_option("--epsilon", f.epsilon, "+1 spacelike, -1 timelike surface")
        ->check(CLI::IsMember({1, -1}));
    cmd->add_option("--lambda", f.lambda, "first-integral constant");
    cmd->add_option("--mu", f.mu, "translation constant / initial height");
    cmd->add_option("--branch", f.branch, "root branch of the phi-quadratic")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--u-range", f.u_range, "profile interval lo:hi")->required();
    cmd->add_option("--v-range", f.v_range, "rotation interval lo:hi");
    cmd->add_option("--samples", f.samples, "number of u samples")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--v-samples", f.v_samples, "number of v samples")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", f.tol, "integrator tolerance");
    cmd->add_option("--output", f.output, "output file path");
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos)
        throw CLI::ValidationError("--u-range/--v-range must look like lo:hi");
    try {
        const double lo = std::stod(s.substr(0, pos));
        const double hi = std::stod(s.substr(pos + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range endpoints must be numbers");
    }
}

lws::AxisKind parse_axis(const std::string& s) {
    if (s == "timelike") return lws::AxisKind::TimelikeAxis;
    if (s == "spacelike-i") return lws::AxisKind::SpacelikeAxisI;
    if (s == "spacelike-ii") return lws::AxisKind::SpacelikeAxisII;
    return lws::AxisKind::LightlikeAxis;
}

lws::WeingartenProblem make_problem(const CommonFlags& f) {
    lws::WeingartenProblem p;
    p.a = f.a;
    p.b = f.b;
    p.c = f.c;
    p.epsilon = f.epsilon;
    p.axis = parse_axis(f.axis);
    p.lambda = f.lambda;
    p.branch = f.branch == "plus" ? lws::Branch::Plus : lws::Branch::Minus;
    p.mu = f.mu;
    return p;
}

// Mesh export uses the fixed conventions: a closed turn for the timelike
// axis, [-1.5, 1.5] otherwise.
std::pair<double, double> mesh_v_range(const lws::WeingartenProblem& p) {
    if (p.axis == lws::AxisKind::TimelikeAxis) return {0.0, 2.0 * M_PI};
    return {-1.5, 1.5};
}

// verify/classify default to branch-consistent windows for the
// normal-orientation rule; see generator_orientation_sign.
std::pair<double, double> default_v_range(const lws::WeingartenProblem& p) {
    if (p.axis == lws::AxisKind::TimelikeAxis)
        return p.epsilon == 1 ? std::pair{0.0, 2.0 * M_PI} : std::pair{-1.2, 1.2};
    if (p.axis == lws::AxisKind::LightlikeAxis && p.epsilon == -1)
        return {0.1, 1.5};
    return {-1.5, 1.5};
}

int default_v_samples(const lws::WeingartenProblem& p) {
    return p.axis == lws::AxisKind::TimelikeAxis ? 64 : 48;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lws::Error("cannot open output file: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string solve_summary(const lws::GeneratingCurve& curve, int requested) {
    double max_dev = 0.0;
    for (const auto& s : curve.samples)
        max_dev = std::fmax(
            max_dev, std::fabs(curve.first_integral_at(s) - curve.problem.lambda));
    std::string out = "status=ok";
    out += " axis=" + std::string(lws::to_string(curve.problem.axis));
    out += " stop=" + std::string(lws::to_string(curve.stop));
    out += " samples=" + std::to_string(curve.samples.size());
    out += " requested=" + std::to_string(requested);
    out += " valid_lo=" + lws::format_double(curve.valid_lo);
    out += " valid_hi=" + lws::format_double(curve.valid_hi);
    out += " first_integral_max_dev=" + lws::format_double(max_dev);
    out += "\n";
    return out;
}

std::string curve_csv(const lws::GeneratingCurve& curve) {
    std::string out = "u,z,zprime,first_integral_value\n";
    for (const auto& s : curve.samples) {
        out += lws::format_double(s.u);
        out += ',';
        out += lws::format_double(s.z);
        out += ',';
        out += lws::format_double(s.zprime);
        out += ',';
        out += lws::format_double(curve.first_integral_at(s));
        out += '\n';
    }
    return out;
}

lws::GeneratingCurve run_solver(const CommonFlags& f) {
    const lws::WeingartenProblem p = make_problem(f);
    const auto [lo, hi] = parse_range(f.u_range);
    lws::IntegrationOptions opts;
    opts.abs_tol = f.tol;
    opts.rel_tol = f.tol;
    return lws::integrate_profile(p, lo, hi, f.samples, opts);
}

lws::SurfacePatch revolved_patch(const CommonFlags& f,
                                 const lws::GeneratingCurve& curve,
                                 bool for_mesh = false) {
    const lws::WeingartenProblem p = make_problem(f);
    auto [vlo, vhi] = for_mesh ? mesh_v_range(p) : default_v_range(p);
    if (!f.v_range.empty()) std::tie(vlo, vhi) = parse_range(f.v_range);
    return lws::revolve(p.axis, curve.profile(), vlo, vhi);
}

int cmd_solve(const CommonFlags& f) {
    const lws::GeneratingCurve curve = run_solver(f);
    const std::string csv = curve_csv(curve);
    if (!f.output.empty())
        write_text(f.output, csv);
    else
        std::fputs(csv.c_str(), stdout);
    std::fputs(solve_summary(curve, f.samples).c_str(), stdout);
    return 0;
}

int cmd_verify(const CommonFlags& f) {
    const lws::GeneratingCurve curve = run_solver(f);
    const lws::SurfacePatch patch = revolved_patch(f, curve);
    const lws::WeingartenProblem p = make_problem(f);
    const int nv = f.v_samples > 0 ? f.v_samples : default_v_samples(p);
    const lws::GridSpec grid{f.samples, nv};

    const auto [rep, orient] =
        lws::oriented_weingarten_residual(patch, p.a, p.b, p.c, grid);

    std::string out = "kind=verify";
    out += " axis=" + std::string(lws::to_string(p.axis));
    out += " a=" + lws::format_double(p.a);
    out += " b=" + lws::format_double(p.b);
    out += " c=" + lws::format_double(p.c);
    out += " epsilon=" + std::to_string(p.epsilon);
    out += " lambda=" + lws::format_double(p.lambda);
    out += " branch=" + std::string(lws::to_string(p.branch));
    out += " mu=" + lws::format_double(p.mu);
    out += " orientation=" + std::string(orient > 0 ? "+1" : "-1");
    out += " grid=" + std::to_string(grid.nu) + "x" + std::to_string(grid.nv);
    out += " max_residual=" + lws::format_double(rep.max_residual);
    out += " mean_residual=" + lws::format_double(rep.mean_residual);
    out += " causal=" + std::string(lws::to_string(rep.causal_class));
    out += " w_min=" + lws::format_double(rep.w_min);
    out += " w_max=" + lws::format_double(rep.w_max);
    out += " stop=" + std::string(lws::to_string(curve.stop));
    out += "\n";
    int rank = 1;
    for (const auto& o : rep.worst) {
        out += "offender=" + std::to_string(rank++);
        out += " u=" + lws::format_double(o.u);
        out += " v=" + lws::format_double(o.v);
        out += " residual=" + lws::format_double(o.residual);
        out += "\n";
    }
    if (!f.output.empty()) write_text(f.output, out);
    std::fputs(out.c_str(), stdout);
    return 0;
}

int cmd_mesh(const CommonFlags& f) {
    const lws::GeneratingCurve curve = run_solver(f);
    const lws::SurfacePatch patch = revolved_patch(f, curve, true);
    const lws::WeingartenProblem p = make_problem(f);
    const int nv = f.v_samples > 0 ? f.v_samples : default_v_samples(p);
    const lws::SurfaceMesh mesh =
        lws::build_mesh(patch, static_cast<int>(curve.samples.size()), nv);

    const bool obj = f.format == "obj";
    const std::string text = obj ? lws::mesh_to_obj(mesh) : lws::mesh_to_csv(mesh);
    const std::string path =
        !f.output.empty() ? f.output : (obj ? "mesh.obj" : "mesh.csv");
    write_text(path, text);
    std::string summary = "status=ok vertices=" + std::to_string(mesh.vertices.size());
    summary += " quads=" + std::to_string(mesh.quads.size());
    summary += " stop=" + std::string(lws::to_string(curve.stop));
    summary += " valid_lo=" + lws::format_double(curve.valid_lo);
    summary += " valid_hi=" + lws::format_double(curve.valid_hi);
    summary += " output=" + path + "\n";
    std::fputs(summary.c_str(), stdout);
    return 0;
}

int cmd_classify(const CommonFlags& f, const std::optional<double>& slope) {
    lws::SurfacePatch patch;
    const lws::WeingartenProblem p = make_problem(f);
    if (slope) {
        const auto [lo, hi] = parse_range(f.u_range);
        const double m = *slope;
        lws::Profile prof;
        prof.u_min = lo;
        prof.u_max = hi;
        prof.eval = [m](double u) { return lws::ProfileJet{m * u, m, 0.0}; };
        auto [vlo, vhi] = default_v_range(p);
        if (!f.v_range.empty()) std::tie(vlo, vhi) = parse_range(f.v_range);
        patch = lws::revolve(p.axis, prof, vlo, vhi);
    } else {
        const lws::GeneratingCurve curve = run_solver(f);
        patch = revolved_patch(f, curve);
    }
    const int nv = f.v_samples > 0 ? f.v_samples : default_v_samples(p);
    const lws::GridSpec grid{std::min(f.samples, 64), nv};
    const auto wr = lws::w_range(patch, grid);
    std::string out = "kind=classify";
    try {
        const lws::CausalCharacter cc = lws::classify_patch(patch, grid);
        out += " causal=" + std::string(lws::to_string(cc));
    } catch (const lws::MixedCausality&) {
        out += " causal=Mixed";
        out += " w_min=" + lws::format_double(wr[0]);
        out += " w_max=" + lws::format_double(wr[1]);
        out += "\n";
        std::fputs(out.c_str(), stdout);
        return 2;
    }
    out += " w_min=" + lws::format_double(wr[0]);
    out += " w_max=" + lws::format_double(wr[1]);
    out += "\n";
    if (!f.output.empty()) write_text(f.output, out);
    std::fputs(out.c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotational linear Weingarten surfaces in Minkowski 3-space"};
    app.require_subcommand(1);

    CommonFlags fs, fv, fm, fc;
    std::optional<double> slope;

    CLI::App* solve = app.add_subcommand("solve", "integrate a generating profile");
    add_problem_flags(solve, fs);
    CLI::App* verify = app.add_subcommand("verify", "Weingarten residual report");
    add_problem_flags(verify, fv);
    CLI::App* mesh = app.add_subcommand("mesh", "export the revolved surface");
    add_problem_flags(mesh, fm);
    mesh->add_option("--format", fm.format, "obj or csv")
        ->check(CLI::IsMember({"obj", "csv"}));
    CLI::App* classify = app.add_subcommand("classify", "causal character report");
    add_problem_flags(classify, fc);
    double slope_val = 0.0;
    CLI::Option* slope_opt = classify->add_option(
        "--slope", slope_val, "classify the graph z = slope*u instead of solving");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed()) return cmd_solve(fs);
        if (verify->parsed()) return cmd_verify(fv);
        if (mesh->parsed()) return cmd_mesh(fm);
        if (classify->parsed()) {
            if (slope_opt->count() > 0) slope = slope_val;
            return cmd_classify(fc, slope);
        }
    } catch (const lws::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
