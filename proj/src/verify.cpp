#include "lws/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lws/errors.hpp"

namespace lws {

const char* to_string(QuadricKind k) {
    switch (k) {
        case QuadricKind::PseudoHyperbolic: return "pseudohyperbolic";
        case QuadricKind::PseudoSphere: return "pseudosphere";
        case QuadricKind::None: return "none";
    }
    return "unknown";
}

ResidualReport weingarten_residual(const SurfacePatch& patch, double a,
                                   double b, double c, const GridSpec& grid) {
    if (grid.nu < 1 || grid.nv < 1) throw InvalidDomain("empty residual grid");
    ResidualReport rep;
    rep.grid = grid;

    double sum = 0.0;
    long count = 0, n_pos = 0, n_neg = 0;
    double wlo = 0.0, whi = 0.0;
    bool first = true;

    for (int i = 0; i < grid.nu; ++i) {
        const double u = i == grid.nu - 1
                             ? patch.u1
                             : patch.u0 + (patch.u1 - patch.u0) * i / (grid.nu - 1);
        for (int k = 0; k < grid.nv; ++k) {
            const double v =
                k == grid.nv - 1
                    ? patch.v1
                    : patch.v0 + (patch.v1 - patch.v0) * k / (grid.nv - 1);
            Jet2 jet = patch.jet(u, v);
            CurvatureData cd;
            try {
                cd = curvature(jet);
            } catch (const DegeneratePatch& e) {
                throw DegeneratePatch(std::string(e.what()) + " at (u,v)=(" +
                                      std::to_string(u) + "," + std::to_string(v) +
                                      ")");
            }
            const double E = lorentz_dot(jet.Xu, jet.Xu);
            const double F = lorentz_dot(jet.Xu, jet.Xv);
            const double G = lorentz_dot(jet.Xv, jet.Xv);
            const double W = E * G - F * F;
            if (first) {
                wlo = whi = W;
                first = false;
            } else {
                wlo = std::fmin(wlo, W);
                whi = std::fmax(whi, W);
            }
            (cd.epsilon == 1 ? n_pos : n_neg) += 1;

            const double r = std::fabs(a * cd.H + b * cd.K - c);
            sum += r;
            ++count;
            if (r > rep.max_residual) rep.max_residual = r;
            rep.worst.push_back({u, v, r});
            std::sort(rep.worst.begin(), rep.worst.end(),
                      [](const ResidualOffender& x, const ResidualOffender& y) {
                          return x.residual > y.residual;
                      });
            if (rep.worst.size() > 10) rep.worst.resize(10);
        }
    }
    rep.mean_residual = sum / count;
    rep.w_min = wlo;
    rep.w_max = whi;
    rep.causal_class = n_pos >= n_neg ? CausalCharacter::Spacelike
                                      : CausalCharacter::Timelike;
    return rep;
}

std::pair<ResidualReport, int> oriented_weingarten_residual(
    const SurfacePatch& patch, double a, double b, double c,
    const GridSpec& grid) {
    ResidualReport plus = weingarten_residual(patch, a, b, c, grid);
    if (a == 0.0) return {plus, 1};
    ResidualReport minus = weingarten_residual(patch, -a, b, c, grid);
    if (minus.max_residual < plus.max_residual) return {minus, -1};
    return {plus, 1};
}

namespace {

// Gaussian elimination with partial pivoting on a 4x4 system.
bool solve4(std::array<std::array<double, 5>, 4>& m, std::array<double, 4>& x) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (std::fabs(m[piv][col]) < 1e-12) return false;
        std::swap(m[piv], m[col]);
        for (int r = col + 1; r < 4; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int cc = col; cc < 5; ++cc) m[r][cc] -= f * m[col][cc];
        }
    }
    for (int r = 3; r >= 0; --r) {
        double s = m[r][4];
        for (int cc = r + 1; cc < 4; ++cc) s -= m[r][cc] * x[cc];
        x[r] = s / m[r][r];
    }
    return true;
}

} // namespace

QuadricFit identify_quadric(const std::vector<MVec3>& points, double tol) {
    if (points.size() < 10)
        throw InsufficientPoints("quadric fit needs at least 10 points");

    double scale2 = 1.0;
    for (const MVec3& p : points) scale2 = std::fmax(scale2, euclid_norm2(p));
    if (tol <= 0.0) tol = 1e-6 * scale2;

    // <p,p> = 2 x*x0 + 2 y*y0 - 2 z*z0 + t,  t = s - <p0,p0>.
    // Normal equations for unknowns (x0, y0, z0, t).
    std::array<std::array<double, 5>, 4> m{};
    for (const MVec3& p : points) {
        const std::array<double, 4> row{2.0 * p.x, 2.0 * p.y, -2.0 * p.z, 1.0};
        const double rhs = lorentz_dot(p, p);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) m[i][j] += row[i] * row[j];
            m[i][4] += row[i] * rhs;
        }
    }

    QuadricFit fit;
    std::array<double, 4> sol{};
    if (!solve4(m, sol)) return fit; // rank-deficient: no quadric
    const MVec3 p0{sol[0], sol[1], sol[2]};
    const double s = sol[3] + lorentz_dot(p0, p0);

    double ss = 0.0;
    for (const MVec3& p : points) {
        const MVec3 d = p - p0;
        const double r = lorentz_dot(d, d) - s;
        ss += r * r;
    }
    fit.rms_deviation = std::sqrt(ss / points.size());
    if (fit.rms_deviation > tol) return fit;
    if (std::fabs(s) <= 1e-9 * scale2) return fit; // radius degenerates

    fit.center = p0;
    fit.kind = s < 0.0 ? QuadricKind::PseudoHyperbolic : QuadricKind::PseudoSphere;
    fit.radius = std::sqrt(std::fabs(s));
    return fit;
}

double compare_profiles(const std::function<double(double)>& z1,
                        const std::function<double(double)>& z2, double lo,
                        double hi, int n) {
    if (!(lo < hi) || n < 2) throw InvalidDomain("empty comparison interval");
    std::vector<double> d(n);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = lo + (hi - lo) * i / (n - 1);
        d[i] = z1(u) - z2(u);
        mean += d[i];
    }
    mean /= n;
    double worst = 0.0;
    for (double di : d) worst = std::fmax(worst, std::fabs(di - mean));
    return worst;
}

double compare_profiles(const Profile& p1, const Profile& p2, double lo,
                        double hi, int n) {
    return compare_profiles([&](double u) { return p1.eval(u).z; },
                            [&](double u) { return p2.eval(u).z; }, lo, hi, n);
}

} // namespace lws
