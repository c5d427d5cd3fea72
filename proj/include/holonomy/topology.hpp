#ifndef HOLONOMY_TOPOLOGY_HPP
#define HOLONOMY_TOPOLOGY_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "holonomy/gauge_field.hpp"
#include "holonomy/geometry.hpp"
#include "holonomy/quadrature.hpp"

namespace holonomy {

/// A Chern-type number with its quadrature metadata.
struct TopologyReport {
    std::string system;
    std::string level;
    std::string quantity;
    double value = 0.0;
    long nearest = 0;
    double deviation = 0.0;
    int grid = 0;
    double seconds = 0.0;

    bool integer_ok(double tol = 1e-3) const { return deviation < tol; }
};

namespace detail {

inline TopologyReport make_report(std::string system, std::string level,
                                  std::string quantity, double value, int grid,
                                  double seconds)
{
    TopologyReport r;
    r.system = std::move(system);
    r.level = std::move(level);
    r.quantity = std::move(quantity);
    r.value = value;
    r.nearest = std::lround(value);
    r.deviation = std::abs(value - static_cast<double>(r.nearest));
    r.grid = grid;
    r.seconds = seconds;
    return r;
}

class StopWatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// (i/2pi) integral of F_theta_phi over the whole sphere.
inline double sphere_flux(const std::function<Matrix(const ParamPoint&)>& f_tp,
                          int n)
{
    const Grid1D gt = Grid1D::gauss_legendre(n, 0.0, kPi);
    const Grid1D gp = Grid1D::periodic_trapezoid(n, 0.0, 2.0 * kPi);
    const double im_part = integrate_2d(gt, gp, [&](double t, double p) {
        return f_tp(ParamPoint::s2(t, p)).trace().imag();
    });
    // i/(2 pi) * (i * im_part) has real part -im_part / (2 pi)
    return -im_part / (2.0 * kPi);
}

}  // namespace detail

/// First Chern number of the SU(2) level m over S^2 (the monopole charge).
inline TopologyReport su2_monopole_charge(double j, double m, int grid = 256,
                                          FieldSource source = FieldSource::ClosedForm)
{
    if (std::abs(m) > j + 1e-12)
        throw std::invalid_argument("su2_monopole_charge: |m| must not exceed j");
    detail::StopWatch timer;
    const SystemSpec spec = SystemSpec::su2_linear(j);
    const Level level = spec.level("m=" + detail::half_integer_string(m));
    auto fb = curvature_builder(spec, level, source);
    const double c1 = detail::sphere_flux(
        [&](const ParamPoint& p) { return fb(p).pair(0, 1); }, grid);
    return detail::make_report(spec.name(), level.label, "monopole-charge", c1,
                               grid, timer.seconds());
}

/// Total flux and per-component monopole charges of the degenerate
/// m = +-1/2 pair of the quadratic SU(2) system.
struct DegenerateFluxReport {
    TopologyReport total;
    std::vector<double> components;
};

inline DegenerateFluxReport su2_degenerate_flux(double j, int grid = 256,
                                                FieldSource source = FieldSource::ClosedForm)
{
    if (std::lround(2.0 * j) % 2 != 1)
        throw std::invalid_argument("su2_degenerate_flux: j must be half-odd-integral");
    detail::StopWatch timer;
    const SystemSpec spec = SystemSpec::su2_quadratic(j);
    const Level level = spec.level("pair=1/2");
    auto fb = curvature_builder(spec, level, source);

    DegenerateFluxReport out;
    for (int comp = 0; comp < 2; ++comp) {
        const double charge = detail::sphere_flux(
            [&](const ParamPoint& p) {
                Matrix f = fb(p).pair(0, 1);
                Matrix single(1, 1);
                single(0, 0) = f(comp, comp);
                return single;
            },
            grid);
        out.components.push_back(charge);
    }
    const double total = out.components[0] + out.components[1];
    out.total = detail::make_report(spec.name(), level.label, "degenerate-flux",
                                    total, grid, timer.seconds());
    return out;
}

/// c1 = (i / 2pi) * integral over the south sphere of Tr F, pulled back to
/// the chart theta = pi with measure dbeta ^ dalpha. The flag-space case uses
/// the same cycle with the redundant fiber angles held fixed.
inline TopologyReport chern1(const SystemSpec& spec, const Level& level,
                             int grid = 256,
                             FieldSource source = FieldSource::ClosedForm)
{
    detail::StopWatch timer;
    auto fb = curvature_builder(spec, level, source);

    const bool flag = spec.manifold() == Manifold::Flag;
    const double fiber_a = 0.9, fiber_b = 0.7;
    const Grid1D gb = Grid1D::gauss_legendre(grid, 0.0, kPi);
    const Grid1D ga = Grid1D::periodic_trapezoid(grid, 0.0, 2.0 * kPi);
    const double im_part = integrate_2d(gb, ga, [&](double b, double a) {
        const ParamPoint p = flag
                                 ? ParamPoint::flag(b, a, 0.0, kPi, fiber_a, fiber_b)
                                 : ParamPoint::cp2(b, a, 0.0, kPi);
        return fb(p).pair(0, 1).trace().imag();
    });
    const double c1 = -im_part / (2.0 * kPi);
    return detail::make_report(spec.name(), level.label, "c1", c1, grid,
                               timer.seconds());
}

/// Generic c2 quadrature: (1 / 8 pi^2) * integral over CP2 of
/// [Tr(F ^ F) - Tr F ^ Tr F] for any curvature builder on CP2.
inline TopologyReport chern2_of(
    const std::function<CurvatureSample(const ParamPoint&)>& curvature,
    std::string system, std::string level, int grid = 32)
{
    detail::StopWatch timer;
    const double raw = cp2_4form_integral(
        [&](const ParamPoint& p) {
            const CurvatureSample f = curvature(p);
            const TwoForm<Matrix> w = f.to_two_form();
            const Complex tr_ff = wedge_4form(w, w).trace();
            ScalarTwoForm tr;
            for (int m = 0; m < 4; ++m)
                for (int n = m + 1; n < 4; ++n) tr.set(m, n, w(m, n).trace());
            const Complex trf_trf = wedge_4form(tr, tr);
            return (tr_ff - trf_trf).real();
        },
        grid);
    const double c2 = raw / (8.0 * kPi * kPi);
    return detail::make_report(std::move(system), std::move(level), "c2", c2,
                               grid, timer.seconds());
}

inline TopologyReport chern2(const SystemSpec& spec, const Level& level,
                             int grid = 32,
                             FieldSource source = FieldSource::ClosedForm)
{
    if (spec.manifold() != Manifold::CP2)
        throw std::invalid_argument("chern2: defined over the CP2 systems");
    return chern2_of(curvature_builder(spec, level, source), spec.name(),
                     level.label, grid);
}

/// Instanton-style action -(1 / 8 pi^2) * integral of Tr[F ^ *F].
inline double instanton_action(
    const std::function<CurvatureSample(const ParamPoint&)>& curvature,
    int grid = 32)
{
    return cp2_4form_integral(
               [&](const ParamPoint& p) {
                   const TwoForm<Matrix> w = curvature(p).to_two_form();
                   const TwoForm<Matrix> sw = hodge_star(w, p);
                   return -wedge_4form(w, sw).trace().real();
               },
               grid) /
           (8.0 * kPi * kPi);
}

inline double instanton_action(const SystemSpec& spec, const Level& level,
                               int grid = 32,
                               FieldSource source = FieldSource::ClosedForm)
{
    return instanton_action(curvature_builder(spec, level, source), grid);
}

}  // namespace holonomy

#endif
