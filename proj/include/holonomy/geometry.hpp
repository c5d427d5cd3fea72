#ifndef HOLONOMY_GEOMETRY_HPP
#define HOLONOMY_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "holonomy/matrix.hpp"
#include "holonomy/parametrization.hpp"
#include "holonomy/quadrature.hpp"

namespace holonomy {

/// Antisymmetric rank-2 array over the four CP2 coordinates
/// (x1..x4) = (beta, alpha, gamma, theta); stores the six independent
/// components, antisymmetry is exact by construction.
template <typename T>
struct TwoForm {
    // Pair order: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) in 1-based labels.
    std::array<T, 6> comp{};

    static int pair_index(int m, int n)  // 0-based coordinates, m < n
    {
        static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                            {-1, -1, 3, 4},
                                            {-1, -1, -1, 5},
                                            {-1, -1, -1, -1}};
        return table[m][n];
    }

    T operator()(int m, int n) const
    {
        if (m == n) return T{};
        if (m < n) return comp[static_cast<std::size_t>(pair_index(m, n))];
        return -comp[static_cast<std::size_t>(pair_index(n, m))];
    }

    void set(int m, int n, const T& v)
    {
        comp[static_cast<std::size_t>(pair_index(m, n))] = v;
    }
};

using ScalarTwoForm = TwoForm<Complex>;

/// Induced CP2 metric at a point, unit radius.
struct Metric4 {
    Eigen::Matrix4d g;
};

namespace detail {
inline void require_unit_cp2(const ParamPoint& p, const char* what)
{
    if (p.manifold != Manifold::CP2)
        throw std::invalid_argument(std::string(what) + ": point is not on CP2");
    if (std::abs(p.radius - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + ": metric data is for R = 1");
}

inline constexpr int levi_civita4(int a, int b, int c, int d)
{
    // Parity of (a b c d) as a permutation of (0 1 2 3); 0 on repeats.
    int perm[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (perm[i] == perm[j]) return 0;
            if (perm[i] > perm[j]) {
                const int t = perm[i];
                perm[i] = perm[j];
                perm[j] = t;
                sign = -sign;
            }
        }
    return sign;
}
}  // namespace detail

inline Metric4 metric_at(const ParamPoint& point)
{
    detail::require_unit_cp2(point, "metric_at");
    const double b = point.beta(), t = point.theta();
    const double st = std::sin(t), sb = std::sin(b), cb = std::cos(b);
    const double sh2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    Metric4 m;
    m.g.setZero();
    m.g(0, 0) = 0.75 * sh2;
    m.g(1, 1) = (3.0 / 16.0) * st * st * cb * cb + (3.0 / 8.0) * sb * sb * (1.0 - std::cos(t));
    m.g(1, 2) = m.g(2, 1) = (3.0 / 16.0) * cb * st * st;
    m.g(2, 2) = (3.0 / 16.0) * st * st;
    m.g(3, 3) = 0.75;
    return m;
}

/// det(g) in closed form; used on integration hot paths instead of the
/// numeric pullback.
inline double metric_det(const ParamPoint& point)
{
    const double b = point.beta(), t = point.theta();
    const double sh2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    const double st = std::sin(t), sb = std::sin(b);
    const double root = (9.0 / 32.0) * sh2 * st * sb;
    return root * root;
}

inline double metric_sqrt_det(const ParamPoint& point)
{
    const double b = point.beta(), t = point.theta();
    const double sh2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    return (9.0 / 32.0) * sh2 * std::sin(t) * std::sin(b);
}

/// Invariant Kahler two-form, unit radius.
inline TwoForm<double> kahler_form(const ParamPoint& point)
{
    detail::require_unit_cp2(point, "kahler_form");
    const double b = point.beta(), t = point.theta();
    const double sh2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    TwoForm<double> eta;
    eta.set(0, 1, 0.75 * std::sin(b) * sh2);
    eta.set(1, 3, (3.0 / 8.0) * std::cos(b) * std::sin(t));
    eta.set(2, 3, (3.0 / 8.0) * std::sin(t));
    return eta;
}

inline ScalarTwoForm to_scalar_form(const TwoForm<double>& w)
{
    ScalarTwoForm out;
    for (int k = 0; k < 6; ++k) out.comp[static_cast<std::size_t>(k)] = w.comp[static_cast<std::size_t>(k)];
    return out;
}

namespace detail {
template <typename T>
T zero_like(const T& proto)
{
    if constexpr (std::is_same_v<T, Matrix>)
        return Matrix::Zero(proto.rows(), proto.cols());
    else
        return T{};
    (void)proto;
}
}  // namespace detail

/// Hodge dual of a two-form in the metric g, orientation dx1^dx2^dx3^dx4:
/// (*w)_cd = (1/2) sqrt(det g) eps_cdab g^{am} g^{bn} w_mn.
/// Rejected at chart boundaries where g degenerates.
template <typename T>
TwoForm<T> hodge_star(const TwoForm<T>& w, const Metric4& metric)
{
    const double det = metric.g.determinant();
    if (!(det > 1e-300))
        throw std::domain_error("hodge_star: metric degenerate (chart boundary)");
    const Eigen::Matrix4d ginv = metric.g.inverse();
    const double sq = std::sqrt(det);

    // Raise both indices of w.
    std::array<std::array<T, 4>, 4> up;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            T acc = detail::zero_like(w(0, 1));
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    if (m == n) continue;
                    acc += (ginv(a, m) * ginv(b, n)) * w(m, n);
                }
            up[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
        }

    TwoForm<T> out;
    for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
            T acc = detail::zero_like(w(0, 1));
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    const int eps = detail::levi_civita4(c, d, a, b);
                    if (eps == 0) continue;
                    acc += (0.5 * sq * eps) *
                           up[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                }
            out.set(c, d, acc);
        }
    return out;
}

template <typename T>
TwoForm<T> hodge_star(const TwoForm<T>& w, const ParamPoint& point)
{
    const double edge = std::min(
        {point.theta(), kPi - point.theta(), point.beta(), kPi - point.beta()});
    if (edge < 1e-9)
        throw std::domain_error("hodge_star: point on a chart boundary");
    return hodge_star(w, metric_at(point));
}

/// Coefficient of dx1^dx2^dx3^dx4 in w1 ^ w2; for matrix-valued forms the
/// products keep their order so callers can trace afterwards.
template <typename T>
T wedge_4form(const TwoForm<T>& w1, const TwoForm<T>& w2)
{
    return w1(0, 1) * w2(2, 3) + w1(2, 3) * w2(0, 1) + w1(0, 3) * w2(1, 2) +
           w1(1, 2) * w2(0, 3) - w1(0, 2) * w2(1, 3) - w1(1, 3) * w2(0, 2);
}

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {
/// Tensor Gauss-Legendre grid over the full CP2 coordinate ranges.
template <typename F>
double cp2_integral(int n, F&& density)
{
    const Grid1D gb = Grid1D::gauss_legendre(n, 0.0, kPi);
    const Grid1D ga = Grid1D::gauss_legendre(n, 0.0, 2.0 * kPi);
    const Grid1D gg = Grid1D::gauss_legendre(n, 0.0, 4.0 * kPi);
    const Grid1D gt = Grid1D::gauss_legendre(n, 0.0, kPi);
    return integrate_4d(gb, ga, gg, gt, [&](double b, double a, double g, double t) {
        return density(ParamPoint::cp2(b, a, g, t));
    });
}
}  // namespace detail

/// Volume of CP2 by quadrature of sqrt(det g); the error estimate compares
/// against the half-resolution grid.
inline IntegralResult volume_cp2(int n = 32)
{
    if (n < 16) throw std::invalid_argument("volume_cp2: grid must be >= 16 per axis");
    const double full = detail::cp2_integral(n, [](const ParamPoint& p) {
        return metric_sqrt_det(p);
    });
    const double half = detail::cp2_integral(n / 2, [](const ParamPoint& p) {
        return metric_sqrt_det(p);
    });
    return {full, std::abs(full - half)};
}

/// <w1, w2> = integral of w1 ^ *w2 over CP2.
inline IntegralResult form_inner_product(
    const std::function<ScalarTwoForm(const ParamPoint&)>& w1,
    const std::function<ScalarTwoForm(const ParamPoint&)>& w2, int n = 32)
{
    auto density = [&](const ParamPoint& p) {
        const ScalarTwoForm a = w1(p);
        const ScalarTwoForm b = hodge_star(w2(p), p);
        return wedge_4form(a, b).real();
    };
    const double full = detail::cp2_integral(n, density);
    const double half = detail::cp2_integral(n / 2, density);
    return {full, std::abs(full - half)};
}

/// Integral of a 4-form density fn (coefficient of dx1..dx4) over CP2.
inline double cp2_4form_integral(const std::function<double(const ParamPoint&)>& density,
                                 int n = 32)
{
    return detail::cp2_integral(n, density);
}

/// Integral of a two-form over the south-sphere 2-cycle: the chart theta = pi
/// with (beta, alpha) free, measure dbeta ^ dalpha (this orientation is the
/// global convention; gamma drops out on the cycle and is pinned at gamma0).
inline Complex south_sphere_integral(
    const std::function<Complex(const ParamPoint&)>& f12, int n = 256,
    double theta = kPi, double gamma0 = 0.0)
{
    const Grid1D gb = Grid1D::gauss_legendre(n, 0.0, kPi);
    const Grid1D ga = Grid1D::periodic_trapezoid(n, 0.0, 2.0 * kPi);
    const double re = integrate_2d(gb, ga, [&](double b, double a) {
        return f12(ParamPoint::cp2(b, a, gamma0, theta)).real();
    });
    const double im = integrate_2d(gb, ga, [&](double b, double a) {
        return f12(ParamPoint::cp2(b, a, gamma0, theta)).imag();
    });
    return {re, im};
}

}  // namespace holonomy

#endif
