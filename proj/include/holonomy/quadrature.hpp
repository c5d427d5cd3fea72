#ifndef HOLONOMY_QUADRATURE_HPP
#define HOLONOMY_QUADRATURE_HPP

#include <gsl/gsl_integration.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "holonomy/threading.hpp"

namespace holonomy {

/// One-dimensional quadrature rule: nodes and weights on [a, b].
struct Grid1D {
    std::vector<double> x;
    std::vector<double> w;

    int size() const { return static_cast<int>(x.size()); }

    static Grid1D gauss_legendre(int n, double a, double b)
    {
        if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
        std::unique_ptr<gsl_integration_glfixed_table,
                        decltype(&gsl_integration_glfixed_table_free)>
            table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)),
                  &gsl_integration_glfixed_table_free);
        Grid1D g;
        g.x.resize(static_cast<std::size_t>(n));
        g.w.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i),
                                          &g.x[static_cast<std::size_t>(i)],
                                          &g.w[static_cast<std::size_t>(i)],
                                          table.get());
        return g;
    }

    /// Uniform nodes without the duplicated endpoint; exact for trigonometric
    /// polynomials of degree < n on a full period.
    static Grid1D periodic_trapezoid(int n, double a, double b)
    {
        if (n < 1) throw std::invalid_argument("periodic_trapezoid: n must be >= 1");
        Grid1D g;
        const double h = (b - a) / n;
        g.x.resize(static_cast<std::size_t>(n));
        g.w.assign(static_cast<std::size_t>(n), h);
        for (int i = 0; i < n; ++i) g.x[static_cast<std::size_t>(i)] = a + i * h;
        return g;
    }
};

/// 2D tensor-product integral of f(x1, x2).
template <typename F>
double integrate_2d(const Grid1D& g1, const Grid1D& g2, F&& f)
{
    const std::int64_t n1 = g1.size(), n2 = g2.size();
    return threads::chunked_sum<double>(n1 * n2, [&](std::int64_t lo, std::int64_t hi) {
        double s = 0.0;
        for (std::int64_t k = lo; k < hi; ++k) {
            const auto i = static_cast<std::size_t>(k / n2);
            const auto j = static_cast<std::size_t>(k % n2);
            s += g1.w[i] * g2.w[j] * f(g1.x[i], g2.x[j]);
        }
        return s;
    });
}

/// 4D tensor-product integral of f(x1, x2, x3, x4).
template <typename F>
double integrate_4d(const Grid1D& g1, const Grid1D& g2, const Grid1D& g3,
                    const Grid1D& g4, F&& f)
{
    const std::int64_t n1 = g1.size(), n2 = g2.size(), n3 = g3.size(), n4 = g4.size();
    const std::int64_t total = n1 * n2 * n3 * n4;
    return threads::chunked_sum<double>(total, [&](std::int64_t lo, std::int64_t hi) {
        double s = 0.0;
        for (std::int64_t k = lo; k < hi; ++k) {
            std::int64_t r = k;
            const auto l4 = static_cast<std::size_t>(r % n4); r /= n4;
            const auto l3 = static_cast<std::size_t>(r % n3); r /= n3;
            const auto l2 = static_cast<std::size_t>(r % n2); r /= n2;
            const auto l1 = static_cast<std::size_t>(r);
            s += g1.w[l1] * g2.w[l2] * g3.w[l3] * g4.w[l4] *
                 f(g1.x[l1], g2.x[l2], g3.x[l3], g4.x[l4]);
        }
        return s;
    });
}

}  // namespace holonomy

#endif
