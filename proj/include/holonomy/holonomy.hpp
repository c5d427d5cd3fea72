#ifndef HOLONOMY_HOLONOMY_HPP
#define HOLONOMY_HOLONOMY_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "holonomy/gauge_field.hpp"
#include "holonomy/matrix.hpp"
#include "holonomy/parametrization.hpp"

namespace holonomy {

/// Discretized closed curve in parameter space. Samples are continuous in the
/// angle coordinates (no wrapping); closure may go through a periodic
/// identification, e.g. phi: 0 -> 2 pi.
struct LoopPath {
    Manifold manifold = Manifold::S2;
    std::vector<ParamPoint> samples;
    std::vector<double> t;  // monotone parameter in [0, 1]
    std::function<ParamPoint(double)> generator;  // optional exact curve

    static constexpr double kMeshBound = 0.35;

    /// Latitude circle theta = theta0 traversed once in increasing phi.
    static LoopPath s2_latitude(double theta0, int n = 256, double radius = 1.0)
    {
        LoopPath loop;
        loop.manifold = Manifold::S2;
        loop.generator = [theta0, radius](double s) {
            return ParamPoint::s2(theta0, 2.0 * kPi * s, radius);
        };
        loop.fill(n);
        return loop;
    }

    /// Great circle: the equator tilted by `tilt` about the y axis
    /// (|tilt| < pi/2 keeps the curve away from the poles).
    static LoopPath s2_great_circle(double tilt, int n = 256, double radius = 1.0)
    {
        if (std::abs(tilt) >= 0.5 * kPi)
            throw std::invalid_argument("s2_great_circle: |tilt| must be < pi/2");
        LoopPath loop;
        loop.manifold = Manifold::S2;
        loop.generator = [tilt, radius](double s) {
            const double u = 2.0 * kPi * s;
            const double x = std::cos(tilt) * std::cos(u);
            const double y = std::sin(u);
            const double z = std::sin(tilt) * std::cos(u);
            const double theta = std::acos(std::clamp(z, -1.0, 1.0));
            // phi increases monotonically with u for this family; unwrap it
            double phi = std::atan2(y, x);
            if (phi < 0) phi += 2.0 * kPi;
            if (s >= 1.0 - 1e-12 && phi < 1e-9) phi = 2.0 * kPi;
            return ParamPoint::s2(theta, phi, radius);
        };
        loop.fill(n);
        return loop;
    }

    /// Circle of radius r in the (coordinate_i, coordinate_j) plane around a
    /// base point; contractible inside the chart.
    static LoopPath coordinate_circle(const ParamPoint& center, int coord_i,
                                      int coord_j, double r, int n = 256)
    {
        LoopPath loop;
        loop.manifold = center.manifold;
        loop.generator = [center, coord_i, coord_j, r](double s) {
            const double u = 2.0 * kPi * s;
            ParamPoint p = center;
            p.angles[static_cast<std::size_t>(coord_i)] += r * std::cos(u) - r;
            p.angles[static_cast<std::size_t>(coord_j)] += r * std::sin(u);
            return p;
        };
        loop.fill(n);
        return loop;
    }

    static LoopPath from_samples(std::vector<ParamPoint> pts)
    {
        if (pts.size() < 2)
            throw std::invalid_argument("LoopPath: need at least two samples");
        LoopPath loop;
        loop.manifold = pts.front().manifold;
        loop.samples = std::move(pts);
        loop.t.resize(loop.samples.size());
        for (std::size_t k = 0; k < loop.t.size(); ++k)
            loop.t[k] = static_cast<double>(k) / static_cast<double>(loop.t.size() - 1);
        return loop;
    }

    int segments() const { return static_cast<int>(samples.size()) - 1; }

    /// Point at parameter s in [0, 1]; exact for generated loops, linear in
    /// the angles for explicit polylines.
    ParamPoint at(double s) const
    {
        if (generator) return generator(s);
        if (s <= 0.0) return samples.front();
        if (s >= 1.0) return samples.back();
        std::size_t hi = 1;
        while (hi + 1 < t.size() && t[hi] < s) ++hi;
        const double span = t[hi] - t[hi - 1];
        const double w = span > 0 ? (s - t[hi - 1]) / span : 0.0;
        ParamPoint p = samples[hi - 1];
        for (int c = 0; c < p.n_coords(); ++c) {
            const auto uc = static_cast<std::size_t>(c);
            p.angles[uc] += w * (samples[hi].angles[uc] - samples[hi - 1].angles[uc]);
        }
        p.radius += w * (samples[hi].radius - samples[hi - 1].radius);
        return p;
    }

    LoopPath resampled(int n) const
    {
        LoopPath loop;
        loop.manifold = manifold;
        loop.generator = generator;
        loop.samples.reserve(static_cast<std::size_t>(n) + 1);
        loop.t.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            const double s = static_cast<double>(k) / n;
            loop.samples.push_back(at(s));
            loop.t.push_back(s);
        }
        return loop;
    }

    /// Largest adjacent-sample distance in the angle coordinates.
    double mesh() const
    {
        double worst = 0.0;
        for (std::size_t k = 1; k < samples.size(); ++k) {
            double d2 = 0.0;
            for (int c = 0; c < samples[k].n_coords(); ++c) {
                const auto uc = static_cast<std::size_t>(c);
                const double d = samples[k].angles[uc] - samples[k - 1].angles[uc];
                d2 += d * d;
            }
            worst = std::max(worst, std::sqrt(d2));
        }
        return worst;
    }

    /// Closed after identifying periodic coordinates.
    bool closed(double tol = 1e-9) const
    {
        static constexpr double periods_cp2[6] = {0, 2, 4, 0, 2, 0};  // units of pi
        const ParamPoint& a = samples.front();
        const ParamPoint& b = samples.back();
        for (int c = 0; c < a.n_coords(); ++c) {
            const auto uc = static_cast<std::size_t>(c);
            double d = b.angles[uc] - a.angles[uc];
            double period = 0.0;
            if (manifold == Manifold::S2)
                period = c == 1 ? 2.0 * kPi : 0.0;
            else
                period = periods_cp2[uc] * kPi;
            if (period > 0) d = std::remainder(d, period);
            if (std::abs(d) > tol) return false;
        }
        return std::abs(a.radius - b.radius) < tol;
    }

private:
    void fill(int n)
    {
        samples.clear();
        t.clear();
        for (int k = 0; k <= n; ++k) {
            const double s = static_cast<double>(k) / n;
            samples.push_back(generator(s));
            t.push_back(s);
        }
    }
};

/// Path-ordered Wilson loop of a level block.
struct Holonomy {
    Matrix W;
    int segments = 0;
    double doubling_error = 0.0;  // operator-norm change under N -> 2N
    bool converged = false;
    double continuous_phase = 0.0;  // unwrapped phase, Abelian blocks only
    double max_step_norm = 0.0;     // largest per-segment |A dx|
};

/// Unitary relating the frame at the loop's end sample to the frame at its
/// start (identity unless closure goes through a periodic identification);
/// block-diagonal because both frames stabilize H0.
inline Matrix frame_closure(const FrameBuilder& frames, const Level& level,
                            const LoopPath& loop)
{
    const Matrix m =
        frames.unitary(loop.samples.front()).adjoint() * frames.unitary(loop.samples.back());
    const int d = level.dim();
    Matrix block(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            block(r, c) = m(level.indices[static_cast<std::size_t>(r)],
                            level.indices[static_cast<std::size_t>(c)]);
    if (!is_unitary(block, 1e-8))
        throw std::runtime_error("frame_closure: loop does not close on the manifold");
    return block;
}

namespace detail {
struct TransportResult {
    Matrix W;
    double continuous_phase;
    double max_step_norm;
};

/// Ordered product of segment exponentials of the transport generator -A,
/// midpoint rule, later segments acting on the left.
inline TransportResult wilson_transport(
    const std::function<ConnectionSample(const ParamPoint&)>& connection,
    const LoopPath& loop)
{
    const int n = loop.segments();
    Matrix w;
    double phase = 0.0;
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const ParamPoint& a = loop.samples[uk];
        const ParamPoint& b = loop.samples[uk + 1];
        ParamPoint mid = a;
        for (int c = 0; c < a.n_coords(); ++c) {
            const auto uc = static_cast<std::size_t>(c);
            mid.angles[uc] = 0.5 * (a.angles[uc] + b.angles[uc]);
        }
        mid.radius = 0.5 * (a.radius + b.radius);

        const ConnectionSample smp = connection(mid);
        Matrix z = Matrix::Zero(smp.dim, smp.dim);
        for (int c = 0; c < smp.n_coords; ++c) {
            const auto uc = static_cast<std::size_t>(c);
            z -= smp.comp[uc] * (b.angles[uc] - a.angles[uc]);
        }
        max_step = std::max(max_step, max_abs(z));
        if (k == 0)
            w = exp_antihermitian(z);
        else
            w = exp_antihermitian(z) * w;
        if (smp.dim == 1) phase += z(0, 0).imag();
    }
    return {w, phase, max_step};
}
}  // namespace detail

/// Holonomy of a closed loop: the frame-closure factor times the ordered
/// product of exp(-A dx) over the segments. This is the transport the
/// Schroedinger oracle measures, and it satisfies the -m Omega law for the
/// SU(2) levels. Doubling the segment count bounds the discretization error.
inline Holonomy wilson_loop(
    const std::function<ConnectionSample(const ParamPoint&)>& connection,
    const Matrix& closure, const LoopPath& loop, int n_segments = 256)
{
    if (n_segments < 64)
        throw std::invalid_argument("wilson_loop: need at least 64 segments");
    if (!loop.closed())
        throw std::invalid_argument("wilson_loop: loop is not closed");

    const LoopPath coarse = loop.resampled(n_segments);
    if (coarse.mesh() > LoopPath::kMeshBound)
        throw std::invalid_argument("wilson_loop: segment mesh too coarse");
    const LoopPath fine = loop.resampled(2 * n_segments);

    const auto tc = detail::wilson_transport(connection, coarse);
    const auto tf = detail::wilson_transport(connection, fine);

    Holonomy h;
    h.W = closure * tc.W;
    h.segments = n_segments;
    h.doubling_error = operator_norm(closure * tf.W - h.W);
    h.converged = h.doubling_error < 1e-6;
    h.max_step_norm = tc.max_step_norm;
    if (tc.W.rows() == 1)
        h.continuous_phase = tc.continuous_phase + std::arg(closure(0, 0));
    return h;
}

inline Holonomy wilson_loop(const SystemSpec& spec, const Level& level,
                            const LoopPath& loop, int n_segments = 256,
                            FieldSource source = FieldSource::ClosedForm)
{
    const FrameBuilder frames(spec);
    return wilson_loop(connection_builder(spec, level, source),
                       frame_closure(frames, level, loop), loop, n_segments);
}

/// Oriented solid angle enclosed by a loop on S^2, by fanning signed
/// spherical-triangle areas from the north pole.
inline double solid_angle(const LoopPath& loop)
{
    if (loop.manifold != Manifold::S2)
        throw std::invalid_argument("solid_angle: loop is not on S2");
    auto unit = [](const ParamPoint& p) {
        return Eigen::Vector3d(std::sin(p.theta()) * std::cos(p.phi()),
                               std::sin(p.theta()) * std::sin(p.phi()),
                               std::cos(p.theta()));
    };
    const Eigen::Vector3d pole(0, 0, 1);
    double omega = 0.0;
    for (std::size_t k = 1; k < loop.samples.size(); ++k) {
        const Eigen::Vector3d a = unit(loop.samples[k - 1]);
        const Eigen::Vector3d b = unit(loop.samples[k]);
        const double num = pole.dot(a.cross(b));
        const double den = 1.0 + pole.dot(a) + a.dot(b) + b.dot(pole);
        if (std::abs(den) < 1e-12)
            throw std::runtime_error("solid_angle: near-antipodal segment");
        omega += 2.0 * std::atan2(num, den);
    }
    return omega;
}

/// Geometric phase of an Abelian SU(2) level around a loop, in (-pi, pi].
inline double berry_phase_su2(double j, double m, const LoopPath& loop,
                              int n_segments = 256)
{
    const SystemSpec spec = SystemSpec::su2_linear(j);
    const Level level = spec.level("m=" + detail::half_integer_string(m));
    const Holonomy h = wilson_loop(spec, level, loop, n_segments);
    return std::arg(h.W(0, 0));
}

}  // namespace holonomy

#endif
