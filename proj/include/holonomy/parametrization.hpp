#ifndef HOLONOMY_PARAMETRIZATION_HPP
#define HOLONOMY_PARAMETRIZATION_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "holonomy/lie_algebra.hpp"
#include "holonomy/matrix.hpp"

namespace holonomy {

inline constexpr double kPi = std::numbers::pi;

enum class Manifold { S2, CP2, Flag };

inline int coordinate_count(Manifold m)
{
    switch (m) {
        case Manifold::S2: return 2;
        case Manifold::CP2: return 4;
        case Manifold::Flag: return 6;
    }
    return 0;
}

/// Point on the parameter manifold. Coordinate order matches the metric and
/// field component tables: S2 (theta, phi); CP2 (beta, alpha, gamma, theta);
/// Flag appends (a, b). Angles are range-checked at construction and never
/// wrapped; periodic coordinates accept the closed upper endpoint so that
/// loop files can state closure explicitly.
struct ParamPoint {
    Manifold manifold = Manifold::CP2;
    std::array<double, 6> angles{};
    double radius = 1.0;

    static ParamPoint s2(double theta, double phi, double radius = 1.0)
    {
        check_range(theta, 0.0, kPi, "theta");
        check_range(phi, 0.0, 2.0 * kPi, "phi");
        check_radius(radius);
        ParamPoint p;
        p.manifold = Manifold::S2;
        p.angles = {theta, phi, 0, 0, 0, 0};
        p.radius = radius;
        return p;
    }

    static ParamPoint cp2(double beta, double alpha, double gamma, double theta,
                          double radius = 1.0)
    {
        check_range(beta, 0.0, kPi, "beta");
        check_range(alpha, 0.0, 2.0 * kPi, "alpha");
        check_range(gamma, 0.0, 4.0 * kPi, "gamma");
        check_range(theta, 0.0, kPi, "theta");
        check_radius(radius);
        ParamPoint p;
        p.manifold = Manifold::CP2;
        p.angles = {beta, alpha, gamma, theta, 0, 0};
        p.radius = radius;
        return p;
    }

    static ParamPoint flag(double beta, double alpha, double gamma, double theta,
                           double a, double b, double radius = 1.0)
    {
        ParamPoint p = cp2(beta, alpha, gamma, theta, radius);
        check_range(a, 0.0, 2.0 * kPi, "a");
        check_range(b, 0.0, kPi, "b");
        p.manifold = Manifold::Flag;
        p.angles[4] = a;
        p.angles[5] = b;
        return p;
    }

    int n_coords() const { return coordinate_count(manifold); }

    double theta() const
    {
        return manifold == Manifold::S2 ? angles[0] : angles[3];
    }
    double phi() const { return angles[1]; }
    double beta() const { return angles[0]; }
    double alpha() const { return angles[1]; }
    double gamma() const { return angles[2]; }
    double fiber_a() const { return angles[4]; }
    double fiber_b() const { return angles[5]; }

    /// Same point with one coordinate shifted; used by finite-difference
    /// stencils, which may step slightly past a chart edge (the frame maps
    /// are entire in the angles).
    ParamPoint shifted(int coord, double delta) const
    {
        ParamPoint p = *this;
        p.angles[static_cast<std::size_t>(coord)] += delta;
        return p;
    }

private:
    static void check_range(double v, double lo, double hi, const char* name)
    {
        if (!(v >= lo && v <= hi))
            throw std::domain_error(std::string("ParamPoint: angle ") + name +
                                    " out of range");
    }
    static void check_radius(double r)
    {
        if (!(r > 0.0))
            throw std::domain_error("ParamPoint: radius must be positive");
    }
};

/// Group element carrying the instantaneous eigenframe columns.
struct Frame {
    Matrix U;
};

enum class SystemKind {
    Su2Linear,
    Su2Quadratic,
    Su3Degenerate,
    Su3NonDegenerate,
    Su3Adjoint
};

/// A single energy level: rest-frame eigenvalue and the eigenvector columns
/// spanning it.
struct Level {
    std::string label;
    double eigenvalue = 0.0;
    std::vector<int> indices;

    int dim() const { return static_cast<int>(indices.size()); }
};

namespace detail {
inline std::string half_integer_string(double m)
{
    const long two_m = std::lround(2.0 * m);
    if (two_m % 2 == 0) return std::to_string(two_m / 2);
    return std::to_string(two_m) + "/2";
}
}  // namespace detail

/// Which family of Hamiltonians is being driven around its coadjoint orbit,
/// together with the rest-frame data defining the level structure.
struct SystemSpec {
    SystemKind kind = SystemKind::Su3Degenerate;
    double spin_j = 0.0;   // SU(2) systems
    double field_b = 1.0;  // SU(2) radius (field magnitude, mu = 1)
    double radius = 1.0;   // SU(3) radius R
    double r3 = 0.0, r8 = 0.0;  // non-degenerate rest frame

    static SystemSpec su2_linear(double j, double b = 1.0)
    {
        SystemSpec s;
        s.kind = SystemKind::Su2Linear;
        s.spin_j = j;
        s.field_b = require_positive(b);
        return s;
    }

    static SystemSpec su2_quadratic(double j, double b = 1.0)
    {
        SystemSpec s;
        s.kind = SystemKind::Su2Quadratic;
        s.spin_j = j;
        s.field_b = require_positive(b);
        return s;
    }

    static SystemSpec su3_degenerate(double r = 1.0)
    {
        SystemSpec s;
        s.kind = SystemKind::Su3Degenerate;
        s.radius = require_positive(r);
        return s;
    }

    static SystemSpec su3_nondegenerate(double r3 = 0.6, double r8 = 1.0)
    {
        SystemSpec s;
        s.kind = SystemKind::Su3NonDegenerate;
        s.r3 = r3;
        s.r8 = r8;
        if (s.level_values_distinct() == false)
            throw std::invalid_argument("su3_nondegenerate: (R3, R8) gives a degeneracy");
        return s;
    }

    static SystemSpec su3_adjoint(double r = 1.0)
    {
        SystemSpec s;
        s.kind = SystemKind::Su3Adjoint;
        s.radius = require_positive(r);
        return s;
    }

    std::string name() const
    {
        switch (kind) {
            case SystemKind::Su2Linear: return "su2-linear";
            case SystemKind::Su2Quadratic: return "su2-quadratic";
            case SystemKind::Su3Degenerate: return "su3-deg";
            case SystemKind::Su3NonDegenerate: return "su3-nondeg";
            case SystemKind::Su3Adjoint: return "su3-adjoint";
        }
        return "?";
    }

    Manifold manifold() const
    {
        switch (kind) {
            case SystemKind::Su2Linear:
            case SystemKind::Su2Quadratic: return Manifold::S2;
            case SystemKind::Su3NonDegenerate: return Manifold::Flag;
            default: return Manifold::CP2;
        }
    }

    int dim() const
    {
        switch (kind) {
            case SystemKind::Su2Linear:
            case SystemKind::Su2Quadratic:
                return static_cast<int>(std::lround(2.0 * spin_j)) + 1;
            case SystemKind::Su3Degenerate:
            case SystemKind::Su3NonDegenerate: return 3;
            case SystemKind::Su3Adjoint: return 8;
        }
        return 0;
    }

    GeneratorSet representation() const
    {
        switch (kind) {
            case SystemKind::Su2Linear:
            case SystemKind::Su2Quadratic: return spin_operators(spin_j);
            case SystemKind::Su3Adjoint: return su3_adjoint_primed();
            default: return gell_mann();
        }
    }

    /// Rest-frame Hamiltonian (diagonal in all supported systems).
    Matrix h0() const
    {
        const int n = dim();
        Matrix h = Matrix::Zero(n, n);
        switch (kind) {
            case SystemKind::Su2Linear:
                for (int i = 0; i < n; ++i) h(i, i) = field_b * (spin_j - i);
                break;
            case SystemKind::Su2Quadratic:
                for (int i = 0; i < n; ++i) {
                    const double m = spin_j - i;
                    h(i, i) = field_b * field_b * m * m;
                }
                break;
            case SystemKind::Su3Degenerate: {
                const double e1 = radius / std::sqrt(3.0);
                h(0, 0) = e1;
                h(1, 1) = e1;
                h(2, 2) = -2.0 * e1;
                break;
            }
            case SystemKind::Su3NonDegenerate: {
                const double e8 = r8 / std::sqrt(3.0);
                h(0, 0) = r3 + e8;
                h(1, 1) = -r3 + e8;
                h(2, 2) = -2.0 * e8;
                break;
            }
            case SystemKind::Su3Adjoint: {
                const double s = std::sqrt(3.0) / 2.0 * radius;
                h(0, 0) = h(1, 1) = -s;
                h(6, 6) = h(7, 7) = s;
                break;
            }
        }
        return h;
    }

    std::vector<Level> levels() const
    {
        std::vector<Level> out;
        switch (kind) {
            case SystemKind::Su2Linear:
                for (int i = 0; i < dim(); ++i) {
                    const double m = spin_j - i;
                    out.push_back({"m=" + detail::half_integer_string(m),
                                   field_b * m, {i}});
                }
                break;
            case SystemKind::Su2Quadratic: {
                // Pairs {m, -m} ordered |+m> first; m = 0 is a singlet.
                for (double m = spin_j; m > 0.25; m -= 1.0) {
                    const int up = static_cast<int>(std::lround(spin_j - m));
                    const int dn = static_cast<int>(std::lround(spin_j + m));
                    out.push_back({"pair=" + detail::half_integer_string(m),
                                   field_b * field_b * m * m, {up, dn}});
                }
                if (std::lround(2.0 * spin_j) % 2 == 0)
                    out.push_back({"m=0", 0.0, {static_cast<int>(std::lround(spin_j))}});
                break;
            }
            case SystemKind::Su3Degenerate: {
                const double e1 = radius / std::sqrt(3.0);
                out.push_back({"E1", e1, {0, 1}});
                out.push_back({"E3", -2.0 * e1, {2}});
                break;
            }
            case SystemKind::Su3NonDegenerate: {
                const Matrix h = h0();
                out.push_back({"L1", h(0, 0).real(), {0}});
                out.push_back({"L2", h(1, 1).real(), {1}});
                out.push_back({"L3", h(2, 2).real(), {2}});
                break;
            }
            case SystemKind::Su3Adjoint: {
                const double s = std::sqrt(3.0) / 2.0 * radius;
                out.push_back({"minus", -s, {0, 1}});
                out.push_back({"zero", 0.0, {2, 3, 4, 5}});
                out.push_back({"plus", s, {6, 7}});
                break;
            }
        }
        return out;
    }

    Level level(const std::string& label) const
    {
        for (const Level& l : levels())
            if (l.label == label) return l;
        throw std::invalid_argument("SystemSpec: no level named '" + label +
                                    "' in system " + name());
    }

    /// Smallest separation between distinct eigenvalues (the adiabatic gap).
    double min_gap() const
    {
        const auto lv = levels();
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < lv.size(); ++i)
            for (std::size_t j = i + 1; j < lv.size(); ++j)
                gap = std::min(gap, std::abs(lv[i].eigenvalue - lv[j].eigenvalue));
        return gap;
    }

private:
    static double require_positive(double v)
    {
        if (!(v > 0.0)) throw std::invalid_argument("SystemSpec: radius must be positive");
        return v;
    }

    bool level_values_distinct() const
    {
        const double e8 = r8 / std::sqrt(3.0);
        const double e[3] = {r3 + e8, -r3 + e8, -2.0 * e8};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::abs(e[i] - e[j]) < 1e-12) return false;
        return true;
    }
};

/// Evaluates the Euler-angle group element of a system with the generator
/// exponentials spectrally decomposed once up front; cheap enough for
/// finite-difference stencils and time stepping.
class FrameBuilder {
public:
    explicit FrameBuilder(const SystemSpec& spec)
        : spec_(spec), rep_(spec.representation())
    {
        switch (spec.kind) {
            case SystemKind::Su2Linear:
            case SystemKind::Su2Quadratic:
                // exp(-i Jz phi) exp(-i Jy theta)
                factors_.push_back({HermitianExp(rep_[2]), 1, -1.0});
                factors_.push_back({HermitianExp(rep_[1]), 0, -1.0});
                break;
            case SystemKind::Su3Degenerate:
            case SystemKind::Su3Adjoint:
            case SystemKind::Su3NonDegenerate: {
                // exp(i alpha G3 k) exp(i beta G2 k) exp(i gamma G3 k)
                // exp(i theta G5 k). In the defining representation k = 1/2;
                // the adjoint system is driven by the adjoint action of the
                // same group element, and ad(lambda_i / 2) = Lambda_i, so the
                // primed generators enter at full angle.
                const double k = spec.kind == SystemKind::Su3Adjoint ? 1.0 : 0.5;
                factors_.push_back({HermitianExp(rep_[2]), 1, k});
                factors_.push_back({HermitianExp(rep_[1]), 0, k});
                factors_.push_back({HermitianExp(rep_[2]), 2, k});
                factors_.push_back({HermitianExp(rep_[4]), 3, k});
                if (spec.kind == SystemKind::Su3NonDegenerate) {
                    factors_.push_back({HermitianExp(rep_[2]), 4, k});
                    factors_.push_back({HermitianExp(rep_[1]), 5, k});
                }
                break;
            }
        }
    }

    Matrix unitary(const ParamPoint& p) const
    {
        Matrix u = Matrix::Identity(rep_.dim, rep_.dim);
        for (const Factor& f : factors_)
            u *= f.exp.exp_i(f.scale * p.angles[static_cast<std::size_t>(f.angle)]);
        return u;
    }

    Frame operator()(const ParamPoint& p) const { return Frame{unitary(p)}; }

    const SystemSpec& spec() const { return spec_; }
    const GeneratorSet& rep() const { return rep_; }

private:
    struct Factor {
        HermitianExp exp;
        int angle;
        double scale;
    };
    SystemSpec spec_;
    GeneratorSet rep_;
    std::vector<Factor> factors_;
};

/// Two-factor SU(2) frame exp(-i Jz phi) exp(-i Jy theta).
inline Frame su2_frame(const ParamPoint& point, const GeneratorSet& rep)
{
    if (point.manifold != Manifold::S2)
        throw std::invalid_argument("su2_frame: point is not on S2");
    if (rep.label != RepLabel::Su2Spin)
        throw std::invalid_argument("su2_frame: representation mismatch");
    const Matrix uz = HermitianExp(rep[2]).exp_i(-point.phi());
    const Matrix uy = HermitianExp(rep[1]).exp_i(-point.theta());
    return Frame{uz * uy};
}

/// Four-factor frame exp(i alpha G3 k) exp(i beta G2 k) exp(i gamma G3 k)
/// exp(i theta G5 k) with k = 1/2 in the defining representation and k = 1
/// for the primed adjoint generators (the adjoint action of the same group
/// element, since ad(lambda_i / 2) = Lambda_i).
inline Frame su3_frame(const ParamPoint& point, const GeneratorSet& rep)
{
    if (point.manifold != Manifold::CP2 && point.manifold != Manifold::Flag)
        throw std::invalid_argument("su3_frame: point is not on CP2");
    if (rep.label != RepLabel::Su3Defining && rep.label != RepLabel::Su3Adjoint)
        throw std::invalid_argument("su3_frame: representation mismatch");
    const double k = rep.label == RepLabel::Su3Adjoint ? 1.0 : 0.5;
    const Matrix u = HermitianExp(rep[2]).exp_i(k * point.alpha()) *
                     HermitianExp(rep[1]).exp_i(k * point.beta()) *
                     HermitianExp(rep[2]).exp_i(k * point.gamma()) *
                     HermitianExp(rep[4]).exp_i(k * point.theta());
    return Frame{u};
}

/// Six-factor flag-space frame: the CP2 frame times
/// exp(i a lambda3/2) exp(i b lambda2/2).
inline Frame flag_frame(const ParamPoint& point)
{
    if (point.manifold != Manifold::Flag)
        throw std::invalid_argument("flag_frame: point is not on the flag space");
    const GeneratorSet rep = gell_mann();
    ParamPoint base = point;
    base.manifold = Manifold::CP2;
    const Matrix u = su3_frame(base, rep).U *
                     HermitianExp(rep[2]).exp_i(0.5 * point.fiber_a()) *
                     HermitianExp(rep[1]).exp_i(0.5 * point.fiber_b());
    return Frame{u};
}

inline Frame frame_at(const SystemSpec& spec, const ParamPoint& point)
{
    return FrameBuilder(spec)(point);
}

/// H(point) = U H0 U^dagger.
inline Matrix hamiltonian(const SystemSpec& spec, const ParamPoint& point)
{
    if (spec.manifold() != point.manifold)
        throw std::invalid_argument("hamiltonian: point manifold does not match system");
    const Matrix u = frame_at(spec, point).U;
    return u * spec.h0() * u.adjoint();
}

/// Embedding xi^i = (1/2) Tr[H lambda_i] of the CP2 orbit into R^8,
/// in closed form.
inline Eigen::Matrix<double, 8, 1> embedding_coordinates(const ParamPoint& point)
{
    if (point.manifold != Manifold::CP2)
        throw std::invalid_argument("embedding_coordinates: point is not on CP2");
    const double r = point.radius;
    const double b = point.beta(), a = point.alpha(), g = point.gamma(),
                 t = point.theta();
    const double c = std::sqrt(3.0) / 2.0;
    const double st2 = std::sin(0.5 * t) * std::sin(0.5 * t);
    const double st = std::sin(t);
    Eigen::Matrix<double, 8, 1> xi;
    xi(0) = c * r * std::sin(b) * std::cos(a) * st2;
    xi(1) = -c * r * std::sin(b) * std::sin(a) * st2;
    xi(2) = -c * r * std::cos(b) * st2;
    xi(3) = c * r * st * std::cos(0.5 * b) * std::cos(0.5 * (a + g));
    xi(4) = c * r * st * std::cos(0.5 * b) * std::sin(0.5 * (a + g));
    xi(5) = c * r * st * std::sin(0.5 * b) * std::cos(0.5 * (a - g));
    xi(6) = c * r * st * std::sin(0.5 * b) * std::sin(0.5 * (a - g));
    xi(7) = 0.25 * r * (3.0 * std::cos(t) + 1.0);
    return xi;
}

/// Same embedding from the trace definition; the independent route used to
/// audit the closed forms.
inline Eigen::Matrix<double, 8, 1> embedding_coordinates_trace(const ParamPoint& point)
{
    const SystemSpec spec = SystemSpec::su3_degenerate(point.radius);
    const Matrix h = hamiltonian(spec, point);
    const GeneratorSet l = gell_mann();
    Eigen::Matrix<double, 8, 1> xi;
    for (int i = 0; i < 8; ++i) xi(i) = 0.5 * (h * l[static_cast<std::size_t>(i)]).trace().real();
    return xi;
}

/// Full eight-angle SU(3) group element; the trailing stabilizer factors drop
/// out of the Hamiltonian, which one regression test pins down.
inline Matrix su3_group_element_full(double alpha, double beta, double gamma,
                                     double theta, double a, double b, double c,
                                     double phi)
{
    const GeneratorSet l = gell_mann();
    return HermitianExp(l[2]).exp_i(0.5 * alpha) *
           HermitianExp(l[1]).exp_i(0.5 * beta) *
           HermitianExp(l[2]).exp_i(0.5 * gamma) *
           HermitianExp(l[4]).exp_i(0.5 * theta) *
           HermitianExp(l[2]).exp_i(0.5 * a) *
           HermitianExp(l[1]).exp_i(0.5 * b) *
           HermitianExp(l[2]).exp_i(0.5 * c) *
           HermitianExp(l[7]).exp_i(0.5 * phi);
}

}  // namespace holonomy

#endif
