#ifndef HOLONOMY_LIE_ALGEBRA_HPP
#define HOLONOMY_LIE_ALGEBRA_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "holonomy/matrix.hpp"

namespace holonomy {

enum class RepLabel { Su2Spin, Su3Defining, Su3Adjoint };

/// Ordered family of Hermitian generators in a fixed representation.
struct GeneratorSet {
    int dim = 0;
    std::vector<Matrix> generators;
    RepLabel label = RepLabel::Su3Defining;
    double spin = 0.0;  // only meaningful for Su2Spin

    const Matrix& operator[](std::size_t i) const { return generators[i]; }
    std::size_t size() const { return generators.size(); }
};

/// The eight Gell-Mann matrices in the standard normalization
/// Tr(lambda_i lambda_j) = 2 delta_ij.
inline GeneratorSet gell_mann()
{
    GeneratorSet set;
    set.dim = 3;
    set.label = RepLabel::Su3Defining;
    set.generators.assign(8, Matrix::Zero(3, 3));
    auto& l = set.generators;
    l[0](0, 1) = 1; l[0](1, 0) = 1;
    l[1](0, 1) = -kI; l[1](1, 0) = kI;
    l[2](0, 0) = 1; l[2](1, 1) = -1;
    l[3](0, 2) = 1; l[3](2, 0) = 1;
    l[4](0, 2) = -kI; l[4](2, 0) = kI;
    l[5](1, 2) = 1; l[5](2, 1) = 1;
    l[6](1, 2) = -kI; l[6](2, 1) = kI;
    const double r3 = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = r3; l[7](1, 1) = r3; l[7](2, 2) = -2.0 * r3;
    return set;
}

/// Totally antisymmetric su(3) structure constants f_ijk with
/// [lambda_i, lambda_j] = 2 i f_ijk lambda_k. Indices are 1-based to match
/// the usual tables; storage is dense.
class StructureConstants {
public:
    StructureConstants()
    {
        f_.fill(0.0);
        const double h = 0.5;
        const double s = std::sqrt(3.0) / 2.0;
        seed(1, 2, 3, 1.0);
        seed(4, 5, 8, s);
        seed(6, 7, 8, s);
        seed(1, 4, 7, h);
        seed(2, 4, 6, h);
        seed(2, 5, 7, h);
        seed(3, 4, 5, h);
        seed(5, 1, 6, h);
        seed(6, 3, 7, h);
        validate_against_trace_formula();
    }

    double f(int i, int j, int k) const { return f_[index(i, j, k)]; }

    /// Distinct (i<j<k) triples with nonzero value.
    std::vector<std::array<int, 3>> nonzero_triples() const
    {
        std::vector<std::array<int, 3>> out;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                for (int k = j + 1; k <= 8; ++k)
                    if (std::abs(f(i, j, k)) > 0.0) out.push_back({i, j, k});
        return out;
    }

private:
    static std::size_t index(int i, int j, int k)
    {
        return static_cast<std::size_t>((i - 1) * 64 + (j - 1) * 8 + (k - 1));
    }

    void assign(int i, int j, int k, double v) { f_[index(i, j, k)] = v; }

    void seed(int i, int j, int k, double v)
    {
        assign(i, j, k, v);
        assign(j, k, i, v);
        assign(k, i, j, v);
        assign(j, i, k, -v);
        assign(i, k, j, -v);
        assign(k, j, i, -v);
    }

    void validate_against_trace_formula() const
    {
        const GeneratorSet l = gell_mann();
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; j <= 8; ++j)
                for (int k = 1; k <= 8; ++k) {
                    const Complex t =
                        (commutator(l[i - 1], l[j - 1]) * l[k - 1]).trace() /
                        (4.0 * kI);
                    if (std::abs(t - f(i, j, k)) > 1e-12)
                        throw std::logic_error("structure constants fail trace identity");
                }
    }

    std::array<double, 512> f_;
};

inline const StructureConstants& structure_constants()
{
    static const StructureConstants f;
    return f;
}

/// Angular momentum matrices Jx, Jy, Jz in the (2j+1)-dimensional
/// representation, Jz diagonal with entries j..-j.
inline GeneratorSet spin_operators(double j)
{
    const double two_j = 2.0 * j;
    if (j < 0.5 || std::abs(two_j - std::round(two_j)) > 1e-12)
        throw std::invalid_argument("spin_operators: j must be a half-integer >= 1/2");
    const int dim = static_cast<int>(std::lround(two_j)) + 1;

    Matrix jz = Matrix::Zero(dim, dim);
    Matrix jp = Matrix::Zero(dim, dim);
    for (int idx = 0; idx < dim; ++idx) {
        const double m = j - idx;
        jz(idx, idx) = m;
        if (idx > 0)  // raising connects m to m+1, i.e. row idx-1
            jp(idx - 1, idx) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    const Matrix jm = jp.adjoint();

    GeneratorSet set;
    set.dim = dim;
    set.label = RepLabel::Su2Spin;
    set.spin = j;
    set.generators = {0.5 * (jp + jm), (jp - jm) / (2.0 * kI), jz};
    return set;
}

/// Adjoint generators (Lambda_i)_jk = i f_ijk.
inline GeneratorSet adjoint_generators(const StructureConstants& f)
{
    GeneratorSet set;
    set.dim = 8;
    set.label = RepLabel::Su3Adjoint;
    set.generators.assign(8, Matrix::Zero(8, 8));
    for (int i = 1; i <= 8; ++i)
        for (int jr = 1; jr <= 8; ++jr)
            for (int kc = 1; kc <= 8; ++kc)
                set.generators[static_cast<std::size_t>(i - 1)](jr - 1, kc - 1) =
                    kI * f.f(i, jr, kc);
    return set;
}

/// Unitary that diagonalizes Lambda_3 and Lambda_8 simultaneously, plus the
/// resulting Cartan diagonals in the fixed level ordering.
struct CartanTransform {
    Matrix V;
    RealVector lambda3_diag;
    RealVector lambda8_diag;
};

/// The diagonalizing matrix as tabulated (columns ordered so that the Cartan
/// diagonals come out as (-1/2,1/2,-1,0,1,0,1/2,-1/2) and
/// (-s,-s,0,0,0,0,s,s) with s = sqrt(3)/2).
inline Matrix cartan_diagonalizer_table()
{
    const double r = 1.0 / std::sqrt(2.0);
    Matrix v = Matrix::Zero(8, 8);
    v(0, 2) = kI * r;  v(0, 4) = kI * r;
    v(1, 2) = -r;      v(1, 4) = r;
    v(2, 3) = 1.0;
    v(3, 0) = kI * r;  v(3, 6) = kI * r;
    v(4, 0) = -r;      v(4, 6) = r;
    v(5, 1) = kI * r;  v(5, 7) = kI * r;
    v(6, 1) = -r;      v(6, 7) = r;
    v(7, 5) = 1.0;
    return v;
}

/// Expected Cartan diagonals in the table's column ordering.
inline RealVector cartan_lambda3_diag_table()
{
    RealVector d(8);
    d << -0.5, 0.5, -1.0, 0.0, 1.0, 0.0, 0.5, -0.5;
    return d;
}

inline RealVector cartan_lambda8_diag_table()
{
    const double s = std::sqrt(3.0) / 2.0;
    RealVector d(8);
    d << -s, -s, 0.0, 0.0, 0.0, 0.0, s, s;
    return d;
}

namespace detail {
inline RealVector real_diagonal_or_throw(const Matrix& m, double tol,
                                         const char* what)
{
    Matrix off = m;
    off.diagonal().setZero();
    if (max_abs(off) > tol || max_abs(m.diagonal().imag().asDiagonal()) > tol)
        throw std::runtime_error(std::string(what) +
                                 ": residual exceeds tolerance");
    return m.diagonal().real();
}
}  // namespace detail

/// Conjugates the Cartan pair by the tabulated matrix. Throws if the result
/// is not diagonal to 1e-10. Note the consistent convention is
/// Lambda'_i = V^dagger Lambda_i V for all eight generators; this is the one
/// that reproduces the tabulated primed matrices.
inline CartanTransform cartan_transform(const GeneratorSet& adjoint)
{
    if (adjoint.label != RepLabel::Su3Adjoint || adjoint.dim != 8)
        throw std::invalid_argument("cartan_transform: expected the su3 adjoint set");
    CartanTransform ct;
    ct.V = cartan_diagonalizer_table();
    const Matrix d3 = ct.V.adjoint() * adjoint[2] * ct.V;
    const Matrix d8 = ct.V.adjoint() * adjoint[7] * ct.V;
    ct.lambda3_diag = detail::real_diagonal_or_throw(d3, 1e-10, "cartan_transform");
    ct.lambda8_diag = detail::real_diagonal_or_throw(d8, 1e-10, "cartan_transform");
    return ct;
}

/// Independent simultaneous diagonalization of (Lambda_3, Lambda_8): an
/// eigensolve of Lambda_8, then of Lambda_3 within each eigenspace, columns
/// reordered to the fixed diagonal sequence. Guards the tabulated matrix
/// against transcription error; the two are compared by joint spectral
/// projectors since degenerate columns carry basis freedom.
inline CartanTransform simultaneous_diagonalization(const GeneratorSet& adjoint)
{
    if (adjoint.label != RepLabel::Su3Adjoint || adjoint.dim != 8)
        throw std::invalid_argument("simultaneous_diagonalization: expected the su3 adjoint set");

    Eigen::SelfAdjointEigenSolver<Matrix> es8(adjoint[7]);
    Matrix basis = es8.eigenvectors();
    RealVector l8 = es8.eigenvalues();

    // Re-diagonalize Lambda_3 inside each Lambda_8 eigenspace.
    Matrix v = basis;
    RealVector l3(8);
    int start = 0;
    while (start < 8) {
        int stop = start + 1;
        while (stop < 8 && std::abs(l8(stop) - l8(start)) < 1e-9) ++stop;
        const int blk = stop - start;
        Matrix sub = basis.middleCols(start, blk);
        Matrix proj3 = sub.adjoint() * adjoint[2] * sub;
        Eigen::SelfAdjointEigenSolver<Matrix> es3(proj3);
        v.middleCols(start, blk) = sub * es3.eigenvectors();
        l3.segment(start, blk) = es3.eigenvalues();
        start = stop;
    }

    // Reorder columns to the fixed target sequence.
    const RealVector t3 = cartan_lambda3_diag_table();
    const RealVector t8 = cartan_lambda8_diag_table();
    Matrix ordered(8, 8);
    std::array<bool, 8> used{};
    for (int slot = 0; slot < 8; ++slot) {
        int pick = -1;
        for (int c = 0; c < 8; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            if (std::abs(l3(c) - t3(slot)) < 1e-9 && std::abs(l8(c) - t8(slot)) < 1e-9) {
                pick = c;
                break;
            }
        }
        if (pick < 0)
            throw std::runtime_error("simultaneous_diagonalization: joint spectrum mismatch");
        used[static_cast<std::size_t>(pick)] = true;
        ordered.col(slot) = v.col(pick);
    }

    CartanTransform ct;
    ct.V = ordered;
    ct.lambda3_diag = detail::real_diagonal_or_throw(
        ordered.adjoint() * adjoint[2] * ordered, 1e-10, "simultaneous_diagonalization");
    ct.lambda8_diag = detail::real_diagonal_or_throw(
        ordered.adjoint() * adjoint[7] * ordered, 1e-10, "simultaneous_diagonalization");
    return ct;
}

/// All eight Lambda'_i = V^dagger Lambda_i V.
inline GeneratorSet transformed_generators(const CartanTransform& ct,
                                           const GeneratorSet& adjoint)
{
    GeneratorSet set;
    set.dim = 8;
    set.label = RepLabel::Su3Adjoint;
    set.generators.reserve(8);
    for (const Matrix& g : adjoint.generators)
        set.generators.push_back(ct.V.adjoint() * g * ct.V);
    return set;
}

/// The primed adjoint generators as tabulated, for entrywise comparison.
inline GeneratorSet transformed_generators_table()
{
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r8 = 1.0 / std::sqrt(8.0);
    const double s38 = std::sqrt(3.0 / 8.0);

    GeneratorSet set;
    set.dim = 8;
    set.label = RepLabel::Su3Adjoint;
    set.generators.assign(8, Matrix::Zero(8, 8));
    auto& g = set.generators;

    auto herm = [](Matrix& m, int r, int c, Complex v) {
        m(r - 1, c - 1) = v;
        m(c - 1, r - 1) = std::conj(v);
    };

    herm(g[0], 1, 2, -0.5);
    herm(g[0], 3, 4, -kI * r2);
    herm(g[0], 4, 5, -kI * r2);
    herm(g[0], 7, 8, 0.5);

    herm(g[1], 1, 2, kI * 0.5);
    herm(g[1], 3, 4, -r2);
    herm(g[1], 4, 5, -r2);
    herm(g[1], 7, 8, kI * 0.5);

    g[2].diagonal().real() = cartan_lambda3_diag_table();

    herm(g[3], 1, 4, -kI * r8);
    herm(g[3], 1, 6, -kI * s38);
    herm(g[3], 2, 5, 0.5);
    herm(g[3], 3, 8, -0.5);
    herm(g[3], 4, 7, -kI * r8);
    herm(g[3], 6, 7, -kI * s38);

    herm(g[4], 1, 4, -r8);
    herm(g[4], 1, 6, -s38);
    herm(g[4], 2, 5, -kI * 0.5);
    herm(g[4], 3, 8, kI * 0.5);
    herm(g[4], 4, 7, -r8);
    herm(g[4], 6, 7, -s38);

    herm(g[5], 1, 3, 0.5);
    herm(g[5], 2, 4, kI * r8);
    herm(g[5], 2, 6, -kI * s38);
    herm(g[5], 4, 8, kI * r8);
    herm(g[5], 5, 7, -0.5);
    herm(g[5], 6, 8, -kI * s38);

    herm(g[6], 1, 3, -kI * 0.5);
    herm(g[6], 2, 4, r8);
    herm(g[6], 2, 6, -s38);
    herm(g[6], 4, 8, r8);
    herm(g[6], 5, 7, kI * 0.5);
    herm(g[6], 6, 8, -s38);

    g[7].diagonal().real() = cartan_lambda8_diag_table();

    return set;
}

/// One entry of disagreement between a computed matrix family and its
/// tabulated counterpart.
struct TableDiscrepancy {
    int generator;  // 1-based
    int row, col;   // 1-based
    Complex tabulated;
    Complex computed;
};

/// Entrywise differences (above tol) between V^dagger Lambda_i V and the
/// tabulated primed generators. Empty when the tables transcribe cleanly.
inline std::vector<TableDiscrepancy> transformed_generator_discrepancies(double tol = 1e-12)
{
    const GeneratorSet adj = adjoint_generators(structure_constants());
    const GeneratorSet computed = transformed_generators(cartan_transform(adj), adj);
    const GeneratorSet table = transformed_generators_table();
    std::vector<TableDiscrepancy> out;
    for (int i = 0; i < 8; ++i)
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                const Complex a = table.generators[static_cast<std::size_t>(i)](r, c);
                const Complex b = computed.generators[static_cast<std::size_t>(i)](r, c);
                if (std::abs(a - b) > tol)
                    out.push_back({i + 1, r + 1, c + 1, a, b});
            }
    return out;
}

/// The primed adjoint generators actually used downstream (exact algebra,
/// consistent with the tables wherever the tables are clean).
inline const GeneratorSet& su3_adjoint_primed()
{
    static const GeneratorSet set = [] {
        const GeneratorSet adj = adjoint_generators(structure_constants());
        return transformed_generators(cartan_transform(adj), adj);
    }();
    return set;
}

}  // namespace holonomy

#endif
