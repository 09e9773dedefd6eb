////////////////////////////////////////////////////////////////////////////////
// walpole.hpp
//
// Harmonic-induced (Walpole) representation of isotropic second-order
// elasticity tensors on the 18-dimensional minor-symmetric space:
//
//   * the orthogonal change of basis P = [P_H3 | P_str | P_H2 | P_rot]
//     (7+3+5+3 columns) from the spatial basis to the harmonic basis;
//   * the four projectors and the two str/rot coupling operators built from
//     its columns, together with their multiplication table;
//   * the five isotropic moduli (m_s3, m_s1, m_r2, m_r1, m_c1), extraction
//     and assembly;
//   * the Kelvin (spectral) decomposition and isotropy / singularity
//     diagnostics.
//
// Isotropic operators take the block form
//   P^T A P = diag(m_s3 Id7, [m_s1 Id3 | m_c1 Id3; m_c1 Id3 | m_r1 Id3]
//             coupling str/rot, m_r2 Id5)
// so the representation is diagonal exactly when the coupling modulus m_c1
// vanishes, which is the boundary where Walpole and Kelvin coincide.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include "sge/tensor_algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace sge {

// Raised when a product of Walpole generators matches no generator; this can
// only happen if the basis data is corrupted.
class ClassificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
struct IsotropicModuli {
    Scalar ms3; // septor (H^3) stretch-gradient modulus, eigenvalue of A
    Scalar ms1; // stretch-gradient vector modulus
    Scalar mr2; // rotation-gradient deviator modulus, eigenvalue of A
    Scalar mr1; // rotation-gradient vector modulus
    Scalar mc1; // stretch/rotation coupling modulus
};

using IsotropicModulid = IsotropicModuli<double>;

//==============================================================================
// Harmonic basis
//==============================================================================

// Orthogonal 18x18 change of basis whose columns are the orthonormal bases of
// the four harmonic subspaces: H^3 (columns 1-7), the stretch-gradient
// vectors (8-10), H^2 (11-15) and the rotation-gradient vectors (16-18).
template <typename Scalar = double>
class WalpoleBasis {
public:
    const Mat18<Scalar>& matrix() const { return p_; }

    auto h3_columns() const { return p_.template middleCols<7>(0); }
    auto str_columns() const { return p_.template middleCols<3>(7); }
    auto h2_columns() const { return p_.template middleCols<5>(10); }
    auto rot_columns() const { return p_.template middleCols<3>(15); }

    static WalpoleBasis make() {
        WalpoleBasis b;
        b.p_ = build();
        const Scalar dev = (b.p_.transpose() * b.p_ - Mat18<Scalar>::Identity())
                               .cwiseAbs()
                               .maxCoeff();
        if (dev > Scalar(Eigen::NumTraits<Scalar>::dummy_precision()))
            throw InvariantViolation("WalpoleBasis: P^T P deviates from identity by " +
                                     std::to_string(double(dev)));
        return b;
    }

private:
    static Mat18<Scalar> build() {
        const Scalar r2_5 = std::sqrt(Scalar(2) / Scalar(5));
        const Scalar r3_5 = std::sqrt(Scalar(3) / Scalar(5));
        const Scalar r2_15 = std::sqrt(Scalar(2) / Scalar(15));
        const Scalar r2_3 = std::sqrt(Scalar(2) / Scalar(3));
        const Scalar i2 = Scalar(1) / std::sqrt(Scalar(2));
        const Scalar i3 = Scalar(1) / std::sqrt(Scalar(3));
        const Scalar i5 = Scalar(1) / std::sqrt(Scalar(5));
        const Scalar i6 = Scalar(1) / std::sqrt(Scalar(6));
        const Scalar i10 = Scalar(1) / std::sqrt(Scalar(10));
        const Scalar i15 = Scalar(1) / std::sqrt(Scalar(15));

        Mat18<Scalar> p = Mat18<Scalar>::Zero();

        // H^3 block: one 5x2 pattern per privileged direction plus the
        // no-privileged-direction column on rows 16-18.
        for (int d = 0; d < 3; ++d) {
            const int r = 5 * d, c = 2 * d;
            p(r + 0, c + 0) = r2_5;
            p(r + 1, c + 0) = -i10;
            p(r + 2, c + 0) = -i5;
            p(r + 3, c + 0) = -i10;
            p(r + 4, c + 0) = -i5;
            p(r + 1, c + 1) = i6;
            p(r + 2, c + 1) = i3;
            p(r + 3, c + 1) = -i6;
            p(r + 4, c + 1) = -i3;
        }
        p(15, 6) = p(16, 6) = p(17, 6) = i3;

        // Stretch-gradient vector block.
        for (int d = 0; d < 3; ++d) {
            const int r = 5 * d, c = 7 + d;
            p(r + 0, c) = r3_5;
            p(r + 1, c) = i15;
            p(r + 2, c) = r2_15;
            p(r + 3, c) = i15;
            p(r + 4, c) = r2_15;
        }

        // H^2 block; signs alternate between privileged directions.
        const std::array<Scalar, 3> sgn = {Scalar(-1), Scalar(1), Scalar(-1)};
        for (int d = 0; d < 3; ++d) {
            const int r = 5 * d, c = 10 + d;
            p(r + 1, c) = sgn[std::size_t(d)] * i3;
            p(r + 2, c) = -sgn[std::size_t(d)] * i6;
            p(r + 3, c) = -sgn[std::size_t(d)] * i3;
            p(r + 4, c) = sgn[std::size_t(d)] * i6;
        }
        p(15, 13) = i2;
        p(17, 13) = -i2;
        p(15, 14) = -i6;
        p(16, 14) = r2_3;
        p(17, 14) = -i6;

        // Rotation-gradient vector block.
        for (int d = 0; d < 3; ++d) {
            const int r = 5 * d, c = 15 + d;
            p(r + 1, c) = -i3;
            p(r + 2, c) = i6;
            p(r + 3, c) = -i3;
            p(r + 4, c) = i6;
        }
        return p;
    }

    Mat18<Scalar> p_;
};

// Computed once, cached immutably.
template <typename Scalar = double>
const WalpoleBasis<Scalar>& walpole_basis() {
    static const WalpoleBasis<Scalar> basis = WalpoleBasis<Scalar>::make();
    return basis;
}

//==============================================================================
// Projector / coupling algebra
//==============================================================================

template <typename Scalar = double>
struct WalpoleOperators {
    Mat18<Scalar> p_h3;  // projector onto H^3
    Mat18<Scalar> p_str; // projector onto the stretch-gradient vectors
    Mat18<Scalar> p_h2;  // projector onto H^2
    Mat18<Scalar> p_rot; // projector onto the rotation-gradient vectors
    Mat18<Scalar> q_sr;  // coupling rot -> str, sum_i h_{7+i} h_{15+i}^T
    Mat18<Scalar> q_rs;  // coupling str -> rot, q_sr^T
};

template <typename Scalar = double>
const WalpoleOperators<Scalar>& walpole_operators() {
    static const WalpoleOperators<Scalar> ops = [] {
        const WalpoleBasis<Scalar>& b = walpole_basis<Scalar>();
        WalpoleOperators<Scalar> o;
        o.p_h3 = b.h3_columns() * b.h3_columns().transpose();
        o.p_str = b.str_columns() * b.str_columns().transpose();
        o.p_h2 = b.h2_columns() * b.h2_columns().transpose();
        o.p_rot = b.rot_columns() * b.rot_columns().transpose();
        o.q_sr = b.str_columns() * b.rot_columns().transpose();
        o.q_rs = b.rot_columns() * b.str_columns().transpose();
        return o;
    }();
    return ops;
}

enum class OperatorLabel { p_h3, p_h2, p_str, q_sr, q_rs, p_rot, zero };

inline std::string to_string(OperatorLabel l) {
    switch (l) {
    case OperatorLabel::p_h3: return "P_H3";
    case OperatorLabel::p_h2: return "P_H2";
    case OperatorLabel::p_str: return "P_str";
    case OperatorLabel::q_sr: return "Q_sr";
    case OperatorLabel::q_rs: return "Q_rs";
    case OperatorLabel::p_rot: return "P_rot";
    case OperatorLabel::zero: return "0";
    }
    return "?";
}

// Order of the generators in the multiplication table.
inline constexpr std::array<OperatorLabel, 6> kGeneratorOrder = {
    OperatorLabel::p_h3, OperatorLabel::p_h2,  OperatorLabel::p_str,
    OperatorLabel::q_sr, OperatorLabel::q_rs, OperatorLabel::p_rot,
};

using MultiplicationTable = std::array<std::array<OperatorLabel, 6>, 6>;

// Computes all 36 pairwise products of the generators and classifies each by
// Frobenius-nearest generator (or zero) within an absolute acceptance radius.
// A product that matches nothing signals corrupted basis data and throws.
template <typename Scalar = double>
MultiplicationTable multiplication_table() {
    const WalpoleOperators<Scalar>& o = walpole_operators<Scalar>();
    const std::array<const Mat18<Scalar>*, 6> gen = {&o.p_h3, &o.p_h2,  &o.p_str,
                                                     &o.q_sr, &o.q_rs, &o.p_rot};
    const Scalar radius = Scalar(Eigen::NumTraits<Scalar>::dummy_precision());
    MultiplicationTable table;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            const Mat18<Scalar> prod = (*gen[r]) * (*gen[c]);
            OperatorLabel best = OperatorLabel::zero;
            Scalar best_dist = prod.norm();
            for (std::size_t g = 0; g < 6; ++g) {
                const Scalar dist = (prod - *gen[g]).norm();
                if (dist < best_dist) {
                    best_dist = dist;
                    best = kGeneratorOrder[g];
                }
            }
            if (best_dist > radius)
                throw ClassificationFailure(
                    "multiplication_table: product " + to_string(kGeneratorOrder[r]) + "*" +
                    to_string(kGeneratorOrder[c]) + " matches no generator (distance " +
                    std::to_string(double(best_dist)) + ")");
            table[r][c] = best;
        }
    return table;
}

//==============================================================================
// Moduli
//==============================================================================

// Reads the five isotropic moduli from full-index components. The formulas
// are evaluated unconditionally; whether they are meaningful for a
// non-isotropic input is a separate question answered by is_isotropic.
template <typename Scalar>
IsotropicModuli<Scalar> extract_moduli(const Grad6<Scalar>& a) {
    const Scalar a111111 = a(0, 0, 0, 0, 0, 0);
    const Scalar a111221 = a(0, 0, 0, 1, 1, 0);
    const Scalar a122133 = a(0, 1, 1, 0, 2, 2);
    const Scalar a122331 = a(0, 1, 1, 2, 2, 0);
    const Scalar a221221 = a(1, 1, 0, 1, 1, 0);
    IsotropicModuli<Scalar> m;
    m.ms3 = a111111 - a111221 - Scalar(4) * a122133 - Scalar(2) * a122331;
    m.ms1 = a111111 + Scalar(2) / Scalar(3) * (a111221 + Scalar(4) * a122133 + Scalar(2) * a122331);
    m.mr2 = -a111111 / Scalar(2) - a111221 + Scalar(2) * a122133 + Scalar(4) * a122331 +
            Scalar(3) / Scalar(2) * a221221;
    m.mr1 = (-Scalar(3) * a111111 + Scalar(2) * a111221 + Scalar(20) * a122133 -
             Scalar(8) * a122331 + Scalar(9) * a221221) /
            Scalar(6);
    m.mc1 = std::sqrt(Scalar(5)) / Scalar(3) *
            (-Scalar(2) * a111221 + Scalar(4) * a122133 + Scalar(2) * a122331);
    return m;
}

// A = m_s3 P_H3 + m_s1 P_str + m_c1 (Q_sr + Q_rs) + m_r2 P_H2 + m_r1 P_rot.
template <typename Scalar>
Grad6<Scalar> assemble(const IsotropicModuli<Scalar>& m) {
    const WalpoleOperators<Scalar>& o = walpole_operators<Scalar>();
    return Grad6<Scalar>::from_mat18_unchecked(m.ms3 * o.p_h3 + m.ms1 * o.p_str +
                                               m.mc1 * (o.q_sr + o.q_rs) + m.mr2 * o.p_h2 +
                                               m.mr1 * o.p_rot);
}

// P^T A P: the matrix of A in the harmonic basis.
template <typename Scalar>
Mat18<Scalar> to_harmonic_basis(const Grad6<Scalar>& a) {
    const Mat18<Scalar>& p = walpole_basis<Scalar>().matrix();
    return p.transpose() * a.mat() * p;
}

//==============================================================================
// Spectral (Kelvin) decomposition
//==============================================================================

template <typename Scalar = double>
struct SpectralLine {
    Scalar value;
    int multiplicity;
};

// Eigenvalues of the symmetric 18x18 matrix, clustered with the given
// absolute tolerance after normalizing by the spectral radius, sorted
// descending.
template <typename Scalar>
std::vector<SpectralLine<Scalar>> kelvin_spectrum(const Grad6<Scalar>& a,
                                                  Scalar cluster_tol = Scalar(1e-9)) {
    Eigen::SelfAdjointEigenSolver<Mat18<Scalar>> solver(a.mat(), Eigen::EigenvaluesOnly);
    Vec18<Scalar> w = solver.eigenvalues().reverse();
    const Scalar radius = std::max(std::abs(w[0]), std::abs(w[17]));
    const Scalar gap = cluster_tol * std::max(Scalar(1), radius);
    std::vector<SpectralLine<Scalar>> lines;
    int i = 0;
    while (i < 18) {
        int j = i + 1;
        Scalar sum = w[i];
        while (j < 18 && w[i] - w[j] <= gap) sum += w[j++];
        lines.push_back({sum / Scalar(j - i), j - i});
        i = j;
    }
    return lines;
}

//==============================================================================
// Diagnostics
//==============================================================================

// True iff A is invariant under `trials` Haar-random rotations within
// tol * max(1, |A|_F).
template <typename Scalar>
bool is_isotropic(const Grad6<Scalar>& a, int trials, Scalar tol, std::uint64_t seed = 0) {
    if (trials < 1) throw std::invalid_argument("is_isotropic: trials must be >= 1");
    if (!(tol > Scalar(0))) throw std::invalid_argument("is_isotropic: tol must be positive");
    const Scalar bound = tol * std::max(Scalar(1), a.norm());
    RotationSampler<Scalar> sampler(seed);
    for (int t = 0; t < trials; ++t) {
        const Grad6<Scalar> rotated = rotate(sampler.next(), a);
        if ((rotated.mat() - a.mat()).norm() > bound) return false;
    }
    return true;
}

// Singular situations of the isotropic law: {m_s3 = 0; m_r2 = 0;
// m_s1 m_r1 - m_c1^2 = 0}, plus a positive-definiteness report.
template <typename Scalar = double>
struct SingularityFlags {
    bool septor_singular;       // |m_s3| <= tol
    bool deviator_singular;     // |m_r2| <= tol
    bool vector_block_singular; // |m_s1 m_r1 - m_c1^2| <= tol
    bool positive_definite;     // all Kelvin eigenvalues > tol

    bool any_singular() const {
        return septor_singular || deviator_singular || vector_block_singular;
    }
};

template <typename Scalar>
SingularityFlags<Scalar> singularity_flags(const IsotropicModuli<Scalar>& m, Scalar tol) {
    if (tol < Scalar(0)) throw std::invalid_argument("singularity_flags: tol must be >= 0");
    SingularityFlags<Scalar> f;
    f.septor_singular = std::abs(m.ms3) <= tol;
    f.deviator_singular = std::abs(m.mr2) <= tol;
    f.vector_block_singular = std::abs(m.ms1 * m.mr1 - m.mc1 * m.mc1) <= tol;
    // Eigenvalues of the assembled operator in closed form: m_s3 (x7),
    // m_r2 (x5) and the two eigenvalues of the coupled 2x2 vector block.
    const Scalar mid = (m.ms1 + m.mr1) / Scalar(2);
    const Scalar disc = std::hypot((m.ms1 - m.mr1) / Scalar(2), m.mc1);
    f.positive_definite = m.ms3 > tol && m.mr2 > tol && mid - disc > tol;
    return f;
}

// Relative magnitude of rotation-gradient vs stretch-gradient moduli,
// sqrt(m_r2^2 + m_r1^2) / sqrt(m_s3^2 + m_s1^2).
template <typename Scalar>
Scalar rotation_stretch_ratio(const IsotropicModuli<Scalar>& m) {
    const Scalar denom = std::hypot(m.ms3, m.ms1);
    if (denom == Scalar(0))
        throw std::domain_error("rotation_stretch_ratio: stretch moduli are both zero");
    return std::hypot(m.mr2, m.mr1) / denom;
}

// tau = A : eta in 18-dimensional coordinates.
template <typename Scalar>
Tensor3<Scalar> apply_law(const Grad6<Scalar>& a, const Tensor3<Scalar>& eta) {
    return Tensor3<Scalar>::from_vec18(a.mat() * eta.vec());
}

} // namespace sge
