////////////////////////////////////////////////////////////////////////////////
// harmonic_parts.hpp
//
// Explicit harmonic decomposition of third-order strain-gradient tensors
// under the kinematic (stretch-gradient / rotation-gradient) interpretation,
// and the classical second-order counterpart.
//
// A minor-symmetric T splits GL(3)-invariantly into its complete
// symmetrization S (stretch gradient, 10-dimensional) and the traceless
// carrier R_ij = eps_ipq T_jpq (rotation gradient, 8-dimensional), with
//   T_ijk = S_ijk + (1/3)(eps_jkl R_li + eps_ikl R_lj).
// Removing traces then yields the four mutually orthogonal harmonic parts
//   h3 (septor, 7), h2 (pseudo-deviator, 5), v_str (3), v_rot (3).
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include "sge/tensor_algebra.hpp"

namespace sge {

template <typename Scalar = double>
struct SchurSplit {
    Tensor3<Scalar> sym;                          // complete symmetrization S_(ijk)
    Mat3<Scalar> rot = Mat3<Scalar>::Zero();      // traceless carrier R_ij = eps_ipq T_jpq
};

template <typename Scalar = double>
struct HarmonicPartsT3 {
    Tensor3<Scalar> h3;                           // totally symmetric traceless
    Mat3<Scalar> h2 = Mat3<Scalar>::Zero();       // symmetric traceless
    Vec3<Scalar> v_str = Vec3<Scalar>::Zero();
    Vec3<Scalar> v_rot = Vec3<Scalar>::Zero();
};

// Embedding of a second-order carrier back into the minor-symmetric space:
// T_ijk = (1/3)(eps_jkl R_li + eps_ikl R_lj).
template <typename Scalar>
Tensor3<Scalar> embed_rotation_carrier(const Mat3<Scalar>& r) {
    Tensor3<Scalar> t;
    const Scalar third = Scalar(1) / Scalar(3);
    for (int a = 0; a < 18; ++a) {
        const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
        Scalar sum = 0;
        for (int l = 0; l < 3; ++l)
            sum += levi_civita<Scalar>(j, k, l) * r(l, i) + levi_civita<Scalar>(i, k, l) * r(l, j);
        t.set(i, j, k, third * sum);
    }
    return t;
}

// Embedding of the stretch-gradient vector:
// T_ijk = (1/5)(v_i d_jk + v_j d_ik + v_k d_ij).
template <typename Scalar>
Tensor3<Scalar> embed_stretch_vector(const Vec3<Scalar>& v) {
    Tensor3<Scalar> t;
    const Scalar fifth = Scalar(1) / Scalar(5);
    for (int a = 0; a < 18; ++a) {
        const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
        const Scalar sum = v[i] * kronecker<Scalar>(j, k) + v[j] * kronecker<Scalar>(i, k) +
                           v[k] * kronecker<Scalar>(i, j);
        t.set(i, j, k, fifth * sum);
    }
    return t;
}

// Embedding of the rotation-gradient vector:
// T_ijk = (1/3)(2 v_k d_ij - v_j d_ik - v_i d_jk).
template <typename Scalar>
Tensor3<Scalar> embed_rotation_vector(const Vec3<Scalar>& v) {
    Tensor3<Scalar> t;
    const Scalar third = Scalar(1) / Scalar(3);
    for (int a = 0; a < 18; ++a) {
        const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
        const Scalar sum = Scalar(2) * v[k] * kronecker<Scalar>(i, j) -
                           v[j] * kronecker<Scalar>(i, k) - v[i] * kronecker<Scalar>(j, k);
        t.set(i, j, k, third * sum);
    }
    return t;
}

// GL(3)-invariant split into stretch-gradient and rotation-gradient carriers.
template <typename Scalar>
SchurSplit<Scalar> schur_split(const Tensor3<Scalar>& t) {
    SchurSplit<Scalar> out;
    const Scalar third = Scalar(1) / Scalar(3);
    for (int a = 0; a < 18; ++a) {
        const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
        out.sym.set(i, j, k, third * (t(i, j, k) + t(k, i, j) + t(j, k, i)));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar sum = 0;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    sum += levi_civita<Scalar>(i, p, q) * t(j, p, q);
            out.rot(i, j) = sum;
        }
    return out;
}

// Harmonic decomposition of T into (h3, h2, v_str, v_rot):
//   v_str_i = S_ppi = (1/3)(T_ppi + 2 T_ipp)
//   h3      = S - (1/5)(v_str (x) d, symmetrized)
//   v_rot_i = (1/2)(T_ppi - T_ipp)
//   h2      = sym(R)
template <typename Scalar>
HarmonicPartsT3<Scalar> decompose_t3(const Tensor3<Scalar>& t) {
    const SchurSplit<Scalar> split = schur_split(t);
    HarmonicPartsT3<Scalar> p;

    Vec3<Scalar> t_ppi = Vec3<Scalar>::Zero(), t_ipp = Vec3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i)
        for (int q = 0; q < 3; ++q) {
            t_ppi[i] += t(q, q, i);
            t_ipp[i] += t(i, q, q);
        }
    p.v_str = (t_ppi + Scalar(2) * t_ipp) / Scalar(3);
    p.v_rot = Scalar(0.5) * (t_ppi - t_ipp);
    p.h3 = split.sym - embed_stretch_vector(p.v_str);
    p.h2 = Scalar(0.5) * (split.rot + split.rot.transpose());
    return p;
}

namespace detail {

// Largest deviation of h3 from total symmetry and tracelessness.
template <typename Scalar>
Scalar h3_defect(const Tensor3<Scalar>& h) {
    Scalar dev = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                dev = std::max(dev, std::abs(h(i, j, k) - h(i, k, j)));
    for (int k = 0; k < 3; ++k) {
        Scalar tr = 0;
        for (int q = 0; q < 3; ++q) tr += h(q, q, k);
        dev = std::max(dev, std::abs(tr));
    }
    return dev;
}

} // namespace detail

// Sum of the four embedded parts. Throws InvariantViolation if h3 is not a
// totally symmetric traceless tensor or h2 is not symmetric traceless
// (beyond 1e-10 relative).
template <typename Scalar>
Tensor3<Scalar> reconstruct_t3(const HarmonicPartsT3<Scalar>& p) {
    const Scalar tol = symmetry_tolerance<Scalar>() * std::max(Scalar(1), p.h3.norm() + p.h2.norm());
    if (detail::h3_defect(p.h3) > tol)
        throw InvariantViolation("reconstruct_t3: h3 is not totally symmetric traceless");
    if ((p.h2 - p.h2.transpose()).norm() > tol || std::abs(p.h2.trace()) > tol)
        throw InvariantViolation("reconstruct_t3: h2 is not symmetric traceless");
    return p.h3 + embed_stretch_vector(p.v_str) + embed_rotation_carrier(p.h2) +
           embed_rotation_vector(p.v_rot);
}

//==============================================================================
// Classical (first-order) elasticity
//==============================================================================

template <typename Scalar = double>
struct Sym2Split {
    Sym2Tensor<Scalar> dev;
    Sym2Tensor<Scalar> sph;
};

// Deviatoric / spherical split of a symmetric second-order tensor.
template <typename Scalar>
Sym2Split<Scalar> split_sym2(const Sym2Tensor<Scalar>& e) {
    Sym2Split<Scalar> s;
    s.sph = Sym2Tensor<Scalar>(Mat3<Scalar>(e.trace() / Scalar(3) * Mat3<Scalar>::Identity()));
    s.dev = e - s.sph;
    return s;
}

template <typename Scalar = double>
struct ClassicalModuli {
    Scalar k_bulk;
    Scalar g_shear;
};

// C = 3K P_H0 + 2G P_H2 as a 6x6 matrix in the Mandel basis
// (11, 22, 33, sqrt2*23, sqrt2*13, sqrt2*12).
template <typename Scalar>
Mat6<Scalar> classical_isotropic(const ClassicalModuli<Scalar>& m) {
    Vec6<Scalar> sph = Vec6<Scalar>::Zero();
    sph[0] = sph[1] = sph[2] = Scalar(1) / std::sqrt(Scalar(3));
    const Mat6<Scalar> p_h0 = sph * sph.transpose();
    const Mat6<Scalar> p_h2 = Mat6<Scalar>::Identity() - p_h0;
    return Scalar(3) * m.k_bulk * p_h0 + Scalar(2) * m.g_shear * p_h2;
}

// Orthonormal basis of S^2(R^3) adapted to its harmonic decomposition:
// column 1 spans the spherical (H^0) part, columns 2..6 the deviators (H^2).
// In this basis classical_isotropic is diagonal: diag(3K, 2G x 5).
template <typename Scalar = double>
Mat6<Scalar> classical_harmonic_basis() {
    const Scalar is2 = Scalar(1) / std::sqrt(Scalar(2));
    const Scalar is3 = Scalar(1) / std::sqrt(Scalar(3));
    const Scalar is6 = Scalar(1) / std::sqrt(Scalar(6));
    Mat6<Scalar> p = Mat6<Scalar>::Zero();
    p.col(0) << is3, is3, is3, 0, 0, 0;                        // I / sqrt3
    p.col(1) << is2, -is2, 0, 0, 0, 0;                         // (e1e1 - e2e2) / sqrt2
    p.col(2) << is6, is6, Scalar(-2) * is6, 0, 0, 0;           // (e1e1 + e2e2 - 2 e3e3) / sqrt6
    p.col(3)[3] = Scalar(1);                                   // sym(e2 (x) e3)
    p.col(4)[4] = Scalar(1);                                   // sym(e1 (x) e3)
    p.col(5)[5] = Scalar(1);                                   // sym(e1 (x) e2)
    return p;
}

// sigma = C : eps in Mandel coordinates.
template <typename Scalar>
Sym2Tensor<Scalar> apply_classical(const Mat6<Scalar>& c, const Sym2Tensor<Scalar>& e) {
    return Sym2Tensor<Scalar>::from_vec(c * e.vec());
}

} // namespace sge
