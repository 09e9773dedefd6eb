////////////////////////////////////////////////////////////////////////////////
// tensor_algebra.hpp
//
// Value types for strain-gradient elasticity and their orthonormal matrix
// representations:
//
//   Sym2Tensor  second-order symmetric tensor (strain / stress)
//   Tensor3     third-order tensor with minor symmetry T_ijk = T_jik
//               (strain gradient eta, hyperstress tau)
//   Grad6       sixth-order tensor with (ij)k|(lm)n minor symmetries and the
//               major symmetry (second-order elasticity tensor A)
//   Rotation    proper orthogonal 3x3 matrix
//
// A Tensor3 is stored directly as its 18 orthonormal coordinates
//   v_a = T_ijk        if i = j
//   v_a = sqrt2 T_ijk  if i != j
// in the subscript order of the table below, and a Grad6 as the symmetric
// 18x18 matrix reached with the analogous {1, sqrt2, 2} factors. Euclidean
// norms of the coordinates equal Frobenius norms of the tensors.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace sge {

template <typename Scalar> using Vec3  = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat3  = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Vec6  = Eigen::Matrix<Scalar, 6, 1>;
template <typename Scalar> using Mat6  = Eigen::Matrix<Scalar, 6, 6>;
template <typename Scalar> using Vec18 = Eigen::Matrix<Scalar, 18, 1>;
template <typename Scalar> using Mat18 = Eigen::Matrix<Scalar, 18, 18>;

using Vec3d  = Vec3<double>;
using Mat3d  = Mat3<double>;
using Vec18d = Vec18<double>;
using Mat18d = Mat18<double>;

// Raised when ingested components break a required index symmetry.
class SymmetryViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a structural invariant of a constructed object fails.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relative tolerance against the Frobenius norm for symmetry checks on
// ingested raw components (user files carry rounded decimals).
inline constexpr double kSymmetryTol = 1e-10;

// The same tolerance widened for scalars coarser than double.
template <typename Scalar>
Scalar symmetry_tolerance() {
    return std::max(Scalar(kSymmetryTol), Scalar(100) * Eigen::NumTraits<Scalar>::epsilon());
}

// Three-to-one subscript correspondence (0-based). Entry a holds the
// representative triple (i,j,k) of coordinate a; the pair (ij) is unordered.
//
//   a   : 1   2   3   4   5   6   7   8   9   10  11  12  13  14  15  16  17  18
//   ijk : 111 221 122 331 133 222 112 121 332 233 333 113 131 223 232 123 132 231
inline constexpr std::array<std::array<int, 3>, 18> kSubscriptTable = {{
    {0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {2, 2, 0}, {0, 2, 2},
    {1, 1, 1}, {0, 0, 1}, {0, 1, 0}, {2, 2, 1}, {1, 2, 2},
    {2, 2, 2}, {0, 0, 2}, {0, 2, 0}, {1, 1, 2}, {1, 2, 1},
    {0, 1, 2}, {0, 2, 1}, {1, 2, 0},
}};

namespace detail {
inline constexpr std::array<int, 27> kVec18Lookup = [] {
    std::array<int, 27> m{};
    for (int a = 0; a < 18; ++a) {
        const auto& t = kSubscriptTable[std::size_t(a)];
        m[std::size_t(9 * t[0] + 3 * t[1] + t[2])] = a;
        m[std::size_t(9 * t[1] + 3 * t[0] + t[2])] = a;
    }
    return m;
}();
} // namespace detail

// Coordinate index for the (unordered) pair (i,j) and third subscript k.
inline constexpr int vec18_index(int i, int j, int k) {
    return detail::kVec18Lookup[std::size_t(9 * i + 3 * j + k)];
}

// sqrt2 factor of coordinate a: 1 on the (ii)k slots, sqrt2 off-diagonal.
template <typename Scalar>
Scalar vec18_factor(int a) {
    const auto& t = kSubscriptTable[std::size_t(a)];
    return t[0] == t[1] ? Scalar(1) : std::sqrt(Scalar(2));
}

// Levi-Civita symbol.
template <typename Scalar = double>
constexpr Scalar levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return Scalar(0);
    return (j - i + 3) % 3 == 1 ? Scalar(1) : Scalar(-1);
}

// Kronecker delta.
template <typename Scalar = double>
constexpr Scalar kronecker(int i, int j) {
    return i == j ? Scalar(1) : Scalar(0);
}

//==============================================================================
// Sym2Tensor
//==============================================================================

// Second-order symmetric tensor; symmetrized on construction.
template <typename Scalar = double>
class Sym2Tensor {
public:
    Sym2Tensor() : m_(Mat3<Scalar>::Zero()) {}
    explicit Sym2Tensor(const Mat3<Scalar>& m) : m_(Scalar(0.5) * (m + m.transpose())) {}

    static Sym2Tensor Identity() { return Sym2Tensor(Mat3<Scalar>::Identity()); }

    const Mat3<Scalar>& matrix() const { return m_; }
    Scalar operator()(int i, int j) const { return m_(i, j); }
    Scalar trace() const { return m_.trace(); }
    Scalar norm() const { return m_.norm(); }

    // Orthonormal (Mandel) coordinates: (11, 22, 33, sqrt2*23, sqrt2*13, sqrt2*12).
    Vec6<Scalar> vec() const {
        const Scalar s2 = std::sqrt(Scalar(2));
        Vec6<Scalar> v;
        v << m_(0, 0), m_(1, 1), m_(2, 2), s2 * m_(1, 2), s2 * m_(0, 2), s2 * m_(0, 1);
        return v;
    }
    static Sym2Tensor from_vec(const Vec6<Scalar>& v) {
        const Scalar is2 = Scalar(1) / std::sqrt(Scalar(2));
        Mat3<Scalar> m;
        m << v[0], is2 * v[5], is2 * v[4],
             is2 * v[5], v[1], is2 * v[3],
             is2 * v[4], is2 * v[3], v[2];
        return Sym2Tensor(m);
    }

    Sym2Tensor operator+(const Sym2Tensor& o) const { return Sym2Tensor(m_ + o.m_); }
    Sym2Tensor operator-(const Sym2Tensor& o) const { return Sym2Tensor(m_ - o.m_); }
    friend Sym2Tensor operator*(Scalar s, const Sym2Tensor& t) { return Sym2Tensor(s * t.m_); }

private:
    Mat3<Scalar> m_;
};

using Sym2Tensord = Sym2Tensor<double>;

//==============================================================================
// Tensor3
//==============================================================================

// Third-order tensor with the minor symmetry T_ijk = T_jik. Storage is the
// 18-vector of orthonormal coordinates itself, so the minor symmetry holds
// structurally and the subscript table is the single source of truth.
template <typename Scalar = double>
class Tensor3 {
public:
    Tensor3() : v_(Vec18<Scalar>::Zero()) {}

    static Tensor3 Zero() { return Tensor3(); }

    static Tensor3 from_vec18(const Vec18<Scalar>& v) {
        Tensor3 t;
        t.v_ = v;
        return t;
    }

    // Ingests 27 row-major components T[9i+3j+k]. The minor symmetry must
    // hold within kSymmetryTol relative to the Frobenius norm; the symmetric
    // part is stored.
    static Tensor3 from_components(const std::array<Scalar, 27>& c) {
        Scalar norm2 = 0;
        for (const Scalar x : c) norm2 += x * x;
        const Scalar tol = symmetry_tolerance<Scalar>() * std::max(Scalar(1), std::sqrt(norm2));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (std::abs(c[std::size_t(9 * i + 3 * j + k)] -
                                 c[std::size_t(9 * j + 3 * i + k)]) > tol)
                        throw SymmetryViolation(
                            "Tensor3: minor symmetry broken between (" + std::to_string(i + 1) +
                            std::to_string(j + 1) + std::to_string(k + 1) + ") and (" +
                            std::to_string(j + 1) + std::to_string(i + 1) +
                            std::to_string(k + 1) + ")");
        Tensor3 t;
        for (int a = 0; a < 18; ++a) {
            const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
            const Scalar sym = Scalar(0.5) * (c[std::size_t(9 * i + 3 * j + k)] +
                                              c[std::size_t(9 * j + 3 * i + k)]);
            t.v_[a] = vec18_factor<Scalar>(a) * sym;
        }
        return t;
    }

    Scalar operator()(int i, int j, int k) const {
        const int a = vec18_index(i, j, k);
        return v_[a] / vec18_factor<Scalar>(a);
    }

    // Sets T_ijk = T_jik = value.
    void set(int i, int j, int k, Scalar value) {
        const int a = vec18_index(i, j, k);
        v_[a] = vec18_factor<Scalar>(a) * value;
    }

    const Vec18<Scalar>& vec() const { return v_; }

    std::array<Scalar, 27> components() const {
        std::array<Scalar, 27> c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    c[std::size_t(9 * i + 3 * j + k)] = (*this)(i, j, k);
        return c;
    }

    Scalar norm() const { return v_.norm(); }

    Tensor3 operator+(const Tensor3& o) const { return from_vec18(v_ + o.v_); }
    Tensor3 operator-(const Tensor3& o) const { return from_vec18(v_ - o.v_); }
    Tensor3 operator-() const { return from_vec18(-v_); }
    friend Tensor3 operator*(Scalar s, const Tensor3& t) { return from_vec18(s * t.v_); }

private:
    Vec18<Scalar> v_;
};

using Tensor3d = Tensor3<double>;

//==============================================================================
// Grad6
//==============================================================================

// Sixth-order tensor A_(ij)k(lm)n with both minor symmetries and the major
// symmetry A_ijklmn = A_lmnijk, stored canonically as its symmetric 18x18
// matrix representation.
template <typename Scalar = double>
class Grad6 {
public:
    Grad6() : m_(Mat18<Scalar>::Zero()) {}

    static Grad6 Zero() { return Grad6(); }
    static Grad6 Identity() { return from_mat18_unchecked(Mat18<Scalar>::Identity()); }

    // The matrix must be symmetric within 1e-12 relative tolerance; the
    // symmetric part is stored.
    static Grad6 from_mat18(const Mat18<Scalar>& m) {
        const Scalar tol =
            Scalar(Eigen::NumTraits<Scalar>::dummy_precision()) * std::max(Scalar(1), m.norm());
        Eigen::Index r, c;
        const Scalar dev = (m - m.transpose().eval()).cwiseAbs().maxCoeff(&r, &c);
        if (dev > tol)
            throw SymmetryViolation("Grad6: 18x18 matrix not symmetric, entry (" +
                                    std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") vs (" + std::to_string(c + 1) + "," +
                                    std::to_string(r + 1) + ")");
        Grad6 g;
        g.m_ = Scalar(0.5) * (m + m.transpose());
        return g;
    }

    static Grad6 from_mat18_unchecked(const Mat18<Scalar>& m) {
        Grad6 g;
        g.m_ = m;
        return g;
    }

    // Ingests full components through a callable c(i,j,k,l,m,n) -> Scalar.
    // Checks the (ij), (lm) and major symmetries within kSymmetryTol relative
    // to the Frobenius norm, then encodes the symmetrized representative.
    template <typename Components>
    static Grad6 from_components(Components&& c) {
        Scalar norm2 = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        for (int m = 0; m < 3; ++m)
                            for (int n = 0; n < 3; ++n) {
                                const Scalar x = c(i, j, k, l, m, n);
                                norm2 += x * x;
                            }
        const Scalar tol = symmetry_tolerance<Scalar>() * std::max(Scalar(1), std::sqrt(norm2));
        auto index_string = [](int i, int j, int k, int l, int m, int n) {
            return std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) +
                   std::to_string(l + 1) + std::to_string(m + 1) + std::to_string(n + 1);
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        for (int m = 0; m < 3; ++m)
                            for (int n = 0; n < 3; ++n) {
                                const Scalar x = c(i, j, k, l, m, n);
                                if (std::abs(x - c(j, i, k, l, m, n)) > tol)
                                    throw SymmetryViolation(
                                        "Grad6: minor symmetry broken between A(" +
                                        index_string(i, j, k, l, m, n) + ") and A(" +
                                        index_string(j, i, k, l, m, n) + ")");
                                if (std::abs(x - c(i, j, k, m, l, n)) > tol)
                                    throw SymmetryViolation(
                                        "Grad6: minor symmetry broken between A(" +
                                        index_string(i, j, k, l, m, n) + ") and A(" +
                                        index_string(i, j, k, m, l, n) + ")");
                                if (std::abs(x - c(l, m, n, i, j, k)) > tol)
                                    throw SymmetryViolation(
                                        "Grad6: major symmetry broken between A(" +
                                        index_string(i, j, k, l, m, n) + ") and A(" +
                                        index_string(l, m, n, i, j, k) + ")");
                            }
        // Average over the symmetry orbit of the two representative triplets.
        Grad6 g;
        for (int a = 0; a < 18; ++a) {
            const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
            for (int b = a; b < 18; ++b) {
                const auto [l, m, n] = kSubscriptTable[std::size_t(b)];
                const Scalar sym =
                    Scalar(0.125) *
                    (c(i, j, k, l, m, n) + c(j, i, k, l, m, n) + c(i, j, k, m, l, n) +
                     c(j, i, k, m, l, n) + c(l, m, n, i, j, k) + c(m, l, n, i, j, k) +
                     c(l, m, n, j, i, k) + c(m, l, n, j, i, k));
                const Scalar f = vec18_factor<Scalar>(a) * vec18_factor<Scalar>(b);
                g.m_(a, b) = f * sym;
                g.m_(b, a) = g.m_(a, b);
            }
        }
        return g;
    }

    // Full-index component with the paper's A_(ij)k(lm)n convention.
    Scalar operator()(int i, int j, int k, int l, int m, int n) const {
        const int a = vec18_index(i, j, k);
        const int b = vec18_index(l, m, n);
        return m_(a, b) / (vec18_factor<Scalar>(a) * vec18_factor<Scalar>(b));
    }

    const Mat18<Scalar>& mat() const { return m_; }

    Scalar norm() const { return m_.norm(); }

    Grad6 operator+(const Grad6& o) const { return from_mat18_unchecked(m_ + o.m_); }
    Grad6 operator-(const Grad6& o) const { return from_mat18_unchecked(m_ - o.m_); }
    friend Grad6 operator*(Scalar s, const Grad6& g) { return from_mat18_unchecked(s * g.m_); }

private:
    Mat18<Scalar> m_;
};

using Grad6d = Grad6<double>;

//==============================================================================
// Rotation
//==============================================================================

template <typename Scalar = double>
class Rotation {
public:
    // Validates Q^T Q = I and det Q = 1 within 1e-12.
    explicit Rotation(const Mat3<Scalar>& q) : q_(q) {
        const Scalar tol = Scalar(Eigen::NumTraits<Scalar>::dummy_precision());
        if ((q.transpose() * q - Mat3<Scalar>::Identity()).cwiseAbs().maxCoeff() > tol)
            throw InvariantViolation("Rotation: matrix is not orthogonal");
        if (std::abs(q.determinant() - Scalar(1)) > tol)
            throw InvariantViolation("Rotation: determinant is not +1");
    }

    static Rotation Identity() { return Rotation(Mat3<Scalar>::Identity()); }

    static Rotation about_axis(const Vec3<Scalar>& axis, Scalar angle) {
        return Rotation(Eigen::AngleAxis<Scalar>(angle, axis.normalized()).toRotationMatrix());
    }

    const Mat3<Scalar>& matrix() const { return q_; }
    Scalar operator()(int i, int j) const { return q_(i, j); }

    Rotation inverse() const { return Rotation(Mat3<Scalar>(q_.transpose())); }

private:
    Mat3<Scalar> q_;
};

using Rotationd = Rotation<double>;

// Haar-uniform rotation stream. Rotations are built from unit quaternions
// drawn with Shoemake's subgroup algorithm; the uniform deviates come from a
// std::mt19937_64 whose output is mapped to [0,1) by taking the top 53 bits,
// so a given seed reproduces the same stream on any conforming platform.
template <typename Scalar = double>
class RotationSampler {
public:
    explicit RotationSampler(std::uint64_t seed) : engine_(seed) {}

    Rotation<Scalar> next() {
        const Scalar u1 = uniform(), u2 = uniform(), u3 = uniform();
        const Scalar two_pi = Scalar(2) * Scalar(EIGEN_PI);
        Eigen::Quaternion<Scalar> q(std::sqrt(u1) * std::cos(two_pi * u3),
                                    std::sqrt(Scalar(1) - u1) * std::sin(two_pi * u2),
                                    std::sqrt(Scalar(1) - u1) * std::cos(two_pi * u2),
                                    std::sqrt(u1) * std::sin(two_pi * u3));
        return Rotation<Scalar>(q.toRotationMatrix());
    }

private:
    Scalar uniform() { return Scalar(engine_() >> 11) * Scalar(0x1.0p-53); }

    std::mt19937_64 engine_;
};

template <typename Scalar = double>
Rotation<Scalar> random_rotation(std::uint64_t seed) {
    return RotationSampler<Scalar>(seed).next();
}

//==============================================================================
// Rotation actions
//==============================================================================

// T'_ijk = Q_ia Q_jb Q_kc T_abc
template <typename Scalar>
Tensor3<Scalar> rotate(const Rotation<Scalar>& q, const Tensor3<Scalar>& t) {
    const Mat3<Scalar>& Q = q.matrix();
    const auto c = t.components();
    Tensor3<Scalar> out;
    for (int a = 0; a < 18; ++a) {
        const auto [i, j, k] = kSubscriptTable[std::size_t(a)];
        Scalar sum = 0;
        for (int p = 0; p < 3; ++p)
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s)
                    sum += Q(i, p) * Q(j, r) * Q(k, s) * c[std::size_t(9 * p + 3 * r + s)];
        out.set(i, j, k, sum);
    }
    return out;
}

// Orthogonal 18x18 matrix of the rotation action in the orthonormal basis:
// rep18(Q) vec(T) = vec(rotate(Q, T)).
template <typename Scalar>
Mat18<Scalar> rep18(const Rotation<Scalar>& q) {
    Mat18<Scalar> r;
    for (int b = 0; b < 18; ++b) {
        Vec18<Scalar> e = Vec18<Scalar>::Zero();
        e[b] = Scalar(1);
        r.col(b) = rotate(q, Tensor3<Scalar>::from_vec18(e)).vec();
    }
    return r;
}

// A'_ijklmn = Q_ia Q_jb Q_kc Q_ld Q_me Q_nf A_abcdef, carried out as
// conjugation of the 18x18 matrix by rep18(Q).
template <typename Scalar>
Grad6<Scalar> rotate(const Rotation<Scalar>& q, const Grad6<Scalar>& a) {
    const Mat18<Scalar> r = rep18(q);
    return Grad6<Scalar>::from_mat18_unchecked(r * a.mat() * r.transpose());
}

} // namespace sge
