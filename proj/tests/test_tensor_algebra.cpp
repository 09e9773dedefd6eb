#include "sge/tensor_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace sge;

namespace {

std::array<double, 27> zero27() {
    std::array<double, 27> c{};
    return c;
}

Tensor3d random_t3(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec18d v;
    for (int i = 0; i < 18; ++i) v[i] = normal(rng);
    return Tensor3d::from_vec18(v);
}

// Full 729-component container with all index symmetries imposed, for
// building Grad6 inputs and as an independent contraction oracle.
struct FullGrad6 {
    std::array<double, 729> a{};

    static std::size_t idx(int i, int j, int k, int l, int m, int n) {
        return std::size_t((((((i * 3) + j) * 3 + k) * 3 + l) * 3 + m) * 3 + n);
    }
    double operator()(int i, int j, int k, int l, int m, int n) const {
        return a[idx(i, j, k, l, m, n)];
    }
    // Sets the full symmetry orbit of one representative.
    void set(int i, int j, int k, int l, int m, int n, double v) {
        for (auto [p, q] : {std::pair{i, j}, std::pair{j, i}})
            for (auto [r, s] : {std::pair{l, m}, std::pair{m, l}}) {
                a[idx(p, q, k, r, s, n)] = v;
                a[idx(r, s, n, p, q, k)] = v;
            }
    }
    static FullGrad6 from(const Grad6d& g) {
        FullGrad6 f;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        for (int m = 0; m < 3; ++m)
                            for (int n = 0; n < 3; ++n)
                                f.a[idx(i, j, k, l, m, n)] = g(i, j, k, l, m, n);
        return f;
    }
};

Mat18d random_sym18(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Mat18d m;
    for (int r = 0; r < 18; ++r)
        for (int c = 0; c < 18; ++c) m(r, c) = normal(rng);
    return 0.5 * (m + m.transpose()).eval();
}

} // namespace

TEST_CASE("subscript table") {
    CHECK(vec18_index(0, 0, 0) == 0);  // 111 -> alpha 1
    CHECK(vec18_index(0, 0, 1) == 6);  // 112 -> alpha 7
    CHECK(vec18_index(0, 1, 1) == 2);  // 122 -> alpha 3
    CHECK(vec18_index(1, 0, 1) == 2);  // pair is unordered
    CHECK(vec18_index(1, 2, 0) == 17); // 231 -> alpha 18
    // all 18 slots covered
    std::array<bool, 18> seen{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) seen[std::size_t(vec18_index(i, j, k))] = true;
    for (bool b : seen) CHECK(b);
}

TEST_CASE("tensor3 coordinates: diagonal and off-diagonal factors") {
    Tensor3d t;
    t.set(0, 0, 1, 1.0); // T_112 = 1
    CHECK(t.vec()[6] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.vec().cwiseAbs().sum() == doctest::Approx(1.0));

    Tensor3d u;
    u.set(0, 1, 1, 1.0); // T_122 = T_212 = 1
    CHECK(u.vec()[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(u(0, 1, 1) == doctest::Approx(1.0));
    CHECK(u(1, 0, 1) == doctest::Approx(1.0));

    CHECK(Tensor3d().vec().norm() == 0.0);
}

TEST_CASE("tensor3 codec round trip and isometry") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 50; ++n) {
        const Tensor3d t = random_t3(rng);
        const Tensor3d back = Tensor3d::from_components(t.components());
        CHECK((back.vec() - t.vec()).cwiseAbs().maxCoeff() < 1e-15);

        // Frobenius inner product equals the 18-vector inner product
        const Tensor3d s = random_t3(rng);
        double frob = 0;
        const auto cs = s.components(), ct = t.components();
        for (int i = 0; i < 27; ++i) frob += cs[std::size_t(i)] * ct[std::size_t(i)];
        CHECK(frob == doctest::Approx(s.vec().dot(t.vec())).epsilon(1e-13));
    }
}

TEST_CASE("tensor3 rejects broken minor symmetry") {
    auto c = zero27();
    c[std::size_t(9 * 0 + 3 * 1 + 0)] = 1.0; // T_121
    c[std::size_t(9 * 1 + 3 * 0 + 0)] = 0.9; // T_211 differs
    CHECK_THROWS_WITH_AS(Tensor3d::from_components(c) /**/,
                         doctest::Contains("minor symmetry"), SymmetryViolation);
}

TEST_CASE("grad6 coordinates: factor pattern {1, sqrt2, 2}") {
    FullGrad6 f;
    f.set(0, 0, 0, 0, 0, 0, 1.0); // A_111111
    const Grad6d a = Grad6d::from_components(f);
    CHECK(a.mat()(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

    FullGrad6 g;
    g.set(0, 1, 1, 0, 2, 2, 1.0); // A_122133: both pairs off-diagonal
    const Grad6d b = Grad6d::from_components(g);
    CHECK(b.mat()(2, 4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(b.mat()(4, 2) == doctest::Approx(2.0).epsilon(1e-15));

    FullGrad6 h;
    h.set(0, 0, 0, 1, 1, 0, 1.0); // A_111221: both pairs diagonal
    const Grad6d c = Grad6d::from_components(h);
    CHECK(c.mat()(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.mat()(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("grad6 codec round trip") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 10; ++n) {
        const Grad6d a = Grad6d::from_mat18(random_sym18(rng));
        const Grad6d back = Grad6d::from_components(FullGrad6::from(a));
        CHECK((back.mat() - a.mat()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("grad6 rejects broken symmetries") {
    Mat18d m = Mat18d::Identity();
    m(0, 1) = 0.5; // asymmetric
    CHECK_THROWS_WITH_AS(Grad6d::from_mat18(m), doctest::Contains("(1,2)"), SymmetryViolation);

    FullGrad6 f;
    f.set(0, 0, 0, 1, 1, 0, 1.0);
    f.a[FullGrad6::idx(0, 0, 0, 1, 1, 0)] = 2.0; // break major symmetry orbit
    CHECK_THROWS_AS(Grad6d::from_components(f), SymmetryViolation);
}

TEST_CASE("constitutive contraction matches matrix form") {
    std::mt19937_64 rng(13);
    const Grad6d a = Grad6d::from_mat18(random_sym18(rng));
    const FullGrad6 f = FullGrad6::from(a);
    const Tensor3d eta = random_t3(rng), etap = random_t3(rng);

    // <A:eta, eta'> in raw indices
    double lhs = 0;
    const auto ce = eta.components(), cp = etap.components();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n)
                            lhs += cp[std::size_t(9 * i + 3 * j + k)] * f(i, j, k, l, m, n) *
                                   ce[std::size_t(9 * l + 3 * m + n)];
    const double rhs = etap.vec().dot(a.mat() * eta.vec());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("rotation construction and validation") {
    CHECK_NOTHROW(Rotationd::Identity());
    CHECK_NOTHROW(Rotationd::about_axis(Vec3d(0, 0, 1), 0.3));
    Mat3d bad = Mat3d::Identity();
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(Rotationd{bad}, InvariantViolation);
    // improper rotation rejected
    Mat3d refl = Mat3d::Identity();
    refl(2, 2) = -1.0;
    CHECK_THROWS_AS(Rotationd{refl}, InvariantViolation);
}

TEST_CASE("rotate tensor3: identity, zero, quarter turn") {
    std::mt19937_64 rng(17);
    const Tensor3d t = random_t3(rng);
    CHECK((rotate(Rotationd::Identity(), t).vec() - t.vec()).norm() < 1e-15);
    CHECK(rotate(random_rotation(3), Tensor3d()).vec().norm() == 0.0);

    // z-rotation by pi/2 maps e1 to e2, so e1^3 goes to e2^3
    Tensor3d e1cube;
    e1cube.set(0, 0, 0, 1.0);
    const Tensor3d r = rotate(Rotationd::about_axis(Vec3d(0, 0, 1), EIGEN_PI / 2), e1cube);
    CHECK(r(1, 1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(r.norm() - 1.0) < 1e-14);

    for (int n = 0; n < 20; ++n) {
        const Tensor3d s = random_t3(rng);
        const Rotationd q = random_rotation(std::uint64_t(n));
        CHECK(std::abs(rotate(q, s).norm() - s.norm()) < 1e-13);
    }
}

TEST_CASE("rep18 is an orthogonal representation") {
    const Rotationd q1 = random_rotation(5), q2 = random_rotation(6);
    const Mat18d r1 = rep18(q1), r2 = rep18(q2);
    CHECK((r1.transpose() * r1 - Mat18d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
    // homomorphism: rep18(q1 q2) = rep18(q1) rep18(q2)
    const Rotationd q12(Mat3d(q1.matrix() * q2.matrix()));
    CHECK((rep18(q12) - r1 * r2).cwiseAbs().maxCoeff() < 1e-13);
    // equivariance with the codec
    std::mt19937_64 rng(19);
    const Tensor3d t = random_t3(rng);
    CHECK((rotate(q1, t).vec() - r1 * t.vec()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("rotate grad6 agrees with the six-fold contraction oracle") {
    std::mt19937_64 rng(23);
    const Grad6d a = Grad6d::from_mat18(random_sym18(rng));
    const Rotationd q = random_rotation(29);
    const Grad6d rotated = rotate(q, a);

    const FullGrad6 f = FullGrad6::from(a);
    const Mat3d& Q = q.matrix();
    double err = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n) {
                            double sum = 0;
                            for (int a1 = 0; a1 < 3; ++a1)
                                for (int b = 0; b < 3; ++b)
                                    for (int c = 0; c < 3; ++c)
                                        for (int d = 0; d < 3; ++d)
                                            for (int e = 0; e < 3; ++e)
                                                for (int g = 0; g < 3; ++g)
                                                    sum += Q(i, a1) * Q(j, b) * Q(k, c) *
                                                           Q(l, d) * Q(m, e) * Q(n, g) *
                                                           f(a1, b, c, d, e, g);
                            err = std::max(err, std::abs(sum - rotated(i, j, k, l, m, n)));
                        }
    CHECK(err < 1e-12);

    // orthogonal action preserves the Frobenius norm
    CHECK(std::abs(rotated.norm() - a.norm()) < 1e-12);
    CHECK((rotate(Rotationd::Identity(), a).mat() - a.mat()).norm() < 1e-14);
}

TEST_CASE("random_rotation: determinism and Haar statistics") {
    const Rotationd a = random_rotation(0), b = random_rotation(0);
    CHECK((a.matrix() - b.matrix()).norm() == 0.0);
    const Rotationd c = random_rotation(1);
    CHECK((a.matrix() - c.matrix()).norm() > 1e-3);

    RotationSampler<double> sampler(42);
    Mat3d mean = Mat3d::Zero();
    const int samples = 10000;
    for (int n = 0; n < samples; ++n) {
        const Rotationd q = sampler.next();
        CHECK((q.matrix().transpose() * q.matrix() - Mat3d::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
        mean += q.matrix();
    }
    mean /= double(samples);
    CHECK(mean.cwiseAbs().maxCoeff() < 0.05);
}
