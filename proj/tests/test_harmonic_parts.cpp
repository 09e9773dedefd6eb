#include "sge/harmonic_parts.hpp"

#include <doctest.h>

#include <random>

using namespace sge;

namespace {

Tensor3d random_t3(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec18d v;
    for (int i = 0; i < 18; ++i) v[i] = normal(rng);
    return Tensor3d::from_vec18(v);
}

Tensor3d delta_times(const Vec3d& v) {
    Tensor3d t;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t.set(i, j, k, double(i == j) * v[k]);
    return t;
}

Mat3d rotate_mat3(const Rotationd& q, const Mat3d& m) {
    return q.matrix() * m * q.matrix().transpose();
}

} // namespace

TEST_CASE("schur split: symmetric fixed points and carriers") {
    Tensor3d e1cube;
    e1cube.set(0, 0, 0, 1.0);
    const auto s = schur_split(e1cube);
    CHECK((s.sym.vec() - e1cube.vec()).norm() < 1e-15);
    CHECK(s.rot.norm() < 1e-15);

    // T_ijk = d_ij v_k with v = e3
    const Vec3d v(0, 0, 1);
    const auto sv = schur_split(delta_times(v));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(sv.sym(i, j, k) ==
                      doctest::Approx((double(i == j) * v[k] + double(k == i) * v[j] +
                                       double(j == k) * v[i]) /
                                      3.0)
                          .epsilon(1e-14));

    // the carrier R is traceless for any input
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const auto sp = schur_split(random_t3(rng));
        CHECK(std::abs(sp.rot.trace()) < 1e-13);
    }
}

TEST_CASE("schur split reconstruction identity") {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 50; ++n) {
        const Tensor3d t = random_t3(rng);
        const auto s = schur_split(t);
        const Tensor3d back = s.sym + embed_rotation_carrier(s.rot);
        CHECK((back.vec() - t.vec()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("stretch and rotation carriers span complementary subspaces") {
    // 10 = dim S^3(R^3) embedded symmetric tensors
    Eigen::Matrix<double, 18, 10> sym_basis;
    int col = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = j; k < 3; ++k) {
                Tensor3d t;
                t.set(i, j, k, 1.0);
                sym_basis.col(col++) = schur_split(t).sym.vec();
            }
    REQUIRE(col == 10);
    // 8 = dim of traceless 3x3 carriers
    Eigen::Matrix<double, 18, 8> rot_basis;
    col = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 2 && j == 2) continue;
            Mat3d r = Mat3d::Zero();
            r(i, j) = 1.0;
            if (i == j) r(2, 2) = -1.0;
            rot_basis.col(col++) = embed_rotation_carrier(r).vec();
        }
    REQUIRE(col == 8);

    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(sym_basis).rank() == 10);
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(rot_basis).rank() == 8);
    Eigen::MatrixXd both(18, 18);
    both << sym_basis, rot_basis;
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(both).rank() == 18);
}

TEST_CASE("decompose: elementary examples") {
    Tensor3d e1cube;
    e1cube.set(0, 0, 0, 1.0);
    const auto p = decompose_t3(e1cube);
    CHECK((p.v_str - Vec3d(1, 0, 0)).norm() < 1e-15);
    CHECK(p.v_rot.norm() < 1e-15);
    CHECK(p.h2.norm() < 1e-15);
    CHECK(p.h3(0, 0, 0) == doctest::Approx(0.4).epsilon(1e-14)); // 1 - 3/5

    const Vec3d v(0.3, -1.2, 2.0);
    const auto pv = decompose_t3(delta_times(v));
    CHECK((pv.v_str - 5.0 / 3.0 * v).norm() < 1e-14);
    CHECK((pv.v_rot - v).norm() < 1e-14);

    const auto pz = decompose_t3(Tensor3d());
    CHECK(pz.h3.norm() == 0.0);
    CHECK(pz.h2.norm() == 0.0);
    CHECK(pz.v_str.norm() == 0.0);
    CHECK(pz.v_rot.norm() == 0.0);
}

TEST_CASE("decompose yields valid harmonic parts") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 50; ++n) {
        const auto p = decompose_t3(random_t3(rng));
        // h3 totally symmetric and traceless
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    CHECK(p.h3(i, j, k) == doctest::Approx(p.h3(i, k, j)).epsilon(1e-12));
        for (int k = 0; k < 3; ++k) {
            double tr = 0;
            for (int q = 0; q < 3; ++q) tr += p.h3(q, q, k);
            CHECK(std::abs(tr) < 1e-13);
        }
        CHECK((p.h2 - p.h2.transpose()).norm() < 1e-13);
        CHECK(std::abs(p.h2.trace()) < 1e-13);
    }
}

TEST_CASE("reconstruct round trips") {
    std::mt19937_64 rng(4);
    double max_err = 0;
    for (int n = 0; n < 1000; ++n) {
        const Tensor3d t = random_t3(rng);
        const Tensor3d back = reconstruct_t3(decompose_t3(t));
        max_err = std::max(max_err, (back.vec() - t.vec()).norm() / std::max(1.0, t.norm()));
    }
    CHECK(max_err < 1e-13);

    CHECK(reconstruct_t3(HarmonicPartsT3<double>{}).vec().norm() == 0.0);

    // pure rotation vector round trip
    HarmonicPartsT3<double> p{};
    p.v_rot = Vec3d(0, 0, 1);
    const auto back = decompose_t3(reconstruct_t3(p));
    CHECK((back.v_rot - p.v_rot).norm() < 1e-14);
    CHECK(back.v_str.norm() < 1e-14);
    CHECK(back.h2.norm() < 1e-14);
    CHECK(back.h3.norm() < 1e-14);
}

TEST_CASE("reconstruct rejects invalid parts") {
    HarmonicPartsT3<double> p{};
    p.h3.set(0, 0, 0, 1.0); // symmetric but not traceless
    CHECK_THROWS_AS(reconstruct_t3(p), InvariantViolation);

    HarmonicPartsT3<double> q{};
    q.h2 = Mat3d::Identity(); // symmetric but not traceless
    CHECK_THROWS_AS(reconstruct_t3(q), InvariantViolation);
}

TEST_CASE("pythagorean identity of the four embedded parts") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 200; ++n) {
        const Tensor3d t = random_t3(rng);
        const auto p = decompose_t3(t);
        const double sum = p.h3.vec().squaredNorm() +
                           embed_rotation_carrier(p.h2).vec().squaredNorm() +
                           embed_stretch_vector(p.v_str).vec().squaredNorm() +
                           embed_rotation_vector(p.v_rot).vec().squaredNorm();
        CHECK(std::abs(sum - t.vec().squaredNorm()) < 1e-12);
    }
}

TEST_CASE("decomposition is SO(3)-equivariant") {
    std::mt19937_64 rng(6);
    RotationSampler<double> sampler(99);
    for (int n = 0; n < 100; ++n) {
        const Tensor3d t = random_t3(rng);
        const Rotationd q = sampler.next();
        const auto p = decompose_t3(t);
        const auto pr = decompose_t3(rotate(q, t));
        CHECK((pr.v_str - q.matrix() * p.v_str).norm() < 1e-12);
        CHECK((pr.v_rot - q.matrix() * p.v_rot).norm() < 1e-12);
        CHECK((pr.h2 - rotate_mat3(q, p.h2)).norm() < 1e-12);
        CHECK((pr.h3.vec() - rotate(q, p.h3).vec()).norm() < 1e-12);
    }
}

TEST_CASE("deviatoric / spherical split") {
    const auto si = split_sym2(Sym2Tensord::Identity());
    CHECK(si.dev.norm() < 1e-15);
    CHECK((si.sph.matrix() - Mat3d::Identity()).norm() < 1e-15);

    Mat3d d = Mat3d::Zero();
    d.diagonal() << 1, -1, 0;
    const auto sd = split_sym2(Sym2Tensord(d));
    CHECK(sd.sph.norm() < 1e-15);
    CHECK((sd.dev.matrix() - d).norm() < 1e-15);

    Mat3d e = Mat3d::Zero();
    e(0, 0) = 2.0;
    const auto se = split_sym2(Sym2Tensord(e));
    Mat3d dev_expected = Mat3d::Zero();
    dev_expected.diagonal() << 4.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0;
    CHECK((se.dev.matrix() - dev_expected).norm() < 1e-14);
    CHECK((se.sph.matrix() - 2.0 / 3.0 * Mat3d::Identity()).norm() < 1e-14);

    // orthogonality and trace
    CHECK(std::abs(se.dev.trace()) < 1e-14);
    CHECK(std::abs((se.dev.matrix().transpose() * se.sph.matrix()).trace()) < 1e-14);
}

TEST_CASE("classical isotropic operator") {
    const Mat6<double> c11 = classical_isotropic<double>({1.0, 1.0});
    const Sym2Tensord sigma = apply_classical(c11, Sym2Tensord::Identity());
    CHECK((sigma.matrix() - 3.0 * Mat3d::Identity()).norm() < 1e-14);

    // spectrum {3K x1, 2G x5}
    const double K = 2.0, G = 3.0;
    const Mat6<double> c = classical_isotropic<double>({K, G});
    Eigen::SelfAdjointEigenSolver<Mat6<double>> es(c);
    Vec6<double> expected;
    expected << 2 * G, 2 * G, 2 * G, 2 * G, 2 * G, 3 * K;
    std::sort(expected.data(), expected.data() + 6);
    CHECK((es.eigenvalues() - expected).cwiseAbs().maxCoeff() < 1e-13);

    CHECK(classical_isotropic<double>({0.0, 0.0}).norm() == 0.0);

    // the law decouples: sph scales by 3K, dev by 2G
    std::mt19937_64 rng(8);
    std::normal_distribution<double> normal;
    Mat3d raw;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) raw(i, j) = normal(rng);
    const Sym2Tensord eps(raw);
    const auto parts = split_sym2(eps);
    const Sym2Tensord sig = apply_classical(c, eps);
    const auto sparts = split_sym2(sig);
    CHECK((sparts.sph.matrix() - 3.0 * K * parts.sph.matrix()).norm() < 1e-13);
    CHECK((sparts.dev.matrix() - 2.0 * G * parts.dev.matrix()).norm() < 1e-13);
}

TEST_CASE("classical harmonic basis diagonalizes the isotropic operator") {
    const Mat6<double> p = classical_harmonic_basis<double>();
    CHECK((p.transpose() * p - Mat6<double>::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const double K = 1.7, G = 0.4;
    const Mat6<double> b = p.transpose() * classical_isotropic<double>({K, G}) * p;
    Vec6<double> diag_expected;
    diag_expected << 3 * K, 2 * G, 2 * G, 2 * G, 2 * G, 2 * G;
    CHECK((b - Mat6<double>(diag_expected.asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mandel codec round trip") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> normal;
    Mat3d raw;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) raw(i, j) = normal(rng);
    const Sym2Tensord e(raw);
    CHECK((Sym2Tensord::from_vec(e.vec()).matrix() - e.matrix()).norm() < 1e-15);
    CHECK(e.vec().norm() == doctest::Approx(e.norm()).epsilon(1e-14));
}
