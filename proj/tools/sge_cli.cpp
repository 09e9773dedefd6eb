////////////////////////////////////////////////////////////////////////////////
// sge_cli.cpp
//
// Command-line front end over JSON files:
//
//   sge structure --grade n      harmonic structure of the nth strain-gradient space
//   sge decompose <t3.json>      harmonic parts of a third-order tensor
//   sge moduli <a18.json>        the five isotropic moduli + diagnostics
//   sge assemble --ms3 .. -o f   build an isotropic operator from moduli
//   sge spectral <a18.json>      Kelvin (eigenvalue) spectrum
//   sge verify                   run the internal invariant suite
//   sge compare <a18.json>       Walpole vs Kelvin coincidence test
//
// Exit codes: 0 success, 1 malformed input or symmetry violation, 2 internal
// invariant failure.
////////////////////////////////////////////////////////////////////////////////
#include "sge/harmonic_parts.hpp"
#include "sge/harmonic_structure.hpp"
#include "sge/json_io.hpp"
#include "sge/tensor_algebra.hpp"
#include "sge/walpole.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <unistd.h>

namespace {

using namespace sge;
using nlohmann::json;

// 17 significant digits: lossless re-ingestion of doubles.
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty())
        std::cout << j.dump() << "\n";
    else
        io::save_json(output_path, j);
}

int run_structure(int grade) {
    const HarmonicStructure s = structure(SpaceSpec::grad_strain(grade));
    std::cout << "T^(" << grade << ") = " << s.to_string() << ", dim " << s.dimension()
              << ", unique: " << (s.is_unique() ? "yes" : "no")
              << ", isotropic coefficients: " << s.isotropic_endomorphism_dim() << "\n";
    json orders = json::array();
    for (auto it = s.multiplicities().rbegin(); it != s.multiplicities().rend(); ++it)
        orders.push_back(json{{"order", it->first}, {"multiplicity", it->second}});
    std::cout << json{{"grade", grade},
                      {"decomposition", orders},
                      {"dimension", s.dimension()},
                      {"unique", s.is_unique()},
                      {"isotropic_coefficients", s.isotropic_endomorphism_dim()}}
                     .dump()
              << "\n";
    return 0;
}

int run_decompose(const std::string& input, const std::string& output) {
    const Tensor3d t = io::tensor3_from_json(io::load_json(input));
    const HarmonicPartsT3<double> p = decompose_t3(t);
    std::cout << "part norms (Frobenius, embedded): h3 " << fmt(p.h3.norm()) << ", h2 "
              << fmt(embed_rotation_carrier(p.h2).norm()) << ", v_str "
              << fmt(embed_stretch_vector(p.v_str).norm()) << ", v_rot "
              << fmt(embed_rotation_vector(p.v_rot).norm()) << ", total " << fmt(t.norm())
              << "\n";
    emit(io::parts_to_json(p), output);
    return 0;
}

int run_moduli(const std::string& input, const std::string& output, bool check_isotropy,
               int trials, double tol, std::uint64_t seed) {
    const Grad6d a = io::grad6_from_json(io::load_json(input));
    const IsotropicModulid m = extract_moduli(a);
    std::cout << "ms3 = " << fmt(m.ms3) << "\nms1 = " << fmt(m.ms1) << "\nmr2 = " << fmt(m.mr2)
              << "\nmr1 = " << fmt(m.mr1) << "\nmc1 = " << fmt(m.mc1) << "\n";
    if (std::hypot(m.ms3, m.ms1) == 0.0)
        std::cout << "r/s ratio = undefined (stretch moduli are zero)\n";
    else
        std::cout << "r/s ratio = " << fmt(rotation_stretch_ratio(m)) << "\n";
    const SingularityFlags<double> flags = singularity_flags(m, tol);
    std::cout << "singular flags:";
    if (!flags.any_singular()) std::cout << " none";
    if (flags.septor_singular) std::cout << " [ms3=0]";
    if (flags.deviator_singular) std::cout << " [mr2=0]";
    if (flags.vector_block_singular) std::cout << " [ms1*mr1-mc1^2=0]";
    std::cout << "\npositive definite: " << (flags.positive_definite ? "yes" : "no") << "\n";
    if (check_isotropy)
        std::cout << "isotropic (" << trials << " trials, tol " << fmt(tol)
                  << "): " << (is_isotropic(a, trials, tol, seed) ? "yes" : "no") << "\n";
    emit(io::moduli_to_json(m), output);
    return 0;
}

int run_assemble(const IsotropicModulid& m, const std::string& output) {
    emit(io::grad6_to_json(assemble(m)), output);
    return 0;
}

int run_spectral(const std::string& input, const std::string& output, double tol) {
    const Grad6d a = io::grad6_from_json(io::load_json(input));
    const auto lines = kelvin_spectrum(a, tol);
    std::cout << "kelvin spectrum (clustering tol " << fmt(tol) << "):\n";
    for (const auto& line : lines)
        std::cout << "  " << fmt(line.value) << " x " << line.multiplicity << "\n";
    emit(io::spectrum_to_json(lines), output);
    return 0;
}

int run_compare(const std::string& input, double tol) {
    const Grad6d a = io::grad6_from_json(io::load_json(input));
    const Mat18d h = to_harmonic_basis(a);
    const double off = (h - Mat18d(h.diagonal().asDiagonal())).norm();
    const bool coincide = off <= tol * std::max(1.0, h.norm());
    std::cout << "off-diagonal norm of A in the harmonic basis: " << fmt(off) << " (tol "
              << fmt(tol) << ")\n"
              << "walpole and kelvin representations coincide: " << (coincide ? "yes" : "no")
              << "\n";
    std::cout << json{{"coincide", coincide}, {"offdiagonal_norm", off}}.dump() << "\n";
    return 0;
}

//------------------------------------------------------------------------------
// verify: executable invariant suite
//------------------------------------------------------------------------------

class CheckReporter {
public:
    CheckReporter() {
        color_ = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
    }

    void check(const std::string& name, double err, double tol) {
        const bool ok = err <= tol;
        report(name + " (max err " + fmt(err) + ", tol " + fmt(tol) + ")", ok);
    }
    void check(const std::string& name, bool ok) { report(name, ok); }

    bool all_passed() const { return failures_ == 0; }

private:
    void report(const std::string& text, bool ok) {
        if (!ok) ++failures_;
        const char* tag = ok ? "PASS" : "FAIL";
        if (color_)
            std::cout << (ok ? "\033[32m" : "\033[31m") << tag << "\033[0m";
        else
            std::cout << tag;
        std::cout << " " << text << "\n";
    }

    bool color_ = false;
    int failures_ = 0;
};

Tensor3d random_tensor3(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec18d v;
    for (int i = 0; i < 18; ++i) v[i] = normal(rng);
    return Tensor3d::from_vec18(v);
}

IsotropicModulid random_moduli(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

int run_verify(std::uint64_t seed, int trials, double tol) {
    CheckReporter rep;
    std::mt19937_64 rng(seed);

    const WalpoleBasis<double>& basis = walpole_basis<double>();
    const WalpoleOperators<double>& ops = walpole_operators<double>();
    const Mat18d& p = basis.matrix();

    rep.check("basis orthogonality P^T P = I",
              (p.transpose() * p - Mat18d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
    rep.check("partition of identity",
              (ops.p_h3 + ops.p_str + ops.p_h2 + ops.p_rot - Mat18d::Identity())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
    rep.check("projector ranks (7,3,5,3)",
              std::abs(ops.p_h3.trace() - 7.0) + std::abs(ops.p_str.trace() - 3.0) +
                  std::abs(ops.p_h2.trace() - 5.0) + std::abs(ops.p_rot.trace() - 3.0),
              1e-12);

    try {
        const MultiplicationTable table = multiplication_table();
        using L = OperatorLabel;
        const MultiplicationTable expected = {{
            {L::p_h3, L::zero, L::zero, L::zero, L::zero, L::zero},
            {L::zero, L::p_h2, L::zero, L::zero, L::zero, L::zero},
            {L::zero, L::zero, L::p_str, L::q_sr, L::zero, L::zero},
            {L::zero, L::zero, L::zero, L::zero, L::p_str, L::q_sr},
            {L::zero, L::zero, L::q_rs, L::p_rot, L::zero, L::zero},
            {L::zero, L::zero, L::zero, L::zero, L::q_rs, L::p_rot},
        }};
        rep.check("multiplication table (36 products)", table == expected);
    } catch (const ClassificationFailure& e) {
        rep.check(std::string("multiplication table (") + e.what() + ")", false);
    }

    double codec_err = 0;
    for (int n = 0; n < 100; ++n) {
        const Tensor3d t = random_tensor3(rng);
        codec_err = std::max(codec_err,
                             (Tensor3d::from_components(t.components()).vec() - t.vec())
                                 .cwiseAbs()
                                 .maxCoeff());
    }
    rep.check("tensor codec round trip", codec_err, 1e-14);

    double moduli_err = 0;
    for (int n = 0; n < 200; ++n) {
        const IsotropicModulid m = random_moduli(rng);
        const IsotropicModulid back = extract_moduli(assemble(m));
        moduli_err = std::max({moduli_err, std::abs(back.ms3 - m.ms3), std::abs(back.ms1 - m.ms1),
                               std::abs(back.mr2 - m.mr2), std::abs(back.mr1 - m.mr1),
                               std::abs(back.mc1 - m.mc1)});
    }
    rep.check("moduli extract/assemble round trip", moduli_err, 1e-12);

    double recon_err = 0, pyth_err = 0, proj_err = 0;
    for (int n = 0; n < 200; ++n) {
        const Tensor3d t = random_tensor3(rng);
        const auto parts = decompose_t3(t);
        recon_err =
            std::max(recon_err, (reconstruct_t3(parts) - t).norm() / std::max(1.0, t.norm()));
        const Tensor3d eh3 = parts.h3;
        const Tensor3d eh2 = embed_rotation_carrier(parts.h2);
        const Tensor3d evs = embed_stretch_vector(parts.v_str);
        const Tensor3d evr = embed_rotation_vector(parts.v_rot);
        const double n2 = eh3.vec().squaredNorm() + eh2.vec().squaredNorm() +
                          evs.vec().squaredNorm() + evr.vec().squaredNorm();
        pyth_err = std::max(pyth_err, std::abs(n2 - t.vec().squaredNorm()));
        proj_err = std::max({proj_err, (ops.p_h3 * t.vec() - eh3.vec()).cwiseAbs().maxCoeff(),
                             (ops.p_h2 * t.vec() - eh2.vec()).cwiseAbs().maxCoeff(),
                             (ops.p_str * t.vec() - evs.vec()).cwiseAbs().maxCoeff(),
                             (ops.p_rot * t.vec() - evr.vec()).cwiseAbs().maxCoeff()});
    }
    rep.check("decompose/reconstruct round trip", recon_err, 1e-13);
    rep.check("pythagorean norm identity", pyth_err, 1e-12);
    rep.check("formula vs projector agreement", proj_err, 1e-12);

    double iso_err = 0;
    const Grad6d a = assemble(random_moduli(rng));
    RotationSampler<double> sampler(seed);
    for (int t = 0; t < trials; ++t)
        iso_err = std::max(iso_err, (rotate(sampler.next(), a).mat() - a.mat()).norm() / a.norm());
    rep.check("assembled operator isotropy", iso_err, tol);

    double kelvin_err = 0;
    for (int n = 0; n < 50; ++n) {
        const IsotropicModulid m = random_moduli(rng);
        const double mid = 0.5 * (m.ms1 + m.mr1);
        const double disc = std::hypot(0.5 * (m.ms1 - m.mr1), m.mc1);
        std::vector<double> expected;
        expected.insert(expected.end(), 7, m.ms3);
        expected.insert(expected.end(), 5, m.mr2);
        expected.insert(expected.end(), 3, mid + disc);
        expected.insert(expected.end(), 3, mid - disc);
        std::sort(expected.begin(), expected.end());
        Eigen::SelfAdjointEigenSolver<Mat18d> es(assemble(m).mat(), Eigen::EigenvaluesOnly);
        for (int i = 0; i < 18; ++i)
            kelvin_err = std::max(kelvin_err, std::abs(es.eigenvalues()[i] - expected[std::size_t(i)]));
    }
    rep.check("kelvin spectrum closed form", kelvin_err, 1e-9);

    std::cout << (rep.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return rep.all_passed() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic structure of isotropic strain-gradient elasticity"};
    app.require_subcommand(1);

    int grade = 2;
    auto* cmd_structure = app.add_subcommand(
        "structure", "harmonic structure of the strain-gradient space T^(n)");
    cmd_structure->add_option("--grade", grade, "gradient order n >= 1")->required();

    std::string input, output;
    auto* cmd_decompose =
        app.add_subcommand("decompose", "harmonic parts of a third-order tensor");
    cmd_decompose->add_option("input", input, "Tensor3 JSON file")->required();
    cmd_decompose->add_option("-o,--output", output, "write parts JSON here");

    bool check_isotropy = false;
    int trials = 50;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    auto* cmd_moduli = app.add_subcommand("moduli", "isotropic moduli of an a18 operator");
    cmd_moduli->add_option("input", input, "Grad6 JSON file")->required();
    cmd_moduli->add_option("-o,--output", output, "write moduli JSON here");
    cmd_moduli->add_flag("--check-isotropy", check_isotropy, "test rotational invariance");
    cmd_moduli->add_option("--trials", trials, "rotations for the isotropy test");
    cmd_moduli->add_option("--tol", tol, "tolerance");
    cmd_moduli->add_option("--seed", seed, "rotation sampling seed");

    IsotropicModulid m{};
    auto* cmd_assemble = app.add_subcommand("assemble", "build an isotropic a18 operator");
    cmd_assemble->add_option("--ms3", m.ms3, "septor modulus")->required();
    cmd_assemble->add_option("--ms1", m.ms1, "stretch vector modulus")->required();
    cmd_assemble->add_option("--mr2", m.mr2, "rotation deviator modulus")->required();
    cmd_assemble->add_option("--mr1", m.mr1, "rotation vector modulus")->required();
    cmd_assemble->add_option("--mc1", m.mc1, "coupling modulus")->required();
    cmd_assemble->add_option("-o,--output", output, "write a18 JSON here");

    double cluster_tol = 1e-9;
    auto* cmd_spectral = app.add_subcommand("spectral", "Kelvin spectrum of an a18 operator");
    cmd_spectral->add_option("input", input, "Grad6 JSON file")->required();
    cmd_spectral->add_option("-o,--output", output, "write spectrum JSON here");
    cmd_spectral->add_option("--tol", cluster_tol, "eigenvalue clustering tolerance");

    int verify_trials = 20;
    double verify_tol = 1e-10;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--trials", verify_trials, "rotations per isotropy check");
    cmd_verify->add_option("--tol", verify_tol, "isotropy tolerance");

    double compare_tol = 1e-9;
    auto* cmd_compare =
        app.add_subcommand("compare", "do Walpole and Kelvin representations coincide?");
    cmd_compare->add_option("input", input, "Grad6 JSON file")->required();
    cmd_compare->add_option("--tol", compare_tol, "off-diagonal tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_structure->parsed()) return run_structure(grade);
        if (cmd_decompose->parsed()) return run_decompose(input, output);
        if (cmd_moduli->parsed())
            return run_moduli(input, output, check_isotropy, trials, tol, seed);
        if (cmd_assemble->parsed()) return run_assemble(m, output);
        if (cmd_spectral->parsed()) return run_spectral(input, output, cluster_tol);
        if (cmd_verify->parsed()) return run_verify(seed, verify_trials, verify_tol);
        if (cmd_compare->parsed()) return run_compare(input, compare_tol);
    } catch (const sge::InvariantViolation& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const sge::ClassificationFailure& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
