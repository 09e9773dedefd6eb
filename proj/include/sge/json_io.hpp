////////////////////////////////////////////////////////////////////////////////
// json_io.hpp
//
// JSON readers/writers for the file formats understood by the CLI:
//
//   Tensor3   {"format":"t3-vec18","data":[18 numbers]}
//             {"format":"t3-full","data":[27 numbers, row-major i,j,k]}
//   Grad6     {"format":"a18","data":[[18x18 numbers]]}
//   moduli    {"ms3":x,"ms1":x,"mr2":x,"mr1":x,"mc1":x}
//   spectrum  [{"value":x,"multiplicity":n},...]
//   parts     {"h3":[7],"h2":[5],"v_str":[3],"v_rot":[3]}
//
// The 7- and 5-component arrays of a parts object are coordinates in the
// harmonic-basis columns of the corresponding subspaces.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include "sge/harmonic_parts.hpp"
#include "sge/walpole.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace sge::io {

using nlohmann::json;

// Raised on structurally invalid input documents (wrong format tag, wrong
// array shape). JSON syntax errors surface as nlohmann::json::exception.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    return json::parse(in);
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

namespace detail {
inline std::vector<double> number_array(const json& j, const char* key, std::size_t n) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
        throw FormatError(std::string("expected \"") + key + "\" to be an array of " +
                          std::to_string(n) + " numbers");
    return j[key].get<std::vector<double>>();
}
} // namespace detail

//==============================================================================
// Tensor3
//==============================================================================

inline json tensor3_to_json(const Tensor3d& t) {
    json j;
    j["format"] = "t3-vec18";
    j["data"] = std::vector<double>(t.vec().data(), t.vec().data() + 18);
    return j;
}

inline Tensor3d tensor3_from_json(const json& j) {
    const std::string format = j.value("format", "");
    if (format == "t3-vec18") {
        const auto data = detail::number_array(j, "data", 18);
        return Tensor3d::from_vec18(Eigen::Map<const Vec18d>(data.data()));
    }
    if (format == "t3-full") {
        const auto data = detail::number_array(j, "data", 27);
        std::array<double, 27> c;
        std::copy(data.begin(), data.end(), c.begin());
        return Tensor3d::from_components(c);
    }
    throw FormatError("unknown Tensor3 format \"" + format +
                      "\" (expected t3-vec18 or t3-full)");
}

//==============================================================================
// Grad6
//==============================================================================

inline json grad6_to_json(const Grad6d& a) {
    json rows = json::array();
    for (int r = 0; r < 18; ++r) {
        json row = json::array();
        for (int c = 0; c < 18; ++c) row.push_back(a.mat()(r, c));
        rows.push_back(std::move(row));
    }
    json j;
    j["format"] = "a18";
    j["data"] = std::move(rows);
    return j;
}

inline Grad6d grad6_from_json(const json& j) {
    if (j.value("format", "") != "a18")
        throw FormatError("unknown Grad6 format (expected \"a18\")");
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != 18)
        throw FormatError("expected \"data\" to be an array of 18 rows");
    Mat18d m;
    for (int r = 0; r < 18; ++r) {
        const auto& row = j["data"][std::size_t(r)];
        if (!row.is_array() || row.size() != 18)
            throw FormatError("row " + std::to_string(r + 1) + " must hold 18 numbers");
        for (int c = 0; c < 18; ++c) m(r, c) = row[std::size_t(c)].get<double>();
    }
    return Grad6d::from_mat18(m);
}

//==============================================================================
// Moduli
//==============================================================================

inline json moduli_to_json(const IsotropicModulid& m) {
    return json{{"ms3", m.ms3}, {"ms1", m.ms1}, {"mr2", m.mr2}, {"mr1", m.mr1}, {"mc1", m.mc1}};
}

inline IsotropicModulid moduli_from_json(const json& j) {
    for (const char* key : {"ms3", "ms1", "mr2", "mr1", "mc1"})
        if (!j.contains(key) || !j[key].is_number())
            throw FormatError(std::string("moduli object must hold number \"") + key + "\"");
    return {j["ms3"].get<double>(), j["ms1"].get<double>(), j["mr2"].get<double>(),
            j["mr1"].get<double>(), j["mc1"].get<double>()};
}

//==============================================================================
// Spectrum
//==============================================================================

inline json spectrum_to_json(const std::vector<SpectralLine<double>>& lines) {
    json j = json::array();
    for (const auto& line : lines)
        j.push_back(json{{"value", line.value}, {"multiplicity", line.multiplicity}});
    return j;
}

//==============================================================================
// Harmonic parts
//==============================================================================

inline json parts_to_json(const HarmonicPartsT3<double>& p) {
    const WalpoleBasis<double>& basis = walpole_basis<double>();
    const Eigen::Matrix<double, 7, 1> h3 = basis.h3_columns().transpose() * p.h3.vec();
    const Eigen::Matrix<double, 5, 1> h2 =
        basis.h2_columns().transpose() * embed_rotation_carrier(p.h2).vec();
    json j;
    j["h3"] = std::vector<double>(h3.data(), h3.data() + 7);
    j["h2"] = std::vector<double>(h2.data(), h2.data() + 5);
    j["v_str"] = std::vector<double>{p.v_str[0], p.v_str[1], p.v_str[2]};
    j["v_rot"] = std::vector<double>{p.v_rot[0], p.v_rot[1], p.v_rot[2]};
    return j;
}

inline HarmonicPartsT3<double> parts_from_json(const json& j) {
    const auto h3 = detail::number_array(j, "h3", 7);
    const auto h2 = detail::number_array(j, "h2", 5);
    const auto vs = detail::number_array(j, "v_str", 3);
    const auto vr = detail::number_array(j, "v_rot", 3);
    const WalpoleBasis<double>& basis = walpole_basis<double>();
    HarmonicPartsT3<double> p;
    p.h3 = Tensor3d::from_vec18(basis.h3_columns() *
                                Eigen::Map<const Eigen::Matrix<double, 7, 1>>(h3.data()));
    const Tensor3d h2_embedded = Tensor3d::from_vec18(
        basis.h2_columns() * Eigen::Map<const Eigen::Matrix<double, 5, 1>>(h2.data()));
    p.h2 = decompose_t3(h2_embedded).h2;
    p.v_str = Vec3d(vs[0], vs[1], vs[2]);
    p.v_rot = Vec3d(vr[0], vr[1], vr[2]);
    return p;
}

} // namespace sge::io
