////////////////////////////////////////////////////////////////////////////////
// harmonic_structure.hpp
//
// SO(3) harmonic structure of tensor spaces as exact integer combinatorics.
// A structure is the multiset of harmonic orders {alpha_k x H^k} appearing in
// the orthogonal decomposition of a tensor space; it is computed here through
// the Clebsch-Gordan product without ever constructing an explicit
// decomposition isomorphism. Everything in this header is integer arithmetic
// with overflow detection; no floating point.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace sge {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("harmonic structure: 64-bit multiplicity overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("harmonic structure: 64-bit multiplicity overflow in multiplication");
    return r;
}

} // namespace detail

// Multiset of harmonic orders: order k -> multiplicity alpha_k.
// dim H^k = 2k+1, so the total dimension is sum alpha_k (2k+1).
// Zero multiplicities are never stored.
class HarmonicStructure {
public:
    using Map = std::map<int, std::int64_t>;

    HarmonicStructure() = default;
    HarmonicStructure(std::initializer_list<std::pair<const int, std::int64_t>> init) {
        for (const auto& [k, a] : init) add(k, a);
    }

    void add(int order, std::int64_t count = 1) {
        if (order < 0) throw std::invalid_argument("harmonic order must be non-negative");
        if (count < 0) throw std::invalid_argument("harmonic multiplicity must be non-negative");
        if (count == 0) return;
        auto it = mult_.find(order);
        if (it == mult_.end())
            mult_.emplace(order, count);
        else
            it->second = detail::checked_add(it->second, count);
    }

    std::int64_t multiplicity(int order) const {
        auto it = mult_.find(order);
        return it == mult_.end() ? 0 : it->second;
    }

    bool empty() const { return mult_.empty(); }
    const Map& multiplicities() const { return mult_; }

    // sum alpha_k (2k+1)
    std::int64_t dimension() const {
        std::int64_t d = 0;
        for (const auto& [k, a] : mult_)
            d = detail::checked_add(d, detail::checked_mul(a, 2 * std::int64_t(k) + 1));
        return d;
    }

    // number of harmonic components, counted with multiplicity
    std::int64_t component_count() const {
        std::int64_t n = 0;
        for (const auto& [k, a] : mult_) n = detail::checked_add(n, a);
        return n;
    }

    // The decomposition isomorphism is uniquely defined iff every alpha_k <= 1.
    bool is_unique() const {
        for (const auto& [k, a] : mult_)
            if (a > 1) return false;
        return true;
    }

    // Dimension of the space of isotropic self-adjoint endomorphisms of a
    // space with this structure: one scalar per self sym-square of a copy of
    // H^k plus one per unordered pair of same-order copies, i.e.
    // sum alpha_k (alpha_k + 1) / 2. Cross-order products contribute no
    // scalars since H^i x H^j contains H^0 only when i = j.
    std::int64_t isotropic_endomorphism_dim() const {
        std::int64_t n = 0;
        for (const auto& [k, a] : mult_) {
            std::int64_t pairs = detail::checked_mul(a, detail::checked_add(a, 1)) / 2;
            n = detail::checked_add(n, pairs);
        }
        return n;
    }

    // Walpole and Kelvin representations of an isotropic endomorphism
    // coincide iff the isotropic coefficient count equals the number of
    // harmonic components, which happens iff the decomposition is unique.
    bool decompositions_coincide() const {
        return isotropic_endomorphism_dim() == component_count();
    }

    bool operator==(const HarmonicStructure& other) const { return mult_ == other.mult_; }
    bool operator!=(const HarmonicStructure& other) const { return !(*this == other); }

    // Canonical rendering in descending order, e.g. "H3 + H2 + 2·H1".
    std::string to_string() const {
        if (mult_.empty()) return "0";
        std::string out;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            if (it->second != 1) out += std::to_string(it->second) + "·";
            out += "H" + std::to_string(it->first);
        }
        return out;
    }

private:
    Map mult_;
};

// Clebsch-Gordan product: H^i x H^j = (+)_{k=|i-j|}^{i+j} H^k.
inline HarmonicStructure clebsch_gordan(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("clebsch_gordan: orders must be non-negative");
    HarmonicStructure s;
    for (int k = std::abs(i - j); k <= i + j; ++k) s.add(k);
    return s;
}

// Symmetric square: H^k (x)^S H^k = (+)_{i=0}^{k} H^{2i}.
inline HarmonicStructure sym_square(int k) {
    if (k < 0) throw std::invalid_argument("sym_square: order must be non-negative");
    HarmonicStructure s;
    for (int i = 0; i <= k; ++i) s.add(2 * i);
    return s;
}

// Clebsch-Gordan product distributed over direct sums.
inline HarmonicStructure tensor_product(const HarmonicStructure& a, const HarmonicStructure& b) {
    HarmonicStructure s;
    for (const auto& [i, ai] : a.multiplicities())
        for (const auto& [j, bj] : b.multiplicities()) {
            std::int64_t m = detail::checked_mul(ai, bj);
            for (int k = std::abs(i - j); k <= i + j; ++k) s.add(k, m);
        }
    return s;
}

// Specification of a tensor space whose harmonic structure can be computed:
//   GradStrain(n)     T^(n) = S^2(R^3) x S^{n-1}(R^3), the nth strain-gradient space
//   SymPower(n)       S^n(R^3), completely symmetric nth-order tensors
//   FullTensor(n)     (x)^n R^3, no index symmetry
//   HarmonicSingle(k) H^k itself
struct SpaceSpec {
    enum class Kind { GradStrain, SymPower, FullTensor, HarmonicSingle };

    Kind kind;
    int order;

    static SpaceSpec grad_strain(int n) {
        if (n < 1) throw std::invalid_argument("GradStrain(n) requires n >= 1");
        return {Kind::GradStrain, n};
    }
    static SpaceSpec sym_power(int n) {
        if (n < 0) throw std::invalid_argument("SymPower(n) requires n >= 0");
        return {Kind::SymPower, n};
    }
    static SpaceSpec full_tensor(int n) {
        if (n < 0) throw std::invalid_argument("FullTensor(n) requires n >= 0");
        // Iterated Clebsch-Gordan expansion stays exact in 64-bit far beyond
        // this bound; it is capped to keep the expansion cost trivial.
        if (n > 12) throw std::invalid_argument("FullTensor(n) supported for n <= 12");
        return {Kind::FullTensor, n};
    }
    static SpaceSpec harmonic(int k) {
        if (k < 0) throw std::invalid_argument("HarmonicSingle(k) requires k >= 0");
        return {Kind::HarmonicSingle, k};
    }
};

// Harmonic structure of the given space.
inline HarmonicStructure structure(const SpaceSpec& spec) {
    switch (spec.kind) {
    case SpaceSpec::Kind::HarmonicSingle: {
        HarmonicStructure s;
        s.add(spec.order);
        return s;
    }
    case SpaceSpec::Kind::SymPower: {
        // S^n(R^3) = (+) H^{2k} (n even) or (+) H^{2k+1} (n odd), one copy each.
        HarmonicStructure s;
        for (int k = spec.order; k >= 0; k -= 2) s.add(k);
        return s;
    }
    case SpaceSpec::Kind::FullTensor: {
        HarmonicStructure s;
        s.add(0); // (x)^0 R^3 = R
        for (int i = 0; i < spec.order; ++i)
            s = tensor_product(s, structure(SpaceSpec::harmonic(1)));
        return s;
    }
    case SpaceSpec::Kind::GradStrain:
        return tensor_product(structure(SpaceSpec::sym_power(2)),
                              structure(SpaceSpec::sym_power(spec.order - 1)));
    }
    throw std::logic_error("structure: unreachable");
}

} // namespace sge
