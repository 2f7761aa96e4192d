#ifndef LAXKIT_CATALOG_HPP
#define LAXKIT_CATALOG_HPP

#include <laxkit/lie_algebra.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace laxkit {

namespace catalog {

inline LieAlgebra abelian(std::size_t n) {
    return LieAlgebra("abelian-" + std::to_string(n), n);
}

/// Affine line algebra: [e1, e2] = e2.
inline LieAlgebra aff1() {
    LieAlgebra L("aff1", 2);
    L.set_bracket(0, 1, 1, Scalar::one());
    return L;
}

/// Heisenberg algebra: [e1, e2] = e3.
inline LieAlgebra heisenberg3() {
    LieAlgebra L("heisenberg3", 3);
    L.set_bracket(0, 1, 2, Scalar::one());
    return L;
}

/// Chevalley basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
inline LieAlgebra sl2() {
    LieAlgebra L("sl2", 3);
    L.set_bracket(0, 1, 1, Scalar(2));
    L.set_bracket(0, 2, 2, Scalar(-2));
    L.set_bracket(1, 2, 0, Scalar::one());
    return L;
}

/// Deliberately inconsistent variant used to exercise failure paths:
/// [H,E] = 2E, [H,F] = -2F, [E,F] = E.
inline LieAlgebra broken_sl2() {
    LieAlgebra L("broken-sl2", 3);
    L.set_bracket(0, 1, 1, Scalar(2));
    L.set_bracket(0, 2, 2, Scalar(-2));
    L.set_bracket(1, 2, 1, Scalar::one());
    return L;
}

namespace detail {

/// Traceless 3x3 matrices in the basis
/// (H1, H2, E12, E23, E13, E21, E32, E31); coordinates read off directly.
inline Mat sl3_basis_matrix(std::size_t idx) {
    Mat m(3, 3);
    switch (idx) {
        case 0: m(0, 0) = Scalar(1); m(1, 1) = Scalar(-1); break;
        case 1: m(1, 1) = Scalar(1); m(2, 2) = Scalar(-1); break;
        case 2: m(0, 1) = Scalar(1); break;
        case 3: m(1, 2) = Scalar(1); break;
        case 4: m(0, 2) = Scalar(1); break;
        case 5: m(1, 0) = Scalar(1); break;
        case 6: m(2, 1) = Scalar(1); break;
        case 7: m(2, 0) = Scalar(1); break;
        default: throw std::out_of_range("sl3 basis index");
    }
    return m;
}

inline std::vector<Scalar> sl3_coords(const Mat& m) {
    std::vector<Scalar> v(8);
    v[0] = m(0, 0);
    v[1] = m(0, 0) + m(1, 1);
    v[2] = m(0, 1);
    v[3] = m(1, 2);
    v[4] = m(0, 2);
    v[5] = m(1, 0);
    v[6] = m(2, 1);
    v[7] = m(2, 0);
    return v;
}

} // namespace detail

/// sl3 built from 3x3 matrix commutators; basis
/// (H1, H2, E_a1, E_a2, E_a1+a2, F_a1, F_a2, F_a1+a2).
inline LieAlgebra sl3() {
    LieAlgebra L("sl3", 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Mat a = detail::sl3_basis_matrix(i), b = detail::sl3_basis_matrix(j);
            auto v = detail::sl3_coords(a * b - b * a);
            for (std::size_t k = 0; k < 8; ++k) L.set_c(i, j, k, v[k]);
        }
    return L;
}

/// Root data for the split simple catalog algebras, used by the Borel
/// Rota-Baxter/PostLie constructions and their closed-form comparison.
struct RootInfo {
    std::vector<int> simple_coeffs; // expansion in simple roots (may be negative)
    std::size_t index;              // basis index of the root vector
    std::vector<long> pairing;      // <root, alpha_i> = root(H_i)
};

struct RootData {
    std::size_t rank = 0;
    std::vector<std::size_t> cartan_indices;
    std::vector<RootInfo> roots; // positive roots first, then their negatives

    const RootInfo* find(const std::vector<int>& coeffs) const {
        for (const auto& r : roots)
            if (r.simple_coeffs == coeffs) return &r;
        return nullptr;
    }
};

inline RootData root_data(const std::string& name) {
    RootData d;
    if (name == "sl2") {
        d.rank = 1;
        d.cartan_indices = {0};
        d.roots = {{{1}, 1, {2}}, {{-1}, 2, {-2}}};
        return d;
    }
    if (name == "sl3") {
        d.rank = 2;
        d.cartan_indices = {0, 1};
        d.roots = {{{1, 0}, 2, {2, -1}}, {{0, 1}, 3, {-1, 2}}, {{1, 1}, 4, {1, 1}},
                   {{-1, 0}, 5, {-2, 1}}, {{0, -1}, 6, {1, -2}}, {{-1, -1}, 7, {-1, -1}}};
        return d;
    }
    throw std::invalid_argument("no root data for algebra '" + name + "'");
}

/// Basis indices of the Borel subalgebra (Cartan + positive root vectors)
/// and of the opposite nilpotent part.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> borel_split(
    const std::string& name) {
    if (name == "sl2") return {{0, 1}, {2}};
    if (name == "sl3") return {{0, 1, 2, 3, 4}, {5, 6, 7}};
    throw std::invalid_argument("no Borel split for algebra '" + name + "'");
}

inline std::vector<LieAlgebra> builtin() {
    return {abelian(1), abelian(2), abelian(3), aff1(), heisenberg3(), sl2(), sl3()};
}

} // namespace catalog

} // namespace laxkit

#endif
