#ifndef LAXKIT_TENSOR_HPP
#define LAXKIT_TENSOR_HPP

#include <laxkit/lie_algebra.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace laxkit {

// An element r = sum_{i,j} r(i,j) e_i (x) e_j of g (x) g is carried as the
// n x n matrix of its coefficients. As a linear map g* -> g defined by
// <r(a*), b*> = <a* (x) b*, r>, its matrix is the transpose of the
// coefficient matrix: r(e_k*) = sum_t r(k,t) e_t.

inline Mat tensor_as_map(const Mat& r) { return r.transpose(); }
inline Mat transpose_map(const Mat& r) { return r; }

inline bool tensor_is_skew(const Mat& r) { return r == -r.transpose(); }
inline bool tensor_is_symmetric(const Mat& r) { return r == r.transpose(); }

/// alpha = (r - sigma r)/2, beta = (r + sigma r)/2 with r = alpha + beta.
inline std::pair<Mat, Mat> split_alpha_beta(const Mat& r) {
    Scalar half = Scalar::frac(1, 2);
    Mat rt = r.transpose();
    return {(r - rt) * half, (r + rt) * half};
}

// ---------------------------------------------------------------------------
// Residual tensors
// ---------------------------------------------------------------------------

/// C(r) = [r12,r13] + [r12,r23] + [r13,r23] with
///   [r12,r13] = sum [a_i,a_j] (x) b_i (x) b_j,
///   [r12,r23] = sum a_i (x) [b_i,a_j] (x) b_j,
///   [r13,r23] = sum a_i (x) a_j (x) [b_i,b_j].
inline Tensor3 cybe_residual(const LieAlgebra& g, const Mat& r) {
    std::size_t n = g.dim();
    Tensor3 C(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    Scalar f = r(i, j) * r(p, q);
                    if (f.is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!g.c(i, p, k).is_zero())
                            C.at(k, j, q) += f * g.c(i, p, k); // [r12,r13]
                        if (!g.c(j, p, k).is_zero())
                            C.at(i, k, q) += f * g.c(j, p, k); // [r12,r23]
                        if (!g.c(j, q, k).is_zero())
                            C.at(i, p, k) += f * g.c(j, q, k); // [r13,r23]
                    }
                }
        }
    return C;
}

/// [(r13+r31),(r23+r32)] = 4 sum beta_uw beta_pq e_u (x) e_p (x) [e_w,e_q],
/// the componentwise triple bracket of the doubled symmetric parts.
inline Tensor3 symmetric_cross_term(const LieAlgebra& g, const Mat& r) {
    std::size_t n = g.dim();
    Mat two_beta = r + r.transpose();
    Tensor3 T(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
            if (two_beta(u, w).is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    Scalar f = two_beta(u, w) * two_beta(p, q);
                    if (f.is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!g.c(w, q, k).is_zero()) T.at(u, p, k) += f * g.c(w, q, k);
                }
        }
    return T;
}

/// C(r) - epsilon [(r13+r31),(r23+r32)].
inline Tensor3 ecybe_residual(const LieAlgebra& g, const Mat& r, const Scalar& epsilon) {
    Tensor3 C = cybe_residual(g, r);
    if (epsilon.is_zero()) return C;
    return C - symmetric_cross_term(g, r) * epsilon;
}

/// ECYBE of mass 1/2.
inline Tensor3 type2_residual(const LieAlgebra& g, const Mat& r) {
    return ecybe_residual(g, r, Scalar::frac(1, 2));
}

/// (ad(e_i) (x) id (x) id + id (x) ad(e_i) (x) id + id (x) id (x) ad(e_i)) T.
inline Tensor3 triple_leg_action(const LieAlgebra& g, std::size_t i, const Tensor3& T) {
    std::size_t n = g.dim();
    Tensor3 R(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& v = T.at(a, b, c);
                if (v.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!g.c(i, a, k).is_zero()) R.at(k, b, c) += v * g.c(i, a, k);
                    if (!g.c(i, b, k).is_zero()) R.at(a, k, c) += v * g.c(i, b, k);
                    if (!g.c(i, c, k).is_zero()) R.at(a, b, k) += v * g.c(i, c, k);
                }
            }
    return R;
}

/// (ad(e_i) (x) id + id (x) ad(e_i)) applied to a 2-tensor.
inline Mat pair_leg_action(const LieAlgebra& g, std::size_t i, const Mat& T) {
    std::size_t n = g.dim();
    Mat R(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& v = T(a, b);
            if (v.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!g.c(i, a, k).is_zero()) R(k, b) += v * g.c(i, a, k);
                if (!g.c(i, b, k).is_zero()) R(a, k) += v * g.c(i, b, k);
            }
        }
    return R;
}

// ---------------------------------------------------------------------------
// Symmetric-part invariance (three equivalent tests)
// ---------------------------------------------------------------------------

/// Checks invariance of the symmetric part through all three equivalent
/// conditions (tensor invariance, map antisymmetry, map g-invariance) and
/// throws if they ever disagree.
inline bool symmetric_part_invariant(const LieAlgebra& g, const Mat& r) {
    std::size_t n = g.dim();
    Mat beta2 = split_alpha_beta(r).second;
    Mat bmap = tensor_as_map(beta2);
    Representation ad = adjoint(g);
    Representation adstar = coadjoint(g);

    bool tensor_ok = true;
    for (std::size_t i = 0; i < n && tensor_ok; ++i)
        if (!pair_leg_action(g, i, beta2).is_zero()) tensor_ok = false;

    bool antisym_ok = true;
    for (std::size_t k = 0; k < n && antisym_ok; ++k)
        for (std::size_t l = 0; l < n && antisym_ok; ++l) {
            Mat lhs = adstar.apply(bmap.col(k), Mat::basis_vector(n, l)) +
                      adstar.apply(bmap.col(l), Mat::basis_vector(n, k));
            if (!lhs.is_zero()) antisym_ok = false;
        }

    bool ginv_ok = true;
    for (std::size_t i = 0; i < n && ginv_ok; ++i) {
        Mat lhs = bmap * adstar.mats[i];
        Mat rhs = ad.mats[i] * bmap;
        if (lhs != rhs) ginv_ok = false;
    }

    if (tensor_ok != antisym_ok || tensor_ok != ginv_ok)
        throw std::logic_error("symmetric-part invariance tests disagree");
    return tensor_ok;
}

// ---------------------------------------------------------------------------
// Cocommutator and the dual bracket
// ---------------------------------------------------------------------------

/// delta(e_s) = (ad(e_s) (x) id + id (x) ad(e_s)) r, one coefficient matrix
/// per basis vector.
inline std::vector<Mat> cocommutator(const LieAlgebra& g, const Mat& r) {
    std::vector<Mat> delta;
    delta.reserve(g.dim());
    for (std::size_t s = 0; s < g.dim(); ++s) delta.push_back(pair_leg_action(g, s, r));
    return delta;
}

/// Bracket on g* read from the cocommutator: <[e_k*,e_l*], e_s> = delta_s(k,l).
inline LieAlgebra dual_bracket_from_delta(const LieAlgebra& g, const std::vector<Mat>& delta) {
    std::size_t n = g.dim();
    LieAlgebra D(g.name() + "*", n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t s = 0; s < n; ++s) D.set_c(k, l, s, delta[s](k, l));
    return D;
}

/// Same bracket via [a*,b*] = ad*(r(a*))b* + ad*(r^t(b*))a*.
inline LieAlgebra dual_bracket_operator_form(const LieAlgebra& g, const Mat& r) {
    std::size_t n = g.dim();
    Representation adstar = coadjoint(g);
    Mat rmap = tensor_as_map(r);
    Mat rtmap = transpose_map(r);
    LieAlgebra D(g.name() + "*", n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Mat v = adstar.apply(rmap.col(k), Mat::basis_vector(n, l)) +
                    adstar.apply(rtmap.col(l), Mat::basis_vector(n, k));
            for (std::size_t s = 0; s < n; ++s) D.set_c(k, l, s, v(s, 0));
        }
    return D;
}

/// Skew-part form valid when beta is invariant:
/// [a*,b*] = ad*(alpha(a*))b* - ad*(alpha(b*))a*.
inline LieAlgebra dual_bracket_alpha_form(const LieAlgebra& g, const Mat& r) {
    std::size_t n = g.dim();
    Representation adstar = coadjoint(g);
    Mat amap = tensor_as_map(split_alpha_beta(r).first);
    LieAlgebra D(g.name() + "*", n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Mat v = adstar.apply(amap.col(k), Mat::basis_vector(n, l)) -
                    adstar.apply(amap.col(l), Mat::basis_vector(n, k));
            for (std::size_t s = 0; s < n; ++s) D.set_c(k, l, s, v(s, 0));
        }
    return D;
}

struct DualBracketResult {
    LieAlgebra algebra;             // bracket on g*, valid only when ok
    std::optional<Witness> witness; // first Jacobi failure, if any
    bool ok() const { return !witness; }
};

/// Builds the g* bracket from r, cross-validating the two defining formulas,
/// and reports whether it satisfies the Jacobi identity.
inline DualBracketResult dual_bracket(const LieAlgebra& g, const Mat& r) {
    LieAlgebra direct = dual_bracket_from_delta(g, cocommutator(g, r));
    LieAlgebra op = dual_bracket_operator_form(g, r);
    if (!(direct == op)) throw std::logic_error("dual bracket formulas disagree");
    DualBracketResult res;
    res.witness = jacobi_witness(direct);
    res.algebra = std::move(direct);
    return res;
}

// ---------------------------------------------------------------------------
// Bialgebra conditions and classification
// ---------------------------------------------------------------------------

struct BialgebraVerdict {
    bool symmetric_invariant;
    bool cocycle_condition; // triple-leg action annihilates C(r)
    bool ok() const { return symmetric_invariant && cocycle_condition; }
};

inline BialgebraVerdict is_lie_bialgebra(const LieAlgebra& g, const Mat& r) {
    BialgebraVerdict v;
    v.symmetric_invariant = symmetric_part_invariant(g, r);
    Tensor3 C = cybe_residual(g, r);
    v.cocycle_condition = true;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!triple_leg_action(g, i, C).is_zero()) {
            v.cocycle_condition = false;
            break;
        }
    return v;
}

/// For skew r: all three-leg ad actions annihilate C(r), even if C(r) != 0.
inline bool gcybe_invariance(const LieAlgebra& g, const Mat& r) {
    if (!tensor_is_skew(r)) throw std::invalid_argument("gcybe_invariance expects skew r");
    Tensor3 C = cybe_residual(g, r);
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!triple_leg_action(g, i, C).is_zero()) return false;
    return true;
}

enum class BialgebraClass {
    triangular,
    quasitriangular,
    type2_quasitriangular,
    coboundary_only,
    not_bialgebra,
};

inline const char* to_string(BialgebraClass c) {
    switch (c) {
        case BialgebraClass::triangular: return "triangular";
        case BialgebraClass::quasitriangular: return "quasitriangular";
        case BialgebraClass::type2_quasitriangular: return "type-II-quasitriangular";
        case BialgebraClass::coboundary_only: return "coboundary-only";
        case BialgebraClass::not_bialgebra: return "not-bialgebra";
    }
    return "?";
}

struct ClassifyReport {
    BialgebraClass cls;
    bool factorizable; // symmetric part invertible; only for (type-II) quasitriangular
};

inline ClassifyReport classify(const LieAlgebra& g, const Mat& r) {
    BialgebraVerdict bi = is_lie_bialgebra(g, r);
    Mat beta = split_alpha_beta(r).second;
    bool beta_invertible = !beta.det().is_zero();
    if (bi.ok() && cybe_residual(g, r).is_zero()) {
        if (tensor_is_skew(r)) return {BialgebraClass::triangular, false};
        return {BialgebraClass::quasitriangular, beta_invertible};
    }
    if (bi.ok() && type2_residual(g, r).is_zero())
        return {BialgebraClass::type2_quasitriangular, beta_invertible};
    if (bi.ok()) return {BialgebraClass::coboundary_only, false};
    return {BialgebraClass::not_bialgebra, false};
}

} // namespace laxkit

#endif
