#ifndef LAXKIT_LIE_ALGEBRA_HPP
#define LAXKIT_LIE_ALGEBRA_HPP

#include <laxkit/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace laxkit {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k over Q[i].
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    LieAlgebra(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), sc_(dim * dim * dim) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::size_t dim() const { return dim_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_[(i * dim_ + j) * dim_ + k];
    }
    void set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        sc_[(i * dim_ + j) * dim_ + k] = v;
    }
    /// Sets [e_i,e_j] coefficient and its antisymmetric mirror.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        set_c(i, j, k, v);
        set_c(j, i, k, -v);
    }

    Mat bracket(const Mat& x, const Mat& y) const {
        Mat r(dim_, 1);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x(i, 0).is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y(j, 0).is_zero()) continue;
                Scalar f = x(i, 0) * y(j, 0);
                for (std::size_t k = 0; k < dim_; ++k)
                    r(k, 0) += f * c(i, j, k);
            }
        }
        return r;
    }

    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != -c(j, i, k)) return false;
        return true;
    }

    bool is_abelian() const {
        for (const auto& x : sc_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && sc_ == o.sc_; }

private:
    std::string name_;
    std::size_t dim_;
    std::vector<Scalar> sc_;
};

/// Representation of a Lie algebra on an m-dimensional space:
/// mats[i] is the image of the i-th basis vector.
struct Representation {
    std::size_t space_dim = 0;
    std::vector<Mat> mats;

    const Mat& operator()(std::size_t i) const { return mats[i]; }
    Mat apply(const Mat& xi, const Mat& v) const {
        Mat r(space_dim, 1);
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (!xi(i, 0).is_zero()) r = r + xi(i, 0) * (mats[i] * v);
        return r;
    }
};

/// First failing basis tuple of a check, in lexicographic order.
struct Witness {
    std::vector<std::size_t> indices;
    std::string what;
};

// ---------------------------------------------------------------------------
// Core checks
// ---------------------------------------------------------------------------

/// Jacobi residual [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j];
/// returns the first basis triple where it is nonzero.
inline std::optional<Witness> jacobi_witness(const LieAlgebra& L) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Mat ei = Mat::basis_vector(n, i);
                Mat ej = Mat::basis_vector(n, j);
                Mat ek = Mat::basis_vector(n, k);
                Mat r = L.bracket(L.bracket(ei, ej), ek) + L.bracket(L.bracket(ej, ek), ei) +
                        L.bracket(L.bracket(ek, ei), ej);
                if (!r.is_zero()) return Witness{{i, j, k}, "jacobi"};
            }
    return std::nullopt;
}

inline bool jacobi_check(const LieAlgebra& L) {
    return L.is_antisymmetric() && !jacobi_witness(L);
}

inline std::optional<Witness> derivation_witness(const LieAlgebra& L, const Mat& D) {
    std::size_t n = L.dim();
    if (D.rows() != n || D.cols() != n) throw std::invalid_argument("derivation map shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat ei = Mat::basis_vector(n, i);
            Mat ej = Mat::basis_vector(n, j);
            Mat lhs = D * L.bracket(ei, ej);
            Mat rhs = L.bracket(D * ei, ej) + L.bracket(ei, D * ej);
            if (lhs != rhs) return Witness{{i, j}, "derivation"};
        }
    return std::nullopt;
}

inline bool is_derivation(const LieAlgebra& L, const Mat& D) {
    return !derivation_witness(L, D);
}

/// Homomorphism property rho([e_i,e_j]) = rho(e_i)rho(e_j) - rho(e_j)rho(e_i).
inline std::optional<Witness> representation_witness(const LieAlgebra& L,
                                                     const Representation& rho) {
    std::size_t n = L.dim();
    if (rho.mats.size() != n) throw std::invalid_argument("representation arity mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat lhs(rho.space_dim, rho.space_dim);
            for (std::size_t k = 0; k < n; ++k)
                if (!L.c(i, j, k).is_zero()) lhs = lhs + L.c(i, j, k) * rho.mats[k];
            Mat rhs = rho.mats[i] * rho.mats[j] - rho.mats[j] * rho.mats[i];
            if (lhs != rhs) return Witness{{i, j}, "representation"};
        }
    return std::nullopt;
}

inline bool representation_check(const LieAlgebra& L, const Representation& rho) {
    return !representation_witness(L, rho);
}

// ---------------------------------------------------------------------------
// Canonical representations and forms
// ---------------------------------------------------------------------------

inline Representation adjoint(const LieAlgebra& L) {
    std::size_t n = L.dim();
    Representation rho;
    rho.space_dim = n;
    rho.mats.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Mat m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = L.c(i, j, k);
        rho.mats.push_back(std::move(m));
    }
    return rho;
}

inline Representation coadjoint(const LieAlgebra& L) {
    Representation rho = adjoint(L);
    for (auto& m : rho.mats) m = -m.transpose();
    return rho;
}

inline Representation dual_representation(const Representation& rho) {
    Representation d;
    d.space_dim = rho.space_dim;
    for (const auto& m : rho.mats) d.mats.push_back(-m.transpose());
    return d;
}

inline Mat killing_form(const LieAlgebra& L) {
    std::size_t n = L.dim();
    Representation ad = adjoint(L);
    Mat B(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat p = ad.mats[i] * ad.mats[j];
            Scalar tr;
            for (std::size_t k = 0; k < n; ++k) tr += p(k, k);
            B(i, j) = tr;
        }
    return B;
}

inline bool is_symmetric(const Mat& B) { return B == B.transpose(); }

/// B([x,y],z) = B(x,[y,z]) on all basis triples.
inline std::optional<Witness> invariant_form_witness(const LieAlgebra& L, const Mat& B) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs, rhs;
                for (std::size_t m = 0; m < n; ++m) {
                    lhs += L.c(i, j, m) * B(m, k);
                    rhs += L.c(j, k, m) * B(i, m);
                }
                if (lhs != rhs) return Witness{{i, j, k}, "invariant form"};
            }
    return std::nullopt;
}

inline bool is_invariant_form(const LieAlgebra& L, const Mat& B) {
    return !invariant_form_witness(L, B);
}

/// B(rho(xi)x, y) + B(x, rho(xi)y) = 0 for all basis xi, x, y.
inline std::optional<Witness> rho_invariant_form_witness(const Representation& rho, const Mat& B) {
    for (std::size_t i = 0; i < rho.mats.size(); ++i) {
        Mat r = rho.mats[i].transpose() * B + B * rho.mats[i];
        if (!r.is_zero()) return Witness{{i}, "rho-invariant form"};
    }
    return std::nullopt;
}

inline bool is_rho_invariant_form(const Representation& rho, const Mat& B) {
    return !rho_invariant_form_witness(rho, B);
}

/// The invertible map phi: a -> a* with B(x,y) = <phi(x), y>; its matrix in
/// the basis/dual-basis pair is B itself.
inline Mat form_to_iso(const Mat& B) {
    if (B.det().is_zero()) throw std::domain_error("form not invertible");
    return B;
}

struct TransportedStructure {
    LieAlgebra dual_algebra;   // bracket phi([phi^-1 a*, phi^-1 b*])
    Representation rho_phi;    // phi rho(xi) phi^-1
};

/// Moves a Lie bracket and an action across the isomorphism defined by a
/// nondegenerate form.
inline TransportedStructure transport(const LieAlgebra& K, const Representation& rho,
                                      const Mat& B) {
    Mat phi = form_to_iso(B);
    Mat phi_inv = *phi.inverse();
    std::size_t n = K.dim();
    LieAlgebra dual(K.name() + "*", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat v = phi * K.bracket(phi_inv.col(i), phi_inv.col(j));
            for (std::size_t k = 0; k < n; ++k) dual.set_c(i, j, k, v(k, 0));
        }
    TransportedStructure t;
    t.dual_algebra = std::move(dual);
    t.rho_phi.space_dim = rho.space_dim;
    for (const auto& m : rho.mats) t.rho_phi.mats.push_back(phi * m * phi_inv);
    return t;
}

// ---------------------------------------------------------------------------
// g-Lie algebras and constructions
// ---------------------------------------------------------------------------

/// Lie algebra k acted on by g through derivations.
struct GLieAlgebra {
    LieAlgebra g;
    LieAlgebra k;
    Representation pi; // action of g on the space of k
};

inline std::optional<Witness> glie_witness(const GLieAlgebra& G) {
    if (auto w = representation_witness(G.g, G.pi)) return w;
    for (std::size_t i = 0; i < G.g.dim(); ++i)
        if (auto w = derivation_witness(G.k, G.pi.mats[i]))
            return Witness{{i, w->indices[0], w->indices[1]}, "action not by derivations"};
    return std::nullopt;
}

inline bool glie_check(const GLieAlgebra& G) { return !glie_witness(G); }

/// Semidirect sum g ⋉ k: both blocks keep their brackets, [x,y] = pi(x)y
/// across, and k becomes an ideal.
inline LieAlgebra semidirect_sum(const GLieAlgebra& G) {
    if (auto w = glie_witness(G)) throw std::invalid_argument("invalid g-Lie algebra: " + w->what);
    std::size_t ng = G.g.dim(), nk = G.k.dim(), n = ng + nk;
    LieAlgebra L(G.g.name() + "+" + G.k.name(), n);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < ng; ++k) L.set_c(i, j, k, G.g.c(i, j, k));
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < nk; ++j)
            for (std::size_t k = 0; k < nk; ++k) L.set_c(ng + i, ng + j, ng + k, G.k.c(i, j, k));
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nk; ++j)
            for (std::size_t k = 0; k < nk; ++k) {
                Scalar v = G.pi.mats[i](k, j);
                L.set_c(i, ng + j, ng + k, v);
                L.set_c(ng + j, i, ng + k, -v);
            }
    return L;
}

/// Doubled real algebra with basis (e_1..e_n, ie_1..ie_n):
/// [e_i, ie_j] = i[e_i,e_j] and [ie_i, ie_j] = -[e_i,e_j].
inline LieAlgebra complexify(const LieAlgebra& L) {
    std::size_t n = L.dim();
    LieAlgebra C(L.name() + "_C", 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& v = L.c(i, j, k);
                if (v.is_zero()) continue;
                C.set_c(i, j, k, v);
                C.set_c(i, n + j, n + k, v);
                C.set_c(n + i, j, n + k, v);
                C.set_c(n + i, n + j, k, -v);
            }
    return C;
}

} // namespace laxkit

#endif
