#ifndef LAXKIT_POSTLIE_HPP
#define LAXKIT_POSTLIE_HPP

#include <laxkit/catalog.hpp>
#include <laxkit/operators.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace laxkit {

/// Two bilinear operations on one space: a bracket [,] and a product (o),
/// subject to the four axioms checked by postlie_axioms.
class PostLieAlgebra {
public:
    PostLieAlgebra() : dim_(0) {}
    explicit PostLieAlgebra(std::size_t dim)
        : dim_(dim), br_(dim * dim * dim), ci_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    const Scalar& br(std::size_t i, std::size_t j, std::size_t k) const {
        return br_[(i * dim_ + j) * dim_ + k];
    }
    const Scalar& ci(std::size_t i, std::size_t j, std::size_t k) const {
        return ci_[(i * dim_ + j) * dim_ + k];
    }
    void set_br(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        br_[(i * dim_ + j) * dim_ + k] = v;
    }
    void set_ci(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        ci_[(i * dim_ + j) * dim_ + k] = v;
    }

    Mat bracket(const Mat& x, const Mat& y) const { return eval(br_, x, y); }
    Mat circ(const Mat& x, const Mat& y) const { return eval(ci_, x, y); }

    bool operator==(const PostLieAlgebra& o) const {
        return dim_ == o.dim_ && br_ == o.br_ && ci_ == o.ci_;
    }

private:
    Mat eval(const std::vector<Scalar>& t, const Mat& x, const Mat& y) const {
        Mat r(dim_, 1);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x(i, 0).is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y(j, 0).is_zero()) continue;
                Scalar f = x(i, 0) * y(j, 0);
                for (std::size_t k = 0; k < dim_; ++k) r(k, 0) += f * t[(i * dim_ + j) * dim_ + k];
            }
        }
        return r;
    }

    std::size_t dim_;
    std::vector<Scalar> br_, ci_;
};

struct PostLieAxiomReport {
    std::optional<Witness> antisymmetry; // [x,y] = -[y,x]
    std::optional<Witness> jacobi;       // bracket Jacobi
    std::optional<Witness> weighted;     // z(y x) - y(z x) + (y z)x - (z y)x + [y,z]x = 0
    std::optional<Witness> derivation;   // z[x,y] = [z x, y] + [x, z y]
    bool all() const { return !antisymmetry && !jacobi && !weighted && !derivation; }
};

inline PostLieAxiomReport postlie_axioms(const PostLieAlgebra& P) {
    std::size_t n = P.dim();
    PostLieAxiomReport rep;
    for (std::size_t i = 0; i < n && !rep.antisymmetry; ++i)
        for (std::size_t j = 0; j < n && !rep.antisymmetry; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (P.br(i, j, k) != -P.br(j, i, k)) {
                    rep.antisymmetry = Witness{{i, j, k}, "bracket not antisymmetric"};
                    break;
                }
    auto e = [&](std::size_t i) { return Mat::basis_vector(n, i); };
    for (std::size_t i = 0; i < n && !rep.jacobi; ++i)
        for (std::size_t j = 0; j < n && !rep.jacobi; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Mat v = P.bracket(P.bracket(e(i), e(j)), e(k)) +
                        P.bracket(P.bracket(e(k), e(i)), e(j)) +
                        P.bracket(P.bracket(e(j), e(k)), e(i));
                if (!v.is_zero()) {
                    rep.jacobi = Witness{{i, j, k}, "bracket fails Jacobi"};
                    break;
                }
            }
    for (std::size_t x = 0; x < n && !rep.weighted; ++x)
        for (std::size_t y = 0; y < n && !rep.weighted; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Mat v = P.circ(e(z), P.circ(e(y), e(x))) - P.circ(e(y), P.circ(e(z), e(x))) +
                        P.circ(P.circ(e(y), e(z)), e(x)) - P.circ(P.circ(e(z), e(y)), e(x)) +
                        P.circ(P.bracket(e(y), e(z)), e(x));
                if (!v.is_zero()) {
                    rep.weighted = Witness{{x, y, z}, "weighted pre-Lie relation fails"};
                    break;
                }
            }
    for (std::size_t x = 0; x < n && !rep.derivation; ++x)
        for (std::size_t y = 0; y < n && !rep.derivation; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Mat v = P.circ(e(z), P.bracket(e(x), e(y))) -
                        P.bracket(P.circ(e(z), e(x)), e(y)) -
                        P.bracket(e(x), P.circ(e(z), e(y)));
                if (!v.is_zero()) {
                    rep.derivation = Witness{{x, y, z}, "product is not a bracket derivation"};
                    break;
                }
            }
    return rep;
}

inline void require_postlie(const PostLieAlgebra& P) {
    PostLieAxiomReport rep = postlie_axioms(P);
    if (!rep.all()) throw std::invalid_argument("not a PostLie algebra");
}

/// The Lie algebra on {x,y} = x o y - y o x + [x,y].
inline LieAlgebra descended_lie(const PostLieAlgebra& P) {
    require_postlie(P);
    std::size_t n = P.dim();
    LieAlgebra L("descended", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                L.set_c(i, j, k, P.ci(i, j, k) - P.ci(j, i, k) + P.br(i, j, k));
    if (!jacobi_check(L)) throw std::logic_error("descended bracket fails Jacobi");
    return L;
}

/// The bracket part of P as a plain Lie algebra.
inline LieAlgebra bracket_lie(const PostLieAlgebra& P) {
    std::size_t n = P.dim();
    LieAlgebra L("bracket-part", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) L.set_c(i, j, k, P.br(i, j, k));
    return L;
}

/// Packages the left product as an action of the descended algebra on the
/// bracket algebra by derivations.
inline GLieAlgebra glie_from_postlie(const PostLieAlgebra& P) {
    std::size_t n = P.dim();
    GLieAlgebra G;
    G.g = descended_lie(P);
    G.k = bracket_lie(P);
    G.pi.space_dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        Mat m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = P.ci(i, j, k);
        G.pi.mats.push_back(std::move(m));
    }
    if (auto w = glie_witness(G))
        throw std::logic_error("left product does not give a derivation action: " + w->what);
    return G;
}

struct PostLieFromOperator {
    PostLieAlgebra P;
    bool homomorphism = false; // r({x,y}) = [r(x), r(y)]
};

/// [x,y] = lambda [x,y]_k, x o y = r(x).y for a zero-residual operator.
inline PostLieFromOperator from_o_operator(const OOperatorContext& ctx) {
    if (!o_operator_residual(ctx).is_zero())
        throw std::invalid_argument("operator residual is nonzero");
    std::size_t nk = ctx.nk();
    PostLieFromOperator out;
    out.P = PostLieAlgebra(nk);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            Mat cv = ctx.act(ctx.r.col(i), Mat::basis_vector(nk, j));
            for (std::size_t k = 0; k < nk; ++k) {
                out.P.set_br(i, j, k, ctx.masses.lambda * ctx.G.k.c(i, j, k));
                out.P.set_ci(i, j, k, cv(k, 0));
            }
        }
    require_postlie(out.P);
    LieAlgebra desc = descended_lie(out.P);
    out.homomorphism = true;
    for (std::size_t i = 0; i < nk && out.homomorphism; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            Mat lhs = ctx.r * desc.bracket(Mat::basis_vector(nk, i), Mat::basis_vector(nk, j));
            Mat rhs = ctx.G.g.bracket(ctx.r.col(i), ctx.r.col(j));
            if (lhs != rhs) {
                out.homomorphism = false;
                break;
            }
        }
    return out;
}

struct InducedPostLie {
    Mat image_basis;    // columns in g coordinates
    PostLieAlgebra P;   // structure on the image
    bool well_defined = false; // products agree across preimage choices
    bool homomorphism = false; // r preserves both operations
};

/// [r(x),r(y)] = lambda r([x,y]_k), r(x) o r(y) = r(r(x).y) on Im r; requires
/// Ker r to be an ideal of k.
inline InducedPostLie induced_on_image(const OOperatorContext& ctx) {
    if (!o_operator_residual(ctx).is_zero())
        throw std::invalid_argument("operator residual is nonzero");
    std::size_t nk = ctx.nk();
    Mat ker = ctx.r.kernel();
    for (std::size_t a = 0; a < ker.cols(); ++a)
        for (std::size_t x = 0; x < nk; ++x)
            if (!(ctx.r * ctx.G.k.bracket(ker.col(a), Mat::basis_vector(nk, x))).is_zero())
                throw std::invalid_argument("kernel of the operator is not an ideal (witness " +
                                            std::to_string(a) + "," + std::to_string(x) + ")");

    Mat tmp = ctx.r;
    auto piv = tmp.rref_in_place();
    std::size_t m = piv.size();
    InducedPostLie out;
    out.image_basis = Mat(ctx.ng(), m);
    for (std::size_t j = 0; j < m; ++j) out.image_basis.set_col(j, ctx.r.col(piv[j]));

    auto products = [&](const std::vector<Mat>& pre) {
        PostLieAlgebra P(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Mat brv = ctx.masses.lambda * (ctx.r * ctx.G.k.bracket(pre[a], pre[b]));
                Mat civ = ctx.r * ctx.act(ctx.r * pre[a], pre[b]);
                Mat bc = *out.image_basis.solve(brv);
                Mat cc = *out.image_basis.solve(civ);
                for (std::size_t k = 0; k < m; ++k) {
                    P.set_br(a, b, k, bc(k, 0));
                    P.set_ci(a, b, k, cc(k, 0));
                }
            }
        return P;
    };
    std::vector<Mat> pre;
    for (std::size_t j = 0; j < m; ++j) pre.push_back(Mat::basis_vector(nk, piv[j]));
    out.P = products(pre);
    out.well_defined = true;
    if (ker.cols() > 0) {
        std::vector<Mat> shifted = pre;
        for (auto& p : shifted) p = p + ker.col(0);
        out.well_defined = (products(shifted) == out.P);
    }
    require_postlie(out.P);

    out.homomorphism = true;
    OOperatorContext full = ctx;
    PostLieFromOperator source = from_o_operator(full);
    for (std::size_t x = 0; x < nk && out.homomorphism; ++x)
        for (std::size_t y = 0; y < nk; ++y) {
            Mat ex = Mat::basis_vector(nk, x), ey = Mat::basis_vector(nk, y);
            Mat rx = *out.image_basis.solve(ctx.r.col(x));
            Mat ry = *out.image_basis.solve(ctx.r.col(y));
            bool ok = (out.image_basis * out.P.bracket(rx, ry) ==
                       ctx.r * source.P.bracket(ex, ey)) &&
                      (out.image_basis * out.P.circ(rx, ry) == ctx.r * source.P.circ(ex, ey));
            if (!ok) {
                out.homomorphism = false;
                break;
            }
        }
    return out;
}

/// [x,y] = lambda [x,y]_g, x o y = [R(x), y] for a Rota-Baxter R of
/// weight lambda.
inline PostLieAlgebra from_rota_baxter(const LieAlgebra& L, const Mat& R, const Scalar& lambda) {
    if (!rota_baxter_residual(L, R, lambda).is_zero())
        throw std::invalid_argument("Rota-Baxter residual is nonzero");
    std::size_t n = L.dim();
    PostLieAlgebra P(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat cv = L.bracket(R.col(i), Mat::basis_vector(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                P.set_br(i, j, k, lambda * L.c(i, j, k));
                P.set_ci(i, j, k, cv(k, 0));
            }
        }
    require_postlie(P);
    return P;
}

/// [x,y] = lambda R([R^{-1}x, R^{-1}y]), x o y = R([x, R^{-1}y]); the
/// descended bracket recovers the original algebra exactly.
inline PostLieAlgebra compatible_from_invertible_rb(const LieAlgebra& L, const Mat& R,
                                                    const Scalar& lambda) {
    if (!rota_baxter_residual(L, R, lambda).is_zero())
        throw std::invalid_argument("Rota-Baxter residual is nonzero");
    auto Rinv = R.inverse();
    if (!Rinv) throw std::invalid_argument("operator is not invertible");
    std::size_t n = L.dim();
    PostLieAlgebra P(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat brv = lambda * (R * L.bracket(Rinv->col(i), Rinv->col(j)));
            Mat civ = R * L.bracket(Mat::basis_vector(n, i), Rinv->col(j));
            for (std::size_t k = 0; k < n; ++k) {
                P.set_br(i, j, k, brv(k, 0));
                P.set_ci(i, j, k, civ(k, 0));
            }
        }
    require_postlie(P);
    LieAlgebra desc = descended_lie(P);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (desc.c(i, j, k) != L.c(i, j, k))
                    throw std::logic_error("compatible structure does not descend to the input");
    return P;
}

struct BorelPostLie {
    PostLieAlgebra P;
    Mat R; // the negated projection onto the Borel part
    bool matches_closed_form = false;
};

/// Negated-Borel-projection structure on a split simple catalog algebra,
/// compared entry by entry against its root-datum closed forms.
inline BorelPostLie borel_example(const std::string& name) {
    LieAlgebra L = (name == "sl2") ? catalog::sl2() : catalog::sl3();
    catalog::RootData rd = catalog::root_data(name);
    auto [bor, nil] = catalog::borel_split(name);
    BorelPostLie out;
    out.R = rb_from_splitting(L, bor, nil);
    out.P = from_rota_baxter(L, out.R, Scalar::one());

    std::size_t n = L.dim();
    auto is_cartan = [&](std::size_t i) {
        for (auto c : rd.cartan_indices)
            if (c == i) return true;
        return false;
    };
    auto root_of = [&](std::size_t i) -> const catalog::RootInfo* {
        for (const auto& r : rd.roots)
            if (r.index == i) return &r;
        return nullptr;
    };
    auto is_positive = [&](const catalog::RootInfo& r) {
        for (int c : r.simple_coeffs)
            if (c != 0) return c > 0;
        return false;
    };
    auto table_col = [&](std::size_t i, std::size_t j) {
        Mat v(n, 1);
        for (std::size_t k = 0; k < n; ++k) v(k, 0) = out.P.ci(i, j, k);
        return v;
    };

    out.matches_closed_form = true;
    for (std::size_t i = 0; i < n && out.matches_closed_form; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat got = table_col(i, j);
            Mat want(n, 1);
            const catalog::RootInfo* ri = root_of(i);
            const catalog::RootInfo* rj = root_of(j);
            bool covered = true;
            if (ri && !is_positive(*ri)) {
                // X_{-alpha} o y = 0
            } else if (is_cartan(i) && is_cartan(j)) {
                // H_i o H_j = 0
            } else if (is_cartan(i) && rj) {
                // H_i o X_beta = -<beta, alpha_i> X_beta
                std::size_t ci = 0;
                while (rd.cartan_indices[ci] != i) ++ci;
                want(j, 0) = Scalar(-rj->pairing[ci]);
            } else if (ri && is_positive(*ri) && is_cartan(j)) {
                // X_alpha o H_i = <alpha, alpha_i> X_alpha
                std::size_t cj = 0;
                while (rd.cartan_indices[cj] != j) ++cj;
                want(i, 0) = Scalar(ri->pairing[cj]);
            } else if (ri && is_positive(*ri) && rj) {
                // X_alpha o X_beta = -N_{alpha,beta} X_{alpha+beta}
                std::vector<int> sum = ri->simple_coeffs;
                for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += rj->simple_coeffs[t];
                if (const catalog::RootInfo* rs = rd.find(sum)) {
                    want(rs->index, 0) = -L.c(i, j, rs->index);
                } else {
                    covered = false;
                }
            } else {
                covered = false;
            }
            if (!covered) want = L.bracket(out.R.col(i), Mat::basis_vector(n, j));
            if (got != want) {
                out.matches_closed_form = false;
                break;
            }
        }
    return out;
}

struct QuasitriangularPostLie {
    PostLieAlgebra dual_structure;              // on g*
    std::optional<PostLieAlgebra> compatible;   // on g, when r is invertible
    bool descends_to_input = false;             // compatible variant only
};

/// [a*,b*] = -2 ad*(beta(a*))b*, a* o b* = ad*(r(a*))b* for a solution of the
/// classical equation; the invertible variant transports the structure to g.
inline QuasitriangularPostLie quasitriangular_postlie(const LieAlgebra& g, const Mat& r) {
    ClassifyReport cr = classify(g, r);
    if (cr.cls != BialgebraClass::triangular && cr.cls != BialgebraClass::quasitriangular)
        throw std::invalid_argument("tensor is not a solution of the classical equation");
    std::size_t n = g.dim();
    Representation adstar = coadjoint(g);
    Mat rmap = tensor_as_map(r);
    Mat bmap = tensor_as_map(split_alpha_beta(r).second);

    QuasitriangularPostLie out;
    out.dual_structure = PostLieAlgebra(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat brv = Scalar(-2) * adstar.apply(bmap.col(i), Mat::basis_vector(n, j));
            Mat civ = adstar.apply(rmap.col(i), Mat::basis_vector(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                out.dual_structure.set_br(i, j, k, brv(k, 0));
                out.dual_structure.set_ci(i, j, k, civ(k, 0));
            }
        }
    require_postlie(out.dual_structure);

    if (auto rinv = rmap.inverse()) {
        PostLieAlgebra C(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Mat brv = Scalar(-2) *
                          (rmap * adstar.apply(bmap * (*rinv * Mat::basis_vector(n, i)),
                                               *rinv * Mat::basis_vector(n, j)));
                Mat civ = rmap * adstar.apply(Mat::basis_vector(n, i),
                                              *rinv * Mat::basis_vector(n, j));
                for (std::size_t k = 0; k < n; ++k) {
                    C.set_br(i, j, k, brv(k, 0));
                    C.set_ci(i, j, k, civ(k, 0));
                }
            }
        require_postlie(C);
        LieAlgebra desc = descended_lie(C);
        out.descends_to_input = true;
        for (std::size_t i = 0; i < n && out.descends_to_input; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (desc.c(i, j, k) != g.c(i, j, k)) {
                        out.descends_to_input = false;
                        break;
                    }
        out.compatible = std::move(C);
    }
    return out;
}

struct SemisimpleClassification {
    Mat f;                   // x o y = [f(x), y]
    bool products_match = false;
    bool rota_baxter = false; // weight-1 residual of f is zero
};

/// On an algebra with nondegenerate Killing form and zero center, every
/// PostLie product over the own bracket is x o y = [f(x), y] with f a
/// weight-1 Rota-Baxter operator; recovered by an exact linear solve.
inline SemisimpleClassification semisimple_classify(const LieAlgebra& L,
                                                    const PostLieAlgebra& P) {
    std::size_t n = L.dim();
    if (killing_form(L).det().is_zero())
        throw std::invalid_argument("Killing form is degenerate");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (P.br(i, j, k) != L.c(i, j, k))
                    throw std::invalid_argument("bracket part differs from the ambient algebra");

    Representation ad = adjoint(L);
    Mat A(n * n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) A(k * n + j, m) = ad.mats[m](k, j);
    SemisimpleClassification out;
    out.f = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Mat b(n * n, 1);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) b(k * n + j, 0) = P.ci(i, j, k);
        auto sol = A.solve(b);
        if (!sol)
            throw std::invalid_argument("left product is not an inner derivation at basis index " +
                                        std::to_string(i));
        out.f.set_col(i, *sol);
    }
    out.products_match = true;
    for (std::size_t i = 0; i < n && out.products_match; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat want(n, 1);
            for (std::size_t k = 0; k < n; ++k) want(k, 0) = P.ci(i, j, k);
            if (L.bracket(out.f.col(i), Mat::basis_vector(n, j)) != want) {
                out.products_match = false;
                break;
            }
        }
    out.rota_baxter = rota_baxter_residual(L, out.f, Scalar::one()).is_zero();
    return out;
}

// ---------------------------------------------------------------------------
// Dendriform trialgebras
// ---------------------------------------------------------------------------

/// Three product tables; star = prec + succ + dot is associative when the
/// seven axioms hold.
class DendriformTrialgebra {
public:
    DendriformTrialgebra() : dim_(0) {}
    explicit DendriformTrialgebra(std::size_t dim)
        : dim_(dim), prec_(dim * dim * dim), succ_(dim * dim * dim), dot_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    void set_prec(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        prec_[idx(i, j, k)] = v;
    }
    void set_succ(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        succ_[idx(i, j, k)] = v;
    }
    void set_dot(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        dot_[idx(i, j, k)] = v;
    }
    const Scalar& prec(std::size_t i, std::size_t j, std::size_t k) const {
        return prec_[idx(i, j, k)];
    }
    const Scalar& succ(std::size_t i, std::size_t j, std::size_t k) const {
        return succ_[idx(i, j, k)];
    }
    const Scalar& dot(std::size_t i, std::size_t j, std::size_t k) const {
        return dot_[idx(i, j, k)];
    }

    Mat prec_v(const Mat& x, const Mat& y) const { return eval(prec_, x, y); }
    Mat succ_v(const Mat& x, const Mat& y) const { return eval(succ_, x, y); }
    Mat dot_v(const Mat& x, const Mat& y) const { return eval(dot_, x, y); }
    Mat star_v(const Mat& x, const Mat& y) const {
        return prec_v(x, y) + succ_v(x, y) + dot_v(x, y);
    }

private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * dim_ + j) * dim_ + k;
    }
    Mat eval(const std::vector<Scalar>& t, const Mat& x, const Mat& y) const {
        Mat r(dim_, 1);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x(i, 0).is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y(j, 0).is_zero()) continue;
                Scalar f = x(i, 0) * y(j, 0);
                for (std::size_t k = 0; k < dim_; ++k) r(k, 0) += f * t[idx(i, j, k)];
            }
        }
        return r;
    }

    std::size_t dim_;
    std::vector<Scalar> prec_, succ_, dot_;
};

struct TrialgebraAxiomReport {
    // one witness slot per displayed axiom, plus associativity of star
    std::vector<std::optional<Witness>> axioms; // size 7
    std::optional<Witness> star_associative;
    bool all() const {
        for (const auto& a : axioms)
            if (a) return false;
        return !star_associative;
    }
};

inline TrialgebraAxiomReport trialgebra_axioms(const DendriformTrialgebra& T) {
    std::size_t n = T.dim();
    TrialgebraAxiomReport rep;
    rep.axioms.resize(7);
    auto e = [&](std::size_t i) { return Mat::basis_vector(n, i); };
    auto check = [&](std::size_t which, auto&& lhs, auto&& rhs) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (lhs(e(x), e(y), e(z)) != rhs(e(x), e(y), e(z))) {
                        rep.axioms[which] = Witness{{x, y, z}, "trialgebra axiom " +
                                                                   std::to_string(which + 1)};
                        return;
                    }
    };
    check(0, [&](auto x, auto y, auto z) { return T.prec_v(T.prec_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.prec_v(x, T.star_v(y, z)); });
    check(1, [&](auto x, auto y, auto z) { return T.prec_v(T.succ_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.succ_v(x, T.prec_v(y, z)); });
    check(2, [&](auto x, auto y, auto z) { return T.succ_v(T.star_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.succ_v(x, T.succ_v(y, z)); });
    check(3, [&](auto x, auto y, auto z) { return T.dot_v(T.succ_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.succ_v(x, T.dot_v(y, z)); });
    check(4, [&](auto x, auto y, auto z) { return T.dot_v(T.prec_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.dot_v(x, T.succ_v(y, z)); });
    check(5, [&](auto x, auto y, auto z) { return T.prec_v(T.dot_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.dot_v(x, T.prec_v(y, z)); });
    check(6, [&](auto x, auto y, auto z) { return T.dot_v(T.dot_v(x, y), z); },
          [&](auto x, auto y, auto z) { return T.dot_v(x, T.dot_v(y, z)); });
    for (std::size_t x = 0; x < n && !rep.star_associative; ++x)
        for (std::size_t y = 0; y < n && !rep.star_associative; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (T.star_v(T.star_v(e(x), e(y)), e(z)) !=
                    T.star_v(e(x), T.star_v(e(y), e(z)))) {
                    rep.star_associative = Witness{{x, y, z}, "star not associative"};
                    break;
                }
    return rep;
}

/// [x,y] = x.y - y.x, x o y = (x succ y) - (y prec x).
inline PostLieAlgebra trialgebra_to_postlie(const DendriformTrialgebra& T) {
    if (!trialgebra_axioms(T).all()) throw std::invalid_argument("trialgebra axioms fail");
    std::size_t n = T.dim();
    PostLieAlgebra P(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                P.set_br(i, j, k, T.dot(i, j, k) - T.dot(j, i, k));
                P.set_ci(i, j, k, T.succ(i, j, k) - T.prec(j, i, k));
            }
    require_postlie(P);
    return P;
}

/// Both routes around the square agree: the descended bracket of the induced
/// PostLie structure equals the commutator of the associative star product.
inline bool diagram_check(const DendriformTrialgebra& T) {
    PostLieAlgebra P = trialgebra_to_postlie(T);
    LieAlgebra desc = descended_lie(P);
    std::size_t n = T.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat comm = T.star_v(Mat::basis_vector(n, i), Mat::basis_vector(n, j)) -
                       T.star_v(Mat::basis_vector(n, j), Mat::basis_vector(n, i));
            Mat got(n, 1);
            for (std::size_t k = 0; k < n; ++k) got(k, 0) = desc.c(i, j, k);
            if (comm != got) return false;
        }
    return true;
}

} // namespace laxkit

#endif
