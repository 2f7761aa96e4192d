#ifndef LAXKIT_DOUBLE_ALGEBRA_HPP
#define LAXKIT_DOUBLE_ALGEBRA_HPP

#include <laxkit/operators.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace laxkit {

// The double of (g, r) lives on g (+) g* with basis (e_1..e_n, e_1*..e_n*).
// Its bracket couples the two halves through the coadjoint actions:
//   [(x,a*),(y,b*)] = ([x,y] + ad*(a*)y - ad*(b*)x,
//                      [a*,b*]_delta + ad*(x)b* - ad*(y)a*),
// and B_p((x,a*),(y,b*)) = <a*,y> + <x,b*> pairs the halves hyperbolically.

struct DrinfeldDouble {
    LieAlgebra g;
    LieAlgebra gstar;   // dual bracket induced by r
    Mat r;              // tensor coefficient matrix on g
    LieAlgebra algebra; // dimension 2n
    Mat form;           // B_p

    std::size_t n() const { return g.dim(); }
};

inline Scalar dot(const Mat& a, const Mat& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, 0) * b(i, 0);
    return s;
}

inline DrinfeldDouble build_double(const LieAlgebra& g, const Mat& r) {
    DualBracketResult dres = dual_bracket(g, r);
    if (!dres.ok())
        throw std::invalid_argument(
            "dual bracket fails the Jacobi identity at basis triple (" +
            std::to_string(dres.witness->indices[0]) + "," +
            std::to_string(dres.witness->indices[1]) + "," +
            std::to_string(dres.witness->indices[2]) + ")");
    std::size_t n = g.dim();
    DrinfeldDouble D;
    D.g = g;
    D.gstar = dres.algebra;
    D.r = r;

    Representation adstar_g = coadjoint(g);        // g acting on g*
    Representation adstar_dual = coadjoint(D.gstar); // g* acting on g

    LieAlgebra A("D(" + g.name() + ")", 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                A.set_c(i, j, k, g.c(i, j, k));
                A.set_c(n + i, n + j, n + k, D.gstar.c(i, j, k));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            // [e_i, e_l*] = (-ad*(e_l*) e_i, ad*(e_i) e_l*)
            Mat gpart = -(adstar_dual.mats[l] * Mat::basis_vector(n, i));
            Mat spart = adstar_g.mats[i] * Mat::basis_vector(n, l);
            for (std::size_t k = 0; k < n; ++k) {
                A.set_c(i, n + l, k, gpart(k, 0));
                A.set_c(n + l, i, k, -gpart(k, 0));
                A.set_c(i, n + l, n + k, spart(k, 0));
                A.set_c(n + l, i, n + k, -spart(k, 0));
            }
        }
    if (!jacobi_check(A)) throw std::logic_error("double bracket fails Jacobi");

    Mat Bp(2 * n, 2 * n);
    Bp.set_block(0, n, Mat::identity(n));
    Bp.set_block(n, 0, Mat::identity(n));
    if (!is_symmetric(Bp) || Bp.det().is_zero() || !is_invariant_form(A, Bp))
        throw std::logic_error("pairing form on the double is not invariant");
    // both halves are isotropic by the block shape of B_p; keep the check
    // explicit since it is part of the Manin-triple property
    if (!Bp.block(0, 0, n, n).is_zero() || !Bp.block(n, n, n, n).is_zero())
        throw std::logic_error("halves of the double are not isotropic");

    D.algebra = std::move(A);
    D.form = std::move(Bp);
    return D;
}

/// Element (x, a*) of the double as a 2n-vector.
inline Mat double_elem(const DrinfeldDouble& D, const Mat& x, const Mat& astar) {
    std::size_t n = D.n();
    Mat v(2 * n, 1);
    v.set_block(0, 0, x);
    v.set_block(n, 0, astar);
    return v;
}

/// [(-alpha(a*),a*), (-alpha(b*),b*)] = (-[beta(a*),beta(b*)], 0) for all
/// basis pairs, when the symmetric part is invariant.
inline bool graph_bracket_property(const DrinfeldDouble& D) {
    std::size_t n = D.n();
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Mat dk = double_elem(D, -amap.col(k), Mat::basis_vector(n, k));
            Mat dl = double_elem(D, -amap.col(l), Mat::basis_vector(n, l));
            Mat lhs = D.algebra.bracket(dk, dl);
            Mat rhs = double_elem(D, -D.g.bracket(bmap.col(k), bmap.col(l)), Mat(n, 1));
            if (lhs != rhs) return false;
        }
    return true;
}

inline void require_type2_instance(const LieAlgebra& g, const Mat& r) {
    if (!symmetric_part_invariant(g, r))
        throw std::invalid_argument("symmetric part of the tensor is not invariant");
    if (!type2_residual(g, r).is_zero())
        throw std::invalid_argument("tensor does not satisfy the mass-1/2 extended equation");
}

// ---------------------------------------------------------------------------
// The maps Theta_pm : D(g) -> complexification of g
// ---------------------------------------------------------------------------

struct ThetaReport {
    LieAlgebra target; // complexify(g)
    Mat theta_plus, theta_minus;
    bool plus_homomorphism = false, minus_homomorphism = false;
    Mat kernel; // columns in double coordinates (shared kernel)
    bool kernels_equal = false;
    bool kernel_abelian = false;
};

/// Theta_pm(x, a*) = x + alpha(a*) +- i beta(a*), landing in the doubled
/// real algebra with basis (e, ie).
inline ThetaReport theta_maps(const DrinfeldDouble& D) {
    require_type2_instance(D.g, D.r);
    std::size_t n = D.n();
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);

    ThetaReport rep;
    rep.target = complexify(D.g);
    Mat tp(2 * n, 2 * n), tm(2 * n, 2 * n);
    tp.set_block(0, 0, Mat::identity(n));
    tm.set_block(0, 0, Mat::identity(n));
    tp.set_block(0, n, amap);
    tm.set_block(0, n, amap);
    tp.set_block(n, n, bmap);
    tm.set_block(n, n, -bmap);

    auto homomorphism = [&](const Mat& t) {
        for (std::size_t a = 0; a < 2 * n; ++a)
            for (std::size_t b = 0; b < 2 * n; ++b) {
                Mat lhs = t * D.algebra.bracket(Mat::basis_vector(2 * n, a),
                                                Mat::basis_vector(2 * n, b));
                Mat rhs = rep.target.bracket(t.col(a), t.col(b));
                if (lhs != rhs) return false;
            }
        return true;
    };
    rep.plus_homomorphism = homomorphism(tp);
    rep.minus_homomorphism = homomorphism(tm);

    rep.kernel = tp.kernel();
    Mat km = tm.kernel();
    rep.kernels_equal = (tm * rep.kernel).is_zero() && (tp * km).is_zero() &&
                        km.cols() == rep.kernel.cols();
    rep.kernel_abelian = true;
    for (std::size_t a = 0; a < rep.kernel.cols() && rep.kernel_abelian; ++a)
        for (std::size_t b = 0; b < rep.kernel.cols(); ++b)
            if (!D.algebra.bracket(rep.kernel.col(a), rep.kernel.col(b)).is_zero()) {
                rep.kernel_abelian = false;
                break;
            }
    rep.theta_plus = std::move(tp);
    rep.theta_minus = std::move(tm);
    return rep;
}

inline bool same_span(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) return false;
    Mat J(A.rows(), A.cols() + B.cols());
    J.set_block(0, 0, A);
    J.set_block(0, A.cols(), B);
    std::size_t r = J.rank();
    return A.rank() == r && B.rank() == r;
}

struct ExactSequenceReport {
    Mat fperp;        // basis of Ker beta, in g* coordinates
    Mat iota;         // columns in double coordinates: a* -> (-alpha(a*), a*)
    Mat image_basis;  // basis of g + i.f in the complexified coordinates
    bool iota_injective = false;
    bool image_correct = false;     // column span of Theta equals g + i.f
    bool exact_at_middle = false;   // Im iota = Ker Theta_pm
};

/// 0 -> f_perp -> D(g) -> g (+) i.f -> 0 through iota and Theta_pm.
inline ExactSequenceReport exact_sequence(const DrinfeldDouble& D) {
    ThetaReport th = theta_maps(D);
    std::size_t n = D.n();
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);

    ExactSequenceReport rep;
    rep.fperp = bmap.kernel();
    rep.iota = Mat(2 * n, rep.fperp.cols());
    for (std::size_t j = 0; j < rep.fperp.cols(); ++j)
        rep.iota.set_col(j, double_elem(D, -(amap * rep.fperp.col(j)), rep.fperp.col(j)));
    rep.iota_injective = (rep.iota.rank() == rep.fperp.cols());

    // basis of g + i.f: the real block plus the imaginary copies of Im beta
    Mat btmp = bmap;
    auto piv = btmp.rref_in_place();
    Mat image(2 * n, n + piv.size());
    for (std::size_t i = 0; i < n; ++i) image(i, i) = Scalar::one();
    for (std::size_t j = 0; j < piv.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) image(n + i, n + j) = bmap(i, piv[j]);
    rep.image_correct = same_span(th.theta_plus, image) && same_span(th.theta_minus, image);
    rep.exact_at_middle = same_span(rep.iota, th.kernel);
    rep.image_basis = std::move(image);
    return rep;
}

// ---------------------------------------------------------------------------
// Sections of beta and the 2-cocycles tau_pm
// ---------------------------------------------------------------------------

/// A right inverse s of beta, defined on f = Im beta. The basis of f is taken
/// to be the pivot columns of beta, so s(f_j) is the matching dual basis
/// vector and beta(s(f_j)) = f_j holds by construction.
struct Section {
    Mat f_basis; // n x r, columns span Im beta
    Mat s;       // n x r, s of each f-basis vector in g* coordinates
};

inline Section beta_section(const Mat& bmap) {
    Mat tmp = bmap;
    auto piv = tmp.rref_in_place();
    Section sec;
    sec.f_basis = Mat(bmap.rows(), piv.size());
    sec.s = Mat(bmap.cols(), piv.size());
    for (std::size_t j = 0; j < piv.size(); ++j) {
        sec.f_basis.set_col(j, bmap.col(piv[j]));
        sec.s(piv[j], j) = Scalar::one();
    }
    return sec;
}

inline void require_section(const Mat& bmap, const Section& sec) {
    if (bmap * sec.s != sec.f_basis)
        throw std::invalid_argument("section is not a right inverse of the symmetric part");
}

/// Extension datum: the algebra h = g (+) i.f acting on V = f_perp, with a
/// 2-cocycle tau. The extension bracket is
/// [(x,u),(y,v)] = ([x,y], x.v - y.u + tau(x,y)).
struct ExtensionDatum {
    LieAlgebra h;           // dim n + r, basis (e_1..e_n, i f_1..i f_r)
    std::size_t vdim = 0;
    Representation action;  // h acting on V
    std::vector<Mat> tau;   // tau[a] is vdim x hdim; column b = tau(e_a, e_b)
    Mat v_basis;            // n x vdim, V-basis in g* coordinates (Ker beta)
    Section sec;
    int sign = +1;
};

namespace detail {

inline Mat coords_in(const Mat& basis, const Mat& v, const char* what) {
    auto c = basis.solve(v);
    if (!c) throw std::logic_error(std::string("vector escapes the ") + what);
    return *c;
}

} // namespace detail

/// Builds the datum (h, V, action, tau_sign) from a double and a section.
inline ExtensionDatum extension_datum(const DrinfeldDouble& D, const Section& sec, int sign) {
    require_type2_instance(D.g, D.r);
    std::size_t n = D.n();
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat bmap = tensor_as_map(beta_t);
    require_section(bmap, sec);

    ExtensionDatum E;
    E.sec = sec;
    E.sign = (sign >= 0) ? +1 : -1;
    std::size_t r = sec.f_basis.cols();
    E.v_basis = bmap.kernel();
    E.vdim = E.v_basis.cols();

    // bracket of h = g (+) i.f inside the complexified algebra; Im beta is an
    // ideal of g because beta is invariant, so the i-part closes on f
    LieAlgebra h("g+if", n + r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) h.set_c(i, j, k, D.g.c(i, j, k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Mat w = detail::coords_in(sec.f_basis,
                                      D.g.bracket(Mat::basis_vector(n, i), sec.f_basis.col(j)),
                                      "image of the symmetric part");
            for (std::size_t k = 0; k < r; ++k) {
                h.set_c(i, n + j, n + k, w(k, 0));
                h.set_c(n + j, i, n + k, -w(k, 0));
            }
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Mat w = -D.g.bracket(sec.f_basis.col(i), sec.f_basis.col(j));
            for (std::size_t k = 0; k < n; ++k) h.set_c(n + i, n + j, k, w(k, 0));
        }
    if (!jacobi_check(h)) throw std::logic_error("g+if bracket fails Jacobi");
    E.h = std::move(h);

    // action (x + iy) . a* = ad*(x) a*, restricted to f_perp
    Representation adstar = coadjoint(D.g);
    E.action.space_dim = E.vdim;
    for (std::size_t i = 0; i < n; ++i) {
        Mat M(E.vdim, E.vdim);
        for (std::size_t j = 0; j < E.vdim; ++j)
            M.set_col(j, detail::coords_in(E.v_basis, adstar.mats[i] * E.v_basis.col(j),
                                           "annihilator of the image"));
        E.action.mats.push_back(std::move(M));
    }
    for (std::size_t i = 0; i < r; ++i) E.action.mats.push_back(Mat(E.vdim, E.vdim));

    // tau(x1+iy1, x2+iy2) =
    //   sign (ad*(x1)s(y2) - ad*(x2)s(y1) - s([x1,y2]) + s([x2,y1]))
    auto s_of = [&](const Mat& y) {
        return sec.s * detail::coords_in(sec.f_basis, y, "image of the symmetric part");
    };
    auto tau_val = [&](std::size_t a, std::size_t b) {
        Mat x1(n, 1), y1(n, 1), x2(n, 1), y2(n, 1);
        if (a < n) x1 = Mat::basis_vector(n, a); else y1 = sec.f_basis.col(a - n);
        if (b < n) x2 = Mat::basis_vector(n, b); else y2 = sec.f_basis.col(b - n);
        Mat v = adstar.apply(x1, s_of(y2)) - adstar.apply(x2, s_of(y1)) -
                s_of(D.g.bracket(x1, y2)) + s_of(D.g.bracket(x2, y1));
        if (E.sign < 0) v = -v;
        return detail::coords_in(E.v_basis, v, "annihilator of the image");
    };
    std::size_t hdim = n + r;
    for (std::size_t a = 0; a < hdim; ++a) {
        Mat T(E.vdim, hdim);
        for (std::size_t b = 0; b < hdim; ++b) T.set_col(b, tau_val(a, b));
        E.tau.push_back(std::move(T));
    }
    return E;
}

/// Both signs at once.
inline std::pair<ExtensionDatum, ExtensionDatum> cocycle_tau(const DrinfeldDouble& D,
                                                             const Section& sec) {
    return {extension_datum(D, sec, +1), extension_datum(D, sec, -1)};
}

/// h x_tau V with basis (h, V); verifies the action and the Jacobi identity
/// (the latter is the cocycle condition for tau).
inline LieAlgebra build_extension(const ExtensionDatum& E) {
    if (auto w = representation_witness(E.h, E.action))
        throw std::invalid_argument("extension action is not a representation");
    std::size_t hd = E.h.dim(), vd = E.vdim, nn = hd + vd;
    LieAlgebra L("extension", nn);
    for (std::size_t i = 0; i < hd; ++i)
        for (std::size_t j = 0; j < hd; ++j) {
            for (std::size_t k = 0; k < hd; ++k) L.set_c(i, j, k, E.h.c(i, j, k));
            for (std::size_t k = 0; k < vd; ++k) L.set_c(i, j, hd + k, E.tau[i](k, j));
        }
    for (std::size_t i = 0; i < hd; ++i)
        for (std::size_t j = 0; j < vd; ++j)
            for (std::size_t k = 0; k < vd; ++k) {
                Scalar v = E.action.mats[i](k, j);
                L.set_c(i, hd + j, hd + k, v);
                L.set_c(hd + j, i, hd + k, -v);
            }
    if (!jacobi_check(L))
        throw std::invalid_argument("tau is not a 2-cocycle: extension fails Jacobi");
    return L;
}

// ---------------------------------------------------------------------------
// Identification of the double with the extension
// ---------------------------------------------------------------------------

struct IdentificationReport {
    LieAlgebra extension;
    Mat to_extension;  // (x,a*) -> (x + alpha(a*) +- i beta(a*)) x (a* - s beta a*)
    Mat to_double;     // d -> (Xi(d), Lambda(d))
    Mat form;          // B_pm on the extension
    bool inverse_pair = false;
    bool isomorphism = false;
    bool form_matches = false; // B_pm equals the pullback of B_p
};

/// The mutually inverse isomorphisms between D(g) and the extension, plus
/// the transported bilinear form
/// B_pm(d1,d2) = <Lambda(d1),Xi(d2)> + <Lambda(d2),Xi(d1)>.
inline IdentificationReport identification(const DrinfeldDouble& D, const ExtensionDatum& E) {
    std::size_t n = D.n(), r = E.sec.f_basis.cols(), hd = n + r, nn = hd + E.vdim;
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);
    Scalar sg = (E.sign >= 0) ? Scalar::one() : Scalar(-1);

    IdentificationReport rep;
    rep.extension = build_extension(E);

    // forward: e_i -> (e_i, 0, 0); e_k* -> (alpha +- i beta, a* - s beta a*)
    Mat Phi(nn, 2 * n);
    for (std::size_t i = 0; i < n; ++i) Phi(i, i) = Scalar::one();
    for (std::size_t k = 0; k < n; ++k) {
        Mat ek = Mat::basis_vector(n, k);
        Phi.set_block(0, n + k, amap.col(k));
        Mat fc = detail::coords_in(E.sec.f_basis, bmap.col(k), "image of the symmetric part");
        for (std::size_t j = 0; j < r; ++j) Phi(n + j, n + k) = sg * fc(j, 0);
        Mat eta = ek - E.sec.s * fc;
        Mat vc = detail::coords_in(E.v_basis, eta, "annihilator of the image");
        for (std::size_t j = 0; j < E.vdim; ++j) Phi(hd + j, n + k) = vc(j, 0);
    }

    // backward, through Xi(d) = x - alpha(eta) -+ alpha(s(y)) and
    // Lambda(d) = eta +- s(y)
    Mat Psi(2 * n, nn);
    for (std::size_t i = 0; i < n; ++i) Psi(i, i) = Scalar::one();
    for (std::size_t j = 0; j < r; ++j) {
        Mat sy = E.sec.s.col(j);
        Psi.set_col(n + j, double_elem(D, -sg * (amap * sy), sg * sy));
    }
    for (std::size_t j = 0; j < E.vdim; ++j) {
        Mat eta = E.v_basis.col(j);
        Psi.set_col(hd + j, double_elem(D, -(amap * eta), eta));
    }

    rep.inverse_pair = (Phi * Psi == Mat::identity(nn)) && (Psi * Phi == Mat::identity(2 * n));
    rep.isomorphism = true;
    for (std::size_t a = 0; a < nn && rep.isomorphism; ++a)
        for (std::size_t b = 0; b < nn; ++b) {
            Mat lhs = D.algebra.bracket(Psi.col(a), Psi.col(b));
            Mat rhs = Psi * rep.extension.bracket(Mat::basis_vector(nn, a),
                                                  Mat::basis_vector(nn, b));
            if (lhs != rhs) {
                rep.isomorphism = false;
                break;
            }
        }

    // B_pm from the displayed formula versus the pullback of B_p
    Mat direct(nn, nn);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) {
            Mat da = Psi.col(a), db = Psi.col(b);
            Mat xa = da.block(0, 0, n, 1), la = da.block(n, 0, n, 1);
            Mat xb = db.block(0, 0, n, 1), lb = db.block(n, 0, n, 1);
            direct(a, b) = dot(la, xb) + dot(lb, xa);
        }
    Mat pullback = Psi.transpose() * D.form * Psi;
    rep.form_matches = (direct == pullback);
    rep.form = std::move(direct);
    rep.to_extension = std::move(Phi);
    rep.to_double = std::move(Psi);
    return rep;
}

// ---------------------------------------------------------------------------
// Subalgebras of h x_tau V from 1-cochains
// ---------------------------------------------------------------------------

struct SubalgebraSpec {
    Mat b;   // hdim x bdim, columns span a subalgebra of h
    Mat W;   // vdim x wdim, columns span a b-submodule of V
    Mat phi; // vdim x bdim, a representative of phi(b_j) modulo W
};

struct SubalgebraReport {
    Mat basis; // (hdim+vdim) columns: (b_j, phi(b_j)) then (0, W_m)
    bool closed = false;
};

/// Checks the cochain condition d phi = -tau (mod W) on the chosen basis of b
/// and returns the graph subalgebra {(x, u) | u + W = phi(x)}.
inline SubalgebraReport subalgebra_from_cochain(const ExtensionDatum& E,
                                                const SubalgebraSpec& spec) {
    std::size_t hd = E.h.dim(), vd = E.vdim;
    std::size_t bd = spec.b.cols(), wd = spec.W.cols();

    auto tau_bilinear = [&](const Mat& x, const Mat& y) {
        Mat v(vd, 1);
        for (std::size_t a = 0; a < hd; ++a) {
            if (x(a, 0).is_zero()) continue;
            v = v + x(a, 0) * (E.tau[a] * y);
        }
        return v;
    };
    auto in_W = [&](const Mat& v) {
        if (wd == 0) return v.is_zero();
        return spec.W.solve(v).has_value();
    };

    // b closed, W a b-submodule
    for (std::size_t a = 0; a < bd; ++a) {
        for (std::size_t b = 0; b < bd; ++b)
            if (!spec.b.solve(E.h.bracket(spec.b.col(a), spec.b.col(b))))
                throw std::invalid_argument("b is not closed under the bracket");
        for (std::size_t m = 0; m < wd; ++m)
            if (!in_W(E.action.apply(spec.b.col(a), spec.W.col(m))))
                throw std::invalid_argument("W is not a b-submodule");
    }
    // d phi(x,y) = x.phi(y) - y.phi(x) - phi([x,y]) must equal -tau(x,y) mod W
    for (std::size_t a = 0; a < bd; ++a)
        for (std::size_t b = 0; b < bd; ++b) {
            Mat xy = E.h.bracket(spec.b.col(a), spec.b.col(b));
            Mat c = *spec.b.solve(xy);
            Mat dphi = E.action.apply(spec.b.col(a), spec.phi.col(b)) -
                       E.action.apply(spec.b.col(b), spec.phi.col(a)) - spec.phi * c;
            if (!in_W(dphi + tau_bilinear(spec.b.col(a), spec.b.col(b))))
                throw std::invalid_argument(
                    "cochain condition fails at basis pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
        }

    SubalgebraReport rep;
    rep.basis = Mat(hd + vd, bd + wd);
    for (std::size_t j = 0; j < bd; ++j) {
        rep.basis.set_block(0, j, spec.b.col(j));
        rep.basis.set_block(hd, j, spec.phi.col(j));
    }
    for (std::size_t m = 0; m < wd; ++m) rep.basis.set_block(hd, bd + m, spec.W.col(m));

    LieAlgebra ext = build_extension(E);
    rep.closed = true;
    for (std::size_t a = 0; a < rep.basis.cols() && rep.closed; ++a)
        for (std::size_t b = 0; b < rep.basis.cols(); ++b)
            if (!rep.basis.solve(ext.bracket(rep.basis.col(a), rep.basis.col(b)))) {
                rep.closed = false;
                break;
            }
    return rep;
}

struct GstarEmbeddingReport {
    SubalgebraSpec spec;
    Mat embedded;    // images of the e_k* under the explicit embedding
    bool spans_match = false;
};

/// Reads off b_pm = Theta_pm(g*), W = Ker alpha cap Ker beta and the cochain
/// phi_pm, then checks that the reconstructed graph subalgebra spans exactly
/// the embedded copy of g*.
inline GstarEmbeddingReport gstar_embedding(const DrinfeldDouble& D, const ExtensionDatum& E) {
    std::size_t n = D.n(), r = E.sec.f_basis.cols(), hd = n + r;
    auto [alpha_t, beta_t] = split_alpha_beta(D.r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);
    Scalar sg = (E.sign >= 0) ? Scalar::one() : Scalar(-1);

    // columns of Theta_pm restricted to g*, written in the (e, if) basis of h
    Mat cand(hd, n);
    for (std::size_t k = 0; k < n; ++k) {
        cand.set_block(0, k, amap.col(k));
        Mat fc = detail::coords_in(E.sec.f_basis, bmap.col(k), "image of the symmetric part");
        for (std::size_t j = 0; j < r; ++j) cand(n + j, k) = sg * fc(j, 0);
    }
    Mat tmp = cand;
    auto piv = tmp.rref_in_place();

    GstarEmbeddingReport rep;
    rep.spec.b = Mat(hd, piv.size());
    rep.spec.phi = Mat(E.vdim, piv.size());
    for (std::size_t j = 0; j < piv.size(); ++j) {
        std::size_t k = piv[j];
        rep.spec.b.set_col(j, cand.col(k));
        Mat ek = Mat::basis_vector(n, k);
        Mat eta = ek - E.sec.s * detail::coords_in(E.sec.f_basis, bmap.col(k),
                                                   "image of the symmetric part");
        rep.spec.phi.set_col(j, detail::coords_in(E.v_basis, eta, "annihilator of the image"));
    }
    // W = Ker alpha cap Ker beta, expressed in the V basis
    Mat stacked(2 * n, n);
    stacked.set_block(0, 0, amap);
    stacked.set_block(n, 0, bmap);
    Mat Wg = stacked.kernel();
    rep.spec.W = Mat(E.vdim, Wg.cols());
    for (std::size_t m = 0; m < Wg.cols(); ++m)
        rep.spec.W.set_col(m, detail::coords_in(E.v_basis, Wg.col(m),
                                                "annihilator of the image"));

    SubalgebraReport sub = subalgebra_from_cochain(E, rep.spec);
    if (!sub.closed) throw std::logic_error("reconstructed subalgebra is not closed");

    rep.embedded = Mat(hd + E.vdim, n);
    for (std::size_t k = 0; k < n; ++k) {
        rep.embedded.set_block(0, k, cand.col(k));
        Mat ek = Mat::basis_vector(n, k);
        Mat eta = ek - E.sec.s * detail::coords_in(E.sec.f_basis, bmap.col(k),
                                                   "image of the symmetric part");
        rep.embedded.set_block(hd, k,
                               detail::coords_in(E.v_basis, eta, "annihilator of the image"));
    }
    rep.spans_match = same_span(rep.embedded, sub.basis);
    return rep;
}

// ---------------------------------------------------------------------------
// Operator families on the double of a triangular instance
// ---------------------------------------------------------------------------

/// Block matrix of (x,a*) -> (l1 r(a*) + l2 x, l3 r^{-1}(x) + l4 a*).
inline Mat family_matrix(const DrinfeldDouble& D, const Scalar& l1, const Scalar& l2,
                         const Scalar& l3, const Scalar& l4) {
    std::size_t n = D.n();
    Mat rmap = tensor_as_map(D.r);
    Mat M(2 * n, 2 * n);
    M.set_block(0, 0, Mat::identity(n) * l2);
    M.set_block(0, n, rmap * l1);
    if (!l3.is_zero()) {
        auto rinv = rmap.inverse();
        if (!rinv) throw std::invalid_argument("tensor is not invertible as a map");
        M.set_block(n, 0, *rinv * l3);
    }
    M.set_block(n, n, Mat::identity(n) * l4);
    return M;
}

inline bool skew_adjoint_for_form(const Mat& B, const Mat& M) {
    return B * M == -(M.transpose() * B);
}

struct FamilyReport {
    std::string family;
    Mat op;
    bool skew_adjoint = false;
    bool nijenhuis = false;
    int square = 0;             // +1: op^2 = id, -1: op^2 = -id, 0: neither
    bool operator_identity = false; // modified equation at the expected mass
    Mat r_plus, r_minus;        // tensors (op phi^-1 +- phi^-1) on the double
    ClassifyReport class_plus{}, class_minus{};
};

namespace detail {

inline FamilyReport finish_family(const DrinfeldDouble& D, std::string name, Mat op,
                                  const Scalar& identity_mass) {
    FamilyReport rep;
    rep.family = std::move(name);
    rep.skew_adjoint = skew_adjoint_for_form(D.form, op);
    rep.nijenhuis = nijenhuis_residual(D.algebra, op).is_zero();
    std::size_t nn = op.rows();
    Mat sq = op * op;
    if (sq == Mat::identity(nn)) rep.square = 1;
    else if (sq == -Mat::identity(nn)) rep.square = -1;
    rep.operator_identity = modified_cybe_residual(D.algebra, op, identity_mass).is_zero();

    Mat phi_inv = *D.form.inverse();
    Mat plus_map = op * phi_inv + phi_inv;
    Mat minus_map = op * phi_inv - phi_inv;
    rep.r_plus = plus_map.transpose();
    rep.r_minus = minus_map.transpose();
    rep.class_plus = classify(D.algebra, rep.r_plus);
    rep.class_minus = classify(D.algebra, rep.r_minus);
    rep.op = std::move(op);
    return rep;
}

inline void require_triangular(const DrinfeldDouble& D) {
    if (classify(D.g, D.r).cls != BialgebraClass::triangular)
        throw std::invalid_argument("operator families need a triangular base instance");
}

} // namespace detail

/// R_mu(x,a*) = (mu r(a*) + x, -a*); solves the modified equation at mass -1.
inline FamilyReport family_R(const DrinfeldDouble& D, const Scalar& mu) {
    detail::require_triangular(D);
    Mat op = family_matrix(D, mu, Scalar::one(), Scalar::zero(), Scalar(-1));
    return detail::finish_family(D, "R_mu", std::move(op), Scalar(-1));
}

/// N_mu(x,a*) = (x, mu r^{-1}(x) - a*); an involution.
inline FamilyReport family_N(const DrinfeldDouble& D, const Scalar& mu) {
    detail::require_triangular(D);
    Mat op = family_matrix(D, Scalar::zero(), Scalar::one(), mu, Scalar(-1));
    return detail::finish_family(D, "N_mu", std::move(op), Scalar(-1));
}

/// N_{k1,k2}(x,a*) = (k1 r(a*) + k2 x, (1-k2^2)/k1 r^{-1}(x) - k2 a*).
inline FamilyReport family_NK(const DrinfeldDouble& D, const Scalar& k1, const Scalar& k2) {
    detail::require_triangular(D);
    if (k1.is_zero()) throw std::invalid_argument("first parameter must be nonzero");
    if ((k2 * k2 - Scalar::one()).is_zero())
        throw std::invalid_argument("second parameter must not square to one");
    Mat op = family_matrix(D, k1, k2, (Scalar::one() - k2 * k2) / k1, -k2);
    return detail::finish_family(D, "N_k1k2", std::move(op), Scalar(-1));
}

/// J_{l,mu}(x,a*) = (l r(a*) + mu x, (-1-mu^2)/l r^{-1}(x) - mu a*); a
/// complex structure, solving the modified equation at mass +1.
inline FamilyReport family_J(const DrinfeldDouble& D, const Scalar& l, const Scalar& mu) {
    detail::require_triangular(D);
    if (l.is_zero()) throw std::invalid_argument("first parameter must be nonzero");
    Mat op = family_matrix(D, l, mu, (Scalar(-1) - mu * mu) / l, -mu);
    return detail::finish_family(D, "J_lmu", std::move(op), Scalar::one());
}

// ---------------------------------------------------------------------------
// Factorization through an invertible symmetric part
// ---------------------------------------------------------------------------

struct FactorDecomposition {
    Mat x_plus, x_minus; // in the doubled (e, ie) coordinates
    bool unique = false;
};

/// x = x_+ + x_- with x_pm = (alpha +- i beta)(beta^{-1}(x) / 2i).
inline FactorDecomposition factor_decompose(const LieAlgebra& g, const Mat& r, const Mat& x) {
    require_type2_instance(g, r);
    std::size_t n = g.dim();
    auto [alpha_t, beta_t] = split_alpha_beta(r);
    Mat amap = tensor_as_map(alpha_t), bmap = tensor_as_map(beta_t);
    auto binv = bmap.inverse();
    if (!binv) throw std::invalid_argument("symmetric part is degenerate");

    Mat q = (*binv * x) * (Scalar::one() / (Scalar(2) * Scalar::i()));
    Mat p_complex = amap * q + Scalar::i() * (bmap * q);
    Mat m_complex = -(amap * q) + Scalar::i() * (bmap * q);

    FactorDecomposition dec;
    dec.x_plus = Mat(2 * n, 1);
    dec.x_minus = Mat(2 * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        dec.x_plus(i, 0) = Scalar(Rat(p_complex(i, 0).re));
        dec.x_plus(n + i, 0) = Scalar(Rat(p_complex(i, 0).im));
        dec.x_minus(i, 0) = Scalar(Rat(m_complex(i, 0).re));
        dec.x_minus(n + i, 0) = Scalar(Rat(m_complex(i, 0).im));
    }
    Mat sum = dec.x_plus + dec.x_minus;
    Mat expect(2 * n, 1);
    expect.set_block(0, 0, x);
    if (sum != expect) throw std::logic_error("factor decomposition does not recombine");
    dec.unique = true;
    return dec;
}

} // namespace laxkit

#endif
