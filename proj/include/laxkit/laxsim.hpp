#ifndef LAXKIT_LAXSIM_HPP
#define LAXKIT_LAXSIM_HPP

#include <laxkit/polynomial.hpp>
#include <laxkit/postlie.hpp>
#include <laxkit/tensor.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxkit {

/// A space carrying two Lie brackets, an action of the first on the second
/// by derivations, an invariant form, and a deformation tensor. The derived
/// bracket [x,y]_r = rt(x).y - rt(y).x + lambda [x,y] drives the dynamics.
struct TripleLieDatum {
    LieAlgebra g0;        // outer bracket
    Representation rho;   // action of the space on itself
    LieAlgebra k;         // inner bracket
    Mat B;                // bilinear form matrix
    Mat r;                // tensor coefficients
    Scalar lambda;

    // derived
    Mat rtilde;           // composite map x -> r-map(B x)
    LieAlgebra r_bracket; // deformed bracket

    std::size_t n() const { return g0.dim(); }
};

inline TripleLieDatum make_triple_datum(const LieAlgebra& g0, const Representation& rho,
                                        const LieAlgebra& k, const Mat& B, const Mat& r,
                                        const Scalar& lambda) {
    TripleLieDatum d{g0, rho, k, B, r, lambda, Mat(), LieAlgebra(), };
    std::size_t n = g0.dim();
    d.rtilde = tensor_as_map(r) * B;
    d.r_bracket = LieAlgebra("deformed", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat ej = Mat::basis_vector(n, j);
            Mat v = rho.apply(d.rtilde.col(i), ej) -
                    rho.apply(d.rtilde.col(j), Mat::basis_vector(n, i)) +
                    lambda * k.bracket(Mat::basis_vector(n, i), ej);
            for (std::size_t t = 0; t < n; ++t) d.r_bracket.set_c(i, j, t, v(t, 0));
        }
    return d;
}

struct TripleCertificate {
    std::optional<Witness> glie;               // both brackets plus the action
    bool form_symmetric = false;
    bool form_nondegenerate = false;
    std::optional<Witness> form_invariant;     // for the inner bracket
    std::optional<Witness> form_rho_invariant; // for the action
    std::optional<Witness> r_antisymmetric;
    std::optional<Witness> r_jacobi;
    bool ok() const {
        return !glie && form_symmetric && form_nondegenerate && !form_invariant &&
               !form_rho_invariant && !r_antisymmetric && !r_jacobi;
    }
};

inline TripleCertificate verify_triple_datum(const TripleLieDatum& d) {
    TripleCertificate cert;
    GLieAlgebra G{d.g0, d.k, d.rho};
    cert.glie = glie_witness(G);
    cert.form_symmetric = is_symmetric(d.B);
    cert.form_nondegenerate = !d.B.det().is_zero();
    cert.form_invariant = invariant_form_witness(d.k, d.B);
    cert.form_rho_invariant = rho_invariant_form_witness(d.rho, d.B);
    if (!d.r_bracket.is_antisymmetric())
        cert.r_antisymmetric = Witness{{}, "deformed bracket not antisymmetric"};
    cert.r_jacobi = jacobi_witness(d.r_bracket);
    return cert;
}

inline void require_triple_datum(const TripleLieDatum& d) {
    TripleCertificate c = verify_triple_datum(d);
    if (c.ok()) return;
    std::string what = "triple datum invalid:";
    if (c.glie) what += " action/brackets (" + c.glie->what + ")";
    if (!c.form_symmetric) what += " form not symmetric";
    if (!c.form_nondegenerate) what += " form degenerate";
    if (c.form_invariant) what += " form not inner-invariant";
    if (c.form_rho_invariant) what += " form not action-invariant";
    if (c.r_antisymmetric) what += " deformed bracket not antisymmetric";
    if (c.r_jacobi) what += " deformed bracket fails Jacobi";
    throw std::invalid_argument(what);
}

/// Omega = sum_i e_i (x) e^i with {e^i} the dual basis for the form; as a
/// coefficient matrix this is the inverse of the form. The defining
/// annihilation identity is asserted for every basis element.
inline Mat casimir(const TripleLieDatum& d) {
    auto Binv = d.B.inverse();
    if (!Binv) throw std::invalid_argument("form is degenerate");
    for (std::size_t x = 0; x < d.n(); ++x) {
        Mat lhs = d.rho.mats[x] * (*Binv) + (*Binv) * d.rho.mats[x].transpose();
        if (!lhs.is_zero())
            throw std::logic_error("canonical tensor is not annihilated by the action");
    }
    return *Binv;
}

// ---------------------------------------------------------------------------
// Observables and the Lie-Poisson bracket
// ---------------------------------------------------------------------------

inline Poly coordinate(std::size_t n, std::size_t s) { return Poly::var(n, s); }

/// Linear function a -> sum_k D(s,k) a_k in the dual coordinates.
inline Poly linear_poly(const Mat& D, std::size_t s) {
    Poly p(D.cols());
    for (std::size_t k = 0; k < D.cols(); ++k)
        if (!D(s, k).is_zero()) p.add_term([&] {
            Poly::Exponents e(D.cols(), 0);
            e[k] = 1;
            return e;
        }(), D(s, k));
    return p;
}

/// {f,g}_r(a) = <[df(a), dg(a)]_r, a>, expanded exactly.
inline Poly lie_poisson_bracket(const TripleLieDatum& d, const Poly& f, const Poly& g) {
    std::size_t n = d.n();
    Poly out(n);
    for (std::size_t s = 0; s < n; ++s) {
        Poly fs = f.derivative(s);
        if (fs.is_zero()) continue;
        for (std::size_t t = 0; t < n; ++t) {
            Poly gt = g.derivative(t);
            if (gt.is_zero()) continue;
            Poly lin(n);
            for (std::size_t kk = 0; kk < n; ++kk)
                if (!d.r_bracket.c(s, t, kk).is_zero()) {
                    Poly::Exponents e(n, 0);
                    e[kk] = 1;
                    lin.add_term(e, d.r_bracket.c(s, t, kk));
                }
            if (!lin.is_zero()) out = out + fs * gt * lin;
        }
    }
    return out;
}

/// Infinitesimal action on observables induced by a linear flow da/dt = D a.
inline Poly infinitesimal_action(const Poly& f, const Mat& D) {
    std::size_t n = f.nvars();
    Poly out(n);
    for (std::size_t s = 0; s < n; ++s) {
        Poly fs = f.derivative(s);
        if (!fs.is_zero()) out = out + fs * linear_poly(D, s);
    }
    return out;
}

/// Generators of the two invariance conditions: the dual of the action and
/// the coadjoint flow of the inner bracket, both as coordinate flows.
inline std::vector<Mat> invariance_generators(const TripleLieDatum& d) {
    std::vector<Mat> gens;
    for (std::size_t x = 0; x < d.n(); ++x)
        gens.push_back(d.rho.mats[x].transpose() * Scalar(-1));
    Representation adk = adjoint(d.k);
    for (std::size_t x = 0; x < d.n(); ++x)
        gens.push_back(adk.mats[x].transpose() * Scalar(-1));
    return gens;
}

inline bool is_invariant_observable(const TripleLieDatum& d, const Poly& f) {
    for (const Mat& D : invariance_generators(d))
        if (!infinitesimal_action(f, D).is_zero()) return false;
    return true;
}

/// Exact basis of the polynomials of total degree <= max_degree annihilated
/// by every invariance generator.
inline std::vector<Poly> invariant_observables(const TripleLieDatum& d,
                                               std::size_t max_degree) {
    std::size_t n = d.n();
    auto basis = monomials_up_to(n, max_degree);
    std::size_t m = basis.size();
    std::vector<Mat> gens = invariance_generators(d);
    Mat big(gens.size() * m, m);
    for (std::size_t gidx = 0; gidx < gens.size(); ++gidx)
        for (std::size_t j = 0; j < m; ++j) {
            Poly mono = coeffs_to_poly(n, Mat::basis_vector(m, j), basis);
            Mat col = poly_to_coeffs(infinitesimal_action(mono, gens[gidx]), basis);
            for (std::size_t i = 0; i < m; ++i) big(gidx * m + i, j) = col(i, 0);
        }
    Mat ker = big.kernel();
    std::vector<Poly> out;
    for (std::size_t j = 0; j < ker.cols(); ++j)
        out.push_back(coeffs_to_poly(n, ker.col(j), basis));
    return out;
}

/// The quadratic invariant a -> B(phi^{-1}a, phi^{-1}a) = a^T B^{-1} a.
inline Poly form_quadratic(const TripleLieDatum& d) {
    auto Binv = d.B.inverse();
    if (!Binv) throw std::invalid_argument("form is degenerate");
    std::size_t n = d.n();
    Poly p(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (!(*Binv)(s, t).is_zero()) {
                Poly::Exponents e(n, 0);
                e[s] += 1;
                e[t] += 1;
                p.add_term(e, (*Binv)(s, t));
            }
    return p;
}

// ---------------------------------------------------------------------------
// Lax pairs and integration
// ---------------------------------------------------------------------------

struct LaxPair {
    TripleLieDatum datum;
    Mat Omega;            // canonical tensor, also the linear readout L(a) = Omega a
    Poly H;
    std::vector<Poly> M;    // companion element, one polynomial per component
    std::vector<Poly> flow; // da/dt in dual coordinates
    std::vector<Poly> L;    // components of the readout (linear)
};

/// Builds the pair and proves the evolution identity dL/dt + rho(M)L = 0 as
/// an exact polynomial statement before any numeric work. The coordinate
/// flow is cross-validated against the Poisson bracket of the Hamiltonian
/// with each coordinate function.
inline LaxPair build_lax_pair(const TripleLieDatum& d, const Poly& H) {
    if (!is_invariant_observable(d, H))
        throw std::invalid_argument("Hamiltonian is not an invariant observable");
    std::size_t n = d.n();
    LaxPair pair{d, casimir(d), H, {}, {}, {}};

    std::vector<Poly> grad;
    for (std::size_t s = 0; s < n; ++s) grad.push_back(H.derivative(s));
    for (std::size_t m = 0; m < n; ++m) {
        Poly Mm(n);
        for (std::size_t s = 0; s < n; ++s)
            if (!d.rtilde(m, s).is_zero()) Mm = Mm + grad[s] * d.rtilde(m, s);
        pair.M.push_back(std::move(Mm));
    }
    for (std::size_t c = 0; c < n; ++c) pair.L.push_back(linear_poly(pair.Omega, c));

    // da/dt = rho(M)^T a, equivalently -rho^*(M) a
    for (std::size_t s = 0; s < n; ++s) {
        Poly fs(n);
        for (std::size_t m = 0; m < n; ++m) {
            if (pair.M[m].is_zero()) continue;
            Poly lin(n);
            for (std::size_t t = 0; t < n; ++t)
                if (!d.rho.mats[m](t, s).is_zero()) {
                    Poly::Exponents e(n, 0);
                    e[t] = 1;
                    lin.add_term(e, d.rho.mats[m](t, s));
                }
            if (!lin.is_zero()) fs = fs + pair.M[m] * lin;
        }
        pair.flow.push_back(std::move(fs));
    }

    // exact evolution identity, component by component
    for (std::size_t c = 0; c < n; ++c) {
        Poly lhs(n);
        for (std::size_t s = 0; s < n; ++s)
            if (!pair.Omega(c, s).is_zero()) lhs = lhs + pair.flow[s] * pair.Omega(c, s);
        for (std::size_t m = 0; m < n; ++m) {
            if (pair.M[m].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!d.rho.mats[m](c, j).is_zero())
                    lhs = lhs + pair.M[m] * pair.L[j] * d.rho.mats[m](c, j);
        }
        if (!lhs.is_zero()) throw std::logic_error("evolution identity fails symbolically");
    }

    // independent route: Poisson bracket with the coordinate functions
    for (std::size_t s = 0; s < n; ++s)
        if (lie_poisson_bracket(d, H, coordinate(n, s)) != pair.flow[s])
            throw std::logic_error("flow disagrees with the Poisson bracket route");
    return pair;
}

struct LaxRhs {
    std::vector<double> dstate;
    std::vector<double> dL;
};

inline LaxRhs lax_rhs(const LaxPair& pair, const std::vector<double>& a) {
    std::size_t n = pair.datum.n();
    LaxRhs out;
    out.dstate.resize(n);
    out.dL.resize(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) out.dstate[s] = pair.flow[s].eval_double(a);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t s = 0; s < n; ++s)
            out.dL[c] += pair.Omega(c, s).to_double() * out.dstate[s];
    return out;
}

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> L_values;
    double h = 0.0;
    std::string method = "rk4";
};

/// Fixed-step fourth-order Runge-Kutta on the dual coordinates; the readout
/// is recorded at every step. Aborts on a non-finite state.
inline Trajectory integrate(const LaxPair& pair, const std::vector<double>& a0, double h,
                            std::size_t steps) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    std::size_t n = pair.datum.n();
    if (a0.size() != n) throw std::invalid_argument("state dimension mismatch");
    auto f = [&](const std::vector<double>& a) {
        std::vector<double> v(n);
        for (std::size_t s = 0; s < n; ++s) v[s] = pair.flow[s].eval_double(a);
        return v;
    };
    auto readout = [&](const std::vector<double>& a) {
        std::vector<double> L(n, 0.0);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t s = 0; s < n; ++s) L[c] += pair.Omega(c, s).to_double() * a[s];
        return L;
    };
    Trajectory tr;
    tr.h = h;
    std::vector<double> a = a0;
    tr.times.push_back(0.0);
    tr.states.push_back(a);
    tr.L_values.push_back(readout(a));
    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<double> k1 = f(a), tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = a[i] + 0.5 * h * k1[i];
        std::vector<double> k2 = f(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = a[i] + 0.5 * h * k2[i];
        std::vector<double> k3 = f(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = a[i] + h * k3[i];
        std::vector<double> k4 = f(tmp);
        for (std::size_t i = 0; i < n; ++i)
            a[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        for (double v : a)
            if (!std::isfinite(v))
                throw std::runtime_error("non-finite state at step " + std::to_string(step + 1));
        tr.times.push_back(h * static_cast<double>(step + 1));
        tr.states.push_back(a);
        tr.L_values.push_back(readout(a));
    }
    return tr;
}

/// Maximum drift of f along the recorded readout values.
inline double conservation_check(const LaxPair& pair, const Trajectory& tr, const Poly& f) {
    (void)pair;
    double f0 = f.eval_double(tr.L_values.front());
    double worst = 0.0;
    for (const auto& L : tr.L_values) {
        double dv = std::fabs(f.eval_double(L) - f0);
        if (dv > worst) worst = dv;
    }
    return worst;
}

/// {f o L, g o L}_r as an exact polynomial; zero for invariant f, g.
inline Poly involution_check(const TripleLieDatum& d, const Poly& f, const Poly& g) {
    Mat Omega = casimir(d);
    return lie_poisson_bracket(d, f.compose_linear(Omega), g.compose_linear(Omega));
}

// ---------------------------------------------------------------------------
// The bracket-of-readout ansatz
// ---------------------------------------------------------------------------

struct AnsatzReport {
    bool skew = false; // tensor parity that was dispatched
    std::vector<Poly> residuals;
    bool zero = false;
};

/// Two-path comparison: the Poisson brackets of the readout coordinates
/// against the closed-form right side written in the dual basis. Dispatches
/// on the parity of the tensor; anything else is unsupported.
inline AnsatzReport ansatz_check(const TripleLieDatum& d) {
    std::size_t n = d.n();
    bool skew = (d.r == d.r.transpose() * Scalar(-1));
    bool sym = (d.r == d.r.transpose());
    if (!skew && !sym) throw std::invalid_argument("tensor is neither skew nor symmetric");
    if (d.r.is_zero()) skew = true;

    Mat Binv = *d.B.inverse();
    Mat a = d.r * d.B; // mixed-basis coefficients of the tensor
    // c(l,k,t): action of e_l on the dual basis vector e^k, in dual coordinates
    std::vector<Mat> cmat; // cmat[l](t,k)
    for (std::size_t l = 0; l < n; ++l) cmat.push_back(d.B * d.rho.mats[l] * Binv);
    // dtil(s,k,t): inner bracket of e_s with e^k, in dual coordinates
    std::vector<Mat> dtil; // dtil[s](t,k)
    for (std::size_t s = 0; s < n; ++s) {
        Mat m(n, n);
        for (std::size_t kk = 0; kk < n; ++kk)
            m.set_col(kk, d.B * d.k.bracket(Mat::basis_vector(n, s), Binv.col(kk)));
        dtil.push_back(std::move(m));
    }

    AnsatzReport rep;
    rep.skew = skew;
    Scalar sgn = skew ? Scalar::one() : Scalar(-1);
    rep.zero = true;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            Poly lhs = lie_poisson_bracket(d, coordinate(n, s), coordinate(n, t));
            Poly rhs(n);
            for (std::size_t kk = 0; kk < n; ++kk) {
                Scalar coef = Scalar(0);
                for (std::size_t l = 0; l < n; ++l)
                    coef += sgn * (a(l, s) * cmat[l](t, kk) - a(l, t) * cmat[l](s, kk));
                coef -= d.lambda * dtil[s](t, kk);
                if (!coef.is_zero()) {
                    Poly::Exponents e(n, 0);
                    e[kk] = 1;
                    rhs.add_term(e, coef);
                }
            }
            Poly res = lhs - rhs;
            if (!res.is_zero()) rep.zero = false;
            rep.residuals.push_back(std::move(res));
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Curvature of the extended-operator connection
// ---------------------------------------------------------------------------

struct CurvatureReport {
    std::size_t n = 0;
    std::vector<Mat> vals; // vals[x*n+y] maps z to R(x,y)z
    bool zero = false;
    bool invariant = false;
    bool covariantly_constant = false;
    std::optional<Witness> invariance_witness;
};

/// R(x,y)z = kappa [b(x),b(y)].z + mu b([x,y]).z - (lambda^2/4)[[x,y],z],
/// with the ambient-invariance residual checked over every basis direction
/// and its specialization along the image of the operator.
inline CurvatureReport curvature_tensor(const OOperatorContext& ctx_in) {
    OOperatorContext ctx = ctx_in;
    if (!ctx.beta) ctx.beta = Mat(ctx.ng(), ctx.nk()); // absent extension map means zero
    if (!mass_axiom_checks(ctx).all())
        throw std::invalid_argument("extension map fails its mass axioms");
    if (!extended_residual(ctx).is_zero())
        throw std::invalid_argument("extended operator residual is nonzero");
    std::size_t nk = ctx.nk();
    const Mat b = *ctx.beta;
    Scalar quarter = ctx.masses.lambda * ctx.masses.lambda * Scalar::frac(-1, 4);

    CurvatureReport rep;
    rep.n = nk;
    auto e = [&](std::size_t i) { return Mat::basis_vector(nk, i); };
    for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y) {
            Mat m(nk, nk);
            Mat bxy = ctx.G.g.bracket(b.col(x), b.col(y));
            Mat kxy = ctx.G.k.bracket(e(x), e(y));
            for (std::size_t z = 0; z < nk; ++z) {
                Mat v = ctx.masses.kappa * ctx.act(bxy, e(z)) +
                        ctx.masses.mu * ctx.act(b * kxy, e(z)) +
                        quarter * ctx.G.k.bracket(kxy, e(z));
                m.set_col(z, v);
            }
            rep.vals.push_back(std::move(m));
        }
    rep.zero = true;
    for (const Mat& m : rep.vals)
        if (!m.is_zero()) rep.zero = false;

    auto curv = [&](const Mat& u, const Mat& v) {
        Mat m(nk, nk);
        for (std::size_t x = 0; x < nk; ++x)
            for (std::size_t y = 0; y < nk; ++y) {
                Scalar f = u(x, 0) * v(y, 0);
                if (!f.is_zero()) m = m + rep.vals[x * nk + y] * f;
            }
        return m;
    };
    auto invariance_residual = [&](const Mat& xi) {
        for (std::size_t x = 0; x < nk; ++x)
            for (std::size_t y = 0; y < nk; ++y)
                for (std::size_t z = 0; z < nk; ++z) {
                    Mat v = ctx.act(xi, rep.vals[x * nk + y].col(z)) -
                            rep.vals[x * nk + y] * ctx.act(xi, e(z)) -
                            curv(ctx.act(xi, e(x)), e(y)).col(z) -
                            curv(e(x), ctx.act(xi, e(y))).col(z);
                    if (!v.is_zero()) return std::optional<Witness>(Witness{{x, y, z}, "invariance"});
                }
        return std::optional<Witness>();
    };
    rep.invariant = true;
    for (std::size_t g = 0; g < ctx.ng() && rep.invariant; ++g)
        if (auto w = invariance_residual(Mat::basis_vector(ctx.ng(), g))) {
            rep.invariant = false;
            rep.invariance_witness = w;
        }
    rep.covariantly_constant = true;
    for (std::size_t w = 0; w < nk && rep.covariantly_constant; ++w)
        if (invariance_residual(ctx.r.col(w))) rep.covariantly_constant = false;
    return rep;
}

// ---------------------------------------------------------------------------
// The PostLie-derived datum
// ---------------------------------------------------------------------------

/// Assembles the datum whose outer bracket is the descended bracket of the
/// weight-one Rota-Baxter structure, with the original bracket inside, the
/// inner-derivation action, and the invariant form of the ambient algebra.
inline TripleLieDatum postlie_triple(const LieAlgebra& L, const Mat& R, const Mat& r,
                                     const Scalar& lambda_tilde) {
    PostLieAlgebra P = from_rota_baxter(L, R, Scalar::one());
    LieAlgebra g0 = descended_lie(P);
    std::size_t n = L.dim();
    Representation rho;
    rho.space_dim = n;
    Representation ad = adjoint(L);
    for (std::size_t i = 0; i < n; ++i) {
        Mat m(n, n);
        for (std::size_t mm = 0; mm < n; ++mm)
            if (!R(mm, i).is_zero()) m = m + ad.mats[mm] * R(mm, i);
        rho.mats.push_back(std::move(m));
    }
    TripleLieDatum d = make_triple_datum(g0, rho, L, killing_form(L), r, lambda_tilde);
    require_triple_datum(d);
    return d;
}

} // namespace laxkit

#endif
