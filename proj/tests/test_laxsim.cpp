#include <catch_amalgamated.hpp>

#include <laxkit/double_algebra.hpp>
#include <laxkit/laxsim.hpp>

#include <cmath>

using namespace laxkit;

namespace {

TripleLieDatum borel_datum() {
    LieAlgebra sl2 = catalog::sl2();
    Mat K = killing_form(sl2);
    auto [bor, nil] = catalog::borel_split("sl2");
    Mat R = rb_from_splitting(sl2, bor, nil);
    return postlie_triple(sl2, R, *K.inverse(), Scalar::one());
}

// quadratic observable carried by the pairing form on the primal side
Poly primal_quadratic(const Mat& K) {
    Poly f(K.rows());
    for (std::size_t s = 0; s < K.rows(); ++s)
        for (std::size_t t = 0; t < K.cols(); ++t)
            if (!K(s, t).is_zero()) {
                Poly::Exponents e(K.rows(), 0);
                e[s] += 1;
                e[t] += 1;
                f.add_term(e, K(s, t));
            }
    return f;
}

} // namespace

TEST_CASE("exact polynomials") {
    Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
    Poly p = (x + y) * (x + y);
    REQUIRE(p.degree() == 2);
    REQUIRE(p.derivative(0) == x * Scalar(2) + y * Scalar(2));
    REQUIRE(p.eval({Scalar(2), Scalar(3)}) == Scalar(25));
    Mat A(2, 2);
    A(0, 0) = Scalar(2);
    A(1, 1) = Scalar(3);
    REQUIRE(p.compose_linear(A) ==
            (x * Scalar(2) + y * Scalar(3)) * (x * Scalar(2) + y * Scalar(3)));
    REQUIRE(monomials_up_to(3, 2).size() == 10); // 1 + 3 + 6
}

TEST_CASE("adjoint datum with the killing pairing") {
    LieAlgebra sl2 = catalog::sl2();
    Mat K = killing_form(sl2);
    TripleLieDatum d = make_triple_datum(sl2, adjoint(sl2), sl2, K, Mat(3, 3), Scalar::one());
    REQUIRE(verify_triple_datum(d).ok());

    // frozen inverse-form tensor in the H, E, F basis
    Mat Om = casimir(d);
    Mat oracle(3, 3);
    oracle(0, 0) = Scalar::frac(1, 8);
    oracle(1, 2) = Scalar::frac(1, 4);
    oracle(2, 1) = Scalar::frac(1, 4);
    REQUIRE(Om == oracle);

    // degree two: the constants and one quadratic invariant
    REQUIRE(invariant_observables(d, 2).size() == 2);
    Poly H = form_quadratic(d);
    REQUIRE(is_invariant_observable(d, H));

    // with the zero tensor the equations of motion are trivial
    LaxPair lp = build_lax_pair(d, H);
    for (const Poly& f : lp.flow) REQUIRE(f.is_zero());
    AnsatzReport ar = ansatz_check(d);
    REQUIRE(ar.skew);
    REQUIRE(ar.zero);

    // a non-invariant pairing is rejected by the certificate
    TripleLieDatum bad =
        make_triple_datum(sl2, adjoint(sl2), sl2, Mat::identity(3), Mat(3, 3), Scalar::one());
    REQUIRE(!verify_triple_datum(bad).ok());
    REQUIRE_THROWS_AS(require_triple_datum(bad), std::invalid_argument);
}

TEST_CASE("closed-form coefficients match both tensor parities") {
    LieAlgebra sl2 = catalog::sl2();
    Mat K = killing_form(sl2);
    // symmetric tensor: the inverse pairing
    TripleLieDatum sym = make_triple_datum(sl2, adjoint(sl2), sl2, K, *K.inverse(), Scalar::one());
    REQUIRE(verify_triple_datum(sym).ok());
    AnsatzReport as = ansatz_check(sym);
    REQUIRE(!as.skew);
    REQUIRE(as.zero);
    // a single wedge on sl2 does not give a Lie bracket on the dual side
    Mat ef(3, 3);
    ef(1, 2) = Scalar::one();
    ef(2, 1) = Scalar(-1);
    TripleLieDatum bad = make_triple_datum(sl2, adjoint(sl2), sl2, K, ef, Scalar::one());
    TripleCertificate cb = verify_triple_datum(bad);
    REQUIRE(!cb.ok());
    REQUIRE(cb.r_jacobi.has_value());

    // nonzero skew instance: a wedge over the paired extension of aff1
    LieAlgebra aff1 = catalog::aff1();
    Mat w2(2, 2);
    w2(0, 1) = Scalar::one();
    w2(1, 0) = Scalar(-1);
    DrinfeldDouble D = build_double(aff1, w2);
    Mat w(4, 4);
    w(1, 2) = Scalar::one();
    w(2, 1) = Scalar(-1);
    TripleLieDatum skw =
        make_triple_datum(D.algebra, adjoint(D.algebra), D.algebra, D.form, w, Scalar::one());
    REQUIRE(verify_triple_datum(skw).ok());
    AnsatzReport ak = ansatz_check(skw);
    REQUIRE(ak.skew);
    REQUIRE(ak.zero);
}

TEST_CASE("the projection-induced datum produces a consistent pair") {
    TripleLieDatum d = borel_datum();
    Poly H = form_quadratic(d);
    REQUIRE(is_invariant_observable(d, H));
    REQUIRE(invariant_observables(d, 2).size() == 2);

    // the constructor itself verifies the operator equation d/dt L = [L, M]
    // symbolically and cross-checks the flow against the bracket route
    LaxPair lp = build_lax_pair(d, H);
    bool moving = false;
    for (const Poly& f : lp.flow) moving = moving || !f.is_zero();
    REQUIRE(moving);

    // pairwise bracket of pulled-back invariants vanishes as a polynomial
    REQUIRE(involution_check(d, H, H).is_zero());
    auto inv = invariant_observables(d, 2);
    REQUIRE(inv.size() == 2);
    REQUIRE(involution_check(d, inv[0], inv[1]).is_zero());

    // the tensor here is the symmetric inverse pairing
    AnsatzReport ar = ansatz_check(d);
    REQUIRE(!ar.skew);
    REQUIRE(ar.zero);
}

TEST_CASE("numeric integration conserves the pairing quadratic") {
    TripleLieDatum d = borel_datum();
    Mat K = killing_form(catalog::sl2());
    LaxPair lp = build_lax_pair(d, form_quadratic(d));
    Poly f = primal_quadratic(K);

    std::vector<double> a0 = {0.3, 0.7, -0.2};
    Trajectory t1 = integrate(lp, a0, 1e-2, 1000);
    double drift = conservation_check(lp, t1, f);
    REQUIRE(drift < 1e-7);

    // the state genuinely moves
    double moved = 0;
    for (int i = 0; i < 3; ++i) moved += std::fabs(t1.states.back()[i] - a0[i]);
    REQUIRE(moved > 1e-3);

    // fourth-order convergence: halving the step cuts the drift ~16x
    Trajectory ta = integrate(lp, a0, 0.1, 100);
    Trajectory tb = integrate(lp, a0, 0.05, 200);
    double ratio = conservation_check(lp, ta, f) / conservation_check(lp, tb, f);
    REQUIRE(ratio > 12.0);
    REQUIRE(ratio < 20.0);

    // divergence of the quadratic flow is detected, not silently propagated
    REQUIRE_THROWS_AS(integrate(lp, a0, 1e-2, 2000), std::runtime_error);
}

TEST_CASE("curvature of operator contexts") {
    LieAlgebra sl2 = catalog::sl2();
    // weight-only case: proportional to the double bracket, never flat
    OOperatorContext ctx;
    ctx.G.g = sl2;
    ctx.G.k = sl2;
    ctx.G.pi = adjoint(sl2);
    ctx.r = Mat::identity(3);
    ctx.masses = {Scalar(0), Scalar(0), Scalar(0), Scalar(-1)};
    CurvatureReport cr = curvature_tensor(ctx);
    REQUIRE(!cr.zero);
    REQUIRE(cr.invariant);
    REQUIRE(cr.covariantly_constant);

    // extension case built from the split standard tensor over the dual space
    Mat r(3, 3);
    r(0, 0) = Scalar::frac(1, 4);
    r(1, 2) = Scalar::one();
    REQUIRE(cybe_residual(sl2, r).is_zero());
    auto [at, bt] = split_alpha_beta(r);
    OOperatorContext ext;
    ext.G.g = sl2;
    ext.G.k = catalog::abelian(3);
    ext.G.pi = coadjoint(sl2);
    ext.r = tensor_as_map(at);
    ext.beta = tensor_as_map(bt);
    ext.masses = {Scalar::one(), Scalar(-1), Scalar(0), Scalar(0)};
    REQUIRE(extended_residual(ext).is_zero());
    CurvatureReport ce = curvature_tensor(ext);
    REQUIRE(!ce.zero);
    REQUIRE(ce.invariant);
    REQUIRE(ce.covariantly_constant);

    // no extension and no weight: flat
    OOperatorContext flat;
    flat.G.g = catalog::aff1();
    flat.G.k = catalog::abelian(2);
    flat.G.pi = coadjoint(catalog::aff1());
    Mat rt(2, 2);
    rt(0, 1) = Scalar::one();
    rt(1, 0) = Scalar(-1);
    flat.r = tensor_as_map(rt);
    flat.masses = {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CurvatureReport cf = curvature_tensor(flat);
    REQUIRE(cf.zero);
    REQUIRE(cf.invariant);
}
