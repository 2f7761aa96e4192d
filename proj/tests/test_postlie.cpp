#include <catch_amalgamated.hpp>

#include <laxkit/catalog.hpp>
#include <laxkit/postlie.hpp>
#include <laxkit/random.hpp>

using namespace laxkit;

TEST_CASE("borel projections induce closed-form structures") {
    for (const char* name : {"sl2", "sl3"}) {
        LieAlgebra g = (std::string(name) == "sl2") ? catalog::sl2() : catalog::sl3();
        BorelPostLie bp = borel_example(name);
        REQUIRE(postlie_axioms(bp.P).all());
        // the root-datum closed form agrees with the defining products
        REQUIRE(bp.matches_closed_form);
        // the projection operator satisfies the weight-one identity
        REQUIRE(rota_baxter_residual(g, bp.R, Scalar::one()).is_zero());
        // the functor to pairs (descended algebra, action) succeeds
        GLieAlgebra G = glie_from_postlie(bp.P);
        REQUIRE(G.g.dim() == g.dim());
        REQUIRE(!glie_witness(G));
    }
}

TEST_CASE("classification over a simple base recovers the operator") {
    for (const char* name : {"sl2", "sl3"}) {
        LieAlgebra g = (std::string(name) == "sl2") ? catalog::sl2() : catalog::sl3();
        BorelPostLie bp = borel_example(name);
        SemisimpleClassification sc = semisimple_classify(g, bp.P);
        REQUIRE(sc.products_match);
        REQUIRE(sc.rota_baxter);
        REQUIRE(sc.f == bp.R);
    }

    // the pair ([,], -[,]) is classified by f = -id
    LieAlgebra L = catalog::sl2();
    std::size_t n = L.dim();
    PostLieAlgebra P(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                P.set_br(i, j, k, L.c(i, j, k));
                P.set_ci(i, j, k, -L.c(i, j, k));
            }
    REQUIRE(postlie_axioms(P).all());
    SemisimpleClassification sc = semisimple_classify(L, P);
    REQUIRE(sc.f == Mat::identity(n) * Scalar(-1));
    REQUIRE(sc.rota_baxter);
    // and the descended bracket is the opposite structure
    LieAlgebra d = descended_lie(P);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) REQUIRE(d.c(i, j, k) == -L.c(i, j, k));
}

TEST_CASE("operators induce structures on their source and image") {
    LieAlgebra L = catalog::sl2();
    OOperatorContext ctx;
    ctx.G.g = L;
    ctx.G.k = L;
    ctx.G.pi = adjoint(L);
    ctx.r = Mat::identity(3);
    ctx.masses = {Scalar(0), Scalar(0), Scalar(0), Scalar(-1)};
    PostLieFromOperator po = from_o_operator(ctx);
    REQUIRE(postlie_axioms(po.P).all());
    REQUIRE(po.homomorphism);

    InducedPostLie full = induced_on_image(ctx);
    REQUIRE(full.well_defined);
    REQUIRE(full.homomorphism);
    REQUIRE(full.P.dim() == 3);

    // rank-deficient case: the image is one-dimensional and the structure
    // still descends because the kernel acts trivially
    OOperatorContext low;
    low.G.g = catalog::aff1();
    low.G.k = catalog::abelian(2);
    low.G.pi.space_dim = 2;
    low.G.pi.mats = {Mat(2, 2), Mat(2, 2)};
    low.r = Mat(2, 2);
    low.r(1, 0) = Scalar::one();
    low.masses = {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    InducedPostLie ind = induced_on_image(low);
    REQUIRE(ind.well_defined);
    REQUIRE(ind.homomorphism);
    REQUIRE(ind.P.dim() == 1);
}

TEST_CASE("weighted operators give two product structures") {
    for (const char* name : {"sl2", "sl3"}) {
        LieAlgebra g = (std::string(name) == "sl2") ? catalog::sl2() : catalog::sl3();
        auto [a_idx, b_idx] = catalog::borel_split(name);
        Mat R = rb_from_splitting(g, a_idx, b_idx);
        PostLieAlgebra P = from_rota_baxter(g, R, Scalar::one());
        REQUIRE(postlie_axioms(P).all());
        REQUIRE(jacobi_check(descended_lie(P)));
    }
    // invertible weight-one operator -id: the compatible structure on the
    // source algebra itself, whose descended bracket returns the input
    for (LieAlgebra L : {catalog::aff1(), catalog::sl2()}) {
        Mat R = Mat::identity(L.dim()) * Scalar(-1);
        PostLieAlgebra C = compatible_from_invertible_rb(L, R, Scalar::one());
        REQUIRE(postlie_axioms(C).all());
    }
}

TEST_CASE("coboundary structures induce dual-side products") {
    LieAlgebra g = catalog::aff1();
    Mat r(2, 2);
    r(0, 1) = Scalar::one();
    r(1, 0) = Scalar(-1);
    QuasitriangularPostLie q = quasitriangular_postlie(g, r);
    // skew solutions have a vanishing dual-side bracket
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) REQUIRE(q.dual_structure.br(i, j, k).is_zero());
    REQUIRE(postlie_axioms(q.dual_structure).all());
    // the coefficient map is invertible here, so the structure transfers
    // back to the base and descends to the original bracket
    REQUIRE(q.compatible.has_value());
    REQUIRE(q.descends_to_input);
    REQUIRE(postlie_axioms(*q.compatible).all());
}

TEST_CASE("three-product associative structures and their commutators") {
    // one-dimensional instance with all three products nonzero
    DendriformTrialgebra T1(1);
    T1.set_prec(0, 0, 0, Scalar::one());
    T1.set_succ(0, 0, 0, Scalar::one());
    T1.set_dot(0, 0, 0, Scalar(-1));
    REQUIRE(trialgebra_axioms(T1).all());
    REQUIRE(diagram_check(T1));

    // dual numbers carried by the left product alone
    DendriformTrialgebra T2(2);
    T2.set_prec(0, 0, 0, Scalar::one());
    T2.set_prec(0, 1, 1, Scalar::one());
    T2.set_prec(1, 0, 1, Scalar::one());
    REQUIRE(trialgebra_axioms(T2).all());
    REQUIRE(diagram_check(T2));
    PostLieAlgebra P2 = trialgebra_to_postlie(T2);
    REQUIRE(postlie_axioms(P2).all());

    // dual numbers carried by the middle product alone
    DendriformTrialgebra T3(2);
    T3.set_dot(0, 0, 0, Scalar::one());
    T3.set_dot(0, 1, 1, Scalar::one());
    T3.set_dot(1, 0, 1, Scalar::one());
    REQUIRE(trialgebra_axioms(T3).all());
    REQUIRE(diagram_check(T3));

    // a broken instance is caught by the axiom report
    DendriformTrialgebra bad(2);
    bad.set_prec(0, 0, 1, Scalar::one());
    bad.set_prec(1, 1, 0, Scalar::one());
    REQUIRE(!trialgebra_axioms(bad).all());
}
