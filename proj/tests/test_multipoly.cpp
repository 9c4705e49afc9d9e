#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pencil5/bipoly.hpp"
#include "pencil5/modred.hpp"
#include "pencil5/polyio.hpp"
#include "pencil5/prng.hpp"
#include "pencil5/rational.hpp"

using namespace pencil5;

namespace {

const RationalField Q;

BiPoly<RationalField> qp(const GradingPtr& ring, const std::string& text) {
    return parse_poly(Q, ring, text);
}

BiPoly<RationalField> random_poly(RngStream& rng, const GradingPtr& ring, int max_terms) {
    BiPoly<RationalField> f(Q, ring);
    const int nterms = static_cast<int>(rng.draw_int(0, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Monomial m(ring->var_count());
        for (int v = 0; v < ring->var_count(); ++v) m.set(v, static_cast<int>(rng.draw_int(0, 2)));
        f = f + BiPoly<RationalField>::term(Q, ring, m, Rational(rng.draw_int(-9, 9)));
    }
    return f;
}

} // namespace

TEST_CASE("grading construction and lookups") {
    auto ring = Grading::product_p1_p4();
    CHECK(ring->var_count() == 7);
    CHECK(ring->base_count() == 2);
    CHECK(ring->index_of("t1") == 1);
    CHECK(ring->index_of("x4") == 6);
    CHECK(ring->index_of("y") == -1);
    CHECK(ring->weight(0) == BiDegree(1, 0));
    CHECK(ring->weight(2) == BiDegree(0, 1));

    auto scroll = Grading::scroll({-1, 0, 0, 0, 0});
    CHECK(scroll->weight(2) == BiDegree(-1, 1));
}

TEST_CASE("bidegree_of: homogeneous and mixed") {
    auto ring = Grading::product_with_placeholders();
    auto f = qp(ring, "t0*x1*q3");
    auto bd = f.bidegree();
    REQUIRE(bd.homogeneous);
    CHECK(bd.degree == BiDegree(1, 3));

    auto mixed = qp(ring, "x0 + t0");
    auto bad = mixed.bidegree();
    CHECK_FALSE(bad.homogeneous);
    CHECK(bad.witness_a != bad.witness_b);

    // p1 = t1*q3 + t0*(x3^2 - x2*x4) is bihomogeneous of bidegree (1,2)
    auto p1 = qp(ring, "t1*q3 - t0*x2*x4 + t0*x3^2");
    auto pd = p1.bidegree();
    REQUIRE(pd.homogeneous);
    CHECK(pd.degree == BiDegree(1, 2));

    CHECK_THROWS_AS(BiPoly<RationalField>::zero(Q, ring).bidegree(), UsageError);
}

TEST_CASE("specialize_fibre on the quadric generators") {
    auto ring = Grading::product_p1_p4();
    // concrete quadric stand-ins
    const std::string q1 = "x0^2 + x1*x2", q2 = "x3*x4 - x2^2", q3 = "2*x1*x3 + x4^2";
    auto p1 = qp(ring, "t1") * qp(ring, q3) + qp(ring, "t0") * qp(ring, "x3^2 - x2*x4");

    auto at10 = p1.specialize_fibre(Q.one(), Q.zero());
    auto fr = ring->fibre_ring();
    CHECK(at10 == parse_poly(Q, fr, "x3^2 - x2*x4"));

    auto at01 = p1.specialize_fibre(Q.zero(), Q.one());
    CHECK(at01 == parse_poly(Q, fr, q3));

    // c2 = x0*q3 - x2*q2 + x3*q1 has base degree 0: the same at every point
    auto c2 = qp(ring, "x0") * qp(ring, q3) - qp(ring, "x2") * qp(ring, q2) + qp(ring, "x3") * qp(ring, q1);
    auto expected = parse_poly(Q, fr, "x0") * parse_poly(Q, fr, q3) -
                    parse_poly(Q, fr, "x2") * parse_poly(Q, fr, q2) +
                    parse_poly(Q, fr, "x3") * parse_poly(Q, fr, q1);
    CHECK(c2.specialize_fibre(Rational(2), Rational(3)) == expected);
    CHECK(c2.specialize_fibre(Rational(-1), Rational(7)) == expected);

    CHECK_THROWS_AS(p1.specialize_fibre(Q.zero(), Q.zero()), UsageError);
}

TEST_CASE("specialize_chart dehomogenizes the base") {
    auto ring = Grading::product_p1_p4();
    auto chart = ring->chart_ring();
    CHECK(qp(ring, "t1*x0^2").specialize_chart() == parse_poly(Q, chart, "s*x0^2"));
    CHECK(qp(ring, "t0^3").specialize_chart() == parse_poly(Q, chart, "1"));
    // c1 with concrete quadrics: the t0 factor evaluates to 1
    auto c1 = qp(ring, "t0") * (qp(ring, "x1*x4^2") - qp(ring, "x3*x2^2") + qp(ring, "x4*x0^2"));
    CHECK(c1.specialize_chart() ==
          parse_poly(Q, chart, "x1*x4^2 - x3*x2^2 + x4*x0^2"));
}

TEST_CASE("parse/print round-trip and errors") {
    auto ring = Grading::product_p1_p4();
    const std::string text = "t0*x1*x3 - 3/2*x0^2";
    auto f = qp(ring, text);
    CHECK(print_poly(f) == text);
    CHECK(parse_poly(Q, ring, print_poly(f)) == f);

    CHECK_THROWS_WITH_AS(qp(ring, "x5"), doctest::Contains("unknown variable 'x5'"), UsageError);
    CHECK_THROWS_AS(qp(ring, "x0 +"), UsageError);
    CHECK_THROWS_AS(qp(ring, "3x0"), UsageError);
    CHECK(qp(ring, "0").is_zero());
    CHECK(print_poly(qp(ring, "0")) == "0");
    CHECK(qp(ring, " x0 ^ 2  *  x1 - 1/3 ") == qp(ring, "x0^2*x1-1/3"));

    RngStream rng(3, "roundtrip");
    for (int i = 0; i < 40; ++i) {
        auto g = random_poly(rng, ring, 6);
        CHECK(parse_poly(Q, ring, print_poly(g)) == g);
    }
}

TEST_CASE("ring axioms on random inputs") {
    auto ring = Grading::product_p1_p4();
    RngStream rng(17, "ring-axioms");
    for (int i = 0; i < 30; ++i) {
        auto a = random_poly(rng, ring, 4);
        auto b = random_poly(rng, ring, 4);
        auto c = random_poly(rng, ring, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BiPoly<RationalField>::zero(Q, ring));
    }
}

TEST_CASE("bidegree is additive and specialization is multiplicative") {
    auto ring = Grading::scroll({-1, -1, 0, 0, 0});
    RngStream rng(23, "bideg-add");
    int done = 0;
    while (done < 20) {
        // random bihomogeneous polynomials: pick a bidegree, sample terms
        const BiDegree d1(rng.draw_int(-1, 2), rng.draw_int(0, 2));
        const BiDegree d2(rng.draw_int(-1, 2), rng.draw_int(0, 2));
        BiPoly<RationalField> f(Q, ring), g(Q, ring);
        for (const auto& m : monomials_of_bidegree(*ring, d1))
            f = f + BiPoly<RationalField>::term(Q, ring, m, Rational(rng.draw_int(-9, 9)));
        for (const auto& m : monomials_of_bidegree(*ring, d2))
            g = g + BiPoly<RationalField>::term(Q, ring, m, Rational(rng.draw_int(-9, 9)));
        if (f.is_zero() || g.is_zero()) continue;
        auto fd = f.bidegree(), gd = g.bidegree(), fgd = (f * g).bidegree();
        REQUIRE(fd.homogeneous);
        REQUIRE(gd.homogeneous);
        REQUIRE(fgd.homogeneous);
        CHECK(fgd.degree == fd.degree + gd.degree);

        const Rational a(rng.draw_int(-5, 5)), b(rng.draw_int(1, 5));
        CHECK((f * g).specialize_fibre(a, b) == f.specialize_fibre(a, b) * g.specialize_fibre(a, b));
        ++done;
    }
}

TEST_CASE("chart component split groups by fibre monomial") {
    auto ring = Grading::product_p1_p4();
    auto f = qp(ring, "t1^2*x0^2 + t0*t1*x0^2 - t0^2*x1*x2");
    auto chart = f.specialize_chart();
    auto comps = chart.collect_by_fibre_monomial();
    REQUIRE(comps.size() == 2);
    auto fr = ring->fibre_ring();
    Monomial x0sq(fr->var_count());
    x0sq.set(0, 2);
    REQUIRE(comps.count(x0sq) == 1);
    CHECK(comps.at(x0sq).degree() == 2);            // s^2 + s
    CHECK(comps.at(x0sq).coeff(1) == Rational(1));
    CHECK(comps.at(x0sq).coeff(2) == Rational(1));
}

TEST_CASE("prime-field reduction of rational polynomials") {
    auto ring = Grading::product_p1_p4();
    PrimeField F(31991);
    auto f = qp(ring, "1/2*x0^2 - 7*t0*t1");
    auto fr = reduce_mod(f, F);
    REQUIRE(fr.has_value());
    auto expected = parse_poly(F, ring, "15996*x0^2 + 31984*t0*t1");
    CHECK(*fr == expected);

    // a denominator divisible by p cannot be reduced
    auto g = qp(ring, "1/31991*x0");
    CHECK_FALSE(reduce_mod(g, F).has_value());
}
