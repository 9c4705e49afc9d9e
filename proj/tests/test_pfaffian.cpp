#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pencil5/groebner.hpp"
#include "pencil5/pfaffian.hpp"
#include "pencil5/polyio.hpp"
#include "pencil5/prng.hpp"
#include "pencil5/rational.hpp"

using namespace pencil5;

namespace {

const RationalField Q;

BiPoly<RationalField> pp(const GradingPtr& ring, const std::string& text) {
    return parse_poly(Q, ring, text);
}

/// The matrix with placeholder quadric variables q1, q2, q3:
///   ( .  t1  x0    x2    x3 )
///   ( .  .   t0x1  t0x3  t0x4 )
///   ( .  .   .     q1    q2 )
///   ( .  .   .     .     q3 )
SkewMatrix<RationalField> placeholder_matrix() {
    auto ring = Grading::product_with_placeholders();
    SkewMatrix<RationalField> M(Q, ring);
    M.set_upper(1, 2, pp(ring, "t1"));
    M.set_upper(1, 3, pp(ring, "x0"));
    M.set_upper(1, 4, pp(ring, "x2"));
    M.set_upper(1, 5, pp(ring, "x3"));
    M.set_upper(2, 3, pp(ring, "t0*x1"));
    M.set_upper(2, 4, pp(ring, "t0*x3"));
    M.set_upper(2, 5, pp(ring, "t0*x4"));
    M.set_upper(3, 4, pp(ring, "q1"));
    M.set_upper(3, 5, pp(ring, "q2"));
    M.set_upper(4, 5, pp(ring, "q3"));
    return M;
}

/// Test-only oracle: Pfaffian of an even-size numeric skew matrix by
/// recursive expansion along the first row (signed sum over perfect
/// matchings), independent of the 4x4 closed form in sub_pfaffian.
Rational pfaffian_oracle(const std::vector<std::vector<Rational>>& a, std::vector<int> idx) {
    if (idx.empty()) return Rational(1);
    const int i = idx[0];
    Rational acc;
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
        const int j = idx[static_cast<std::size_t>(pos)];
        std::vector<int> rest;
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != pos) rest.push_back(idx[k]);
        const Rational sign((pos % 2 == 1) ? 1 : -1);
        acc += sign * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pfaffian_oracle(a, rest);
    }
    return acc;
}

} // namespace

TEST_CASE("sub_pfaffian reproduces the five generators symbolically") {
    auto M = placeholder_matrix();
    auto ring = M.ring();
    CHECK(sub_pfaffian(M, 1) == pp(ring, "t0*x1*q3 - t0*x3*q2 + t0*x4*q1"));
    CHECK(sub_pfaffian(M, 2) == pp(ring, "x0*q3 - x2*q2 + x3*q1"));
    CHECK(sub_pfaffian(M, 3) == pp(ring, "t1*q3 - t0*x2*x4 + t0*x3^2"));
    CHECK(sub_pfaffian(M, 4) == pp(ring, "t1*q2 - t0*x0*x4 + t0*x1*x3"));
    CHECK(sub_pfaffian(M, 5) == pp(ring, "t1*q1 - t0*x0*x3 + t0*x1*x2"));
    CHECK_THROWS_AS(sub_pfaffian(M, 0), UsageError);
    CHECK_THROWS_AS(sub_pfaffian(M, 6), UsageError);

    auto gens = pfaffian_ideal(M);
    REQUIRE(gens.size() == 5);
    for (int k = 1; k <= 5; ++k) CHECK(gens[static_cast<std::size_t>(k - 1)] == sub_pfaffian(M, k));
}

TEST_CASE("all-zero matrix has zero sub-pfaffians") {
    auto ring = Grading::product_p1_p4();
    SkewMatrix<RationalField> M(Q, ring);
    for (int k = 1; k <= 5; ++k) CHECK(sub_pfaffian(M, k).is_zero());
}

TEST_CASE("sub_pfaffian agrees with the perfect-matching oracle on numerics") {
    auto ring = Grading::product_p1_p4();
    RngStream rng(13, "pfaffian-oracle");
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Rational>> a(6, std::vector<Rational>(6));
        SkewMatrix<RationalField> M(Q, ring);
        for (int i = 1; i <= 5; ++i) {
            for (int j = i + 1; j <= 5; ++j) {
                const Rational v(rng.draw_int(-9, 9));
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
                M.set_upper(i, j, BiPoly<RationalField>::constant(Q, ring, v));
            }
        }
        for (int k = 1; k <= 5; ++k) {
            std::vector<int> idx;
            for (int v = 1; v <= 5; ++v)
                if (v != k) idx.push_back(v);
            const Rational expected = pfaffian_oracle(a, idx);
            const auto pf = sub_pfaffian(M, k);
            if (expected.is_zero()) {
                CHECK(pf.is_zero());
            } else {
                REQUIRE(pf.term_count() == 1);
                CHECK(pf.leading_coeff() == expected);
            }
        }
    }
}

TEST_CASE("pfaffian syzygies: rows of M annihilate the sign-twisted pfaffian vector") {
    auto M = placeholder_matrix();
    auto ring = M.ring();
    auto pf = pfaffian_ideal(M);
    for (int j = 1; j <= 5; ++j) {
        BiPoly<RationalField> acc(Q, ring);
        for (int k = 1; k <= 5; ++k) {
            const Rational sign((k % 2 == 0) ? 1 : -1); // (-1)^k
            acc = acc + M.entry(j, k).scaled(sign) * pf[static_cast<std::size_t>(k - 1)];
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("sub_pfaffian is multilinear under row/column pair scaling") {
    auto ring = Grading::product_p1_p4();
    RngStream rng(19, "pfaffian-scale");
    for (int trial = 0; trial < 20; ++trial) {
        SkewMatrix<RationalField> M(Q, ring);
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                M.set_upper(i, j, BiPoly<RationalField>::constant(Q, ring, Rational(rng.draw_int(-9, 9))));
        const int scaled_row = static_cast<int>(rng.draw_int(1, 5));
        const Rational lambda(rng.draw_int(2, 7));
        SkewMatrix<RationalField> Ms = M;
        for (int other = 1; other <= 5; ++other) {
            if (other == scaled_row) continue;
            const int i = std::min(scaled_row, other), j = std::max(scaled_row, other);
            Ms.set_upper(i, j, M.upper(i, j).scaled(lambda));
        }
        for (int k = 1; k <= 5; ++k) {
            const auto expected = (k == scaled_row) ? sub_pfaffian(M, k) : sub_pfaffian(M, k).scaled(lambda);
            CHECK(sub_pfaffian(Ms, k) == expected);
        }
    }
}

TEST_CASE("infer_twists on the product-model matrix") {
    auto M = placeholder_matrix();
    auto tw = infer_twists(M);
    REQUIRE(tw.consistent);
    CHECK(tw.data.total == BiDegree(0, 2));
    CHECK(tw.data.rows[0] == BiDegree(0, 1));
    CHECK(tw.data.rows[1] == BiDegree(-1, 1));
    CHECK(tw.data.rows[2] == BiDegree(0, 0));
    CHECK(tw.data.rows[3] == BiDegree(0, 0));
    CHECK(tw.data.rows[4] == BiDegree(0, 0));
    CHECK(tw.data.pfaffian_degree(1) == BiDegree(1, 3));
    CHECK(tw.data.pfaffian_degree(2) == BiDegree(0, 3));
    CHECK(tw.data.pfaffian_degree(3) == BiDegree(1, 2));
    CHECK(tw.data.pfaffian_degree(4) == BiDegree(1, 2));
    CHECK(tw.data.pfaffian_degree(5) == BiDegree(1, 2));
}

TEST_CASE("infer_twists: underdetermined and inconsistent cases") {
    auto ring = Grading::product_p1_p4();
    SkewMatrix<RationalField> single(Q, ring);
    single.set_upper(1, 2, pp(ring, "t0*x1"));
    auto tw = infer_twists(single);
    CHECK(tw.consistent); // a single entry never conflicts

    auto M = placeholder_matrix();
    M.set_upper(1, 2, pp(M.ring(), "x0")); // breaks twist consistency
    auto bad = infer_twists(M);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.bad_i != 0);

    SkewMatrix<RationalField> inhom(Q, ring);
    inhom.set_upper(1, 2, pp(ring, "t0 + x0"));
    CHECK_THROWS_AS(infer_twists(inhom), UsageError);
}

TEST_CASE("relation_search finds the two cubic relations symbolically") {
    auto M = placeholder_matrix();
    auto ring = M.ring();
    auto pf = pfaffian_ideal(M);
    const auto &c1 = pf[0], &c2 = pf[1];
    std::vector<BiPoly<RationalField>> quadrics{pf[2], pf[3], pf[4]};
    auto t1 = pp(ring, "t1");

    auto rel2 = relation_search(t1 * c2, quadrics, BiDegree(0, 1));
    REQUIRE(rel2.has_value());
    CHECK((*rel2)[0] == pp(ring, "x0"));
    CHECK((*rel2)[1] == pp(ring, "-x2"));
    CHECK((*rel2)[2] == pp(ring, "x3"));

    auto rel1 = relation_search(t1 * c1, quadrics, BiDegree(1, 1));
    REQUIRE(rel1.has_value());
    CHECK((*rel1)[0] == pp(ring, "t0*x1"));
    CHECK((*rel1)[1] == pp(ring, "-t0*x3"));
    CHECK((*rel1)[2] == pp(ring, "t0*x4"));

    // independent oracle: expand the found combination symbolically
    for (const auto& [lhs, rel] : {std::pair{t1 * c1, *rel1}, std::pair{t1 * c2, *rel2}}) {
        BiPoly<RationalField> acc(Q, ring);
        for (int i = 0; i < 3; ++i) acc = acc + rel[static_cast<std::size_t>(i)] * quadrics[static_cast<std::size_t>(i)];
        CHECK(acc == lhs);
    }

    // the x2-multiplier variant of the first relation is NOT an identity
    auto x2_variant = pp(ring, "t0*x1") * quadrics[0] - pp(ring, "t0*x2") * quadrics[1] +
                      pp(ring, "t0*x4") * quadrics[2];
    CHECK(x2_variant != t1 * c1);
}

TEST_CASE("relation_search returns nothing for a generic cubic") {
    auto M = placeholder_matrix();
    auto ring = M.ring();
    auto pf = pfaffian_ideal(M);
    std::vector<BiPoly<RationalField>> quadrics{pf[2], pf[3], pf[4]};
    auto outsider = pp(ring, "t1^2*x0^3 + 5*t0^2*x4^3 - t0*t1*x1*x2*x3");
    // bidegree (2,3) like t1*c1, but not in the module generated by the quadrics
    CHECK_FALSE(relation_search(outsider, quadrics, BiDegree(1, 1)).has_value());
    // degree-incompatible multiplier spaces yield no candidate columns at all
    CHECK_FALSE(relation_search(pp(ring, "t1*x0^3"), quadrics, BiDegree(1, 1)).has_value());
}
