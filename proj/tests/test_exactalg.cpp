#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pencil5/linalg.hpp"
#include "pencil5/primefield.hpp"
#include "pencil5/prng.hpp"
#include "pencil5/rational.hpp"
#include "pencil5/smith.hpp"
#include "pencil5/unipoly.hpp"

using namespace pencil5;

namespace {

const RationalField Q;

UniPoly<RationalField> upoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return UniPoly<RationalField>(Q, std::move(c));
}

UniPoly<RationalField> random_poly(RngStream& rng, int max_deg) {
    const int d = static_cast<int>(rng.draw_int(0, max_deg));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(rng.draw_int(-9, 9));
    return UniPoly<RationalField>(Q, std::move(c));
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.denominator() == 2);

    // (a/b + c/d) - c/d == a/b on random arbitrary-precision inputs
    RngStream rng(42, "rational-roundtrip");
    for (int trial = 0; trial < 200; ++trial) {
        std::string num = std::to_string(rng.draw_int(-1000000, 1000000)) + std::to_string(rng.next());
        std::string den = std::to_string(rng.next() | 1);
        Rational x = Rational::parse(num + "/" + den);
        Rational y = Rational::parse(std::to_string(rng.draw_int(-99999, 99999)) + "/" + std::to_string(rng.next() | 1));
        CHECK((x + y) - y == x);
        CHECK(Rational::parse(x.to_string()) == x);
    }
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}

TEST_CASE("prime field validates modulus and inverts") {
    CHECK_THROWS_AS(PrimeField(4), UsageError);
    CHECK_THROWS_AS(PrimeField(2), UsageError);
    CHECK_THROWS_AS(PrimeField(1ULL << 32), UsageError);
    PrimeField F(31991);
    PrimeField F2(32003);
    CHECK(F.modulus() == 31991);
    for (std::uint64_t a : {1ULL, 2ULL, 31990ULL, 12345ULL}) {
        CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK(F.parse("3/2") == F.div(3, 2));
    CHECK(F.parse("-1") == 31990);
    CHECK(F.from_long(-5) == 31986);
    CHECK(F.parse("95978") == 5);  // 3*31991 + 5
    CHECK(F2.parse("32004") == 1);
}

TEST_CASE("rank_kernel: zero map and identity") {
    DenseMat<RationalField> z(Q, 15, 35);
    auto rkz = rank_kernel(z);
    CHECK(rkz.rank == 0);
    CHECK(rkz.kernel.size() == 35);

    DenseMat<RationalField> id(Q, 5, 5);
    for (int i = 0; i < 5; ++i) id.at(i, i) = Q.one();
    auto rki = rank_kernel(id);
    CHECK(rki.rank == 5);
    CHECK(rki.kernel.empty());
}

TEST_CASE("rank_kernel: kernel vectors annihilate the matrix exactly") {
    RngStream rng(7, "rank-kernel");
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.draw_int(1, 8));
        const int n = static_cast<int>(rng.draw_int(1, 8));
        DenseMat<RationalField> a(Q, m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = Rational(rng.draw_int(-5, 5));
        auto rk = rank_kernel(a);
        CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == n);
        for (const auto& v : rk.kernel) {
            for (int i = 0; i < m; ++i) {
                Rational acc;
                for (int j = 0; j < n; ++j) acc += a.at(i, j) * v[static_cast<std::size_t>(j)];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("smith_form: already diagonal with divisibility chain") {
    PolyMat<RationalField> m(Q, 3, 3);
    m.at(0, 0) = upoly({1});
    m.at(1, 1) = upoly({0, 1});
    m.at(2, 2) = upoly({0, 0, 1});
    auto sf = smith_form(m);
    REQUIRE(sf.rank == 3);
    CHECK(sf.invariant_factors[0] == upoly({1}));
    CHECK(sf.invariant_factors[1] == upoly({0, 1}));
    CHECK(sf.invariant_factors[2] == upoly({0, 0, 1}));
    CHECK(sf.torsion_length == 3);
}

TEST_CASE("smith_form: euclidean elimination case [[s,1],[0,s]]") {
    PolyMat<RationalField> m(Q, 2, 2);
    m.at(0, 0) = upoly({0, 1});
    m.at(0, 1) = upoly({1});
    m.at(1, 1) = upoly({0, 1});
    auto sf = smith_form(m);
    REQUIRE(sf.rank == 2);
    CHECK(sf.invariant_factors[0] == upoly({1}));
    CHECK(sf.invariant_factors[1] == upoly({0, 0, 1}));
    CHECK(sf.torsion_length == 2);
}

TEST_CASE("smith rank agrees with scalar rank at random specializations") {
    RngStream rng(11, "smith-vs-rank");
    for (int trial = 0; trial < 25; ++trial) {
        const int m = static_cast<int>(rng.draw_int(1, 5));
        const int n = static_cast<int>(rng.draw_int(1, 5));
        PolyMat<RationalField> a(Q, m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (rng.draw_int(0, 2) > 0) a.at(i, j) = random_poly(rng, 2);
        auto sf = smith_form(a);
        for (std::size_t i = 0; i + 1 < sf.invariant_factors.size(); ++i)
            CHECK(sf.invariant_factors[i].divides(sf.invariant_factors[i + 1]));
        // at a specialization the rank can only drop, and for all but finitely
        // many points it equals the fraction-field rank
        int best = 0;
        for (int k = 0; k < 3; ++k) {
            Rational x(rng.draw_int(100, 10000)); // far from the small roots
            DenseMat<RationalField> spec = specialize_matrix(a, x, DenseMat<RationalField>(Q, m, n));
            best = std::max(best, rank_of(spec));
            CHECK(rank_of(spec) <= sf.rank);
        }
        CHECK(best == sf.rank);
    }
}

TEST_CASE("squarefree_part: repeated roots collapse") {
    CHECK(squarefree_part(upoly({0, 0, 1})) == upoly({0, 1}));          // s^2 -> s
    auto f = upoly({2, -3, 1});                                          // (s-1)(s-2)
    CHECK(squarefree_part(f) == f.monic());
    auto g = squarefree_part(upoly({0, 0, -1, 1}));                      // s^3 - s^2 -> s^2 - s
    CHECK(g == upoly({0, -1, 1}));
    CHECK(g.degree() == 2);
    CHECK(g.eval(Rational(0)).is_zero());
    CHECK(g.eval(Rational(1)).is_zero());
    CHECK_THROWS_AS(squarefree_part(UniPoly<RationalField>::zero(Q)), UsageError);
}

TEST_CASE("squarefree_part of f*g^2 has the roots of f*g") {
    RngStream rng(5, "squarefree-prop");
    int done = 0;
    while (done < 25) {
        auto f = random_poly(rng, 2);
        auto g = random_poly(rng, 2);
        if (f.is_zero() || g.is_zero()) continue;
        if (gcd(f, g).degree() != 0) continue;
        if (!squarefree_part(f).divides(f) || squarefree_part(f).degree() != f.degree()) continue;
        if (squarefree_part(g).degree() != g.degree()) continue;
        auto lhs = squarefree_part(f * g * g);
        auto rhs = (f * g).monic();
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("squarefree_part inseparability guard in prime fields") {
    PrimeField F(31991);
    std::vector<std::uint64_t> coeffs(31993, 0);
    coeffs[31992] = 1;
    UniPoly<PrimeField> f(F, std::move(coeffs));
    CHECK_THROWS_AS(squarefree_part(f), UsageError);
}

TEST_CASE("unipoly division and gcd") {
    auto f = upoly({-6, 11, -6, 1}); // (s-1)(s-2)(s-3)
    auto g = upoly({2, -3, 1});      // (s-1)(s-2)
    auto [q, r] = f.divrem(g);
    CHECK(r.is_zero());
    CHECK(q == upoly({-3, 1}));
    CHECK(gcd(f, g) == g.monic());
    CHECK(f.eval(Rational(2)).is_zero());
}
