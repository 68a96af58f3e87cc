#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meandrics/temperley_lieb.hpp"

using namespace meandrics;

namespace {

QPolynomial poly(std::initializer_list<std::pair<int, long>> kv) {
    QPolynomial p;
    for (auto [e, c] : kv)
        if (c != 0) p.coeffs[e] = Rational(c);
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto a = poly({{2, 1}, {0, -1}});
    auto b = poly({{1, 3}});
    CHECK(qpoly_add(a, b) == poly({{2, 1}, {1, 3}, {0, -1}}));
    CHECK(qpoly_sub(a, a) == QPolynomial{});
    CHECK(qpoly_mul(a, b) == poly({{3, 3}, {1, -3}}));
    CHECK(qpoly_eval(a, Rational(3)) == 8);
    CHECK(qpoly_eval(poly({{-2, 1}, {1, 4}}), Rational(1, 2)) == Rational(6));
    CHECK(a.degree() == 2);
    CHECK(QPolynomial{}.degree() == -1);
}

TEST_CASE("Chebyshev ladder") {
    CHECK(chebyshev_u(0) == poly({{0, 1}}));
    CHECK(chebyshev_u(1) == poly({{1, 1}}));
    CHECK(chebyshev_u(2) == poly({{2, 1}, {0, -1}}));
    CHECK(chebyshev_u(3) == poly({{3, 1}, {1, -2}}));
    for (int m = 0; m <= 10; ++m) {
        auto u = chebyshev_u(m);
        // values at the edge and center of the spectrum 2cos(theta)
        CHECK(qpoly_eval(u, Rational(2)) == m + 1);
        CHECK(qpoly_eval(u, Rational(-2)) == (m % 2 ? -(m + 1) : m + 1));
        int zero_cycle[4] = {1, 0, -1, 0};
        CHECK(qpoly_eval(u, Rational(0)) == zero_cycle[m % 4]);
        int one_cycle[6] = {1, 1, 0, -1, -1, 0};
        CHECK(qpoly_eval(u, Rational(1)) == one_cycle[m % 6]);
        CHECK(qpoly_eval(u, Rational(-1)) ==
              (m % 2 ? -one_cycle[m % 6] : one_cycle[m % 6]));
    }
}

TEST_CASE("Gram matrices of small orders") {
    auto g1 = gram_matrix(1);
    REQUIRE(g1.entries.size() == 1);
    CHECK(g1.entries[0][0] == poly({{1, 1}}));

    auto g2 = gram_matrix(2);
    REQUIRE(g2.entries.size() == 2);
    CHECK(g2.entries[0][0] == poly({{2, 1}}));
    CHECK(g2.entries[0][1] == poly({{1, 1}}));
    CHECK(g2.entries[1][0] == poly({{1, 1}}));
    CHECK(g2.entries[1][1] == poly({{2, 1}}));
}

TEST_CASE("Gram structure: symmetric monomials, diagonal maximal") {
    for (int n = 1; n <= 5; ++n) {
        auto g = gram_matrix(n);
        auto size = g.entries.size();
        CHECK(BigInt(static_cast<long>(size)) == catalan(n));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                const auto& e = g.entries[i][j];
                REQUIRE(e.coeffs.size() == 1);
                auto [k, c] = *e.coeffs.begin();
                CHECK(c == 1);
                CHECK(k >= 1);
                CHECK(k <= n);
                CHECK((k == n) == (i == j));
                CHECK(e == g.entries[j][i]);
            }
    }
}

TEST_CASE("Gram fill is thread-count independent") {
    auto a = gram_matrix(4, 1);
    auto b = gram_matrix(4, 3);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        CHECK(a.entries[i] == b.entries[i]);
}

TEST_CASE("Chebyshev multiplicities") {
    CHECK(chebyshev_exponent(1, 1) == 1);
    CHECK(chebyshev_exponent(1, 2) == 2);
    CHECK(chebyshev_exponent(2, 2) == 1);
    CHECK(chebyshev_exponent(1, 3) == 4);
    CHECK(chebyshev_exponent(2, 3) == 4);
    CHECK(chebyshev_exponent(3, 3) == 1);
    for (int n = 1; n <= 12; ++n) {
        // top multiplicity is always 1: the fully nested ladder
        CHECK(chebyshev_exponent(n, n) == 1);
        // weighted multiplicities account for the full determinant degree
        BigInt weighted = 0;
        for (int m = 1; m <= n; ++m) weighted += m * chebyshev_exponent(m, n);
        CHECK(weighted == n * catalan(n));
    }
    // multiplicities are not all nonnegative; the first dip is at order 8
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m) CHECK(chebyshev_exponent(m, n) >= 0);
    CHECK(chebyshev_exponent(1, 8) == -208);
}

TEST_CASE("negative multiplicities still produce a polynomial") {
    auto d8 = meander_determinant_formula(8);
    CHECK(d8.degree() == 8 * 1430);
    for (const auto& [e, c] : d8.coeffs) {
        CHECK(e >= 0);
        CHECK(c.get_den() == 1);
    }
}

TEST_CASE("determinants by elimination") {
    CHECK(meander_determinant_direct(1) == poly({{1, 1}}));
    CHECK(meander_determinant_direct(2) == poly({{4, 1}, {2, -1}}));
}

TEST_CASE("product formula closed forms") {
    CHECK(meander_determinant_formula(1) == poly({{1, 1}}));
    CHECK(meander_determinant_formula(2) == poly({{4, 1}, {2, -1}}));
    // q^5 (q^2-1)^4 (q^2-2)
    auto d3 = qpoly_mul(qpoly_monomial(5),
                        qpoly_mul(qpoly_mul(poly({{2, 1}, {0, -1}}),
                                            poly({{2, 1}, {0, -1}})),
                                  qpoly_mul(qpoly_mul(poly({{2, 1}, {0, -1}}),
                                                      poly({{2, 1}, {0, -1}})),
                                            poly({{2, 1}, {0, -2}}))));
    CHECK(meander_determinant_formula(3) == d3);
}

TEST_CASE("the two determinant routes agree as polynomials") {
    for (int n = 1; n <= 5; ++n) {
        auto direct = meander_determinant_direct(n);
        auto formula = meander_determinant_formula(n);
        CHECK(direct == formula);
        CHECK(direct.degree() == n * mpz_get_si(catalan(n).get_mpz_t()));
    }
    CHECK(meander_determinant_formula(6).degree() == 6 * 132);
}

TEST_CASE("numeric route at fixed rational q") {
    std::vector<Rational> points = {Rational(2), Rational(3), Rational(-1),
                                    Rational(1, 2), Rational(5, 3)};
    for (int n = 1; n <= 5; ++n) {
        auto formula = meander_determinant_formula(n);
        for (const auto& q : points)
            CHECK(meander_determinant_value(n, q) == qpoly_eval(formula, q));
    }
    CHECK(to_decimal(meander_determinant_value(4, Rational(2))) ==
          "8358844170240");
    CHECK(to_decimal(meander_determinant_value(5, Rational(2))) ==
          "4205050186068782188175455727620246732800000000");
}

TEST_CASE("order six, where only the numeric route is practical") {
    auto formula = meander_determinant_formula(6);
    for (const auto& q :
         {Rational(2), Rational(3), Rational(-1), Rational(1, 2)})
        CHECK(meander_determinant_value(6, q) == qpoly_eval(formula, q));
    CHECK(to_decimal(meander_determinant_value(6, Rational(2))) ==
          "1748443443235306816493573820396812766397936166991863472096230056483"
          "6874080469153410796389484806186001782701133501279764480000000000000"
          "000000000000000000000000000000");
    CHECK(meander_determinant_value(6, Rational(-1)) == 0);
}

TEST_CASE("size guards and validation") {
    CHECK_THROWS_AS(meander_determinant_direct(7), ResourceLimitError);
    CHECK_THROWS_AS(gram_matrix(9), ResourceLimitError);
    CHECK_THROWS_AS(meander_determinant_value(9, Rational(2)),
                    ResourceLimitError);
    CHECK_THROWS_AS(gram_matrix(0), ValidationError);
    CHECK_THROWS_AS(meander_determinant_formula(0), ValidationError);
}
