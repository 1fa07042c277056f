#include "doctest.h"
#include "pqpolys/families.hpp"
#include "pqpolys/numthy.hpp"
#include "pqpolys/series.hpp"
#include "test_util.hpp"

using namespace pqpolys;
using namespace pqpolys::testutil;

namespace {

TruncatedBiSeries one_minus_t(unsigned order) {
    TruncatedBiSeries s = TruncatedBiSeries::constant(order, ipoly({1}));
    s.set_coeff(1, ipoly({-1}));
    return s;
}

}  // namespace

TEST_CASE("truncated arithmetic") {
    TruncatedBiSeries a = TruncatedBiSeries::constant(2, ipoly({1}));
    a.set_coeff(1, ipoly({1}));
    const TruncatedBiSeries prod = a * one_minus_t(2);
    CHECK(prod.coeff(0) == ipoly({1}));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == ipoly({-1}));
    CHECK((a * TruncatedBiSeries(2)) == TruncatedBiSeries(2));
    CHECK_THROWS_AS(a + TruncatedBiSeries(3), OrderMismatchError);
    CHECK_THROWS_AS(TruncatedBiSeries(5).truncated(6), OrderMismatchError);
}

TEST_CASE("inverse") {
    const TruncatedBiSeries inv = one_minus_t(3).inverse();
    for (unsigned n = 0; n <= 3; ++n) CHECK(inv.coeff(n) == ipoly({1}));

    CHECK(TruncatedBiSeries::constant(2, ipoly({2})).inverse().coeff(0) ==
          Polynomial(Rational(1, 2)));

    TruncatedBiSeries lin(2);
    lin.set_coeff(0, ipoly({1}));
    lin.set_coeff(1, ipoly({0, 4}));  // 1 + 4xt
    const TruncatedBiSeries linv = lin.inverse();
    CHECK(linv.coeff(1) == ipoly({0, -4}));
    CHECK(linv.coeff(2) == ipoly({0, 0, 16}));
    CHECK(lin * linv == TruncatedBiSeries::constant(2, ipoly({1})));

    CHECK_THROWS_AS(TruncatedBiSeries(3).inverse(), NonUnitLeadingCoefficientError);
    TruncatedBiSeries bad = TruncatedBiSeries::constant(3, ipoly({1, 1}));
    CHECK_THROWS_AS(bad.inverse(), NonUnitLeadingCoefficientError);
}

TEST_CASE("formal square root of 1 + u") {
    TruncatedBiSeries u(2);
    u.set_coeff(1, ipoly({0, 4}));  // u = 4xt
    const TruncatedBiSeries s = sqrt_one_plus(u);
    CHECK(s.coeff(0) == ipoly({1}));
    CHECK(s.coeff(1) == ipoly({0, 2}));
    CHECK(s.coeff(2) == ipoly({0, 0, -2}));

    CHECK(sqrt_one_plus(TruncatedBiSeries(4)) ==
          TruncatedBiSeries::constant(4, ipoly({1})));

    SUBCASE("squares back to 1 + u") {
        TruncatedBiSeries v(8);
        v.set_coeff(1, ipoly({0, -4}));
        v.set_coeff(2, ipoly({1, 0, 3}));
        const TruncatedBiSeries r = sqrt_one_plus(v);
        CHECK(r * r == TruncatedBiSeries::constant(8, ipoly({1})) + v);
    }
    CHECK_THROWS_AS(sqrt_one_plus(TruncatedBiSeries::constant(2, ipoly({1}))),
                    NonzeroConstantTermError);
}

TEST_CASE("partial derivatives") {
    TruncatedBiSeries a(1);
    a.set_coeff(0, ipoly({1}));
    a.set_coeff(1, q_poly(1));
    const TruncatedBiSeries at = a.partial_t();
    CHECK(at.order() == 0);
    CHECK(at.coeff(0) == q_poly(1));

    TruncatedBiSeries b(1);
    b.set_coeff(1, ipoly({0, 0, 1}));  // x^2 t
    CHECK(b.partial_x().coeff(1) == ipoly({0, 2}));
    CHECK(b.shifted_t(2).order() == 3);
    CHECK(b.shifted_t(2).coeff(3) == ipoly({0, 0, 1}));
}

TEST_CASE("generating series of Q") {
    const TruncatedBiSeries gf = q_generating(6);
    CHECK(gf.coeff(0) == ipoly({1}));
    CHECK(gf.coeff(1) == ipoly({1, -2}));
    CHECK(gf.coeff(4) == q_poly(4));
    for (unsigned n = 0; n <= 6; ++n) CHECK(gf.coeff(n) == q_poly(n));
}

TEST_CASE("generating series of V") {
    const TruncatedBiSeries gf = v_generating(6);
    CHECK(gf.coeff(0).is_zero());
    CHECK(gf.coeff(2) == ipoly({3, 2}));
    CHECK(gf.coeff(3) == ipoly({4, 6, 4}));
    for (unsigned n = 1; n <= 6; ++n) CHECK(gf.coeff(n) == v_poly(n));
}

TEST_CASE("series serialization") {
    const std::vector<std::vector<std::string>> s = q_generating(2).coeff_strings();
    REQUIRE(s.size() == 3);
    CHECK(s[0] == std::vector<std::string>{"1"});
    CHECK(s[1] == std::vector<std::string>{"1", "-2"});
    CHECK(s[2] == std::vector<std::string>{"1", "-3", "6"});
}

TEST_CASE("Pell walker matches the direct recurrence") {
    PellState s = PellState::first(1);
    CHECK(s.x == 9);
    s.advance();
    CHECK(s.j == 2);
    CHECK(s.x == 51);
    s.advance();
    CHECK(s.x == pell_x(1, 3));
}
