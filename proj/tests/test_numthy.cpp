#include "doctest.h"
#include "pqpolys/families.hpp"
#include "pqpolys/numthy.hpp"
#include "test_util.hpp"

using namespace pqpolys;
using namespace pqpolys::testutil;

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(1) == BigInt(1));
    CHECK(is_perfect_square(0) == BigInt(0));
    CHECK_FALSE(is_perfect_square(-15).has_value());
    CHECK_FALSE(is_perfect_square(2).has_value());
    const BigInt big = BigInt("123456789123456789") * BigInt("123456789123456789");
    CHECK(is_perfect_square(big) == BigInt("123456789123456789"));
    CHECK(is_perfect_square(disc_qk_integer(24, 0)).has_value());
    CHECK_FALSE(is_perfect_square(disc_qk_integer(25, 0)).has_value());
}

TEST_CASE("rational squares") {
    CHECK(is_rational_square(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(is_rational_square(Rational(1001, 5)).has_value());
    CHECK_FALSE(is_rational_square(Rational(4, 5)).has_value());
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK(is_prime(29));
    CHECK(is_prime(37));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(-7));
    CHECK(is_prime((BigInt(1) << 61) - 1));          // Mersenne prime
    CHECK_FALSE(is_prime((BigInt(1) << 62) - 1));
    CHECK(is_prime(BigInt("18446744073709551557")));  // largest prime below 2^64
    CHECK_THROWS_AS(is_prime(BigInt(1) << 64), UnsupportedMagnitudeError);
    CHECK(primes_up_to(30) ==
          std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("Pell recurrence X_j") {
    CHECK(pell_x(0, 1) == 3);
    CHECK(pell_x(0, 2) == 17);
    CHECK(pell_x(0, 3) == 99);
    CHECK(pell_x(1, 1) == 9);
    CHECK_THROWS_AS(pell_x(0, 0), std::domain_error);

    SUBCASE("X^2 - 8Y^2 = (2k+1)^2 with integral Y") {
        for (unsigned k = 0; k <= 5; ++k)
            for (unsigned j = 1; j <= 20; ++j) {
                const BigInt x = pell_x(k, j);
                const BigInt rhs = BigInt(2 * k + 1) * BigInt(2 * k + 1);
                const BigInt y2 = (x * x - rhs) / 8;
                CHECK((x * x - rhs) % 8 == 0);
                CHECK(is_perfect_square(y2).has_value());
            }
    }
    SUBCASE("X_j = 6k+3 mod 16 exactly when j is odd") {
        for (unsigned k = 0; k <= 10; ++k)
            for (unsigned j = 1; j <= 40; ++j) {
                const bool hit = pell_x(k, j) % 16 == BigInt((6 * k + 3) % 16);
                CHECK(hit == (j % 2 == 1));
            }
    }
}

TEST_CASE("square members n_j") {
    CHECK(pell_n(1) == 24);
    CHECK(pell_n(2) == 840);
    CHECK(pell_n(3) == 28560);
    CHECK(pell_n(4) == 970224);
    CHECK_THROWS_AS(pell_n(0), std::domain_error);
}

TEST_CASE("square classification of D_{k,n}") {
    SUBCASE("negative classes") {
        const SquareClassification c = classify_disc_square(0, 2);
        CHECK(c.verdict == SquareVerdict::not_square);
        CHECK(c.reason == SquareReason::negative_sign);
        CHECK(c.value_class == 2);
    }
    SUBCASE("n = 24 is a Pell member") {
        const SquareClassification c = classify_disc_square(0, 24);
        CHECK(c.verdict == SquareVerdict::square);
        CHECK(c.reason == SquareReason::pell_member);
        CHECK(c.pell_index == 1u);
        REQUIRE(c.sqrt_witness.has_value());
        CHECK(*c.sqrt_witness * *c.sqrt_witness == c.decisive_value);
    }
    SUBCASE("n = 1 direct check, D = 1") {
        const SquareClassification c = classify_disc_square(0, 1);
        CHECK(c.verdict == SquareVerdict::square);
        CHECK(c.reason == SquareReason::direct_integer_check);
        CHECK(disc_qk_integer(1, 0) == 1);
    }
    SUBCASE("prime witness path") {
        const SquareClassification c = classify_disc_square(0, 5);  // window 7..9 has 7
        CHECK(c.verdict == SquareVerdict::not_square);
        CHECK(c.reason == SquareReason::prime_witness);
        REQUIRE(c.witness_prime.has_value());
        CHECK(is_prime(*c.witness_prime));
    }
    SUBCASE("agrees with direct square testing of the closed form") {
        for (unsigned n = 1; n <= 14; ++n)
            for (unsigned k = 0; k < n; ++k) {
                const SquareClassification c = classify_disc_square(k, n);
                const bool direct = is_perfect_square(disc_qk_integer(n, k)).has_value();
                CHECK((c.verdict == SquareVerdict::square) == direct);
            }
    }
    CHECK_THROWS_AS(classify_disc_square(3, 3), std::domain_error);
}

TEST_CASE("Eisenstein criterion") {
    CHECK(eisenstein_check(ipoly({2, 2, 1}), 2));
    CHECK_FALSE(eisenstein_check(ipoly({4, 2, 1}), 2));   // p^2 divides constant
    CHECK_FALSE(eisenstein_check(ipoly({2, 1, 2}), 2));   // p divides leading
    CHECK_FALSE(eisenstein_check(ipoly({2, 1, 1}), 2));   // middle not divisible
    CHECK(eisenstein_check(q_deriv_poly(5, 1).reversed(), 7));
    CHECK(eisenstein_check(v_poly(5).affine_sub(1, 1), 11));
    CHECK(eisenstein_check(q_poly(2).affine_sub(-1, -1), 5));
    CHECK_THROWS_AS(eisenstein_check(ipoly({2, 2, 1}), 9), NotPrimeError);
    CHECK_THROWS_AS(eisenstein_check(rpoly({Rational(1, 2), 1}), 2), NotIntegerPolyError);
}

TEST_CASE("closed-form discriminant integers") {
    CHECK(disc_qk_integer(3, 0) == -3920);
    CHECK(disc_qk_integer(2, 1) == 1);
    CHECK(disc_qk_integer(2, 0) == -15);
}
