#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pqpolys/polynomial.hpp"

namespace pqpolys {

struct UnsupportedMagnitudeError : std::domain_error {
    UnsupportedMagnitudeError() : std::domain_error("primality supported below 2^64 only") {}
};

struct NotPrimeError : std::domain_error {
    NotPrimeError() : std::domain_error("modulus is not prime") {}
};

struct NotIntegerPolyError : std::domain_error {
    NotIntegerPolyError() : std::domain_error("polynomial has non-integer coefficients") {}
};

/// Exact integer square root when v is a perfect square, otherwise absent.
/// Negative inputs are never squares.
std::optional<BigInt> is_perfect_square(const BigInt& v);

/// Rational square root: present iff numerator and denominator are both
/// perfect squares (v in lowest terms).
std::optional<Rational> is_rational_square(const Rational& v);

/// Deterministic primality (strong pseudoprime test, fixed witness set)
/// for 0 <= v < 2^64; negative v is not prime; v >= 2^64 throws.
bool is_prime(const BigInt& v);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Walker over X_j of the Pell-type equation X^2 - 8Y^2 = (2k+1)^2:
/// X_1 = 3(2k+1), X_2 = 17(2k+1), X_j = 6 X_{j-1} - X_{j-2} (the recurrence
/// also holds at j = 2 with X_0 = 2k+1).
struct PellState {
    unsigned k;
    unsigned j;
    BigInt x;       // X_j
    BigInt x_prev;  // X_{j-1}

    static PellState first(unsigned k);
    void advance();
};

/// X_j by the exact recurrence; j >= 1.
BigInt pell_x(unsigned k, unsigned j);

/// n_j, the j-th integer n > 1 with Disc(Q_n) a perfect square:
/// n_j = (X_{2j+1} - 3)/4 at k = 0, entirely in integer arithmetic.
BigInt pell_n(unsigned j);

enum class SquareVerdict { square, not_square };
enum class SquareReason { negative_sign, prime_witness, pell_member, direct_integer_check };

/// Verdict on whether D_{k,n} = Disc(Q_n^(k)) is the square of an integer,
/// decided per residue class of n - k mod 4 without materializing D itself.
/// square verdicts always carry sqrt_witness with
/// sqrt_witness^2 = decisive_value, the quantity actually tested.
struct SquareClassification {
    SquareVerdict verdict;
    SquareReason reason;
    int value_class;  // (n - k) mod 4
    Rational decisive_value;
    std::optional<Rational> sqrt_witness;
    std::optional<BigInt> witness_prime;
    std::optional<unsigned> pell_index;
};

/// Requires n > k >= 0. Residues 2 and 3 are negative, hence never squares;
/// residue 1 is settled by a prime witness in [n+k+2, 2n-1] or a direct
/// square test of C(2n, n+k)/(n+k+1); residue 0 is a square exactly when
/// (n+k+1)(2n+1) is, with the matching Pell index reported when found.
SquareClassification classify_disc_square(unsigned k, unsigned n);

/// Disc(Q_n^(k)) via its closed form, asserted integral.
BigInt disc_qk_integer(unsigned n, unsigned k);

/// Classical Eisenstein test at p: p does not divide the leading
/// coefficient, divides every other coefficient, and p^2 does not divide
/// the constant term. Requires an integer polynomial and a prime p.
bool eisenstein_check(const Polynomial& f, const BigInt& p);

}  // namespace pqpolys
