#pragma once

#include <stdexcept>
#include <utility>

#include "pqpolys/polynomial.hpp"

namespace pqpolys {

struct SeedNotBezoutError : std::domain_error {
    SeedNotBezoutError() : std::domain_error("seed pair does not satisfy p0*Y + q0*Z = 1") {}
};

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
/// n * (n-1) * ... * (n-k+1), the falling factorial n!/(n-k)!.
BigInt falling_factorial(unsigned long n, unsigned long k);
BigInt catalan(unsigned long n);

/// Q_n(x) = sum_{i=0}^{n} (-1)^i C(n+i, i) x^i: degree n, constant term 1,
/// leading coefficient (-1)^n C(2n, n).
Polynomial q_poly(unsigned n);
/// Same polynomial from the three-term recurrence
/// n(x+1)Q_n = -(2(2n-1)x^2 + 2(2n-1)x - n)Q_{n-1} + 2(2n-1)x Q_{n-2}.
Polynomial q_poly_via_recurrence(unsigned n);

/// P_n(x) = (-1)^{n+1}(2n+1)C(2n,n) sum_i C(n,i)/(n+i+1) x^i.
Polynomial p_poly(unsigned n);
/// Same polynomial through the reflection P_n(x) = (-1)^{n+1} Q_n(-1-x).
Polynomial p_poly_via_symmetry(unsigned n);

/// k-th derivative of Q_n; k > n yields the zero polynomial (degenerate).
Polynomial q_deriv_poly(unsigned n, unsigned k);
/// Direct expansion of the same derivative (independent of q_poly).
Polynomial q_deriv_expansion(unsigned n, unsigned k);

/// Coefficient polynomials of u Q^(k)_{k+n} = v Q^(k)_{k+n-1} + w Q^(k)_{k+n-2},
/// integer coefficients, deg u = deg w = 2, deg v = 3. Requires n >= 2.
struct RecurrenceCoeffs {
    Polynomial u, v, w;
};
RecurrenceCoeffs recurrence_coeffs(unsigned k, unsigned n);

enum class ChebKind { T, U };
/// Chebyshev polynomials by the three-term recurrence; U_{-1} = 0 by
/// convention. T requires n >= 0, U requires n >= -1.
Polynomial chebyshev(ChebKind kind, int n);

/// (Y_n, Z_n): solutions of (2x+3)Y^2 + (1-2x)Z^2 = 1. Computed from the
/// half-shifted Chebyshev closed form; pell form available separately.
std::pair<Polynomial, Polynomial> yz_pair(unsigned n);
std::pair<Polynomial, Polynomial> yz_pair_closed(unsigned n);
std::pair<Polynomial, Polynomial> yz_pair_pell(unsigned n);

/// V_n(x) = sum_{k=0}^{n-1} (n-k)(n-k+1)/n * C(n-1+k, k) x^k, n >= 1.
Polynomial v_poly(unsigned n);
Polynomial v_poly_via_recurrence(unsigned n);

/// W_n(x) = Q_n(-x)^2 - Q_{n-1}(-x) Q_{n+1}(-x), degree 2n, n >= 1.
Polynomial w_poly(unsigned n);

/// Iterates the integer Bezout construction: given p0*Y + q0*Z = 1, returns
/// (p_n, q_n) with p_n Y^{n+1} + q_n Z^{n+1} = 1. Throws SeedNotBezoutError
/// when the seed identity fails.
std::pair<Polynomial, Polynomial> bezout_chain(unsigned n, const Polynomial& p0,
                                               const Polynomial& q0, const Polynomial& Y,
                                               const Polynomial& Z);

/// Witness for P_n Y^m + Q_n Z^m = 1 with n = r*m - 1, Y = x^r, Z = (x+1)^r.
/// Construction verifies the identity exactly (and the -Y/-Z variants for
/// even m, the rational root-of-unity scalars).
struct ThueWitness {
    unsigned n;
    Polynomial y, z;
};
ThueWitness thue_family(unsigned m, unsigned r);

/// Closed forms for discriminants and resultants of the families; results
/// are exact rationals (integral whenever the underlying value is).
Rational disc_q_closed(unsigned n);                     // Disc(Q_n), n >= 1
Rational disc_qk_closed(unsigned n, unsigned k);        // Disc(Q_n^(k)), n > k
Rational resultant_qq_closed(unsigned n);               // R(Q_n, Q_{n-1}), n >= 1
Rational resultant_delta_closed(unsigned k, unsigned n);// R(Q^(k)_{n+k}, Q^(k)_{n+k-1}), n >= 1

/// Named family selector for the CLI and report tooling.
struct FamilyId {
    enum class Tag { P, Q, QDeriv, ChebT, ChebU, Y, Z, V, W, BezoutChainP, BezoutChainQ };
    Tag tag;
    unsigned k = 0;  // only meaningful for QDeriv
};
Polynomial family_poly(const FamilyId& id, unsigned n);

}  // namespace pqpolys
