#pragma once

#include <stdexcept>

#include "pqpolys/polynomial.hpp"

namespace pqpolys {

struct NotCoprimeError : std::domain_error {
    NotCoprimeError() : std::domain_error("polynomials are not coprime") {}
};

struct ZeroPolynomialError : std::domain_error {
    ZeroPolynomialError() : std::domain_error("zero polynomial not allowed here") {}
};

struct ConstantPolynomialError : std::domain_error {
    ConstantPolynomialError() : std::domain_error("discriminant needs degree >= 1") {}
};

/// Witnesses p*f + q*g = 1 for the f, g it was computed from.
struct BezoutPair {
    Polynomial p;
    Polynomial q;
};

/// Extended Euclidean algorithm in Q[x]: the unique pair with
/// deg p < deg g and deg q < deg f such that p*f + q*g = 1.
/// Throws NotCoprimeError when gcd(f, g) has positive degree.
BezoutPair bezout_min_degree(const Polynomial& f, const Polynomial& g);

/// Determinant of the (deg f + deg g)-square Sylvester matrix, computed
/// exactly by fraction-free (Bareiss) elimination on denominator-cleared
/// integer entries. Two constants resolve as the empty determinant, 1.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g);

/// Disc(f) = (-1)^(m(m-1)/2) * lc(f)^(-1) * R(f, f'), m = deg f >= 1.
/// Degree 1 evaluates to 1.
Rational discriminant(const Polynomial& f);

}  // namespace pqpolys
