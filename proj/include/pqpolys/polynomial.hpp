#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqpolys/rational.hpp"

namespace pqpolys {

/// Thrown by divmod when the divisor is the zero polynomial.
struct ZeroDivisionError : std::domain_error {
    ZeroDivisionError() : std::domain_error("division by zero polynomial") {}
};

/// Dense univariate polynomial over Rational, canonical representation:
/// coeffs()[i] is the coefficient of x^i, the last stored coefficient is
/// nonzero, and the zero polynomial stores nothing at all. The zero
/// polynomial has no degree; callers branch on is_zero() first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return monomial(1, 1); }
    static Polynomial monomial(const Rational& c, unsigned i);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        if (is_zero()) throw std::logic_error("degree of the zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }
    Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading_coeff() const {
        if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// True iff every coefficient has denominator 1.
    bool is_integer() const;

    /// gcd of the numerators over lcm of the denominators, nonnegative;
    /// 0 for the zero polynomial. content() divides every coefficient.
    Rational content() const;

    /// Exact evaluation by Horner's rule.
    Rational operator()(const Rational& x0) const;

    /// Exact k-th derivative; k beyond the degree yields zero.
    Polynomial derivative(unsigned k = 1) const;

    /// f(a*x + b), composed by Horner's rule.
    Polynomial affine_sub(const Rational& a, const Rational& b) const;

    /// Coefficient reversal x^deg * f(1/x); zero maps to zero.
    Polynomial reversed() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& f);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Serialization: coefficients low-to-high as exact decimal strings,
    /// e.g. 6x^2-3x+1 <-> {"1","-3","6"}; "num/den" when den != 1.
    std::vector<std::string> coeff_strings() const;
    static Polynomial from_coeff_strings(const std::vector<std::string>& cs);

    /// Human-readable form like "6*x^2-3*x+1" (descending powers) or
    /// "x-2*x^2" (ascending). The zero polynomial prints "0".
    std::string human(bool descending = true) const;

private:
    std::vector<Rational> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// f = q*g + r with r = 0 or deg r < deg g, exact over the rationals.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

Polynomial pow(const Polynomial& f, unsigned e);

/// Monic gcd; gcd(f, 0) is f made monic, gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial f, Polynomial g);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace pqpolys
