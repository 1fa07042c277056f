#pragma once

#include <stdexcept>
#include <vector>

#include "pqpolys/polynomial.hpp"

namespace pqpolys {

struct OrderMismatchError : std::domain_error {
    OrderMismatchError() : std::domain_error("series orders differ") {}
};

struct NonUnitLeadingCoefficientError : std::domain_error {
    NonUnitLeadingCoefficientError()
        : std::domain_error("series inverse needs a nonzero constant t^0 coefficient") {}
};

struct NonzeroConstantTermError : std::domain_error {
    NonzeroConstantTermError()
        : std::domain_error("series square root needs a zero t^0 coefficient") {}
};

/// Formal power series in t truncated at a fixed order N, with Polynomial-
/// in-x coefficients: coeff(n) is the coefficient of t^n for 0 <= n <= N.
/// All arithmetic is exact and truncates at N; combining different orders
/// is an error, never a silent truncation.
class TruncatedBiSeries {
public:
    explicit TruncatedBiSeries(unsigned order) : order_(order), coeffs_(order + 1) {}
    TruncatedBiSeries(unsigned order, std::vector<Polynomial> coeffs);

    static TruncatedBiSeries constant(unsigned order, const Polynomial& c);

    unsigned order() const { return order_; }
    const Polynomial& coeff(unsigned n) const { return coeffs_.at(n); }
    void set_coeff(unsigned n, Polynomial c) { coeffs_.at(n) = std::move(c); }

    TruncatedBiSeries operator-() const;
    friend TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
    friend TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
    friend TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
    friend TruncatedBiSeries operator*(const Polynomial& c, const TruncatedBiSeries& a);
    friend TruncatedBiSeries operator*(const Rational& c, const TruncatedBiSeries& a);

    /// Multiplication by t^k; every coefficient is still exact, so the
    /// result carries order N + k.
    TruncatedBiSeries shifted_t(unsigned k) const;

    /// Restriction to a smaller order.
    TruncatedBiSeries truncated(unsigned order) const;

    /// Multiplicative inverse: requires the t^0 coefficient to be a nonzero
    /// constant polynomial.
    TruncatedBiSeries inverse() const;

    /// d/dt, order drops by one; d/dx keeps the order.
    TruncatedBiSeries partial_t() const;
    TruncatedBiSeries partial_x() const;

    friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) = default;

    /// Serialization: one coefficient-string list per power of t, index =
    /// power of t (ready to embed as a JSON array of arrays).
    std::vector<std::vector<std::string>> coeff_strings() const;

    /// First n with differing t^n coefficient, or -1 when equal (orders must
    /// match); used for counterexample reporting.
    friend int first_mismatch(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

private:
    unsigned order_;
    std::vector<Polynomial> coeffs_;
};

/// sqrt(1 + u) with u having zero t^0 term, by the binomial series with
/// exact rational coefficients; the result s satisfies s^2 = 1 + u up to
/// the order and s(t=0) = 1.
TruncatedBiSeries sqrt_one_plus(const TruncatedBiSeries& u);

/// Generating series of the Q family: the t^n coefficient is Q_n(x). The
/// construction verifies, exactly and up to the order, the cleared-
/// denominator identity
///   2(1+x-t)(1+4xt) * sum_n Q_n(x) t^n = 1 + 4xt + (1+2x) sqrt(1+4xt).
TruncatedBiSeries q_generating(unsigned order);

/// Generating series of the V family: t^0 coefficient 0, t^n coefficient
/// V_n(x) for n >= 1, verified against
///   2(t+x-1)^2 * sum_n V_n(x) t^n = -2t^2 + 2(2-3x)t - 1 + 2x + (1-2x) sqrt(1-4xt).
TruncatedBiSeries v_generating(unsigned order);

}  // namespace pqpolys
