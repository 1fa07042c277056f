#include "pqpolys/series.hpp"

#include <utility>

#include "pqpolys/families.hpp"

namespace pqpolys {

TruncatedBiSeries::TruncatedBiSeries(unsigned order, std::vector<Polynomial> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order_ + 1)
        throw std::domain_error("more coefficients than the order admits");
    coeffs_.resize(order_ + 1);
}

TruncatedBiSeries TruncatedBiSeries::constant(unsigned order, const Polynomial& c) {
    TruncatedBiSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedBiSeries TruncatedBiSeries::operator-() const {
    TruncatedBiSeries r = *this;
    for (Polynomial& c : r.coeffs_) c = -c;
    return r;
}

TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    if (a.order_ != b.order_) throw OrderMismatchError();
    TruncatedBiSeries r = a;
    for (unsigned n = 0; n <= r.order_; ++n) r.coeffs_[n] += b.coeffs_[n];
    return r;
}

TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    if (a.order_ != b.order_) throw OrderMismatchError();
    TruncatedBiSeries r = a;
    for (unsigned n = 0; n <= r.order_; ++n) r.coeffs_[n] -= b.coeffs_[n];
    return r;
}

TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    if (a.order_ != b.order_) throw OrderMismatchError();
    TruncatedBiSeries r(a.order_);
    for (unsigned i = 0; i <= a.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order_; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedBiSeries operator*(const Polynomial& c, const TruncatedBiSeries& a) {
    TruncatedBiSeries r = a;
    for (Polynomial& p : r.coeffs_) p = c * p;
    return r;
}

TruncatedBiSeries operator*(const Rational& c, const TruncatedBiSeries& a) {
    TruncatedBiSeries r = a;
    for (Polynomial& p : r.coeffs_) p = c * p;
    return r;
}

TruncatedBiSeries TruncatedBiSeries::shifted_t(unsigned k) const {
    TruncatedBiSeries r(order_ + k);
    for (unsigned n = 0; n <= order_; ++n) r.coeffs_[n + k] = coeffs_[n];
    return r;
}

TruncatedBiSeries TruncatedBiSeries::truncated(unsigned order) const {
    if (order > order_) throw OrderMismatchError();
    TruncatedBiSeries r(order);
    for (unsigned n = 0; n <= order; ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

TruncatedBiSeries TruncatedBiSeries::inverse() const {
    const Polynomial& c0 = coeffs_[0];
    if (c0.is_zero() || c0.degree() != 0) throw NonUnitLeadingCoefficientError();
    const Rational b = Rational(1) / c0.coeff(0);
    TruncatedBiSeries r(order_);
    r.coeffs_[0] = Polynomial(b);
    for (unsigned n = 1; n <= order_; ++n) {
        Polynomial acc;
        for (unsigned j = 1; j <= n; ++j) acc += coeffs_[j] * r.coeffs_[n - j];
        r.coeffs_[n] = (-b) * acc;
    }
    return r;
}

TruncatedBiSeries TruncatedBiSeries::partial_t() const {
    if (order_ == 0) return TruncatedBiSeries(0);
    TruncatedBiSeries r(order_ - 1);
    for (unsigned n = 0; n < order_; ++n)
        r.coeffs_[n] = Rational(static_cast<long>(n) + 1) * coeffs_[n + 1];
    return r;
}

TruncatedBiSeries TruncatedBiSeries::partial_x() const {
    TruncatedBiSeries r(order_);
    for (unsigned n = 0; n <= order_; ++n) r.coeffs_[n] = coeffs_[n].derivative();
    return r;
}

std::vector<std::vector<std::string>> TruncatedBiSeries::coeff_strings() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(coeffs_.size());
    for (const Polynomial& c : coeffs_) out.push_back(c.coeff_strings());
    return out;
}

int first_mismatch(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    if (a.order_ != b.order_) throw OrderMismatchError();
    for (unsigned n = 0; n <= a.order_; ++n)
        if (a.coeffs_[n] != b.coeffs_[n]) return static_cast<int>(n);
    return -1;
}

TruncatedBiSeries sqrt_one_plus(const TruncatedBiSeries& u) {
    if (!u.coeff(0).is_zero()) throw NonzeroConstantTermError();
    const unsigned N = u.order();
    TruncatedBiSeries s = TruncatedBiSeries::constant(N, Polynomial(1));
    TruncatedBiSeries upow = TruncatedBiSeries::constant(N, Polynomial(1));
    Rational ck = 1;  // binomial series: c_0 = 1, c_k = c_{k-1} (3 - 2k) / (2k)
    for (unsigned k = 1; k <= N; ++k) {
        upow = upow * u;
        ck *= Rational(3 - 2 * static_cast<long>(k), 2 * static_cast<long>(k));
        s = s + ck * upow;
    }
    return s;
}

namespace {

/// 1 + 4xt as a truncated series (sign -1 gives 1 - 4xt).
TruncatedBiSeries one_plus_4xt(unsigned order, int sign) {
    TruncatedBiSeries s = TruncatedBiSeries::constant(order, Polynomial(1));
    if (order >= 1) s.set_coeff(1, Polynomial::monomial(4 * sign, 1));
    return s;
}

}  // namespace

TruncatedBiSeries q_generating(unsigned order) {
    const unsigned N = order;
    TruncatedBiSeries family(N);
    for (unsigned n = 0; n <= N; ++n) family.set_coeff(n, q_poly(n));

    // denominator 2(1+x-t)(1+4xt)
    TruncatedBiSeries lin = TruncatedBiSeries::constant(N, Polynomial::x() + Polynomial(1));
    if (N >= 1) lin.set_coeff(1, Polynomial(-1));
    const TruncatedBiSeries den = Rational(2) * (lin * one_plus_4xt(N, +1));

    // numerator 1 + 4xt + (1+2x) sqrt(1+4xt)
    const Polynomial one_2x = Polynomial(1) + Polynomial::monomial(2, 1);
    const TruncatedBiSeries num =
        one_plus_4xt(N, +1) + one_2x * sqrt_one_plus(one_plus_4xt(N, +1) -
                                                     TruncatedBiSeries::constant(N, Polynomial(1)));

    if (den * family != num)
        throw std::logic_error("q_generating: cleared-denominator identity failed");
    return family;
}

TruncatedBiSeries v_generating(unsigned order) {
    const unsigned N = order;
    TruncatedBiSeries family(N);
    for (unsigned n = 1; n <= N; ++n) family.set_coeff(n, v_poly(n));

    // denominator 2(t+x-1)^2
    TruncatedBiSeries lin = TruncatedBiSeries::constant(N, Polynomial::x() - Polynomial(1));
    if (N >= 1) lin.set_coeff(1, Polynomial(1));
    const TruncatedBiSeries den = Rational(2) * (lin * lin);

    // numerator -2t^2 + 2(2-3x)t - 1 + 2x + (1-2x) sqrt(1-4xt)
    TruncatedBiSeries num =
        TruncatedBiSeries::constant(N, Polynomial::monomial(2, 1) - Polynomial(1));
    if (N >= 1) num.set_coeff(1, Polynomial(4) - Polynomial::monomial(6, 1));
    if (N >= 2) num.set_coeff(2, Polynomial(-2));
    const Polynomial one_minus_2x = Polynomial(1) - Polynomial::monomial(2, 1);
    num = num + one_minus_2x * sqrt_one_plus(one_plus_4xt(N, -1) -
                                             TruncatedBiSeries::constant(N, Polynomial(1)));

    if (den * family != num)
        throw std::logic_error("v_generating: cleared-denominator identity failed");
    return family;
}

}  // namespace pqpolys
