#include "pqpolys/polycore.hpp"

#include <utility>
#include <vector>

namespace pqpolys {

BezoutPair bezout_min_degree(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
    Polynomial r0 = f, r1 = g;
    Polynomial s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.degree() > 0) throw NotCoprimeError();
    const Rational inv = Rational(1) / r0.coeff(0);
    return {inv * s0, inv * t0};
}

namespace {

/// Fraction-free Gaussian elimination (Bareiss); each division is exact.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign == 1 ? a.back().back() : BigInt(-a.back().back());
}

/// Clears denominators: f = F / d with F integer, d = lcm of denominators.
std::pair<std::vector<BigInt>, BigInt> integerized(const Polynomial& f) {
    BigInt d = 1;
    for (const Rational& c : f.coeffs())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<BigInt> cs;
    cs.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs())
        cs.push_back(c.numerator() * (d / c.denominator()));
    return {std::move(cs), d};
}

}  // namespace

Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
    const int mu = f.degree(), m = g.degree();
    if (mu == 0 && m == 0) return 1;

    auto [fc, df] = integerized(f);
    auto [gc, dg] = integerized(g);
    const size_t n = static_cast<size_t>(mu + m);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, BigInt(0)));
    // m rows of f's coefficients (descending), then mu rows of g's.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= mu; ++j) a[i][i + j] = fc[mu - j];
    for (int i = 0; i < mu; ++i)
        for (int j = 0; j <= m; ++j) a[m + i][i + j] = gc[m - j];

    const Rational scale = Rational(df).pow(m) * Rational(dg).pow(mu);
    return Rational(bareiss_det(std::move(a))) / scale;
}

Rational discriminant(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) throw ConstantPolynomialError();
    const int m = f.degree();
    const Rational r = sylvester_resultant(f, f.derivative());
    const Rational sign = (static_cast<long>(m) * (m - 1) / 2) % 2 == 0 ? 1 : -1;
    return sign * r / f.leading_coeff();
}

}  // namespace pqpolys
