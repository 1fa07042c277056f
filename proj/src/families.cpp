#include "pqpolys/families.hpp"

#include <cassert>
#include <vector>

namespace pqpolys {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt falling_factorial(unsigned long n, unsigned long k) {
    BigInt r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= BigInt(n - i);
    return r;
}

BigInt catalan(unsigned long n) { return binomial(2 * n, n) / BigInt(n + 1); }

Polynomial q_poly(unsigned n) {
    std::vector<Rational> cs(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        cs[i] = alternating_sign(i) * Rational(binomial(n + i, i));
    Polynomial q{std::move(cs)};
    assert(q == q_poly_via_recurrence(n));
    return q;
}

Polynomial q_poly_via_recurrence(unsigned n) {
    Polynomial prev2(1);                                        // Q_0
    Polynomial prev(std::vector<Rational>{1, -2});              // Q_1
    if (n == 0) return prev2;
    for (unsigned m = 2; m <= n; ++m) {
        const long lm = m;
        Polynomial a(std::vector<Rational>{Rational(lm), -2 * (2 * lm - 1), -2 * (2 * lm - 1)});
        Polynomial b = Polynomial::monomial(2 * (2 * lm - 1), 1);
        Polynomial lhs_divisor(std::vector<Rational>{Rational(lm), Rational(lm)});  // m(x+1)
        auto [q, r] = divmod(a * prev + b * prev2, lhs_divisor);
        assert(r.is_zero());
        prev2 = std::exchange(prev, q);
    }
    return prev;
}

Polynomial p_poly(unsigned n) {
    const Rational lead = alternating_sign(n + 1) * Rational(BigInt(BigInt(2 * n + 1) * binomial(2 * n, n)));
    std::vector<Rational> cs(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        cs[i] = lead * Rational(binomial(n, i), BigInt(n + i + 1));
    Polynomial p{std::move(cs)};
    assert(p.is_integer());
    assert(p == p_poly_via_symmetry(n));
    return p;
}

Polynomial p_poly_via_symmetry(unsigned n) {
    return alternating_sign(n + 1) * q_poly(n).affine_sub(-1, -1);
}

Polynomial q_deriv_poly(unsigned n, unsigned k) {
    if (k > n) return {};
    Polynomial d = q_poly(n).derivative(k);
    assert(d == q_deriv_expansion(n, k));
    return d;
}

Polynomial q_deriv_expansion(unsigned n, unsigned k) {
    if (k > n) return {};
    std::vector<Rational> cs(n - k + 1);
    for (unsigned i = 0; i <= n - k; ++i)
        cs[i] = alternating_sign(i + k) *
                Rational(BigInt(falling_factorial(i + k, k) * binomial(n + i + k, i + k)));
    return Polynomial{std::move(cs)};
}

RecurrenceCoeffs recurrence_coeffs(unsigned k, unsigned n) {
    if (n < 2) throw std::domain_error("recurrence_coeffs requires n >= 2");
    const Rational nk = static_cast<long>(n) + static_cast<long>(k);
    const Rational nn = static_cast<long>(n), kk = static_cast<long>(k);
    const Polynomial x = Polynomial::x();
    const Polynomial x1 = x + Polynomial(1);

    Polynomial u = (nn * nk) * (x1 * (2 * (nk - 1) * x + Polynomial(nn + 2 * kk - 1)));
    Polynomial v = (-2 * (nk - 1) * (2 * nk - 1)) * (x * x * (2 * nk * x + Polynomial(3 * nn + 4 * kk))) -
                   ((nn + 2 * kk - 1) * (nn + 2 * kk)) * (2 * (nk - 1) * x - Polynomial(nn));
    Polynomial w = (2 * (nn + 2 * kk - 1) * (2 * nk - 1)) * (x * (2 * nk * x + Polynomial(nn + 2 * kk)));
    return {std::move(u), std::move(v), std::move(w)};
}

Polynomial chebyshev(ChebKind kind, int n) {
    if (n < (kind == ChebKind::U ? -1 : 0))
        throw std::domain_error("chebyshev index out of range");
    if (kind == ChebKind::U && n == -1) return {};
    Polynomial prev(1);  // T_0 = U_0 = 1
    if (n == 0) return prev;
    Polynomial cur = kind == ChebKind::T ? Polynomial::x()
                                         : Polynomial::monomial(2, 1);
    const Polynomial two_x = Polynomial::monomial(2, 1);
    for (int m = 2; m <= n; ++m) prev = std::exchange(cur, two_x * cur - prev);
    return cur;
}

namespace {

Polynomial u_half_shift(int n) { return chebyshev(ChebKind::U, n).affine_sub(1, Rational(1, 2)); }
Polynomial t_half_shift(int n) { return chebyshev(ChebKind::T, n).affine_sub(1, Rational(1, 2)); }

}  // namespace

std::pair<Polynomial, Polynomial> yz_pair_closed(unsigned n) {
    const Polynomial hi = u_half_shift(static_cast<int>(n) + 1);
    const Polynomial lo = u_half_shift(static_cast<int>(n));
    const Rational half(1, 2);
    return {half * (hi - lo), half * (hi + lo)};
}

std::pair<Polynomial, Polynomial> yz_pair_pell(unsigned n) {
    const Polynomial t = t_half_shift(static_cast<int>(n));
    const Polynomial u = u_half_shift(static_cast<int>(n) - 1);
    const Polynomial x = Polynomial::x();
    const Polynomial x1 = x + Polynomial(1);
    const Rational half(1, 2);
    Polynomial y = x * t + half * ((2 * x - Polynomial(1)) * x1 * u);
    Polynomial z = x1 * t + half * (x * (2 * x + Polynomial(3)) * u);
    return {std::move(y), std::move(z)};
}

std::pair<Polynomial, Polynomial> yz_pair(unsigned n) {
    auto yz = yz_pair_closed(n);
    assert(yz == yz_pair_pell(n));
    return yz;
}

Polynomial v_poly(unsigned n) {
    if (n == 0) throw std::domain_error("v_poly requires n >= 1");
    std::vector<Rational> cs(n);
    for (unsigned k = 0; k < n; ++k) {
        cs[k] = Rational(BigInt(n - k) * BigInt(n - k + 1) * binomial(n - 1 + k, k),
                         BigInt(n));
        assert(cs[k].is_integer());
    }
    Polynomial v{std::move(cs)};
    assert(v == v_poly_via_recurrence(n));
    return v;
}

Polynomial v_poly_via_recurrence(unsigned n) {
    if (n == 0) throw std::domain_error("v_poly requires n >= 1");
    Polynomial prev2(2);                                   // V_1
    Polynomial prev(std::vector<Rational>{3, 2});          // V_2
    if (n == 1) return prev2;
    const Polynomial x = Polynomial::x();
    for (unsigned m = 3; m <= n; ++m) {
        const long lm = m;
        Polynomial a = (2 * (2 * lm - 3)) * (x * (x - Polynomial(1))) - Polynomial(lm + 1);
        Polynomial b = Polynomial::monomial(2 * (2 * lm - 1), 1);
        Polynomial divisor = Rational(lm) * (x - Polynomial(1));
        auto [q, r] = divmod(a * prev + b * prev2, divisor);
        assert(r.is_zero());
        prev2 = std::exchange(prev, q);
    }
    return prev;
}

Polynomial w_poly(unsigned n) {
    if (n == 0) throw std::domain_error("w_poly requires n >= 1");
    const auto neg = [](const Polynomial& f) { return f.affine_sub(-1, 0); };
    const Polynomial a = neg(q_poly(n));
    return a * a - neg(q_poly(n - 1)) * neg(q_poly(n + 1));
}

std::pair<Polynomial, Polynomial> bezout_chain(unsigned n, const Polynomial& p0,
                                               const Polynomial& q0, const Polynomial& Y,
                                               const Polynomial& Z) {
    if (p0 * Y + q0 * Z != Polynomial(1)) throw SeedNotBezoutError();
    Polynomial p = p0, q = q0;
    for (unsigned i = 0; i < n; ++i) {
        Polynomial yi = pow(Y, i), zi = pow(Z, i);
        Polynomial pn = p * (p0 + p0 * q * (zi * Z) + q0 * p * (yi * Z));
        Polynomial qn = q * (q0 + q0 * p * (yi * Y) + p0 * q * (Y * zi));
        p = std::move(pn);
        q = std::move(qn);
        assert(p * pow(Y, i + 2) + q * pow(Z, i + 2) == Polynomial(1));
    }
    return {std::move(p), std::move(q)};
}

ThueWitness thue_family(unsigned m, unsigned r) {
    if (m < 2 || r < 1) throw std::domain_error("thue_family requires m >= 2, r >= 1");
    const unsigned n = r * m - 1;
    const Polynomial y = Polynomial::monomial(1, r);
    const Polynomial z = pow(Polynomial::x() + Polynomial(1), r);
    const Polynomial pn = p_poly(n), qn = q_poly(n);
    if (pn * pow(y, m) + qn * pow(z, m) != Polynomial(1))
        throw std::logic_error("thue_family: identity failed");
    if (m % 2 == 0 && pn * pow(-y, m) + qn * pow(-z, m) != Polynomial(1))
        throw std::logic_error("thue_family: identity failed for -1 scalars");
    return {n, y, z};
}

Rational disc_q_closed(unsigned n) {
    if (n == 0) throw std::domain_error("disc_q_closed requires n >= 1");
    const Rational sign = alternating_sign(static_cast<unsigned long>(n) * (n - 1) / 2);
    return sign * Rational(BigInt(n + 1)) * Rational(BigInt(2 * n + 1)).pow(n - 1) *
           Rational(binomial(2 * n, n)).pow(static_cast<long>(n) - 2);
}

Rational disc_qk_closed(unsigned n, unsigned k) {
    if (n <= k) throw std::domain_error("disc_qk_closed requires n > k");
    const unsigned long d = n - k;
    const Rational sign = alternating_sign(d * (d - 1) / 2);
    const Rational base = Rational(falling_factorial(n + k, 2 * k)) * Rational(binomial(2 * n, n)) *
                          Rational(BigInt(2 * n + 1));
    return sign * Rational(BigInt(n + k + 1), binomial(2 * n, n + k)) *
           base.pow(static_cast<long>(d) - 1);
}

Rational resultant_qq_closed(unsigned n) {
    if (n == 0) throw std::domain_error("resultant_qq_closed requires n >= 1");
    return Rational(BigInt(2)).pow(n) * Rational(binomial(2 * n, n)).pow(static_cast<long>(n) - 2);
}

Rational resultant_delta_closed(unsigned k, unsigned n) {
    if (n == 0) throw std::domain_error("resultant_delta_closed requires n >= 1");
    const Rational front(BigInt(2) * BigInt(2 * k + n), BigInt(n));
    const Rational a = Rational(factorial(2 * k + 2 * n), factorial(n) * factorial(k + n));
    const Rational b = Rational(factorial(2 * k + n - 1), factorial(k + n - 1));
    const Rational beta(-(BigInt(n) + 2 * k), 2 * (BigInt(n) + k));
    return front * a.pow(static_cast<long>(n) - 2) * b.pow(n) *
           q_deriv_poly(n - 1 + k, k)(beta);
}

Polynomial family_poly(const FamilyId& id, unsigned n) {
    using Tag = FamilyId::Tag;
    static const Polynomial seed_p0(-1), seed_q0(1);
    switch (id.tag) {
        case Tag::P: return p_poly(n);
        case Tag::Q: return q_poly(n);
        case Tag::QDeriv: return q_deriv_poly(n, id.k);
        case Tag::ChebT: return chebyshev(ChebKind::T, static_cast<int>(n));
        case Tag::ChebU: return chebyshev(ChebKind::U, static_cast<int>(n));
        case Tag::Y: return yz_pair(n).first;
        case Tag::Z: return yz_pair(n).second;
        case Tag::V: return v_poly(n);
        case Tag::W: return w_poly(n);
        case Tag::BezoutChainP:
            return bezout_chain(n, seed_p0, seed_q0, Polynomial::x(),
                                Polynomial::x() + Polynomial(1)).first;
        case Tag::BezoutChainQ:
            return bezout_chain(n, seed_p0, seed_q0, Polynomial::x(),
                                Polynomial::x() + Polynomial(1)).second;
    }
    throw std::logic_error("unreachable family tag");
}

}  // namespace pqpolys
