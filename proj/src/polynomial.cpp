#include "pqpolys/polynomial.hpp"

#include <algorithm>

namespace pqpolys {

Polynomial Polynomial::monomial(const Rational& c, unsigned i) {
    if (c.is_zero()) return {};
    std::vector<Rational> cs(i + 1, Rational(0));
    cs[i] = c;
    return Polynomial(std::move(cs));
}

bool Polynomial::is_integer() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

Rational Polynomial::content() const {
    BigInt num = 0, den = 1;
    for (const Rational& c : coeffs_) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
        num = g;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return Rational(num, den);
}

Rational Polynomial::operator()(const Rational& x0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Polynomial Polynomial::derivative(unsigned k) const {
    Polynomial f = *this;
    for (unsigned round = 0; round < k; ++round) {
        if (f.coeffs_.size() <= 1) return {};
        std::vector<Rational> d(f.coeffs_.size() - 1);
        for (size_t i = 1; i < f.coeffs_.size(); ++i)
            d[i - 1] = Rational(static_cast<long>(i)) * f.coeffs_[i];
        f = Polynomial(std::move(d));
    }
    return f;
}

Polynomial Polynomial::affine_sub(const Rational& a, const Rational& b) const {
    Polynomial lin(std::vector<Rational>{b, a});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + Polynomial(*it);
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> cs(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
    if (c.is_zero()) return {};
    Polynomial r = f;
    for (Rational& ci : r.coeffs_) ci *= c;
    return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw ZeroDivisionError();
    Polynomial r = f;
    std::vector<Rational> q;
    const int dg = g.degree();
    if (!r.is_zero() && r.degree() >= dg) q.assign(r.degree() - dg + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dg) {
        const int shift = r.degree() - dg;
        Rational c = r.leading_coeff() / g.leading_coeff();
        q[shift] = c;
        r -= Polynomial::monomial(c, shift) * g;
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial pow(const Polynomial& f, unsigned e) {
    Polynomial acc(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

Polynomial poly_gcd(Polynomial f, Polynomial g) {
    while (!g.is_zero()) {
        Polynomial r = divmod(f, g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return (Rational(1) / f.leading_coeff()) * f;
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) out.push_back(c.str());
    return out;
}

Polynomial Polynomial::from_coeff_strings(const std::vector<std::string>& cs) {
    std::vector<Rational> coeffs;
    coeffs.reserve(cs.size());
    for (const std::string& s : cs) coeffs.push_back(Rational::parse(s));
    return Polynomial(std::move(coeffs));
}

namespace {

void append_term(std::string& out, const Rational& c, unsigned i) {
    if (c.sign() < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    const Rational mag = c.sign() < 0 ? -c : c;
    if (i == 0) {
        out += mag.str();
        return;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
}

}  // namespace

std::string Polynomial::human(bool descending) const {
    if (is_zero()) return "0";
    std::string out;
    if (descending) {
        for (size_t i = coeffs_.size(); i-- > 0;)
            if (!coeffs_[i].is_zero()) append_term(out, coeffs_[i], static_cast<unsigned>(i));
    } else {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) append_term(out, coeffs_[i], static_cast<unsigned>(i));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.human(); }

}  // namespace pqpolys
