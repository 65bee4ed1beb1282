#include "qsp/poly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qsp {

Poly Poly::monomial(const mpz_class& coeff, int deg)
{
    Poly p;
    if (coeff == 0)
        return p;
    p.c.assign(static_cast<size_t>(deg) + 1, mpz_class(0));
    p.c[static_cast<size_t>(deg)] = coeff;
    return p;
}

void Poly::trim()
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

int Poly::valuation() const
{
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            return static_cast<int>(i);
    return 0;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& x : r.c)
        x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i)
        r.c[i] += o.c[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i)
        r.c[i] -= o.c[i];
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    if (is_zero() || o.is_zero())
        return r;
    r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            if (o.c[j] != 0)
                r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

Poly Poly::divide_exact(const Poly& d) const
{
    if (d.is_zero())
        throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    Poly quot;
    if (rem.is_zero())
        return quot;
    if (rem.degree() < d.degree())
        throw std::domain_error("inexact polynomial division");
    quot.c.assign(static_cast<size_t>(rem.degree() - d.degree()) + 1, mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    d.leading().get_mpz_t());
        if (r != 0)
            throw std::domain_error("inexact polynomial division");
        int shift = rem.degree() - d.degree();
        quot.c[static_cast<size_t>(shift)] = q;
        for (size_t i = 0; i < d.c.size(); ++i)
            rem.c[i + static_cast<size_t>(shift)] -= q * d.c[i];
        rem.trim();
    }
    if (!rem.is_zero())
        throw std::domain_error("inexact polynomial division");
    quot.trim();
    return quot;
}

mpz_class Poly::content() const
{
    mpz_class g = 0;
    for (const auto& x : c)
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 0 && leading() < 0)
        g = -g;
    return g;
}

Poly Poly::primitive_part() const
{
    if (is_zero())
        return Poly();
    Poly r = *this;
    mpz_class g = content();
    for (auto& x : r.c)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

Poly Poly::shifted(int k) const
{
    if (is_zero())
        return Poly();
    Poly r;
    r.c.assign(c.size() + static_cast<size_t>(k), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i + static_cast<size_t>(k)] = c[i];
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const
{
    mpq_class v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        v *= x;
        v += mpq_class(c[i]);
    }
    v.canonicalize();
    return v;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& a = c[static_cast<size_t>(d)];
        if (a == 0)
            continue;
        mpz_class mag = abs(a);
        if (s.empty())
            s += (a < 0) ? "-" : "";
        else
            s += (a < 0) ? " - " : " + ";
        if (d == 0) {
            s += mag.get_str();
        } else {
            if (mag != 1)
                s += mag.get_str() + "*";
            s += var;
            if (d != 1)
                s += "^" + std::to_string(d);
        }
    }
    return s;
}

/* Primitive pseudo-remainder sequence. */
Poly poly_gcd(const Poly& a, const Poly& b)
{
    Poly f = a.is_zero() ? Poly() : a.primitive_part();
    Poly g = b.is_zero() ? Poly() : b.primitive_part();
    if (f.is_zero())
        return g.is_zero() ? Poly() : g;
    if (g.is_zero())
        return f;
    if (f.degree() < g.degree())
        std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g
        Poly rem = f;
        int k = f.degree() - g.degree() + 1;
        for (int i = 0; i < k && !rem.is_zero() && rem.degree() >= g.degree(); ++i) {
            mpz_class lc = rem.leading();
            int shift = rem.degree() - g.degree();
            // rem = lc(g)*rem - lc(rem)*u^shift*g
            Poly scaled = rem;
            for (auto& x : scaled.c)
                x *= g.leading();
            for (size_t j = 0; j < g.c.size(); ++j)
                scaled.c[j + static_cast<size_t>(shift)] -= lc * g.c[j];
            scaled.trim();
            rem = scaled;
        }
        if (!rem.is_zero() && rem.degree() >= g.degree())
            throw std::logic_error("pseudo-remainder did not reduce degree");
        f = g;
        g = rem.is_zero() ? Poly() : rem.primitive_part();
    }
    if (f.leading() < 0)
        f = -f;
    return f;
}

}  // namespace qsp
