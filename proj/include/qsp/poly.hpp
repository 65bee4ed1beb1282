#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsp {

/* Dense integer-coefficient polynomial, coefficients ascending.
 * The zero polynomial is the empty coefficient vector. */
struct Poly {
    std::vector<mpz_class> c;

    Poly() = default;
    explicit Poly(long v)
    {
        if (v != 0)
            c.push_back(mpz_class(v));
    }
    explicit Poly(const mpz_class& v)
    {
        if (v != 0)
            c.push_back(v);
    }
    static Poly monomial(const mpz_class& coeff, int deg);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const mpz_class& leading() const { return c.back(); }
    void trim();

    /* lowest nonzero power (0 for the zero polynomial) */
    int valuation() const;

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    /* Exact division; aborts if the division leaves a remainder. */
    Poly divide_exact(const Poly& d) const;

    /* Content (gcd of coefficients, sign of leading coefficient). */
    mpz_class content() const;
    Poly primitive_part() const;

    /* Shift by u^k (k >= 0). */
    Poly shifted(int k) const;

    mpq_class eval(const mpq_class& x) const;

    std::string to_string(const std::string& var) const;
};

/* gcd in Z[u], positive leading coefficient; gcd(0,0) = 0. */
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace qsp
