#include "qsp/scalar.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace qsp {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw scalar_error("division by zero");
    normalize();
}

Scalar Scalar::u_pow(int k)
{
    Scalar s;
    if (k >= 0) {
        s.num_ = Poly::monomial(1, k);
        s.den_ = Poly(1l);
    } else {
        s.num_ = Poly(1l);
        s.den_ = Poly::monomial(1, -k);
    }
    return s;
}

void Scalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1l);
        return;
    }
    // monomial content in u
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        num_ = num_.divide_exact(Poly::monomial(1, v));
        den_ = den_.divide_exact(Poly::monomial(1, v));
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g.degree() == 0 && g.c[0] == 1)) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    mpz_class cn = num_.content(), cd = den_.content();
    if (cn < 0)
        cn = -cn;
    if (cd < 0)
        cd = -cd;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        for (auto& x : num_.c)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cg.get_mpz_t());
        for (auto& x : den_.c)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cg.get_mpz_t());
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Scalar::is_one() const
{
    return num_.degree() == 0 && num_.c[0] == 1 && den_.degree() == 0 &&
           den_.c[0] == 1;
}

bool Scalar::operator<(const Scalar& o) const
{
    auto cmp_poly = [](const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size())
            return a.c.size() < b.c.size() ? -1 : 1;
        for (size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i])
                return cmp(a.c[i], b.c[i]) < 0 ? -1 : 1;
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0)
        return c < 0;
    return cmp_poly(den_, o.den_) < 0;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    if (is_zero() || o.is_zero())
        return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const
{
    if (o.is_zero())
        throw scalar_error("division by zero");
    if (is_zero())
        return Scalar();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw scalar_error("division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const
{
    if (k < 0)
        return inv().pow(-k);
    Scalar r(1), b = *this;
    while (k > 0) {
        if (k & 1)
            r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

mpq_class Scalar::eval_u(const mpq_class& u0) const
{
    mpq_class d = den_.eval(u0);
    if (d == 0)
        throw scalar_error("pole at the evaluation point");
    mpq_class v = num_.eval(u0) / d;
    v.canonicalize();
    return v;
}

bool Scalar::integral_q_powers() const
{
    // canonical form: den is a monomial in u times a polynomial with nonzero
    // constant term only when... just test directly: num/den expressible in
    // q ⟺ both num and den * u^t (for t in {0,1}) have only even powers.
    auto even_only = [](const Poly& p) {
        for (size_t i = 1; i < p.c.size(); i += 2)
            if (p.c[i] != 0)
                return false;
        return true;
    };
    if (even_only(num_) && even_only(den_))
        return true;
    auto odd_only = [](const Poly& p) {
        for (size_t i = 0; i < p.c.size(); i += 2)
            if (p.c[i] != 0)
                return false;
        return true;
    };
    return odd_only(num_) && odd_only(den_);
}

mpq_class Scalar::eval_q(const mpq_class& q0) const
{
    auto split = [](const Poly& p, Poly& ev, Poly& od) {
        for (size_t i = 0; i < p.c.size(); ++i) {
            Poly& dst = (i % 2 == 0) ? ev : od;
            size_t k = i / 2;
            if (dst.c.size() <= k)
                dst.c.resize(k + 1, mpz_class(0));
            dst.c[k] = p.c[i];
        }
        ev.trim();
        od.trim();
    };
    // p(u) = a(q) + u b(q); num/den in q requires the odd parts to cancel:
    // (an + u bn)/(ad + u bd) is q-rational iff an*bd == ad*bn... handle the
    // common canonical cases directly.
    Poly an, bn, ad, bd;
    split(num_, an, bn);
    split(den_, ad, bd);
    mpq_class va = an.eval(q0), vb = bn.eval(q0);
    mpq_class wa = ad.eval(q0), wb = bd.eval(q0);
    // (va + u vb)/(wa + u wb) with u^2 = q0; rationalize by (wa - u wb):
    // value = (va wa - q0 vb wb + u (vb wa - va wb)) / (wa^2 - q0 wb^2)
    mpq_class denom = wa * wa - q0 * wb * wb;
    if (denom == 0)
        throw scalar_error("pole at the evaluation point");
    mpq_class ucoef = vb * wa - va * wb;
    if (ucoef != 0)
        throw scalar_error("value involves odd powers of q^(1/2)");
    mpq_class v = (va * wa - q0 * vb * wb) / denom;
    v.canonicalize();
    return v;
}

/* ---- printing ------------------------------------------------------- */

namespace {

/* Print p(u) as a polynomial in q, allowing q^(k/2) for odd u-powers. */
std::string upoly_to_qstring(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (int d = p.degree(); d >= 0; --d) {
        const mpz_class& a = p.c[static_cast<size_t>(d)];
        if (a == 0)
            continue;
        mpz_class mag = abs(a);
        if (s.empty())
            s += (a < 0) ? "-" : "";
        else
            s += (a < 0) ? " - " : " + ";
        if (d == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1)
            s += mag.get_str() + "*";
        s += "q";
        if (d == 2)
            ;  // plain q
        else if (d % 2 == 0)
            s += "^" + std::to_string(d / 2);
        else
            s += "^(" + std::to_string(d) + "/2)";
    }
    return s;
}

}  // namespace

std::string Scalar::str() const
{
    std::string n = upoly_to_qstring(num_);
    if (den_.degree() == 0 && den_.c[0] == 1)
        return n;
    return "(" + n + ")/(" + upoly_to_qstring(den_) + ")";
}

/* ---- parsing --------------------------------------------------------- */

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c)
    {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw scalar_error("parse error at position " + std::to_string(i) +
                           ": " + what + " in '" + s + "'");
    }

    Scalar parse_expr()
    {
        Scalar v = parse_term();
        for (;;) {
            skip();
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }
    Scalar parse_term()
    {
        Scalar v = parse_factor();
        for (;;) {
            skip();
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }
    Scalar parse_factor()
    {
        skip();
        if (eat('-'))
            return -parse_factor();
        if (eat('+'))
            return parse_factor();
        Scalar base = parse_atom();
        skip();
        if (eat('^')) {
            auto [nume, deno] = parse_exponent();
            if (deno == 1)
                return base.pow(nume);
            if (deno == 2) {
                // only q^(k/2) is meaningful
                if (!(base == Scalar::q()))
                    fail("fractional exponent on a non-q base");
                return Scalar::u_pow(nume);
            }
            fail("unsupported exponent denominator");
        }
        return base;
    }
    std::pair<int, int> parse_exponent()
    {
        skip();
        bool paren = eat('(');
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        long n = parse_int();
        if (neg)
            n = -n;
        int d = 1;
        skip();
        if (paren) {
            if (eat('/')) {
                d = static_cast<int>(parse_int());
            }
            if (!eat(')'))
                fail("expected ')'");
        }
        return {static_cast<int>(n), d};
    }
    long parse_int()
    {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            fail("expected integer");
        return std::stol(s.substr(start, i - start));
    }
    Scalar parse_atom()
    {
        skip();
        if (i >= s.size())
            fail("unexpected end of input");
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (s[i] == 'q') {
            ++i;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            return Scalar(mpz_class(s.substr(start, i - start)));
        }
        fail("unexpected character");
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text)
{
    Parser p(text);
    Scalar v = p.parse_expr();
    p.skip();
    if (p.i != text.size())
        p.fail("trailing input");
    return v;
}

/* ---- json ------------------------------------------------------------ */

nlohmann::json Scalar::to_json() const
{
    // num and den as ascending integer-coefficient arrays plus a denominator
    // shift for pure q^{-k} factors; "half" marks arrays indexed by powers
    // of q^(1/2) instead of q.
    auto even_only = [](const Poly& p) {
        for (size_t i = 1; i < p.c.size(); i += 2)
            if (p.c[i] != 0)
                return false;
        return true;
    };
    bool half = !(even_only(num_) && even_only(den_));
    int shift_u = den_.valuation();
    Poly d = den_.divide_exact(Poly::monomial(1, shift_u));
    auto coeffs = [&](const Poly& p) {
        nlohmann::json a = nlohmann::json::array();
        int step = half ? 1 : 2;
        for (int k = 0; k <= p.degree(); k += step)
            a.push_back(p.c[static_cast<size_t>(k)].get_str());
        return a;
    };
    nlohmann::json j;
    j["num"] = coeffs(num_);
    j["den"] = coeffs(d);
    j["shift"] = half ? shift_u : shift_u / 2;
    if (half)
        j["half"] = true;
    return j;
}

Scalar Scalar::from_json(const nlohmann::json& j)
{
    bool half = j.value("half", false);
    int step = half ? 1 : 2;
    auto poly = [&](const nlohmann::json& a) {
        Poly p;
        int deg = static_cast<int>(a.size());
        if (deg > 0)
            p.c.assign(static_cast<size_t>((deg - 1) * step) + 1, mpz_class(0));
        for (int k = 0; k < deg; ++k)
            p.c[static_cast<size_t>(k * step)] =
                mpz_class(a[static_cast<size_t>(k)].get<std::string>());
        p.trim();
        return p;
    };
    Poly num = poly(j.at("num"));
    Poly den = poly(j.at("den"));
    int shift = j.at("shift").get<int>();
    den = den.shifted(half ? shift : 2 * shift);
    return Scalar(num, den);
}

/* ---- quantum integers ------------------------------------------------ */

Scalar q_int(int n) { return q_int_base(n, 2); }

Scalar q_int_base(int n, int two_s)
{
    if (n == 0)
        return Scalar();
    if (two_s == 0)
        throw scalar_error("q_int_base with zero base exponent");
    int a = n < 0 ? -n : n;
    Scalar sum;
    for (int k = 0; k < a; ++k)
        sum += Scalar::u_pow(two_s * (a - 1 - 2 * k));
    return n < 0 ? -sum : sum;
}

}  // namespace qsp
