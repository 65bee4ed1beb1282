#pragma once

#include "qsp/poly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace qsp {

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Exact element of the rational-function field of the deformation parameter.
 *
 * Stored as num/den over the auxiliary variable u = q^(1/2); half-integer
 * powers of q are needed by the orthosymplectic R-matrices.  Canonical form:
 * den != 0, gcd(num, den) = 1 in Z[u] (including integer contents), den has
 * positive leading coefficient.  Values are immutable in spirit: every
 * operation returns a fresh canonical value. */
class Scalar {
  public:
    Scalar() = default;  // zero
    Scalar(long v) : num_(v), den_(1) {}
    explicit Scalar(const mpz_class& v) : num_(v), den_(1) {}
    explicit Scalar(const mpq_class& v)
        : num_(v.get_num()), den_(v.get_den())
    {
    }
    Scalar(Poly num, Poly den);

    /* q^k (k may be negative). */
    static Scalar q_pow(int k) { return u_pow(2 * k); }
    /* u^k = q^(k/2). */
    static Scalar u_pow(int k);
    static Scalar q() { return q_pow(1); }
    /* omega = q - q^{-1} */
    static Scalar omega() { return q_pow(1) - q_pow(-1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool operator==(const Scalar& o) const
    {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /* total order for deterministic containers */
    bool operator<(const Scalar& o) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(int k) const;

    /* Exact value at q = q0; throws scalar_error on a pole or if the value
     * involves odd powers of q^(1/2). */
    mpq_class eval_q(const mpq_class& q0) const;
    /* Exact value at u = u0 (q = u0^2); throws on a pole. */
    mpq_class eval_u(const mpq_class& u0) const;

    /* True when every monomial is an integer power of q. */
    bool integral_q_powers() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    /* "(num)/(den)" with polynomials printed in descending powers of q;
     * den == 1 prints as just "num". */
    std::string str() const;
    static Scalar parse(const std::string& text);

    nlohmann::json to_json() const;
    static Scalar from_json(const nlohmann::json& j);

  private:
    Poly num_;       // zero polynomial for the value 0
    Poly den_{1l};   // positive leading coefficient
    void normalize();
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

/* Quantum integer [n]_q = (q^n - q^{-n}) / (q - q^{-1}). */
Scalar q_int(int n);

/* [n] in base q^(two_s/2): (q^{sn} - q^{-sn}) / (q^s - q^{-s}) with
 * s = two_s/2.  Used for Cartan values [h]_{q_alpha} where q_alpha can be a
 * half-integer power of q. */
Scalar q_int_base(int n, int two_s);

}  // namespace qsp
