#pragma once

#include "qsp/scalar.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qsp {

/* Parity profile of the underlying vector space.  Indices are 0-based
 * internally; all external formats are 1-based. */
struct Grading {
    int dim = 0;
    std::vector<int> parity;  // 0 or 1 per index

    Grading() = default;
    Grading(int d, std::vector<int> p) : dim(d), parity(std::move(p)) {}
    /* minimal symmetric profile (1..1, 0..0, 1..1) with m odd slots each side */
    static Grading minimal_symmetric(int n_even, int m);

    int conj(int i) const { return dim - 1 - i; }  // i' = D+1-i, 0-based
    bool is_symmetric() const;
    bool operator==(const Grading& o) const
    {
        return dim == o.dim && parity == o.parity;
    }
};

/* Sparse exact square matrix; zero entries are never stored. */
struct Mat {
    int n = 0;
    std::map<std::pair<int, int>, Scalar> a;

    Mat() = default;
    explicit Mat(int size) : n(size) {}
    static Mat identity(int size);
    static Mat unit(int size, int r, int c, const Scalar& v = Scalar(1));

    const Scalar* find(int r, int c) const;
    Scalar get(int r, int c) const;
    void add(int r, int c, const Scalar& v);
    void set(int r, int c, const Scalar& v);

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const { return a.empty(); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& v) const;
    Mat transpose() const;

    /* first entry where the two matrices differ, in row-major order */
    static std::optional<std::pair<int, int>> first_difference(const Mat& x,
                                                               const Mat& y);
};

/* Abstract tensor term c * e_{ij} (x) e_{kl}; indices 0-based. */
struct Term2 {
    int i, j, k, l;
    Scalar c;
};

/* Operator on V (order 1). */
struct Op1 {
    Grading g;
    Mat mat;

    Op1() = default;
    Op1(Grading gr, Mat m) : g(std::move(gr)), mat(std::move(m)) {}
    bool is_even() const;
    /* parity if homogeneous */
    std::optional<int> homogeneous_parity() const;
};

/* Operator on V (x) V.  The matrix acts on the lexicographic product basis
 * with all Koszul signs already paid; `terms` retains the abstract expansion
 * sum c * e_{ij} (x) e_{kl} needed by partial supertransposition and leg
 * twists, which do not commute with the embedding entrywise. */
struct Op2 {
    Grading g;
    Mat mat;
    std::vector<Term2> terms;
    bool has_terms = false;

    bool is_even() const;
    Op2 operator*(const Op2& o) const;  // plain matrix product
    Op2 operator+(const Op2& o) const;
    Op2 operator-(const Op2& o) const;
    bool operator==(const Op2& o) const { return mat == o.mat; }
};

/* Build the embedded matrix of an abstract expansion: the Koszul rule
 * (a (x) b)(v_j (x) v_l) = (-1)^{|b| |v_j|} a v_j (x) b v_l, applied
 * entrywise with |b| = |k|+|l|. */
Mat embed_terms(const std::vector<Term2>& terms, const Grading& g);

/* Graded tensor product of two order-1 operators. */
Op2 koszul_embed(const Op1& a, const Op1& b);

/* Op2 from an explicit expansion (sorts and combines terms). */
Op2 make_op2(const Grading& g, std::vector<Term2> terms);

/* P = sum (-1)^{|j|} e_{ij} (x) e_{ji}. */
Op2 graded_permutation(const Grading& g);

/* A^t with (A^t)_{ij} = A_{ji} (-1)^{(|i|+|j|)|i|}. */
Op1 supertranspose(const Op1& a);

/* Supertransposition applied to tensor leg 1 or 2 of the expansion. */
Op2 partial_supertranspose(const Op2& x, int leg);

/* Graded flip of both legs: R_{21} from R_{12}. */
Op2 flip_legs(const Op2& x);

/* Conjugate one leg by an invertible order-1 matrix m (m X m^{-1}). */
Op2 conjugate_leg(const Op2& x, const Op1& m, const Op1& m_inv, int leg);

/* Three-leg embedding on V^(x)3: the expansion placed on legs
 * (p,q) in {(1,2),(1,3),(2,3)} (1-based legs), bystander identity. */
Mat embed3(const Op2& x, int p, int q);

/* product of expansions with the graded multiplication rule */
std::vector<Term2> multiply_terms(const std::vector<Term2>& x,
                                  const std::vector<Term2>& y,
                                  const Grading& g);

nlohmann::json op1_to_json(const Op1& op);
nlohmann::json op2_to_json(const Op2& op);

}  // namespace qsp
