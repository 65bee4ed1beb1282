#pragma once

#include "qsp/natrep.hpp"
#include "qsp/report.hpp"
#include "qsp/satake.hpp"

#include <gmpxx.h>

namespace qsp {

/* Dense exact matrix over Q used by the classical (q -> 1) computations. */
struct QMat {
    int n = 0;
    std::vector<mpq_class> a;  // row-major, n*n

    explicit QMat(int size = 0) : n(size), a(static_cast<size_t>(size) * size, 0) {}
    mpq_class& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const mpq_class& at(int r, int c) const
    {
        return a[static_cast<size_t>(r) * n + c];
    }
    bool is_zero() const;
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat scaled(const mpq_class& v) const;
};

/* The classical matrix Lie superalgebra underlying the representation:
 * the bracket closure of the q -> 1 Chevalley images. */
struct ClassicalAlgebra {
    RootSystem rs;
    Grading g;
    std::vector<QMat> e, f;          // simple root vectors
    std::vector<QMat> h;             // Cartan diagonals (one per simple root)
    std::vector<QMat> cartan_basis;  // full diagonal Cartan subalgebra
    std::vector<QMat> basis;         // homogeneous basis of the whole algebra
    int dim = 0;

    int parity_of(const QMat& x) const;  // -1 if not homogeneous
    /* supercommutator on homogeneous matrices */
    QMat bracket(const QMat& x, const QMat& y) const;
    /* root vector spanning the one-dimensional weight space of beta */
    QMat root_vector(const Weight& beta) const;
    /* diagonal realizing h_beta for beta in the root lattice */
    QMat cartan_of(const std::vector<int>& simple_coords) const;
};

ClassicalAlgebra build_classical(const Representation& rep);

/* exact rank of the span of a matrix list inside End(V) */
int span_rank(const std::vector<QMat>& mats);

struct MixtureSample {
    std::map<int, mpq_class> c;       // alpha index -> c_alpha
    std::map<int, mpq_class> c_grave; // alpha index -> grave c_alpha
};

/* deterministic nonzero samples for the mixture parameters */
std::vector<MixtureSample> default_mixture_samples(const RootSystem& rs,
                                                   const Decorated& d,
                                                   int count = 3);

/* u_alpha candidates: the centralizer of the Levi part inside the Cartan,
 * orthogonal to the Levi roots; empty unless alpha is even, orthogonal to
 * the Levi subset and fixed by tau with alpha~ = alpha */
std::vector<QMat> u_alpha_space(const ClassicalAlgebra& ca, const Decorated& d,
                                int alpha);

struct ClosureResult {
    int dim_k = 0;
    int dim_g = 0;
    bool k_equals_g = false;
    std::vector<QMat> k_basis;
};

/* bracket closure of the subalgebra attached to the decorated diagram */
ClosureResult classical_k_closure(const ClassicalAlgebra& ca,
                                  const Decorated& d,
                                  const MixtureSample& sample);

/* dim(k + b^-) == dim g for the lower Borel */
Report check_spherical(const ClassicalAlgebra& ca, const Decorated& d);

/* k == g for every default mixture sample */
bool is_trivial_pair(const ClassicalAlgebra& ca, const Decorated& d);

}  // namespace qsp
