#pragma once

#include "qsp/report.hpp"
#include "qsp/rootdata.hpp"

namespace qsp {

/* Natural representation on C^{N|2m} in the minimal symmetric grading.
 * Cartan images are diagonal with integer q-exponents; they are stored as
 * exponent vectors and materialized on demand. */
struct Representation {
    RootSystem rs;
    Grading g;
    std::vector<Op1> E, F;                      // per simple root
    std::vector<std::vector<int>> h_exp;        // q^{h_i} = diag(q^{h_exp[i][j]})
    std::vector<std::vector<int>> zeta_exp;     // GL only: q^{h_{zeta_i}}

    Op1 cartan(const std::vector<int>& exps, int sign = 1) const;
    Op1 cartan_h(int i, int sign = 1) const;  // q^{± h_{alpha_i}}
    /* q^{h_beta} for beta = sum coords_i alpha_i (integer coordinates) */
    std::vector<int> exps_of_coords(const std::vector<int>& coords) const;

    /* base exponent of q_{alpha_i}: q_alpha = q^(two_s/2) */
    int two_s(int i) const;
};

Representation build_natural_rep(const RootSystem& rs);

/* Exact verification of the defining relations (i), (ii), (iv), (v)
 * inside the natural representation. */
Report check_defining_relations(const Representation& rep);

}  // namespace qsp
