#pragma once

#include "qsp/report.hpp"
#include "qsp/rootdata.hpp"

namespace qsp {

/* Exponent and sign data entering the orthosymplectic R-matrix.
 * rho is stored doubled (two_rho[i] = 2 rho_i) since the tables contain
 * half-integers; kappa entries are +-1. */
struct RhoKappa {
    std::vector<int> two_rho;
    std::vector<int> kappa;
};

/* pre: rs is orthosymplectic (not GL). */
RhoKappa rho_kappa(const RootSystem& rs);

/* R-matrix of the natural representation, with abstract expansion. */
Op2 build_R(const RootSystem& rs);

/* R12 R13 R23 = R23 R13 R12 on V (x) V (x) V, exact. */
Report check_YBE(const RootSystem& rs, const Op2& R);

/* braid identity for S = P R: S12 S23 S12 = S23 S12 S23 */
Report check_braid(const RootSystem& rs, const Op2& R);

}  // namespace qsp
