#pragma once

#include "qsp/report.hpp"
#include "qsp/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsp {

/* Integer linear map on the eps/delta weight basis (column convention:
 * image of basis vector j is column j). */
struct WeightMap {
    int n = 0;
    std::vector<std::vector<int>> m;  // n x n

    static WeightMap identity(int n);
    Weight apply(const Weight& w) const;
    WeightMap compose(const WeightMap& o) const;  // this after o
    WeightMap negated() const;
    bool operator==(const WeightMap& o) const { return n == o.n && m == o.m; }
    bool is_involutive() const;
    bool is_orthogonal(const RootSystem& rs) const;
};

/* Decorated Dynkin diagram: Levi subset plus involutive automorphism. */
struct Decorated {
    std::vector<int> piL;  // sorted 0-based simple-root indices
    std::vector<int> tau;  // permutation of 0..rank-1

    bool tau_is_id() const;
    std::vector<int> piL_complement(int rank) const;
};

/* connected components of the induced subdiagram on `nodes` */
std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& nodes);

/* A connected Levi component is of general-linear type unless it contains
 * the short tail root (odd orthogonal / symplectic-odd families) or both
 * fork roots (even orthogonal). */
bool component_is_gl_type(const RootSystem& rs, const std::vector<int>& comp);

bool is_admissible(const RootSystem& rs, const std::vector<int>& piL);
std::vector<std::vector<int>> enumerate_admissible(const RootSystem& rs);

/* Weyl operator of the Levi subset: per component, the natural gl-extension
 * reverses its weight support; non-gl components act by -1 on theirs. */
WeightMap weyl_operator(const RootSystem& rs, const std::vector<int>& piL);

/* weight-lattice matrix of a diagram automorphism */
WeightMap tau_weight_matrix(const RootSystem& rs, const std::vector<int>& tau);

/* all even involutive diagram automorphisms with tau|piL = -w_l */
std::vector<std::vector<int>> enumerate_taus(const RootSystem& rs,
                                             const std::vector<int>& piL);

/* alpha~ = w_l tau(alpha) for a simple root index in the complement */
Weight tilde_root(const RootSystem& rs, const Decorated& d, int alpha);

/* theta = -w_l tau */
WeightMap theta_map(const RootSystem& rs, const Decorated& d);

Report check_pseudo_symmetric(const RootSystem& rs, const Decorated& d);
bool is_pseudo_symmetric(const RootSystem& rs, const Decorated& d);

struct SelectionMatch {
    bool violates = false;
    std::string pattern;     // "rank-violating", "isolated-odd", ...
    std::vector<int> nodes;  // 0-based simple-root indices of the match
};

SelectionMatch violates_selection_rules(const RootSystem& rs,
                                        const Decorated& d);

/* family template names: GL-I, SPO-I, OSP-I-odd, OSP-I-even, OSP-I-even-2,
 * OSP-I-even-2-flip, C-type-I, ANOM-GL, ANOM-OSP-*, C-type-II,
 * or "unmatched" (flagged). */
struct Classified {
    Decorated d;
    std::string family;  // template name
    bool type_II = false;
};

std::string classify_family(const RootSystem& rs, const Decorated& d);
bool family_is_type_II(const std::string& family);

/* all decorated diagrams passing admissibility, pseudo-symmetry and the
 * selection rules, with proper Levi subset */
std::vector<Classified> enumerate_satake(const RootSystem& rs);

/* one-line ASCII rendering, stable across runs */
std::string render_diagram(const RootSystem& rs, const Decorated& d);

nlohmann::json satake_to_json(const RootSystem& rs, const Classified& c);

}  // namespace qsp
