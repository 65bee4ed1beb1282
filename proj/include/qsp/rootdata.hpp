#pragma once

#include "qsp/graded.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qsp {

enum class Family { GL, OSPodd, OSPeven, SPO };

std::string family_name(Family f);                 // "gl", "osp-odd", ...
std::optional<Family> family_from_name(const std::string& s);

using Weight = std::vector<int>;  // coordinates over (delta_1..delta_{2m}, eps_1..eps_k)

/* Root system of one of the four families in the minimal symmetric grading.
 *
 * Basis order is (delta_1, ..., delta_{2bm}, eps_1, ..., eps_k) with
 * (eps_i, eps_i) = +1, (delta_i, delta_i) = -1 and zero cross terms;
 * k = N for the general linear family and k = bn otherwise. */
struct RootSystem {
    Family family;
    int bn = 0;  // bold n (N for GL)
    int bm = 0;  // bold m
    int rank = 0;
    int basis_dim = 0;
    int eps_count = 0;
    int dimV = 0;  // N + 2 bm

    std::vector<Weight> simple;
    std::vector<int> simple_parity;
    std::vector<Weight> positive;

    Grading grading() const;
    std::string display_name() const;  // e.g. "OSP(3|2)"

    long pair(const Weight& u, const Weight& v) const;
    int root_parity(const Weight& r) const;
    std::vector<std::vector<long>> gram() const;

    /* weight of the i-th basis vector of the natural module (0-based) */
    Weight index_weight(int i) const;

    /* coordinates of w over the simple roots; nullopt if w is outside the
     * root lattice span or the solution is not integral */
    std::optional<std::vector<int>> simple_coords(const Weight& w) const;
    bool is_positive_root(const Weight& w) const;

    Weight weight_sum(const std::vector<int>& coords) const;

    static Weight add(const Weight& a, const Weight& b);
    static Weight sub(const Weight& a, const Weight& b);
    static Weight neg(const Weight& a);
};

/* pre: bm >= 1; OSPeven needs bn >= 1, OSPodd bn >= 0, GL/SPO bn >= 1. */
RootSystem build_root_system(Family f, int bn, int bm);

nlohmann::json rootdata_to_json(const RootSystem& rs);

}  // namespace qsp
