#include "qsp/satake.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qsp {

WeightMap WeightMap::identity(int n)
{
    WeightMap w;
    w.n = n;
    w.m.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        w.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return w;
}

Weight WeightMap::apply(const Weight& w) const
{
    Weight r(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        if (w[static_cast<size_t>(j)] == 0)
            continue;
        for (int i = 0; i < n; ++i)
            r[static_cast<size_t>(i)] +=
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                w[static_cast<size_t>(j)];
    }
    return r;
}

WeightMap WeightMap::compose(const WeightMap& o) const
{
    WeightMap r;
    r.n = n;
    r.m.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0)
                continue;
            for (int j = 0; j < n; ++j)
                r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                    o.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    return r;
}

WeightMap WeightMap::negated() const
{
    WeightMap r = *this;
    for (auto& row : r.m)
        for (auto& x : row)
            x = -x;
    return r;
}

bool WeightMap::is_involutive() const
{
    return compose(*this) == identity(n);
}

bool WeightMap::is_orthogonal(const RootSystem& rs) const
{
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Weight ei(static_cast<size_t>(n), 0), ej(static_cast<size_t>(n), 0);
            ei[static_cast<size_t>(i)] = 1;
            ej[static_cast<size_t>(j)] = 1;
            if (rs.pair(apply(ei), apply(ej)) != rs.pair(ei, ej))
                return false;
        }
    return true;
}

bool Decorated::tau_is_id() const
{
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i] != static_cast<int>(i))
            return false;
    return true;
}

std::vector<int> Decorated::piL_complement(int rank) const
{
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (!std::binary_search(piL.begin(), piL.end(), i))
            out.push_back(i);
    return out;
}

std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& nodes)
{
    auto gram = rs.gram();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(nodes.size(), false);
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{nodes[s]};
        seen[s] = true;
        for (size_t k = 0; k < comp.size(); ++k)
            for (size_t t = 0; t < nodes.size(); ++t)
                if (!seen[t] &&
                    gram[static_cast<size_t>(comp[k])]
                        [static_cast<size_t>(nodes[t])] != 0) {
                    comp.push_back(nodes[t]);
                    seen[t] = true;
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool component_is_gl_type(const RootSystem& rs, const std::vector<int>& comp)
{
    auto has = [&](int i) {
        return std::find(comp.begin(), comp.end(), i) != comp.end();
    };
    int last = rs.rank - 1;
    switch (rs.family) {
    case Family::GL: return true;
    case Family::OSPodd:
    case Family::SPO: return !has(last);
    case Family::OSPeven: return !(has(last) && has(last - 1));
    }
    return true;
}

namespace {

/* signed basis weight: root = sum of exactly two signed basis vectors */
struct SignedIdx {
    int idx;
    int sign;
};

std::vector<SignedIdx> two_support(const Weight& r)
{
    std::vector<SignedIdx> s;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0)
            s.push_back({static_cast<int>(i), r[i]});
    return s;
}

/* Order a gl-type component as a path and return the oriented weight
 * support w_1, ..., w_{k+1} with root_j = w_j - w_{j+1}. */
std::vector<SignedIdx> gl_support(const RootSystem& rs,
                                  const std::vector<int>& comp)
{
    auto gram = rs.gram();
    auto deg = [&](int a) {
        int d = 0;
        for (int b : comp)
            if (b != a && gram[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0)
                ++d;
        return d;
    };
    // path order starting from the smallest endpoint
    std::vector<int> order;
    int start = -1;
    for (int a : comp)
        if (deg(a) <= 1 && (start < 0 || a < start))
            start = a;
    if (start < 0)
        throw std::logic_error("gl-type component is not a path");
    order.push_back(start);
    while (order.size() < comp.size()) {
        int cur = order.back();
        int next = -1;
        for (int b : comp) {
            if (std::find(order.begin(), order.end(), b) != order.end())
                continue;
            if (gram[static_cast<size_t>(cur)][static_cast<size_t>(b)] != 0) {
                next = b;
                break;
            }
        }
        if (next < 0)
            throw std::logic_error("gl-type component is not a path");
        order.push_back(next);
    }

    std::vector<SignedIdx> w;
    const Weight& r1 = rs.simple[static_cast<size_t>(order[0])];
    auto s1 = two_support(r1);
    if (s1.size() != 2)
        throw std::logic_error("gl-type root must have two-term support");
    if (order.size() == 1) {
        w.push_back(s1[0]);
        w.push_back({s1[1].idx, -s1[1].sign});
        return w;
    }
    // orient the first root so that its shared basis index comes second
    const Weight& r2 = rs.simple[static_cast<size_t>(order[1])];
    auto s2 = two_support(r2);
    bool first_shared = (s1[0].idx == s2[0].idx || s1[0].idx == s2[1].idx);
    SignedIdx head = first_shared ? s1[1] : s1[0];
    SignedIdx second = first_shared ? SignedIdx{s1[0].idx, -s1[0].sign}
                                    : SignedIdx{s1[1].idx, -s1[1].sign};
    w.push_back(head);
    w.push_back(second);
    for (size_t j = 1; j < order.size(); ++j) {
        // w_{j+2} = w_{j+1} - root_j
        Weight v(static_cast<size_t>(rs.basis_dim), 0);
        v[static_cast<size_t>(w.back().idx)] = w.back().sign;
        Weight diff =
            RootSystem::sub(v, rs.simple[static_cast<size_t>(order[j])]);
        auto s = two_support(diff);
        if (s.size() != 1 || std::abs(s[0].sign) != 1)
            throw std::logic_error("component support is not a weight chain");
        w.push_back(s[0]);
    }
    return w;
}

int basis_parity(const RootSystem& rs, int idx)
{
    return idx < 2 * rs.bm ? 1 : 0;
}

bool pattern_is_minimal_symmetric(const std::vector<int>& par)
{
    // 1^a 0^b 1^a (the all-odd pattern has no even simple roots at all)
    size_t a = 0;
    while (a < par.size() && par[a] == 1)
        ++a;
    if (a == par.size())
        return true;
    size_t c = 0;
    while (c < par.size() && par[par.size() - 1 - c] == 1)
        ++c;
    if (a != c)
        return false;
    for (size_t i = a; i < par.size() - c; ++i)
        if (par[i] != 0)
            return false;
    return true;
}

}  // namespace

bool is_admissible(const RootSystem& rs, const std::vector<int>& piL)
{
    for (const auto& comp : diagram_components(rs, piL)) {
        if (!component_is_gl_type(rs, comp))
            continue;  // short/fork tail components carry the centered grading
        std::vector<SignedIdx> w;
        try {
            w = gl_support(rs, comp);
        } catch (const std::logic_error&) {
            return false;
        }
        std::vector<int> par;
        for (const auto& s : w)
            par.push_back(basis_parity(rs, s.idx));
        if (!pattern_is_minimal_symmetric(par))
            return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_admissible(const RootSystem& rs)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
        std::vector<int> piL;
        for (int i = 0; i < rs.rank; ++i)
            if (mask & (1u << i))
                piL.push_back(i);
        if (is_admissible(rs, piL))
            out.push_back(std::move(piL));
    }
    return out;
}

WeightMap weyl_operator(const RootSystem& rs, const std::vector<int>& piL)
{
    if (!is_admissible(rs, piL))
        throw std::invalid_argument("Levi subset is not admissible");
    // product of the per-component involutions; components may share weight
    // support only through the even-orthogonal fork, where the factors
    // commute, so a fixed composition order is safe
    WeightMap w = WeightMap::identity(rs.basis_dim);
    for (const auto& comp : diagram_components(rs, piL)) {
        WeightMap wc = WeightMap::identity(rs.basis_dim);
        if (component_is_gl_type(rs, comp)) {
            auto sup = gl_support(rs, comp);
            size_t k = sup.size();
            for (size_t j = 0; j < k; ++j) {
                const SignedIdx& from = sup[j];
                const SignedIdx& to = sup[k - 1 - j];
                // zeta_{from} -> from.sign * to.sign * zeta_{to}
                for (int i = 0; i < rs.basis_dim; ++i)
                    wc.m[static_cast<size_t>(i)][static_cast<size_t>(from.idx)] =
                        0;
                wc.m[static_cast<size_t>(to.idx)][static_cast<size_t>(from.idx)] =
                    from.sign * to.sign;
            }
        } else {
            for (int a : comp)
                for (size_t i = 0; i < rs.simple[static_cast<size_t>(a)].size();
                     ++i)
                    if (rs.simple[static_cast<size_t>(a)][i] != 0)
                        wc.m[i][i] = -1;
        }
        w = wc.compose(w);
    }
    if (!w.is_involutive())
        throw std::logic_error("Weyl operator is not involutive");
    return w;
}

WeightMap tau_weight_matrix(const RootSystem& rs, const std::vector<int>& tau)
{
    bool id = true;
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i] != static_cast<int>(i))
            id = false;
    WeightMap t = WeightMap::identity(rs.basis_dim);
    if (id)
        return t;
    if (rs.family == Family::GL) {
        // full reversal: delta_j -> -delta_{2bm+1-j}, eps_j -> -eps_{N+1-j}
        bool reversal = true;
        for (size_t i = 0; i < tau.size(); ++i)
            if (tau[i] != rs.rank - 1 - static_cast<int>(i))
                reversal = false;
        if (!reversal)
            throw std::invalid_argument("unrecognized gl diagram automorphism");
        for (auto& row : t.m)
            std::fill(row.begin(), row.end(), 0);
        for (int j = 1; j <= 2 * rs.bm; ++j)
            t.m[static_cast<size_t>(2 * rs.bm - j)][static_cast<size_t>(j - 1)] =
                -1;
        for (int j = 1; j <= rs.eps_count; ++j)
            t.m[static_cast<size_t>(2 * rs.bm + rs.eps_count - j)]
               [static_cast<size_t>(2 * rs.bm + j - 1)] = -1;
    } else if (rs.family == Family::OSPeven) {
        // fork flip: eps_bn -> -eps_bn
        bool fork = true;
        for (size_t i = 0; i + 2 < tau.size(); ++i)
            if (tau[i] != static_cast<int>(i))
                fork = false;
        if (!(fork && tau[static_cast<size_t>(rs.rank - 2)] == rs.rank - 1 &&
              tau[static_cast<size_t>(rs.rank - 1)] == rs.rank - 2))
            throw std::invalid_argument(
                "unrecognized even-orthogonal diagram automorphism");
        int idx = 2 * rs.bm + rs.bn - 1;
        t.m[static_cast<size_t>(idx)][static_cast<size_t>(idx)] = -1;
    } else {
        throw std::invalid_argument("family admits no nontrivial automorphism");
    }
    // verify against the simple-root permutation
    for (int i = 0; i < rs.rank; ++i)
        if (t.apply(rs.simple[static_cast<size_t>(i)]) !=
            rs.simple[static_cast<size_t>(tau[static_cast<size_t>(i)])])
            throw std::logic_error("weight matrix does not realize tau");
    return t;
}

std::vector<std::vector<int>> enumerate_taus(const RootSystem& rs,
                                             const std::vector<int>& piL)
{
    WeightMap wl = weyl_operator(rs, piL);
    auto gram = rs.gram();
    const int n = rs.rank;

    // forced values on the Levi subset: tau(alpha) = -w_l(alpha)
    std::vector<int> forced(static_cast<size_t>(n), -1);
    for (int i : piL) {
        Weight img = RootSystem::neg(
            wl.apply(rs.simple[static_cast<size_t>(i)]));
        int j = -1;
        for (int k : piL)
            if (rs.simple[static_cast<size_t>(k)] == img)
                j = k;
        if (j < 0)
            throw std::logic_error("-w_l does not permute the Levi subset");
        forced[static_cast<size_t>(i)] = j;
    }

    std::vector<std::vector<int>> result;
    std::vector<int> perm(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);

    auto compatible = [&](int i, int j) {
        if (rs.simple_parity[static_cast<size_t>(i)] !=
            rs.simple_parity[static_cast<size_t>(j)])
            return false;
        if (gram[static_cast<size_t>(i)][static_cast<size_t>(i)] !=
            gram[static_cast<size_t>(j)][static_cast<size_t>(j)])
            return false;
        for (int k = 0; k < n; ++k) {
            if (perm[static_cast<size_t>(k)] < 0)
                continue;
            if (gram[static_cast<size_t>(i)][static_cast<size_t>(k)] !=
                gram[static_cast<size_t>(j)]
                    [static_cast<size_t>(perm[static_cast<size_t>(k)])])
                return false;
        }
        return true;
    };

    std::function<void(int)> search = [&](int i) {
        if (i == n) {
            // involutive already enforced; require a realizable weight matrix
            try {
                WeightMap t = tau_weight_matrix(rs, perm);
                (void)t;
            } catch (const std::invalid_argument&) {
                return;
            }
            result.push_back(perm);
            return;
        }
        if (perm[static_cast<size_t>(i)] >= 0) {
            search(i + 1);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<size_t>(j)])
                continue;
            if (forced[static_cast<size_t>(i)] >= 0 &&
                forced[static_cast<size_t>(i)] != j)
                continue;
            // involution: pairing i<->j forces j<->i
            if (perm[static_cast<size_t>(j)] >= 0 &&
                perm[static_cast<size_t>(j)] != i)
                continue;
            if (forced[static_cast<size_t>(j)] >= 0 &&
                forced[static_cast<size_t>(j)] != i)
                continue;
            if (!compatible(i, j))
                continue;
            if (j != i && !compatible(j, i))
                continue;
            perm[static_cast<size_t>(i)] = j;
            used[static_cast<size_t>(j)] = true;
            bool paired = (j != i && perm[static_cast<size_t>(j)] < 0);
            if (paired) {
                perm[static_cast<size_t>(j)] = i;
                used[static_cast<size_t>(i)] = true;
            }
            search(i + 1);
            if (paired) {
                perm[static_cast<size_t>(j)] = -1;
                used[static_cast<size_t>(i)] = false;
            }
            perm[static_cast<size_t>(i)] = -1;
            used[static_cast<size_t>(j)] = false;
        }
    };
    search(0);
    std::sort(result.begin(), result.end());
    return result;
}

Weight tilde_root(const RootSystem& rs, const Decorated& d, int alpha)
{
    if (std::binary_search(d.piL.begin(), d.piL.end(), alpha))
        throw std::invalid_argument("tilde root is defined on the complement");
    WeightMap wl = weyl_operator(rs, d.piL);
    WeightMap t = tau_weight_matrix(rs, d.tau);
    return wl.apply(
        rs.simple[static_cast<size_t>(d.tau[static_cast<size_t>(alpha)])]);
}

WeightMap theta_map(const RootSystem& rs, const Decorated& d)
{
    WeightMap wl = weyl_operator(rs, d.piL);
    WeightMap t = tau_weight_matrix(rs, d.tau);
    return wl.compose(t).negated();
}

Report check_pseudo_symmetric(const RootSystem& rs, const Decorated& d)
{
    Report r = make_report("pseudo-symmetric",
                           {{"family", family_name(rs.family)},
                            {"bn", std::to_string(rs.bn)},
                            {"bm", std::to_string(rs.bm)}});
    WeightMap wl = weyl_operator(rs, d.piL);
    WeightMap t = tau_weight_matrix(rs, d.tau);
    auto tilde = [&](int i) {
        return wl.apply(
            rs.simple[static_cast<size_t>(d.tau[static_cast<size_t>(i)])]);
    };
    auto comp = d.piL_complement(rs.rank);
    for (int mu : comp) {
        Weight sum = RootSystem::add(rs.simple[static_cast<size_t>(mu)],
                                     tilde(mu));
        for (int a : d.piL)
            if (rs.pair(sum, rs.simple[static_cast<size_t>(a)]) != 0) {
                r.status = Status::Fail;
                r.witness = "(mu + mu~, alpha) != 0 at mu=" +
                            std::to_string(mu + 1) + " alpha=" +
                            std::to_string(a + 1);
                return r;
            }
        for (int nu : comp) {
            Weight diff = RootSystem::sub(rs.simple[static_cast<size_t>(nu)],
                                          tilde(nu));
            if (rs.pair(sum, diff) != 0) {
                r.status = Status::Fail;
                r.witness = "(mu + mu~, nu - nu~) != 0 at mu=" +
                            std::to_string(mu + 1) + " nu=" +
                            std::to_string(nu + 1);
                return r;
            }
        }
    }
    return r;
}

bool is_pseudo_symmetric(const RootSystem& rs, const Decorated& d)
{
    return check_pseudo_symmetric(rs, d).status == Status::Pass;
}

SelectionMatch violates_selection_rules(const RootSystem& rs,
                                        const Decorated& d)
{
    auto gram = rs.gram();
    const int n = rs.rank;
    auto in_levi = [&](int i) {
        return std::binary_search(d.piL.begin(), d.piL.end(), i);
    };
    auto adj = [&](int i, int j) {
        return i != j &&
               gram[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0;
    };
    auto even = [&](int i) {
        return rs.simple_parity[static_cast<size_t>(i)] == 0;
    };
    auto grey = [&](int i) {
        return rs.simple_parity[static_cast<size_t>(i)] == 1 &&
               gram[static_cast<size_t>(i)][static_cast<size_t>(i)] == 0;
    };
    auto fixed = [&](int i) { return d.tau[static_cast<size_t>(i)] == i; };
    auto levi_components = diagram_components(rs, d.piL);

    // rank-one selection rule: beta white even tau-fixed whose attached Levi
    // part is a single even node
    for (int b = 0; b < n; ++b) {
        if (in_levi(b) || !fixed(b) || !even(b))
            continue;
        std::vector<int> attached;
        for (const auto& comp : levi_components)
            for (int a : comp)
                if (adj(a, b)) {
                    attached.insert(attached.end(), comp.begin(), comp.end());
                    break;
                }
        if (attached.size() == 1 && even(attached[0]))
            return {true, "rank-one", {attached[0], b}};
    }

    // isolated grey node: beta grey tau-fixed, no Levi neighbour, adjacent
    // to some other white node
    for (int b = 0; b < n; ++b) {
        if (in_levi(b) || !fixed(b) || !grey(b))
            continue;
        bool levi_neighbor = false;
        for (int a : d.piL)
            if (adj(a, b))
                levi_neighbor = true;
        if (levi_neighbor)
            continue;
        for (int a = 0; a < n; ++a)
            if (!in_levi(a) && adj(a, b))
                return {true, "isolated-odd", {a, b}};
    }

    // four-node chain: black even - white odd - black even - white even
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int s = 0; s < n; ++s) {
                    if (a == b || a == c || a == s || b == c || b == s ||
                        c == s)
                        continue;
                    if (!in_levi(a) || !even(a))
                        continue;
                    if (in_levi(b) || even(b) || !fixed(b))
                        continue;
                    if (!in_levi(c) || !even(c))
                        continue;
                    if (in_levi(s) || !even(s) || !fixed(s))
                        continue;
                    if (adj(a, b) && adj(b, c) && adj(c, s))
                        return {true, "four-node", {a, b, c, s}};
                }

    // even-orthogonal tail patterns
    if (rs.family == Family::OSPeven) {
        int t1 = n - 2, t2 = n - 1;  // fork roots
        bool tails_even = even(t1) && even(t2);
        // base - odd - base' - fork with both tips white and tau-arc
        if (tails_even && !in_levi(t1) && !in_levi(t2) &&
            d.tau[static_cast<size_t>(t1)] == t2) {
            for (int c = 0; c < n - 2; ++c) {
                if (!in_levi(c) || !even(c) || !(adj(c, t1) && adj(c, t2)))
                    continue;
                for (int b = 0; b < n - 2; ++b) {
                    if (in_levi(b) || even(b) || !fixed(b) || !adj(b, c))
                        continue;
                    for (int a = 0; a < n - 2; ++a)
                        if (a != c && in_levi(a) && even(a) && adj(a, b))
                            return {true, "fork-tail", {a, b, c, t1, t2}};
                }
            }
        }
        // odd fork base with one white and one black even tip
        if (tails_even) {
            for (int tip_white : {t1, t2}) {
                int tip_black = (tip_white == t1) ? t2 : t1;
                if (in_levi(tip_white) || !in_levi(tip_black))
                    continue;
                if (!fixed(tip_white))
                    continue;
                for (int b = 0; b < n - 2; ++b) {
                    if (in_levi(b) || even(b) || !fixed(b))
                        continue;
                    if (!(adj(b, tip_white) && adj(b, tip_black)))
                        continue;
                    for (int a = 0; a < n - 2; ++a)
                        if (in_levi(a) && even(a) && adj(a, b))
                            return {true,
                                    "fork-tail",
                                    {a, b, tip_white, tip_black}};
                }
            }
        }
    }
    return {};
}

namespace {

bool is_suffix_range(const std::vector<int>& piL, int from0, int rank)
{
    // piL == {from0, ..., rank-1} (0-based)
    if (static_cast<int>(piL.size()) != rank - from0)
        return false;
    for (size_t k = 0; k < piL.size(); ++k)
        if (piL[k] != from0 + static_cast<int>(k))
            return false;
    return true;
}

/* A-form Levi {m+1..n} (1-based); returns m or -1. */
int match_suffix_form(const std::vector<int>& piL, int rank)
{
    if (piL.empty())
        return rank;
    if (is_suffix_range(piL, piL[0], rank))
        return piL[0];
    return -1;
}

/* B-form Levi {1,3,...,m-1} u {m+1..n} (1-based) with even m; returns m. */
int match_alternating_form(const std::vector<int>& piL, int rank)
{
    // split: leading even 0-based indices 0,2,4,...,m-2; then suffix from m
    size_t k = 0;
    while (k < piL.size() && piL[k] == static_cast<int>(2 * k))
        ++k;
    if (k == 0)
        return -1;
    int m = 2 * static_cast<int>(k);  // 1-based m
    std::vector<int> rest(piL.begin() + static_cast<long>(k), piL.end());
    if (rest.empty())
        return m == rank ? m : -1;
    if (rest[0] == m && is_suffix_range(rest, m, rank))
        return m;
    return -1;
}

bool tau_is_reversal(const std::vector<int>& tau)
{
    int n = static_cast<int>(tau.size());
    for (int i = 0; i < n; ++i)
        if (tau[static_cast<size_t>(i)] != n - 1 - i)
            return false;
    return true;
}

bool tau_is_fork_flip(const std::vector<int>& tau)
{
    int n = static_cast<int>(tau.size());
    if (n < 2)
        return false;
    for (int i = 0; i < n - 2; ++i)
        if (tau[static_cast<size_t>(i)] != i)
            return false;
    return tau[static_cast<size_t>(n - 2)] == n - 1 &&
           tau[static_cast<size_t>(n - 1)] == n - 2;
}

/* {1,3,5,...,n-2} 1-based for odd rank n */
bool is_full_odd_alternation(const std::vector<int>& piL, int rank)
{
    if (rank % 2 == 0)
        return false;
    std::vector<int> expect;
    for (int i = 0; i + 2 < rank; i += 2)
        expect.push_back(i);
    return piL == expect;
}

/* black-tail Levi: whites at 1..bm, alternating blacks at bm+1, bm+3, ...,
 * m-1, then all of m+1..n (1-based); returns the 1-based m or -1. */
int match_black_tail(const RootSystem& rs, const std::vector<int>& piL)
{
    const int n = rs.rank;
    const int bm = rs.bm;
    size_t k = 0;
    while (k < piL.size() && piL[k] == bm + 2 * static_cast<int>(k))
        ++k;
    if (k == 0)
        return -1;
    int m = bm + 2 * static_cast<int>(k);  // 1-based rightmost white
    std::vector<int> rest(piL.begin() + static_cast<long>(k), piL.end());
    if (rest.empty() || rest[0] != m)
        return -1;
    if (!is_suffix_range(rest, m, n))
        return -1;
    return m;
}

}  // namespace

std::string classify_family(const RootSystem& rs, const Decorated& d)
{
    const int n = rs.rank;
    bool id = d.tau_is_id();
    int mA = match_suffix_form(d.piL, n);
    int mB = match_alternating_form(d.piL, n);

    switch (rs.family) {
    case Family::GL:
        if (tau_is_reversal(d.tau)) {
            // symmetric middle block {m+1..n-m} or empty
            if (d.piL.empty())
                return "GL-I";
            int from = d.piL[0];
            if (is_suffix_range(d.piL, from, n - from) &&
                d.piL.back() == n - 1 - from)
                return "GL-I";
            return "unmatched";
        }
        if (id)
            return "GL-II";
        return "unmatched";
    case Family::SPO:
        if (!id)
            return "unmatched";
        if (mA > 0 && mA < n)
            return "SPO-I";
        if (mB > 0 && mB < n)
            return "SPO-I";
        break;
    case Family::OSPodd:
        if (!id)
            return "unmatched";
        if (mA > 0)
            return "OSP-I-odd";
        if (mB > 0)
            return "OSP-I-odd";
        break;
    case Family::OSPeven: {
        bool flip = tau_is_fork_flip(d.tau);
        if (flip && d.piL.empty())
            return "OSP-I-fork-flip";
        if (flip && is_full_odd_alternation(d.piL, n))
            return "C-I";
        if (id && is_full_odd_alternation(d.piL, n) && rs.bn == 1)
            return "C-II";
        if (id && (mA > 0 && mA <= n - 2))
            return rs.bn == 1 ? "OSP-I-even-fork" : "OSP-I-even";
        if (id && mB > 0 && mB <= n - 2)
            return rs.bn == 1 ? "OSP-I-even-fork" : "OSP-I-even";
        break;
    }
    }

    // type II tails for the orthosymplectic families
    if (rs.family != Family::GL) {
        auto in_levi = [&](int i) {
            return std::binary_search(d.piL.begin(), d.piL.end(), i);
        };
        bool flip = tau_is_fork_flip(d.tau);
        std::vector<int> expect_white;  // {1,3,...} 1-based below bm
        for (int i = 0; i + 1 < rs.bm; i += 2)
            expect_white.push_back(i);
        if (rs.family == Family::OSPeven) {
            bool b1 = in_levi(n - 2), b2 = in_levi(n - 1);
            if (id && (b1 ^ b2)) {
                // single black fork tip, nothing else black
                if (d.piL.size() == 1)
                    return "OSP-II-half-tail";
            }
            if (!b1 && !b2 && d.piL == expect_white) {
                if (id)
                    return "OSP-II-white-tail";
                if (flip)
                    return "OSP-II-white-tail-flip";
            }
            if (b1 && b2 && id) {
                int m = match_black_tail(rs, d.piL);
                if (m > 0)
                    return "OSP-II-black-tail";
            }
        } else {
            bool tail_black = in_levi(n - 1);
            if (id && !tail_black && d.piL == expect_white)
                return "OSP-II-white-tail";
            if (id && tail_black) {
                int m = match_black_tail(rs, d.piL);
                if (m > 0)
                    return "OSP-II-black-tail";
            }
        }
    }
    return "unmatched";
}

bool family_is_type_II(const std::string& family)
{
    return family == "GL-II" || family == "C-II" ||
           family.rfind("OSP-II", 0) == 0 || family.rfind("SPO-II", 0) == 0;
}

std::vector<Classified> enumerate_satake(const RootSystem& rs)
{
    std::vector<Classified> out;
    for (const auto& piL : enumerate_admissible(rs)) {
        if (static_cast<int>(piL.size()) == rs.rank)
            continue;  // no mixed generators: the pair is not decorated
        for (const auto& tau : enumerate_taus(rs, piL)) {
            Decorated d{piL, tau};
            if (!is_pseudo_symmetric(rs, d))
                continue;
            if (violates_selection_rules(rs, d).violates)
                continue;
            Classified c;
            c.d = d;
            c.family = classify_family(rs, d);
            c.type_II = family_is_type_II(c.family);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::string render_diagram(const RootSystem& rs, const Decorated& d)
{
    const int n = rs.rank;
    auto in_levi = [&](int i) {
        return std::binary_search(d.piL.begin(), d.piL.end(), i);
    };
    auto node = [&](int i) {
        std::string c = in_levi(i) ? "*" : "o";
        return rs.simple_parity[static_cast<size_t>(i)] ? "[" + c + "]" : c;
    };
    std::string s;
    int chain_end = n;  // nodes joined linearly up to chain_end-1
    std::string tail;
    switch (rs.family) {
    case Family::OSPodd:
        chain_end = n - 1;
        tail = " => " + node(n - 1);
        break;
    case Family::SPO:
        chain_end = n - 1;
        tail = " <= " + node(n - 1);
        break;
    case Family::OSPeven:
        chain_end = n - 2;
        tail = " -< (" + node(n - 2) + "," + node(n - 1) + ")";
        break;
    case Family::GL: break;
    }
    for (int i = 0; i < chain_end; ++i) {
        if (i)
            s += "-";
        s += node(i);
    }
    s += tail;
    std::string arcs;
    for (int i = 0; i < n; ++i)
        if (d.tau[static_cast<size_t>(i)] > i)
            arcs += "(" + std::to_string(i + 1) + " " +
                    std::to_string(d.tau[static_cast<size_t>(i)] + 1) + ")";
    if (!arcs.empty())
        s += " tau:" + arcs;
    return s;
}

nlohmann::json satake_to_json(const RootSystem& rs, const Classified& c)
{
    nlohmann::json j;
    nlohmann::json piL = nlohmann::json::array();
    for (int i : c.d.piL)
        piL.push_back(i + 1);
    nlohmann::json tau = nlohmann::json::array();
    for (int v : c.d.tau)
        tau.push_back(v + 1);
    j["piL"] = piL;
    j["tau"] = tau;
    j["type"] = c.type_II ? "II" : "I";
    j["family"] = c.family;
    j["ascii"] = render_diagram(rs, c.d);
    return j;
}

}  // namespace qsp
