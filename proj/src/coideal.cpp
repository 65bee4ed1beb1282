#include "qsp/coideal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qsp {

RootedOp q_commutator(const RootSystem& rs, const RootedOp& x,
                      const RootedOp& y, int mode)
{
    int i = std::abs(mode);
    if (i > 2)
        throw std::invalid_argument("q-commutator level must be 0, 1 or 2");
    int ceil_half = (i + 1) / 2;  // 0, 1, 1
    long pairing = rs.pair(x.root, y.root);
    int expo = -((mode < 0) ? -1 : 1) * ceil_half * static_cast<int>(pairing);
    Scalar coeff = Scalar::q_pow(expo);
    if ((x.parity * y.parity) % 2)
        coeff = -coeff;
    RootedOp r;
    r.op = Op1(x.op.g, x.op.mat * y.op.mat - (y.op.mat * x.op.mat).scaled(coeff));
    r.root = RootSystem::add(x.root, y.root);
    r.parity = (x.parity + y.parity) % 2;
    return r;
}

RootedOp simple_F(const Representation& rep, int beta)
{
    RootedOp r;
    r.op = Op1(rep.g,
               rep.cartan_h(beta).mat * rep.F[static_cast<size_t>(beta)].mat);
    r.root = RootSystem::neg(rep.rs.simple[static_cast<size_t>(beta)]);
    r.parity = rep.rs.simple_parity[static_cast<size_t>(beta)];
    return r;
}

Decorated diagram_for_kind(const RootSystem& rs, KKind kind, int m)
{
    const int n = rs.rank;
    Decorated d;
    d.tau.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        d.tau[static_cast<size_t>(i)] = i;
    auto reversal = [&]() {
        for (int i = 0; i < n; ++i)
            d.tau[static_cast<size_t>(i)] = n - 1 - i;
    };
    auto fork_flip = [&]() {
        d.tau[static_cast<size_t>(n - 2)] = n - 1;
        d.tau[static_cast<size_t>(n - 1)] = n - 2;
    };
    switch (kind) {
    case KKind::AGL:
        for (int i = m; i < n - m; ++i)
            d.piL.push_back(i);
        reversal();
        return d;
    case KKind::A:
        if (rs.family == Family::OSPeven && m == n - 1) {
            fork_flip();
            return d;
        }
        for (int i = m; i < n; ++i)
            d.piL.push_back(i);
        return d;
    case KKind::B:
        if (rs.family == Family::OSPeven && m == n - 1) {
            for (int i = 0; i + 2 < n; i += 2)
                d.piL.push_back(i);
            fork_flip();
            return d;
        }
        for (int i = 0; i + 1 < m; i += 2)
            d.piL.push_back(i);
        for (int i = m; i < n; ++i)
            d.piL.push_back(i);
        return d;
    case KKind::C:
        for (int i = 0; i + 2 < n; i += 2)
            d.piL.push_back(i);
        return d;
    default:
        throw std::invalid_argument(
            "no catalogued diagram for this K-matrix kind");
    }
}

namespace {

/* left-nested product [..[F_{seq0}, F_{seq1}]_{mode1}, F_{seq2}]_{mode2}... */
RootedOp nest(const Representation& rep, const std::vector<int>& seq,
              const std::vector<int>& modes)
{
    RootedOp acc = simple_F(rep, seq[0]);
    for (size_t k = 1; k < seq.size(); ++k)
        acc = q_commutator(rep.rs, acc, simple_F(rep, seq[static_cast<size_t>(k)]),
                           modes[k - 1]);
    return acc;
}

}  // namespace

RootedOp composite_F(const Representation& rep, const Decorated& d, KKind kind,
                     int m, int alpha)
{
    const RootSystem& rs = rep.rs;
    const int n = rs.rank;
    Weight tilde = tilde_root(rs, d, alpha);
    auto coords = rs.simple_coords(tilde);
    if (!coords || !rs.is_positive_root(tilde))
        throw std::invalid_argument("tilde root is not a positive root");
    // simple alpha~: F = q^h f directly
    {
        int total = 0, which = -1;
        for (int i = 0; i < n; ++i) {
            total += std::abs((*coords)[static_cast<size_t>(i)]);
            if ((*coords)[static_cast<size_t>(i)] != 0)
                which = i;
        }
        if (total == 1)
            return simple_F(rep, which);
    }

    const int a1 = alpha + 1;  // 1-based position
    std::vector<int> seq;
    std::vector<int> modes;
    auto push = [&](int idx1, int mode) {
        seq.push_back(idx1 - 1);
        if (seq.size() > 1)
            modes.push_back(mode);
    };

    if (kind == KKind::AGL) {
        if (a1 == m) {
            // ascending m+1 .. n-m+1 with +q
            for (int l = m + 1; l <= n - m + 1; ++l)
                push(l, +1);
        } else if (a1 == n - m + 1) {
            // ascending m .. n-m with -q (inverse deformation)
            for (int l = m; l <= n - m; ++l)
                push(l, -1);
        } else {
            throw std::invalid_argument("uncatalogued general-linear case");
        }
    } else if (kind == KKind::A) {
        if (a1 != m)
            throw std::invalid_argument("A-type composite exists only at m");
        switch (rs.family) {
        case Family::OSPodd:
            if (m < n - 1) {
                for (int l = m; l <= n; ++l)
                    push(l, +1);
                push(n, 0);
                for (int l = n - 1; l >= m + 1; --l)
                    push(l, +1);
            } else if (m == n - 1) {
                push(n - 1, +1);
                push(n, +1);
                push(n, 0);
            } else {
                throw std::invalid_argument("uncatalogued odd-orthogonal case");
            }
            break;
        case Family::OSPeven:
            if (m < n - 2) {
                for (int l = m; l <= n; ++l)
                    push(l, +1);
                for (int l = n - 2; l >= m + 1; --l)
                    push(l, +1);
            } else if (m == n - 2) {
                push(n - 2, +1);
                push(n - 1, +1);
                push(n, +1);
            } else {
                throw std::invalid_argument("uncatalogued even-orthogonal case");
            }
            break;
        case Family::SPO:
            if (m < n - 1) {
                for (int l = m; l <= n - 1; ++l)
                    push(l, +1);
                push(n, +2);
                for (int l = n - 1; l >= m + 1; --l)
                    push(l, +1);
            } else if (m == n - 1) {
                push(n - 1, +1);
                push(n, +2);
            } else {
                throw std::invalid_argument("uncatalogued symplectic case");
            }
            break;
        default:
            throw std::invalid_argument("A-type is orthosymplectic");
        }
    } else if (kind == KKind::B || kind == KKind::C) {
        bool even_pair = (a1 % 2 == 0) && a1 < ((kind == KKind::B) ? m : n - 1);
        if (even_pair) {
            // F_{alpha~_{2i}} = [[F_{2i}, F_{2i+1}]_q, F_{2i-1}]_q
            push(a1, +1);
            push(a1 + 1, +1);
            push(a1 - 1, +1);
        } else if (kind == KKind::C || (rs.family == Family::OSPeven && m == n - 1)) {
            if (a1 == n) {
                push(n, +1);
                push(n - 2, +1);
            } else if (a1 == n - 1) {
                push(n - 1, +1);
                push(n - 2, +1);
            } else {
                throw std::invalid_argument("uncatalogued fork case");
            }
        } else if (a1 == m) {
            switch (rs.family) {
            case Family::OSPodd:
                if (m < n) {
                    for (int l = m; l <= n; ++l)
                        push(l, +1);
                    push(n, 0);
                    for (int l = n - 1; l >= m + 1; --l)
                        push(l, +1);
                    push(m - 1, +1);
                } else {
                    push(n - 1, -1);
                    push(n, -1);
                }
                break;
            case Family::OSPeven:
                for (int l = m; l <= n; ++l)
                    push(l, +1);
                for (int l = n - 2; l >= m + 1; --l)
                    push(l, +1);
                push(m - 1, +1);
                break;
            case Family::SPO:
                if (m < n - 1) {
                    for (int l = m; l <= n - 1; ++l)
                        push(l, +1);
                    push(n, +2);
                    for (int l = n - 1; l >= m + 1; --l)
                        push(l, +1);
                    push(m - 1, +1);
                } else {
                    push(n - 1, +1);
                    push(n, +2);
                    push(n - 2, +1);
                }
                break;
            default:
                throw std::invalid_argument("B-type is orthosymplectic");
            }
        } else {
            throw std::invalid_argument("uncatalogued composite root");
        }
    } else {
        throw std::invalid_argument("no composite catalogue for this kind");
    }

    RootedOp out = nest(rep, seq, modes);
    if (!(out.root == RootSystem::neg(tilde)))
        throw std::logic_error("catalogued word has the wrong weight");
    return out;
}

bool grave_term_eligible(const RootSystem& rs, const Decorated& d, int alpha)
{
    if (rs.simple_parity[static_cast<size_t>(alpha)] != 0)
        return false;
    if (d.tau[static_cast<size_t>(alpha)] != alpha)
        return false;
    for (int a : d.piL)
        if (rs.pair(rs.simple[static_cast<size_t>(alpha)],
                    rs.simple[static_cast<size_t>(a)]) != 0)
            return false;
    return tilde_root(rs, d, alpha) == rs.simple[static_cast<size_t>(alpha)];
}

namespace {

Mat commutator(const Mat& k, const Mat& x) { return k * x - x * k; }

Op1 cartan_difference(const Representation& rep, const Decorated& d, int alpha,
                      int sign)
{
    Weight tilde = tilde_root(rep.rs, d, alpha);
    auto tc = rep.rs.simple_coords(tilde);
    if (!tc)
        throw std::logic_error("tilde root outside the root lattice");
    std::vector<int> diff = *tc;
    diff[static_cast<size_t>(alpha)] -= 1;
    return rep.cartan(rep.exps_of_coords(diff), sign);
}

}  // namespace

Op1 mixed_generator(const Representation& rep, const Decorated& d, KKind kind,
                    int m, int alpha, const Scalar& c, const Scalar& c_grave)
{
    Mat x = cartan_difference(rep, d, alpha, 1).mat *
            rep.E[static_cast<size_t>(alpha)].mat;
    RootedOp F = composite_F(rep, d, kind, m, alpha);
    x = x + F.op.mat.scaled(c);
    if (grave_term_eligible(rep.rs, d, alpha) && !c_grave.is_zero()) {
        Mat u = rep.cartan_h(alpha).mat - Mat::identity(rep.g.dim);
        x = x + u.scaled(c_grave);
    }
    return Op1(rep.g, std::move(x));
}

std::map<int, MixtureSolution> solve_mixture(const Representation& rep,
                                             const Decorated& d,
                                             const KBuild& kb, KKind kind,
                                             int m)
{
    const RootSystem& rs = rep.rs;
    const Mat& K = kb.K.mat;
    std::map<int, MixtureSolution> out;

    auto precondition_fail = [&](const std::string& what) {
        std::map<int, MixtureSolution> bad;
        MixtureSolution s;
        s.status = Status::PreconditionFail;
        s.detail = what;
        bad[-1] = s;
        return bad;
    };

    for (int mu : d.piL) {
        if (!commutator(K, rep.E[static_cast<size_t>(mu)].mat).is_zero())
            return precondition_fail("[K, e_mu] != 0 at mu=" +
                                     std::to_string(mu + 1));
        if (!commutator(K, rep.F[static_cast<size_t>(mu)].mat).is_zero())
            return precondition_fail("[K, f_mu] != 0 at mu=" +
                                     std::to_string(mu + 1));
        if (!commutator(K, rep.cartan_h(mu).mat).is_zero())
            return precondition_fail("[K, q^{h_mu}] != 0 at mu=" +
                                     std::to_string(mu + 1));
    }
    for (int alpha : d.piL_complement(rs.rank)) {
        if (!commutator(K, cartan_difference(rep, d, alpha, 1).mat).is_zero())
            return precondition_fail(
                "[K, q^{h_alpha~ - h_alpha}] != 0 at alpha=" +
                std::to_string(alpha + 1));
    }

    for (int alpha : d.piL_complement(rs.rank)) {
        MixtureSolution sol;
        sol.has_grave_term = grave_term_eligible(rs, d, alpha);
        Mat a0 = commutator(K, cartan_difference(rep, d, alpha, 1).mat *
                                   rep.E[static_cast<size_t>(alpha)].mat);
        Mat a1;
        try {
            a1 = commutator(K, composite_F(rep, d, kind, m, alpha).op.mat);
        } catch (const std::invalid_argument& e) {
            sol.status = Status::Fail;
            sol.detail = e.what();
            out[alpha] = sol;
            continue;
        }
        Mat a2(rep.g.dim);
        if (sol.has_grave_term)
            a2 = commutator(K, rep.cartan_h(alpha).mat);

        // collect the linear system rows (a0 + c a1 + cg a2 = 0)
        std::map<std::pair<int, int>, std::array<Scalar, 3>> eqs;
        for (const auto& [rc, v] : a0.a)
            eqs[rc][0] = v;
        for (const auto& [rc, v] : a1.a)
            eqs[rc][1] = v;
        for (const auto& [rc, v] : a2.a)
            eqs[rc][2] = v;

        // eliminate: find c (and cg) satisfying all equations
        bool use_grave = sol.has_grave_term;
        std::optional<Scalar> c, cg;
        bool inconsistent = false;
        // pick a pivot equation with a1 != 0 (and one more for cg)
        if (!use_grave) {
            for (const auto& [rc, row] : eqs) {
                if (!row[1].is_zero()) {
                    Scalar cand = -(row[0] / row[1]);
                    if (c && !(*c == cand))
                        inconsistent = true;
                    c = cand;
                } else if (!row[0].is_zero()) {
                    inconsistent = true;
                }
            }
            if (!c && !eqs.empty())
                sol.status = Status::NonUnique;
            if (!c && eqs.empty())
                sol.status = Status::NonUnique;  // scalar K: anything works
        } else {
            // two unknowns: gaussian elimination on the 2-column system
            std::vector<std::array<Scalar, 3>> sys;
            for (const auto& [rc, row] : eqs)
                sys.push_back(row);
            // find two independent rows
            int p1 = -1, p2 = -1;
            for (size_t i = 0; i < sys.size(); ++i) {
                if (!sys[i][1].is_zero() || !sys[i][2].is_zero()) {
                    p1 = static_cast<int>(i);
                    break;
                }
            }
            if (p1 >= 0) {
                for (size_t i = static_cast<size_t>(p1) + 1; i < sys.size();
                     ++i) {
                    Scalar det = sys[static_cast<size_t>(p1)][1] * sys[i][2] -
                                 sys[static_cast<size_t>(p1)][2] * sys[i][1];
                    if (!det.is_zero()) {
                        p2 = static_cast<int>(i);
                        break;
                    }
                }
            }
            if (p1 >= 0 && p2 >= 0) {
                const auto& r1 = sys[static_cast<size_t>(p1)];
                const auto& r2 = sys[static_cast<size_t>(p2)];
                Scalar det = r1[1] * r2[2] - r1[2] * r2[1];
                Scalar cc = (r1[2] * r2[0] - r2[2] * r1[0]) / det;
                Scalar gg = (r2[1] * r1[0] - r1[1] * r2[0]) / det;
                c = cc;
                cg = gg;
                for (const auto& row : sys)
                    if (!(row[0] + row[1] * (*c) + row[2] * (*cg)).is_zero())
                        inconsistent = true;
            } else {
                sol.status = Status::NonUnique;
            }
        }
        if (inconsistent) {
            sol.status = Status::Fail;
            sol.detail = "no commutant-compatible mixture";
        } else if (c) {
            sol.c = c;
            if (use_grave)
                sol.c_grave = cg;
            // verify exactly
            Scalar cval = *c;
            Scalar gval = cg ? *cg : Scalar();
            Op1 X = mixed_generator(rep, d, kind, m, alpha, cval, gval);
            if (!commutator(K, X.mat).is_zero()) {
                sol.status = Status::Fail;
                sol.detail = "solution fails exact recheck";
            }
        }
        out[alpha] = sol;
    }
    return out;
}

Report check_commutant(const Representation& rep, const CoidealGenerators& gens,
                       const KBuild& kb)
{
    const RootSystem& rs = rep.rs;
    Report r = make_report("commutant",
                           {{"family", family_name(rs.family)},
                            {"bn", std::to_string(rs.bn)},
                            {"bm", std::to_string(rs.bm)},
                            {"kind", kkind_name(gens.kind)},
                            {"block", std::to_string(gens.m)}});
    const Mat& K = kb.K.mat;
    auto fail = [&](const std::string& what, const Mat& comm) {
        r.status = Status::Fail;
        auto it = comm.a.begin();
        r.witness = what + " entry (" + std::to_string(it->first.first + 1) +
                    "," + std::to_string(it->first.second + 1) +
                    "): " + it->second.str();
    };
    for (int mu : gens.d.piL) {
        for (const Mat* g :
             {&rep.E[static_cast<size_t>(mu)].mat,
              &rep.F[static_cast<size_t>(mu)].mat}) {
            Mat c = commutator(K, *g);
            if (!c.is_zero()) {
                fail("[K, Levi generator] != 0 at mu=" + std::to_string(mu + 1),
                     c);
                return r;
            }
        }
        for (int sgn : {1, -1}) {
            Mat c = commutator(K, rep.cartan_h(mu, sgn).mat);
            if (!c.is_zero()) {
                fail("[K, q^{h_mu}] != 0 at mu=" + std::to_string(mu + 1), c);
                return r;
            }
        }
    }
    for (int alpha : gens.d.piL_complement(rs.rank)) {
        for (int sgn : {1, -1}) {
            Mat c = commutator(
                K, cartan_difference(rep, gens.d, alpha, sgn).mat);
            if (!c.is_zero()) {
                fail("[K, q^{h_alpha~ - h_alpha}] != 0 at alpha=" +
                         std::to_string(alpha + 1),
                     c);
                return r;
            }
        }
        Scalar cg = gens.c_grave.count(alpha) ? gens.c_grave.at(alpha)
                                              : Scalar();
        Op1 X = mixed_generator(rep, gens.d, gens.kind, gens.m, alpha,
                                gens.c.at(alpha), cg);
        Mat c = commutator(K, X.mat);
        if (!c.is_zero()) {
            fail("[K, X_alpha] != 0 at alpha=" + std::to_string(alpha + 1), c);
            return r;
        }
    }
    return r;
}

}  // namespace qsp
