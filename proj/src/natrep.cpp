#include "qsp/natrep.hpp"

#include <stdexcept>

namespace qsp {

Op1 Representation::cartan(const std::vector<int>& exps, int sign) const
{
    Mat m(g.dim);
    for (int j = 0; j < g.dim; ++j)
        m.set(j, j, Scalar::q_pow(sign * exps[static_cast<size_t>(j)]));
    return Op1(g, std::move(m));
}

Op1 Representation::cartan_h(int i, int sign) const
{
    return cartan(h_exp[static_cast<size_t>(i)], sign);
}

std::vector<int> Representation::exps_of_coords(
    const std::vector<int>& coords) const
{
    std::vector<int> e(static_cast<size_t>(g.dim), 0);
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            for (int j = 0; j < g.dim; ++j)
                e[static_cast<size_t>(j)] +=
                    coords[i] * h_exp[i][static_cast<size_t>(j)];
    return e;
}

int Representation::two_s(int i) const
{
    long a = rs.pair(rs.simple[static_cast<size_t>(i)],
                     rs.simple[static_cast<size_t>(i)]);
    return a != 0 ? static_cast<int>(a) : 2;
}

namespace {

/* 1-based index conjugate */
int conj1(int p, int D) { return D + 1 - p; }

}  // namespace

Representation build_natural_rep(const RootSystem& rs)
{
    Representation rep;
    rep.rs = rs;
    rep.g = rs.grading();
    const int D = rs.dimV;
    const int bm = rs.bm;
    auto parity1 = [&](int p) {
        return rep.g.parity[static_cast<size_t>(p - 1)];
    };
    auto unit1 = [&](int r, int c, const Scalar& v) {
        return Mat::unit(D, r - 1, c - 1, v);
    };

    if (rs.family == Family::GL) {
        for (int i = 1; i <= D; ++i) {
            // q^{h_{zeta_i}}: the printed sum is read over all N+2m diagonal
            // positions; a shorter upper bound would make the image singular.
            std::vector<int> z(static_cast<size_t>(D), 0);
            z[static_cast<size_t>(i - 1)] = parity1(i) ? -1 : 1;
            rep.zeta_exp.push_back(std::move(z));
        }
        for (int i = 1; i <= rs.rank; ++i) {
            std::vector<int> h(static_cast<size_t>(D), 0);
            for (int j = 0; j < D; ++j)
                h[static_cast<size_t>(j)] =
                    rep.zeta_exp[static_cast<size_t>(i - 1)]
                                [static_cast<size_t>(j)] -
                    rep.zeta_exp[static_cast<size_t>(i)][static_cast<size_t>(j)];
            rep.h_exp.push_back(std::move(h));
            Mat e = unit1(i, i + 1, Scalar(1));
            Mat f = (i == bm) ? unit1(i + 1, i, Scalar(-1))
                              : unit1(i + 1, i, Scalar(1));
            rep.E.emplace_back(rep.g, std::move(e));
            rep.F.emplace_back(rep.g, std::move(f));
        }
        return rep;
    }

    const int n = rs.rank;  // bm + bn
    for (int i = 1; i <= n; ++i) {
        std::vector<int> h(static_cast<size_t>(D), 0);
        auto add_delta = [&](int p, int v) {
            h[static_cast<size_t>(p - 1)] += v;
        };
        bool last = (i == n);
        if (!last) {
            int si = parity1(i) ? -1 : 1;
            int si1 = parity1(i + 1) ? -1 : 1;
            add_delta(i, si);
            add_delta(conj1(i, D), -si);
            add_delta(i + 1, -si1);
            add_delta(conj1(i + 1, D), si1);
        } else if (rs.family == Family::OSPodd) {
            int si = parity1(i) ? -1 : 1;
            add_delta(i, si);
            add_delta(conj1(i, D), -si);
        } else if (rs.family == Family::SPO) {
            add_delta(i, 2);
            add_delta(conj1(i, D), -2);
        } else {  // OSPeven
            int si1 = parity1(i - 1) ? -1 : 1;
            int si = parity1(i) ? -1 : 1;
            add_delta(i - 1, si1);
            add_delta(conj1(i - 1, D), -si1);
            add_delta(i, si);
            add_delta(conj1(i, D), -si);
        }
        rep.h_exp.push_back(std::move(h));

        Mat e(D), f(D);
        auto mirror_pair = [&](int r, int c, const Scalar& first,
                               const Scalar& second) {
            // e gets first*e_{r,c} + second*e_{c',r'}; f the transposed pair
            e = unit1(r, c, first) + unit1(conj1(c, D), conj1(r, D), second);
            f = unit1(c, r, first) + unit1(conj1(r, D), conj1(c, D), second);
        };
        if (!last || rs.family == Family::OSPodd) {
            Scalar coeff = (i == bm) ? Scalar::q_pow(-1) : Scalar(1);
            int sgn = (parity1(i) * (parity1(i + 1) + 1)) % 2;
            Scalar second(sgn ? 1 : -1);
            mirror_pair(i, i + 1, coeff, second);
            if (i == bm) {
                // f_m is special: -q e_{m+1,m} + e_{m',(m+1)'}
                f = unit1(i + 1, i, Scalar(-1) * Scalar::q()) +
                    unit1(conj1(i, D), conj1(i + 1, D), Scalar(1));
            }
        } else if (rs.family == Family::SPO) {
            e = unit1(i, i + 1, Scalar(1));
            f = unit1(i + 1, i, Scalar(1));
        } else {  // OSPeven tail root
            Scalar coeff = (i - 1 == bm) ? Scalar::q_pow(-1) : Scalar(1);
            int sgn = parity1(i - 1) % 2;
            Scalar second(sgn ? 1 : -1);
            e = unit1(i - 1, i + 1, coeff) +
                unit1(conj1(i + 1, D), conj1(i - 1, D), second);
            f = unit1(i + 1, i - 1, coeff) +
                unit1(conj1(i - 1, D), conj1(i + 1, D), second);
            if (i - 1 == bm) {
                // osp(2|2m) override: f = -q e_{i+1,i-1} + e_{(i-1)',(i+1)'}
                f = unit1(i + 1, i - 1, Scalar(-1) * Scalar::q()) +
                    unit1(conj1(i - 1, D), conj1(i + 1, D), Scalar(1));
            }
        }
        rep.E.emplace_back(rep.g, std::move(e));
        rep.F.emplace_back(rep.g, std::move(f));
    }
    return rep;
}

namespace {

struct RelationChecker {
    const Representation& rep;
    Report& report;

    bool fail(const std::string& what)
    {
        report.status = Status::Fail;
        report.witness = what;
        return false;
    }

    bool check_cartan()
    {
        // (i): inverses and commutativity are structural for diagonal images;
        // verify the inverse identity exactly anyway.
        for (int i = 0; i < rep.rs.rank; ++i) {
            Mat prod = rep.cartan_h(i, 1).mat * rep.cartan_h(i, -1).mat;
            if (prod != Mat::identity(rep.g.dim))
                return fail("relation (i): q^h q^-h != 1 at i=" +
                            std::to_string(i + 1));
        }
        for (int i = 0; i < rep.rs.rank; ++i)
            for (int j = i + 1; j < rep.rs.rank; ++j) {
                Mat ab = rep.cartan_h(i).mat * rep.cartan_h(j).mat;
                Mat ba = rep.cartan_h(j).mat * rep.cartan_h(i).mat;
                if (ab != ba)
                    return fail("relation (i): Cartan images do not commute");
            }
        return true;
    }

    bool check_weights()
    {
        // (ii): q^{h_i} x q^{-h_i} = q^{±(alpha_i, alpha_j)} x
        for (int i = 0; i < rep.rs.rank; ++i) {
            const auto& hi = rep.h_exp[static_cast<size_t>(i)];
            for (int j = 0; j < rep.rs.rank; ++j) {
                long aij = rep.rs.pair(rep.rs.simple[static_cast<size_t>(i)],
                                       rep.rs.simple[static_cast<size_t>(j)]);
                for (int sgn : {+1, -1}) {
                    const Mat& x = (sgn > 0)
                                       ? rep.E[static_cast<size_t>(j)].mat
                                       : rep.F[static_cast<size_t>(j)].mat;
                    for (const auto& [rc, v] : x.a) {
                        int shift = hi[static_cast<size_t>(rc.first)] -
                                    hi[static_cast<size_t>(rc.second)];
                        if (shift != sgn * aij)
                            return fail(
                                "relation (ii) at i=" + std::to_string(i + 1) +
                                " j=" + std::to_string(j + 1) +
                                " entry (" + std::to_string(rc.first + 1) +
                                "," + std::to_string(rc.second + 1) + ")");
                    }
                }
            }
        }
        return true;
    }

    bool check_ef()
    {
        // (iv): [e_i, f_j] = delta_ij [h_i]_{q_{alpha_i}}
        for (int i = 0; i < rep.rs.rank; ++i)
            for (int j = 0; j < rep.rs.rank; ++j) {
                const Op1& ei = rep.E[static_cast<size_t>(i)];
                const Op1& fj = rep.F[static_cast<size_t>(j)];
                int pe = *ei.homogeneous_parity();
                int pf = *fj.homogeneous_parity();
                Mat comm = ei.mat * fj.mat;
                Mat fe = fj.mat * ei.mat;
                comm = (pe * pf) % 2 ? comm + fe : comm - fe;
                Mat rhs(rep.g.dim);
                if (i == j) {
                    int ts = rep.two_s(i);
                    const auto& hi = rep.h_exp[static_cast<size_t>(i)];
                    for (int d = 0; d < rep.g.dim; ++d)
                        rhs.set(d, d,
                                q_int_base(hi[static_cast<size_t>(d)], ts));
                }
                if (comm != rhs) {
                    auto w = Mat::first_difference(comm, rhs);
                    return fail("relation (iv) at i=" + std::to_string(i + 1) +
                                " j=" + std::to_string(j + 1) + " entry (" +
                                std::to_string(w->first + 1) + "," +
                                std::to_string(w->second + 1) + "): " +
                                comm.get(w->first, w->second).str() + " vs " +
                                rhs.get(w->first, w->second).str());
                }
            }
        return true;
    }

    bool check_serre()
    {
        // (v): (ad_{q'} e_{±i})^{v_ij} e_{±j} = 0 for i != j, q' in {q, q^-1}
        for (int i = 0; i < rep.rs.rank; ++i)
            for (int j = 0; j < rep.rs.rank; ++j) {
                if (i == j)
                    continue;
                long aii = rep.rs.pair(rep.rs.simple[static_cast<size_t>(i)],
                                       rep.rs.simple[static_cast<size_t>(i)]);
                long aij = rep.rs.pair(rep.rs.simple[static_cast<size_t>(i)],
                                       rep.rs.simple[static_cast<size_t>(j)]);
                long v;
                if (aii == 0)
                    v = (aij == 0) ? 1 : 2;
                else {
                    if ((2 * aij) % aii != 0)
                        return fail("serre exponent not integral");
                    v = 1 - 2 * aij / aii;
                }
                if (v < 1)
                    return fail("serre exponent not positive");
                for (int sgn : {+1, -1})
                    for (int qdir : {+1, -1}) {
                        if (!serre_one(i, j, static_cast<int>(v), sgn, qdir))
                            return false;
                    }
            }
        return true;
    }

    bool serre_one(int i, int j, int v, int sgn, int qdir)
    {
        const Mat& Ei = (sgn > 0) ? rep.E[static_cast<size_t>(i)].mat
                                  : rep.F[static_cast<size_t>(i)].mat;
        int pi = rep.rs.simple_parity[static_cast<size_t>(i)];
        int pj = rep.rs.simple_parity[static_cast<size_t>(j)];
        Mat x = (sgn > 0) ? rep.E[static_cast<size_t>(j)].mat
                          : rep.F[static_cast<size_t>(j)].mat;
        // weight bookkeeping in the eps/delta basis
        Weight wi = rep.rs.simple[static_cast<size_t>(i)];
        Weight wx = rep.rs.simple[static_cast<size_t>(j)];
        if (sgn < 0) {
            wi = RootSystem::neg(wi);
            wx = RootSystem::neg(wx);
        }
        int px = pj;
        for (int step = 0; step < v; ++step) {
            long expo = rep.rs.pair(wi, wx);
            Scalar coeff = Scalar::q_pow(qdir * static_cast<int>(expo));
            Mat right = x * Ei;
            Mat next = Ei * x;
            if ((pi * px) % 2)
                next = next + right.scaled(coeff);
            else
                next = next - right.scaled(coeff);
            x = std::move(next);
            wx = RootSystem::add(wx, wi);
            px = (px + pi) % 2;
        }
        if (!x.is_zero()) {
            auto it = x.a.begin();
            return fail("relation (v) at i=" + std::to_string(i + 1) +
                        " j=" + std::to_string(j + 1) + " sign=" +
                        (sgn > 0 ? std::string("+") : std::string("-")) +
                        " q'=" + (qdir > 0 ? "q" : "q^-1") + " entry (" +
                        std::to_string(it->first.first + 1) + "," +
                        std::to_string(it->first.second + 1) +
                        "): " + it->second.str());
        }
        return true;
    }
};

}  // namespace

Report check_defining_relations(const Representation& rep)
{
    Report r = make_report("relations",
                           {{"family", family_name(rep.rs.family)},
                            {"bn", std::to_string(rep.rs.bn)},
                            {"bm", std::to_string(rep.rs.bm)},
                            {"name", rep.rs.display_name()}});
    if (rep.rs.family == Family::GL)
        r.notes.push_back(
            "Cartan sum upper bound read as N+2m; the printed bound N leaves "
            "the image singular");
    // homogeneity of the images, used by (iv)
    for (int i = 0; i < rep.rs.rank; ++i) {
        auto pe = rep.E[static_cast<size_t>(i)].homogeneous_parity();
        auto pf = rep.F[static_cast<size_t>(i)].homogeneous_parity();
        if (!pe || !pf || *pe != rep.rs.simple_parity[static_cast<size_t>(i)] ||
            *pf != rep.rs.simple_parity[static_cast<size_t>(i)]) {
            r.status = Status::Fail;
            r.witness = "generator image not parity-homogeneous at i=" +
                        std::to_string(i + 1);
            return r;
        }
    }
    RelationChecker c{rep, r};
    if (!c.check_cartan())
        return r;
    if (!c.check_weights())
        return r;
    if (!c.check_ef())
        return r;
    if (!c.check_serre())
        return r;
    return r;
}

}  // namespace qsp
