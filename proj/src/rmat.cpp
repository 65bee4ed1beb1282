#include "qsp/rmat.hpp"

#include <stdexcept>

namespace qsp {

RhoKappa rho_kappa(const RootSystem& rs)
{
    if (rs.family == Family::GL)
        throw std::invalid_argument("rho/kappa is orthosymplectic data");
    const int bm = rs.bm, bn = rs.bn, D = rs.dimV;
    RhoKappa rk;
    rk.two_rho.assign(static_cast<size_t>(D), 0);
    rk.kappa.assign(static_cast<size_t>(D), 1);

    // doubled rho over the first half; antisymmetry fills the rest
    auto set2 = [&](int p, int v) { rk.two_rho[static_cast<size_t>(p - 1)] = v; };
    switch (rs.family) {
    case Family::OSPodd: {
        int twok = 2 * bn + 1;  // 2k
        for (int i = 1; i <= bm; ++i)
            set2(i, twok - 2 * bm + 2 * (i - 1));  // k-m .. k-1
        for (int j = 1; j <= bn; ++j)
            set2(bm + j, twok - 2 * j);  // k-1 down to 1/2
        // center entry is 0
        break;
    }
    case Family::OSPeven: {
        for (int i = 1; i <= bm; ++i)
            set2(i, 2 * (bn - bm + i - 1));  // n-m .. n-1
        for (int j = 1; j <= bn - 1; ++j)
            set2(bm + j, 2 * (bn - j));  // n-1 down to 1
        set2(bm + bn, 0);
        break;
    }
    case Family::SPO: {
        for (int i = 1; i <= bm; ++i)
            set2(i, 2 * (bn - bm + i));  // n-m+1 .. n
        for (int j = 1; j <= bn; ++j)
            set2(bm + j, 2 * (bn + 1 - j));  // n down to 1
        break;
    }
    default: break;
    }
    for (int p = 1; 2 * p <= D; ++p)
        rk.two_rho[static_cast<size_t>(D - p)] =
            -rk.two_rho[static_cast<size_t>(p - 1)];

    // kappa: osp has -1 on the leading odd block; spo additionally flips the
    // second half of the even block and the trailing odd block
    for (int p = 1; p <= bm; ++p)
        rk.kappa[static_cast<size_t>(p - 1)] = -1;
    if (rs.family == Family::SPO) {
        for (int p = bm + bn + 1; p <= D; ++p)
            rk.kappa[static_cast<size_t>(p - 1)] = -1;
    }
    return rk;
}

Op2 build_R(const RootSystem& rs)
{
    const Grading g = rs.grading();
    const int D = g.dim;
    auto par = [&](int p) { return g.parity[static_cast<size_t>(p)]; };
    std::vector<Term2> terms;
    const Scalar om = Scalar::omega();

    if (rs.family == Family::GL) {
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) {
                int expo = (i == j) ? (par(i) ? -1 : 1) : 0;
                terms.push_back({i, i, j, j, Scalar::q_pow(expo)});
            }
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < i; ++j) {
                Scalar c = om * Scalar(par(j) ? -1 : 1);
                terms.push_back({i, j, j, i, c});
            }
        return make_op2(g, std::move(terms));
    }

    RhoKappa rk = rho_kappa(rs);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            int expo = 0;
            if (i == j)
                expo += par(j) ? -1 : 1;
            if (i == g.conj(j))
                expo -= par(j) ? -1 : 1;
            terms.push_back({i, i, j, j, Scalar::q_pow(expo)});
        }
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < i; ++j) {
            Scalar c1 = om * Scalar(par(j) ? -1 : 1);
            terms.push_back({i, j, j, i, c1});
            int sgn = (par(i) + par(j) + par(i) * par(j)) % 2;
            Scalar c2 = om * Scalar(sgn ? 1 : -1) *
                        Scalar(rk.kappa[static_cast<size_t>(i)] *
                               rk.kappa[static_cast<size_t>(j)]) *
                        Scalar::u_pow(rk.two_rho[static_cast<size_t>(i)] -
                                      rk.two_rho[static_cast<size_t>(j)]);
            terms.push_back({i, j, g.conj(i), g.conj(j), c2});
        }
    return make_op2(g, std::move(terms));
}

namespace {

std::map<std::string, std::string> instance_of(const RootSystem& rs)
{
    return {{"family", family_name(rs.family)},
            {"bn", std::to_string(rs.bn)},
            {"bm", std::to_string(rs.bm)},
            {"name", rs.display_name()}};
}

std::string entry_witness(const Mat& x, const Mat& y, int d)
{
    auto w = Mat::first_difference(x, y);
    if (!w)
        return "";
    auto idx = [&](int flat) {
        int c = flat % d;
        int b = (flat / d) % d;
        int a = flat / (d * d);
        return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
               "," + std::to_string(c + 1) + ")";
    };
    return "row " + idx(w->first) + " col " + idx(w->second) + ": " +
           x.get(w->first, w->second).str() + " vs " +
           y.get(w->first, w->second).str();
}

}  // namespace

Report check_YBE(const RootSystem& rs, const Op2& R)
{
    Report r = make_report("ybe", instance_of(rs));
    Mat r12 = embed3(R, 1, 2);
    Mat r13 = embed3(R, 1, 3);
    Mat r23 = embed3(R, 2, 3);
    Mat lhs = r12 * r13 * r23;
    Mat rhs = r23 * r13 * r12;
    if (lhs != rhs) {
        r.status = Status::Fail;
        r.witness = entry_witness(lhs, rhs, R.g.dim);
    }
    return r;
}

Report check_braid(const RootSystem& rs, const Op2& R)
{
    Report r = make_report("braid", instance_of(rs));
    Op2 S = graded_permutation(R.g) * R;
    Mat s12 = embed3(S, 1, 2);
    Mat s23 = embed3(S, 2, 3);
    Mat lhs = s12 * s23 * s12;
    Mat rhs = s23 * s12 * s23;
    if (lhs != rhs) {
        r.status = Status::Fail;
        r.witness = entry_witness(lhs, rhs, R.g.dim);
    }
    return r;
}

}  // namespace qsp
