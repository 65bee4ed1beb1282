#include "qsp/kmat.hpp"

#include <stdexcept>

namespace qsp {

std::string kkind_name(KKind k)
{
    switch (k) {
    case KKind::A: return "A";
    case KKind::B: return "B";
    case KKind::C: return "C";
    case KKind::AGL: return "a-gl";
    case KKind::BlackTail: return "black-tail";
    case KKind::WhiteTail: return "white-tail";
    case KKind::HalfTail: return "half-tail";
    case KKind::WhiteTailTwisted: return "white-tail-twisted";
    case KKind::GLLeft: return "gl-left";
    case KKind::GLRight: return "gl-right";
    }
    return "?";
}

std::optional<KKind> kkind_from_name(const std::string& s)
{
    for (KKind k : {KKind::A, KKind::B, KKind::C, KKind::AGL, KKind::BlackTail,
                    KKind::WhiteTail, KKind::HalfTail, KKind::WhiteTailTwisted,
                    KKind::GLLeft, KKind::GLRight})
        if (kkind_name(k) == s)
            return k;
    return std::nullopt;
}

bool kkind_is_conjecture(KKind k)
{
    switch (k) {
    case KKind::BlackTail:
    case KKind::WhiteTail:
    case KKind::HalfTail:
    case KKind::WhiteTailTwisted:
    case KKind::GLLeft:
    case KKind::GLRight: return true;
    default: return false;
    }
}

namespace {

struct KCtx {
    const RootSystem& rs;
    const KParams& p;
    int D;
    RhoKappa rk;  // orthosymplectic only

    int conj(int i) const { return D + 1 - i; }
    Scalar q2rho(int i) const  // q^{-2 rho_i}
    {
        return Scalar::u_pow(-2 * rk.two_rho[static_cast<size_t>(i - 1)]);
    }
    int kap(int i) const { return rk.kappa[static_cast<size_t>(i - 1)]; }
    const Scalar& off(int i) const
    {
        auto it = p.off.find(i);
        if (it == p.off.end())
            throw std::invalid_argument("missing off-diagonal parameter " +
                                        std::to_string(i));
        return it->second;
    }
};

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw std::invalid_argument(what);
}

}  // namespace

std::vector<int> required_off_indices(const RootSystem& rs, const KParams& p)
{
    const int D = rs.dimV;
    auto conj = [&](int i) { return D + 1 - i; };
    std::vector<int> idx;
    const int m = p.block;
    const int bm = rs.bm;
    const int n = rs.rank;
    switch (p.kind) {
    case KKind::A:
    case KKind::AGL:
        for (int i = 1; i <= m; ++i) {
            idx.push_back(i);
            idx.push_back(conj(i));
        }
        break;
    case KKind::B:
        for (int i = 1; i <= m; i += 2) {
            idx.push_back(i);
            idx.push_back(conj(i) - 1);
        }
        break;
    case KKind::C:
        for (int i = 1; i <= 2 * n - 1; i += 2)
            if (i != n)
                idx.push_back(i);
        idx.push_back(n);
        idx.push_back(n + 1);
        break;
    case KKind::BlackTail:
        for (int i = 1; i <= bm; ++i) {
            idx.push_back(i);
            idx.push_back(conj(i));
        }
        for (int i = bm + 1; i < m; ++i)
            if ((i - bm) % 2 == 1) {
                idx.push_back(i);
                idx.push_back(conj(i) - 1);
            }
        break;
    case KKind::WhiteTail:
    case KKind::WhiteTailTwisted:
        for (int i = bm + 1; i <= n; ++i) {
            idx.push_back(i);
            idx.push_back(conj(i));
        }
        for (int i = 1; i < bm; i += 2) {
            idx.push_back(i);
            idx.push_back(conj(i) - 1);
        }
        break;
    case KKind::HalfTail:
        for (int i = 1; i <= n - 2; ++i) {
            idx.push_back(i);
            idx.push_back(conj(i));
        }
        idx.push_back(n);
        idx.push_back(conj(n) - 1);  // = n for the centre pair
        break;
    case KKind::GLLeft:
        for (int i = 1; i <= bm; ++i) {
            idx.push_back(i);
            idx.push_back(conj(i));
        }
        for (int i = bm + 1; i < conj(bm); ++i)
            if ((i - bm) % 2 == 1)
                idx.push_back(i);
        break;
    case KKind::GLRight:
        for (int i = 1; i <= bm; i += 2) {
            idx.push_back(i);
            idx.push_back(conj(i) - 1);
        }
        for (int i = bm + 1; i < conj(bm); ++i)
            idx.push_back(i);
        break;
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

void complete_params(const RootSystem& rs, KParams& p)
{
    const int D = rs.dimV;
    auto conj = [&](int i) { return D + 1 - i; };
    KCtx ctx{rs, p, D, {}};
    if (rs.family != Family::GL)
        ctx.rk = rho_kappa(rs);
    const int m = p.block;
    const int bm = rs.bm;
    const int n = rs.rank;
    auto set_pair = [&](int lo, int hi, const Scalar& product) {
        if (!p.off.count(lo))
            throw std::invalid_argument("free parameter " + std::to_string(lo) +
                                        " must be given");
        if (!p.off.count(hi))
            p.off[hi] = product / p.off.at(lo);
    };
    switch (p.kind) {
    case KKind::A: {
        Scalar prod = Scalar(ctx.kap(m) * ctx.kap(conj(m))) *
                      p.lambda * p.lambda * ctx.q2rho(m);
        for (int i = 1; i <= m; ++i)
            set_pair(i, conj(i), prod);
        break;
    }
    case KKind::AGL: {
        Scalar prod = -(p.lambda * p.mu);
        for (int i = 1; i <= m; ++i)
            set_pair(i, conj(i), prod);
        break;
    }
    case KKind::B: {
        Scalar prod = Scalar(-ctx.kap(m - 1) * ctx.kap(conj(m) + 1)) *
                      p.lambda * p.lambda * ctx.q2rho(m) * Scalar::q_pow(-2);
        for (int i = 1; i <= m; i += 2)
            set_pair(i, conj(i) - 1, prod);
        break;
    }
    case KKind::C: {
        Scalar prod = ctx.off(n) * ctx.off(n + 1);
        for (int i = 1; i <= 2 * n - 1; i += 2)
            if (i != n)
                set_pair(std::min(i, conj(i) - 1), std::max(i, conj(i) - 1),
                         prod);
        break;
    }
    case KKind::BlackTail: {
        Scalar mu = Scalar(ctx.kap(m) * ctx.kap(conj(m))) *
                    Scalar::u_pow(-2 * ctx.rk.two_rho[static_cast<size_t>(m)]) *
                    p.lambda;  // q^{-2 rho_{m+1}} as printed
        Scalar prod = -(p.lambda * mu);
        for (int i = 1; i <= bm; ++i)
            set_pair(i, conj(i), prod);
        for (int i = bm + 1; i < m; ++i)
            if ((i - bm) % 2 == 1)
                set_pair(i, conj(i) - 1, prod);
        break;
    }
    case KKind::WhiteTail: {
        Scalar mu = p.mu;
        if (rs.family == Family::OSPeven)
            mu = -p.lambda;
        else if (rs.family == Family::OSPodd)
            mu = -(p.lambda * Scalar::q_pow(-1));
        Scalar prod = -(p.lambda * mu);
        for (int i = bm + 1; i <= n; ++i)
            set_pair(i, conj(i), prod);
        for (int i = 1; i < bm; i += 2)
            set_pair(i, conj(i) - 1, prod);
        break;
    }
    case KKind::WhiteTailTwisted: {
        Scalar mu = -(p.lambda * Scalar::q_pow(-2));
        Scalar prod = -(p.lambda * mu);
        p.off[n] = p.lambda;
        p.off[conj(n)] = p.lambda;
        for (int i = bm + 1; i < n; ++i)
            set_pair(i, conj(i), prod);
        for (int i = 1; i < bm; i += 2)
            set_pair(i, conj(i) - 1, prod);
        break;
    }
    case KKind::HalfTail: {
        Scalar prod = -(p.lambda * p.mu);
        for (int i = 1; i <= n - 2; ++i)
            set_pair(i, conj(i), prod);
        set_pair(n, conj(n) - 1, prod);
        break;
    }
    case KKind::GLLeft:
    case KKind::GLRight:
        break;  // all parameters free
    }
}

KBuild build_K(const RootSystem& rs, const KParams& p, bool enforce)
{
    const int D = rs.dimV;
    const Grading g = rs.grading();
    KCtx ctx{rs, p, D, {}};
    if (rs.family != Family::GL)
        ctx.rk = rho_kappa(rs);
    const int m = p.block;
    const int bm = rs.bm, n = rs.rank;

    KBuild out;
    out.K.g = g;
    out.K.mat = Mat(D);
    Mat& K = out.K.mat;
    auto unit1 = [&](int r, int c, const Scalar& v) {
        K.add(r - 1, c - 1, v);
    };
    auto constraint = [&](const Scalar& lhs, const Scalar& rhs,
                          const std::string& what) {
        if (lhs == rhs)
            return;
        if (enforce)
            throw std::invalid_argument("parameter constraint violated: " +
                                        what);
        out.violated.push_back(what);
    };
    auto zblock = [&](int i, const Scalar& zi, const Scalar& zi2) {
        // z_i (e_{i,i'-1} - e_{i+1,i'}) + z_{i'-1} (e_{i'-1,i} - e_{i',i+1})
        int ic = ctx.conj(i);
        unit1(i, ic - 1, zi);
        unit1(i + 1, ic, -zi);
        unit1(ic - 1, i, zi2);
        unit1(ic, i + 1, -zi2);
    };

    switch (p.kind) {
    case KKind::A: {
        require(rs.family != Family::GL, "kind A is orthosymplectic");
        require(1 <= m && m <= bm, "A needs 1 <= m <= bm");
        out.mu = Scalar(-ctx.kap(m) * ctx.kap(ctx.conj(m))) * p.lambda *
                 ctx.q2rho(m);
        for (int i = 1; i <= m; ++i)
            unit1(i, i, p.lambda + out.mu);
        for (int i = m + 1; i < ctx.conj(m); ++i)
            unit1(i, i, p.lambda);
        Scalar prod = -(p.lambda * out.mu);
        for (int i = 1; i <= m; ++i) {
            const Scalar& yi = ctx.off(i);
            const Scalar& yc = ctx.off(ctx.conj(i));
            unit1(i, ctx.conj(i), yi);
            if (p.corner_second_diagonal)
                unit1(ctx.conj(i), ctx.conj(i), yc);
            else
                unit1(ctx.conj(i), i, yc);
            constraint(yi * yc, prod,
                       "y_" + std::to_string(i) + " y_" +
                           std::to_string(ctx.conj(i)) +
                           " = kappa_m kappa_m' lambda^2 q^{-2 rho_m}");
        }
        break;
    }
    case KKind::B: {
        require(rs.family != Family::GL, "kind B is orthosymplectic");
        require(m % 2 == 0 && 2 <= m && m <= bm,
                "B needs even m with 2 <= m <= bm");
        out.mu = Scalar(ctx.kap(m - 1) * ctx.kap(ctx.conj(m) + 1)) * p.lambda *
                 ctx.q2rho(m) * Scalar::q_pow(-2);
        for (int i = 1; i <= m; ++i)
            unit1(i, i, p.lambda + out.mu);
        for (int i = m + 1; i < ctx.conj(m); ++i)
            unit1(i, i, p.lambda);
        Scalar prod = -(p.lambda * out.mu);
        for (int i = 1; i <= m; i += 2) {
            const Scalar& zi = ctx.off(i);
            const Scalar& zc = ctx.off(ctx.conj(i) - 1);
            zblock(i, zi, zc);
            constraint(zi * zc, prod,
                       "z_" + std::to_string(i) + " z_" +
                           std::to_string(ctx.conj(i) - 1) +
                           " = -kappa_{m-1} kappa_{m'+1} lambda^2 "
                           "q^{-2(rho_m+1)}");
        }
        break;
    }
    case KKind::C: {
        require(rs.family == Family::OSPeven && rs.bn == 1 && rs.bm % 2 == 0,
                "kind C needs osp(2|4k)");
        Scalar prod = ctx.off(n) * ctx.off(n + 1);
        for (int i = 1; i <= 2 * n - 1; i += 2) {
            if (i == n)
                continue;
            const Scalar& xi = ctx.off(i);
            int ic = ctx.conj(i);
            unit1(i, ic - 1, xi);
            unit1(i + 1, ic, -xi);
            constraint(xi * ctx.off(ic - 1), prod,
                       "x_" + std::to_string(i) + " x_" +
                           std::to_string(ic - 1) + " = x_n x_n'");
        }
        unit1(n, n + 1, ctx.off(n));
        unit1(n + 1, n, ctx.off(n + 1));
        out.mu = prod;  // not an eigenvalue; recorded for completeness
        break;
    }
    case KKind::AGL: {
        require(rs.family == Family::GL, "kind a-gl is general linear");
        require(1 <= m && 2 * m <= D, "a-gl needs 1 <= m <= (N+2bm)/2");
        out.mu = p.mu;
        for (int i = 1; i <= m; ++i)
            unit1(i, i, p.lambda + p.mu);
        for (int i = m + 1; i <= D - m; ++i)
            unit1(i, i, p.lambda);
        Scalar prod = -(p.lambda * p.mu);
        require(!prod.is_zero(), "a-gl needs lambda mu != 0");
        for (int i = 1; i <= m; ++i) {
            const Scalar& yi = ctx.off(i);
            const Scalar& yc = ctx.off(ctx.conj(i));
            unit1(i, ctx.conj(i), yi);
            unit1(ctx.conj(i), i, yc);
            constraint(yi * yc, prod,
                       "y_" + std::to_string(i) + " y_" +
                           std::to_string(ctx.conj(i)) + " = -lambda mu");
        }
        break;
    }
    case KKind::BlackTail: {
        require(rs.family != Family::GL, "black-tail is orthosymplectic");
        require(bm < m && m < ctx.conj(m), "black-tail needs bm < m");
        out.mu = Scalar(ctx.kap(m) * ctx.kap(ctx.conj(m))) *
                 Scalar::u_pow(-2 * ctx.rk.two_rho[static_cast<size_t>(m)]) *
                 p.lambda;
        out.notes.push_back("mu uses q^{-2 rho_{m+1}} as printed");
        for (int i = 1; i <= m; ++i)
            unit1(i, i, p.lambda + out.mu);
        for (int i = m + 1; i < ctx.conj(m); ++i)
            unit1(i, i, p.lambda);
        Scalar prod = -(p.lambda * out.mu);
        for (int i = 1; i <= bm; ++i) {
            unit1(i, ctx.conj(i), ctx.off(i));
            unit1(ctx.conj(i), i, ctx.off(ctx.conj(i)));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i)), prod,
                       "y_" + std::to_string(i) + " y_" +
                           std::to_string(ctx.conj(i)) + " = -lambda mu");
        }
        for (int i = bm + 1; i < m; ++i) {
            if ((i - bm) % 2 != 1)
                continue;
            zblock(i, ctx.off(i), ctx.off(ctx.conj(i) - 1));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i) - 1), prod,
                       "z_" + std::to_string(i) + " z_" +
                           std::to_string(ctx.conj(i) - 1) + " = -lambda mu");
        }
        break;
    }
    case KKind::WhiteTail: {
        require(rs.family != Family::GL, "white-tail is orthosymplectic");
        Scalar mu = p.mu;
        if (rs.family == Family::OSPeven)
            mu = -p.lambda;
        else if (rs.family == Family::OSPodd)
            mu = -(p.lambda * Scalar::q_pow(-1));
        out.mu = mu;
        for (int i = 1; i <= n; ++i)
            unit1(i, i, mu + p.lambda);
        if (rs.family == Family::OSPodd)
            unit1(n + 1, n + 1, p.lambda);
        Scalar prod = -(p.lambda * mu);
        for (int i = bm + 1; i <= n; ++i) {
            unit1(i, ctx.conj(i), ctx.off(i));
            unit1(ctx.conj(i), i, ctx.off(ctx.conj(i)));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i)), prod,
                       "y_" + std::to_string(i) + " y_" +
                           std::to_string(ctx.conj(i)) + " = -lambda mu");
        }
        for (int i = 1; i < bm; i += 2) {
            zblock(i, ctx.off(i), ctx.off(ctx.conj(i) - 1));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i) - 1), prod,
                       "z_" + std::to_string(i) + " z_" +
                           std::to_string(ctx.conj(i) - 1) + " = -lambda mu");
        }
        break;
    }
    case KKind::HalfTail: {
        require(rs.family == Family::OSPeven, "half-tail is osp-even");
        out.mu = p.mu;
        for (int i = 1; i <= n; ++i)
            unit1(i, i, p.mu + p.lambda);
        Scalar prod = -(p.lambda * p.mu);
        for (int i = 1; i <= n - 2; ++i) {
            unit1(i, ctx.conj(i), ctx.off(i));
            unit1(ctx.conj(i), i, ctx.off(ctx.conj(i)));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i)), prod,
                       "y_" + std::to_string(i) + " y_" +
                           std::to_string(ctx.conj(i)) + " = -lambda mu");
        }
        zblock(n, ctx.off(n), ctx.off(ctx.conj(n) - 1));
        constraint(ctx.off(n) * ctx.off(ctx.conj(n) - 1), prod,
                   "z_n z_{n'-1} = -lambda mu");
        break;
    }
    case KKind::WhiteTailTwisted: {
        require(rs.family == Family::OSPeven && rs.bn >= 2,
                "white-tail-twisted needs osp-even with bn >= 2");
        Scalar mu = -(p.lambda * Scalar::q_pow(-2));
        out.mu = mu;
        for (int i = 1; i <= n - 1; ++i)
            unit1(i, i, mu + p.lambda);
        Scalar prod = -(p.lambda * mu);
        for (int i = bm + 1; i <= n; ++i) {
            unit1(i, ctx.conj(i), ctx.off(i));
            unit1(ctx.conj(i), i, ctx.off(ctx.conj(i)));
            if (i == n) {
                constraint(ctx.off(i), p.lambda, "y_n = lambda");
                constraint(ctx.off(ctx.conj(i)), p.lambda, "y_n' = lambda");
            } else {
                constraint(ctx.off(i) * ctx.off(ctx.conj(i)), prod,
                           "y_" + std::to_string(i) + " y_" +
                               std::to_string(ctx.conj(i)) + " = -lambda mu");
            }
        }
        for (int i = 1; i < bm; i += 2) {
            zblock(i, ctx.off(i), ctx.off(ctx.conj(i) - 1));
            constraint(ctx.off(i) * ctx.off(ctx.conj(i) - 1), prod,
                       "z_" + std::to_string(i) + " z_" +
                           std::to_string(ctx.conj(i) - 1) + " = -lambda mu");
        }
        break;
    }
    case KKind::GLLeft: {
        require(rs.family == Family::GL && rs.bn % 2 == 0,
                "gl-left needs gl with even N");
        for (int i = 1; i <= bm; ++i) {
            unit1(i, i, ctx.off(i));
            unit1(ctx.conj(i), ctx.conj(i), ctx.off(ctx.conj(i)));
        }
        for (int i = bm + 1; i < ctx.conj(bm); ++i) {
            if ((i - bm) % 2 != 1)
                continue;
            unit1(i, i + 1, ctx.off(i));
            unit1(i + 1, i, -(ctx.off(i) * Scalar::q_pow(-1)));
        }
        break;
    }
    case KKind::GLRight: {
        require(rs.family == Family::GL && rs.bm % 2 == 0,
                "gl-right needs gl with even bm");
        for (int i = 1; i <= bm; i += 2) {
            const Scalar& zi = ctx.off(i);
            unit1(i, i + 1, zi);
            unit1(i + 1, i, -(zi * Scalar::q()));
            const Scalar& zc = ctx.off(ctx.conj(i) - 1);
            unit1(ctx.conj(i) - 1, ctx.conj(i), zc);
            unit1(ctx.conj(i), ctx.conj(i) - 1, -(zc * Scalar::q()));
        }
        for (int i = bm + 1; i < ctx.conj(bm); ++i)
            unit1(i, i, ctx.off(i));
        break;
    }
    }
    if (!out.K.is_even())
        throw std::logic_error("built K-matrix is not even");
    return out;
}

namespace {

std::string entry_witness2(const Mat& x, const Mat& y, int d)
{
    auto w = Mat::first_difference(x, y);
    if (!w)
        return "";
    auto idx = [&](int flat) {
        return "(" + std::to_string(flat / d + 1) + "," +
               std::to_string(flat % d + 1) + ")";
    };
    return "row " + idx(w->first) + " col " + idx(w->second) + ": " +
           x.get(w->first, w->second).str() + " vs " +
           y.get(w->first, w->second).str();
}

Report re_report(const std::string& check, const RootSystem& rs,
                 const KBuild& kb,
                 std::map<std::string, std::string> extra)
{
    std::map<std::string, std::string> inst{
        {"family", family_name(rs.family)},
        {"bn", std::to_string(rs.bn)},
        {"bm", std::to_string(rs.bm)},
        {"name", rs.display_name()}};
    for (auto& [k, v] : extra)
        inst[k] = v;
    Report r = make_report(check, std::move(inst));
    r.notes = kb.notes;
    for (const auto& v : kb.violated)
        r.notes.push_back("violated: " + v);
    return r;
}

void set_outcome(Report& r, bool holds, bool conjecture,
                 const std::string& witness)
{
    if (holds)
        r.status = conjecture ? Status::ConjecturePass : Status::Pass;
    else {
        r.status = conjecture ? Status::ConjectureFail : Status::Fail;
        r.witness = witness;
    }
}

}  // namespace

Report check_RE(const RootSystem& rs, const Op2& R, const KBuild& kb,
                bool conjecture, std::map<std::string, std::string> extra)
{
    Report rep = re_report("re", rs, kb, std::move(extra));
    Op2 S = graded_permutation(R.g) * R;
    Op1 id{R.g, Mat::identity(R.g.dim)};
    Op2 K2 = koszul_embed(id, kb.K);
    Mat lhs = S.mat * K2.mat * S.mat * K2.mat;
    Mat rhs = K2.mat * S.mat * K2.mat * S.mat;
    set_outcome(rep, lhs == rhs, conjecture,
                entry_witness2(lhs, rhs, R.g.dim));
    return rep;
}

Report check_RE_twisted_t(const RootSystem& rs, const Op2& R, const KBuild& kb,
                          bool conjecture,
                          std::map<std::string, std::string> extra)
{
    Report rep = re_report("re-twisted-t", rs, kb, std::move(extra));
    Op2 R21 = flip_legs(R);
    Op2 Rt1t2 = partial_supertranspose(partial_supertranspose(R, 1), 2);
    if (!(Rt1t2.mat == R21.mat)) {
        rep.status = Status::PreconditionFail;
        rep.witness = "R^{t1 t2} != R21";
        return rep;
    }
    Op1 id{R.g, Mat::identity(R.g.dim)};
    Op2 K1 = koszul_embed(kb.K, id);
    Op2 K2 = koszul_embed(id, kb.K);
    Mat r21t1 = partial_supertranspose(R21, 1).mat;
    Mat r12t2 = partial_supertranspose(R, 2).mat;
    Mat lhs = R21.mat * K1.mat * r21t1 * K2.mat;
    Mat rhs = K2.mat * r12t2 * K1.mat * R21.mat;
    set_outcome(rep, lhs == rhs, conjecture,
                entry_witness2(lhs, rhs, R.g.dim));
    return rep;
}

Report check_RE_twisted_theta(const RootSystem& rs, const Op2& R,
                              const KBuild& kb, const Op1& M, bool conjecture,
                              std::map<std::string, std::string> extra)
{
    Report rep = re_report("re-twisted-theta", rs, kb, std::move(extra));
    if (!M.is_even() || M.mat * M.mat != Mat::identity(M.mat.n)) {
        rep.status = Status::PreconditionFail;
        rep.witness = "twist matrix must be even and involutive";
        return rep;
    }
    Op2 Rthth = conjugate_leg(conjugate_leg(R, M, M, 1), M, M, 2);
    if (!(Rthth.mat == R.mat)) {
        rep.status = Status::PreconditionFail;
        rep.witness = "(theta x theta)(R) != R";
        return rep;
    }
    Op2 R21 = flip_legs(R);
    Op1 id{R.g, Mat::identity(R.g.dim)};
    Op2 K1 = koszul_embed(kb.K, id);
    Op2 K2 = koszul_embed(id, kb.K);
    Mat r12th1 = conjugate_leg(R, M, M, 1).mat;
    Mat r21th2 = conjugate_leg(R21, M, M, 2).mat;
    Mat lhs = R21.mat * K1.mat * r12th1 * K2.mat;
    Mat rhs = K2.mat * r21th2 * K1.mat * R.mat;
    set_outcome(rep, lhs == rhs, conjecture,
                entry_witness2(lhs, rhs, R.g.dim));
    return rep;
}

Op1 tail_swap_matrix(const RootSystem& rs)
{
    const int D = rs.dimV;
    const int n = rs.rank;
    Mat m(D);
    for (int i = 1; i <= D; ++i) {
        if (i == n)
            m.set(n - 1, D - n, Scalar(1));
        else if (i == D + 1 - n)
            m.set(D - n, n - 1, Scalar(1));
        else
            m.set(i - 1, i - 1, Scalar(1));
    }
    return Op1{rs.grading(), std::move(m)};
}

}  // namespace qsp
