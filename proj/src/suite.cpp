#include "qsp/suite.hpp"

#include "qsp/classical.hpp"
#include "qsp/natrep.hpp"
#include "qsp/rmat.hpp"
#include "qsp/satake.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace qsp {

RunConfig parse_config_text(const std::string& text)
{
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto notspace = line.find_first_not_of(" \t\r\n");
        if (notspace == std::string::npos)
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r\n");
            size_t b = s.find_last_not_of(" \t\r\n");
            return a == std::string::npos ? std::string()
                                          : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "parallelism")
                cfg.parallelism = std::stoi(value);
            else if (key == "strict-conjectures")
                cfg.strict_conjectures = (value == "1" || value == "true");
            else if (key == "max-dim")
                cfg.max_dim = std::stoi(value);
            else if (key == "checks") {
                std::istringstream cs(value);
                std::string c;
                while (std::getline(cs, c, ','))
                    if (!c.empty())
                        cfg.checks.push_back(c);
            } else if (key == "golden")
                cfg.golden_path = value;
            else if (key == "output")
                cfg.output_path = value;
            else if (key == "lambda" || key == "mu")
                Scalar::parse(value);  // validated; samples stay canonical
            else
                throw config_error("unknown key '" + key + "'");
        } catch (const scalar_error& e) {
            throw config_error("config line " + std::to_string(lineno) +
                               ", field '" + key + "': " + e.what());
        } catch (const std::invalid_argument&) {
            throw config_error("config line " + std::to_string(lineno) +
                               ", field '" + key + "': bad integer");
        }
    }
    if (cfg.parallelism < 1)
        throw config_error("parallelism must be >= 1");
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

namespace {

Scalar pick(int k)
{
    switch (((k % 8) + 8) % 8) {
    case 0: return Scalar(1);
    case 1: return Scalar::q();
    case 2: return Scalar(-1);
    case 3: return Scalar::q_pow(2);
    case 4: return Scalar(2);
    case 5: return -Scalar::q();
    case 6: return Scalar::q_pow(-1);
    default: return Scalar(3);
    }
}

}  // namespace

KParams sample_params(const RootSystem& rs, KKind kind, int m, int idx)
{
    KParams p;
    p.kind = kind;
    p.block = m;
    p.lambda = pick(idx);
    p.mu = pick(idx + 3);
    if (kind == KKind::AGL && (p.lambda * p.mu).is_zero())
        p.mu = Scalar(2);
    const int D = rs.dimV;
    auto conj = [&](int i) { return D + 1 - i; };
    int k = idx + 1;
    auto free_pick = [&](int i) { p.off[i] = pick(k++); };
    switch (kind) {
    case KKind::A:
    case KKind::AGL:
        for (int i = 1; i <= m; ++i)
            free_pick(i);
        break;
    case KKind::B:
        for (int i = 1; i <= m; i += 2)
            free_pick(i);
        break;
    case KKind::C:
        free_pick(rs.rank);
        free_pick(rs.rank + 1);
        for (int i = 1; i < rs.rank; i += 2)
            free_pick(i);
        break;
    case KKind::BlackTail:
        for (int i = 1; i <= rs.bm; ++i)
            free_pick(i);
        for (int i = rs.bm + 1; i < m; ++i)
            if ((i - rs.bm) % 2 == 1)
                free_pick(i);
        break;
    case KKind::WhiteTail:
    case KKind::WhiteTailTwisted:
        for (int i = rs.bm + 1; i <= rs.rank; ++i)
            free_pick(i);
        for (int i = 1; i < rs.bm; i += 2)
            free_pick(i);
        break;
    case KKind::HalfTail:
        for (int i = 1; i <= rs.rank - 2; ++i)
            free_pick(i);
        free_pick(rs.rank);
        break;
    case KKind::GLLeft:
        for (int i = 1; i <= rs.bm; ++i) {
            free_pick(i);
            free_pick(conj(i));
        }
        for (int i = rs.bm + 1; i < conj(rs.bm); ++i)
            if ((i - rs.bm) % 2 == 1)
                free_pick(i);
        break;
    case KKind::GLRight:
        for (int i = 1; i <= rs.bm; i += 2) {
            free_pick(i);
            free_pick(conj(i) - 1);
        }
        for (int i = rs.bm + 1; i < conj(rs.bm); ++i)
            free_pick(i);
        break;
    }
    complete_params(rs, p);
    return p;
}

KParams violating_params(const RootSystem& rs, KKind kind, int m)
{
    KParams p = sample_params(rs, kind, m, 0);
    // scale the largest dependent index by q: breaks the product constraint
    auto idx = required_off_indices(rs, p);
    if (!idx.empty()) {
        int target = idx.back();
        p.off[target] = p.off[target] * Scalar::q();
    }
    return p;
}

std::string params_digest(const KParams& p)
{
    std::string text = kkind_name(p.kind) + "|m=" + std::to_string(p.block) +
                       "|l=" + p.lambda.str() + "|u=" + p.mu.str();
    for (const auto& [i, v] : p.off)
        text += "|" + std::to_string(i) + "=" + v.str();
    // FNV-1a
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::vector<std::tuple<Family, int, int>> grid_by_dim(int max_dim)
{
    std::vector<std::tuple<Family, int, int>> out;
    for (int bm = 1; 2 * bm <= max_dim; ++bm) {
        for (int N = 1; N + 2 * bm <= max_dim; ++N)
            out.emplace_back(Family::GL, N, bm);
        for (int bn = 0; 2 * bn + 1 + 2 * bm <= max_dim; ++bn)
            out.emplace_back(Family::OSPodd, bn, bm);
        for (int bn = 1; 2 * bn + 2 * bm <= max_dim; ++bn) {
            out.emplace_back(Family::OSPeven, bn, bm);
            out.emplace_back(Family::SPO, bn, bm);
        }
    }
    return out;
}

std::vector<std::tuple<Family, int, int>> ybe_grid()
{
    return {
        {Family::GL, 1, 1},      {Family::GL, 2, 1},     {Family::GL, 1, 2},
        {Family::OSPodd, 0, 1},  {Family::OSPodd, 1, 1}, {Family::OSPodd, 0, 2},
        {Family::OSPeven, 1, 1}, {Family::OSPeven, 1, 2},
        {Family::SPO, 1, 1},     {Family::SPO, 2, 1},    {Family::SPO, 1, 2},
    };
}

std::vector<REInstance> re_grid(int max_dim)
{
    std::vector<REInstance> out;
    for (auto [f, bn, bm] : grid_by_dim(max_dim)) {
        if (f == Family::GL) {
            RootSystem rs = build_root_system(f, bn, bm);
            for (int m = 1; 2 * m <= rs.dimV; ++m)
                out.push_back({f, bn, bm, KKind::AGL, m});
            continue;
        }
        for (int m = 1; m <= bm; ++m)
            out.push_back({f, bn, bm, KKind::A, m});
        for (int m = 2; m <= bm; m += 2)
            out.push_back({f, bn, bm, KKind::B, m});
        if (f == Family::OSPeven && bn == 1 && bm % 2 == 0)
            out.push_back({f, bn, bm, KKind::C, 0});
    }
    return out;
}

std::vector<REInstance> conjecture_grid()
{
    return {
        {Family::SPO, 3, 1, KKind::BlackTail, 3},
        {Family::SPO, 1, 2, KKind::WhiteTail, 0},
        {Family::OSPodd, 1, 2, KKind::WhiteTail, 0},
        {Family::OSPeven, 2, 2, KKind::WhiteTail, 0},
        {Family::OSPeven, 2, 1, KKind::HalfTail, 0},
        {Family::OSPeven, 2, 2, KKind::WhiteTailTwisted, 0},
        {Family::GL, 2, 1, KKind::GLLeft, 0},
        {Family::GL, 1, 2, KKind::GLRight, 0},
    };
}

std::vector<Report> run_jobs(std::vector<Job> jobs, int parallelism)
{
    std::vector<Report> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size())
                return;
            try {
                results[i] = jobs[i].fn();
            } catch (const std::exception& e) {
                Report r = make_report("error", {{"job", jobs[i].key}});
                r.status = Status::Fail;
                r.witness = e.what();
                results[i] = r;
            }
        }
    };
    if (parallelism <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < parallelism; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

namespace {

std::string fbn(Family f, int bn, int bm)
{
    return family_name(f) + ":" + std::to_string(bn) + ":" + std::to_string(bm);
}

void add_re_jobs(std::vector<Job>& jobs, const REInstance& inst,
                 bool conjecture)
{
    auto run_one = [inst, conjecture](int idx, bool violate) {
        RootSystem rs = build_root_system(inst.family, inst.bn, inst.bm);
        Op2 R = build_R(rs);
        KParams p = violate ? violating_params(rs, inst.kind, inst.m)
                            : sample_params(rs, inst.kind, inst.m, idx);
        KBuild kb = build_K(rs, p, /*enforce=*/!violate);
        std::map<std::string, std::string> extra{
            {"kind", kkind_name(inst.kind)},
            {"block", std::to_string(inst.m)},
            {"params", params_digest(p)}};
        Report r;
        if (inst.kind == KKind::GLLeft || inst.kind == KKind::GLRight) {
            r = check_RE_twisted_t(rs, R, kb, conjecture, extra);
        } else if (inst.kind == KKind::WhiteTailTwisted) {
            Op1 M = tail_swap_matrix(rs);
            r = check_RE_twisted_theta(rs, R, kb, M, conjecture, extra);
        } else {
            r = check_RE(rs, R, kb, conjecture, extra);
        }
        if (violate) {
            // negative completeness: the violated constraints must be active
            Report neg = r;
            neg.check = "re-negative";
            bool failed = (r.status == Status::Fail ||
                           r.status == Status::ConjectureFail);
            neg.status = failed ? Status::Pass : Status::Fail;
            neg.witness = failed ? "" : "constraint violation left RE intact";
            return neg;
        }
        return r;
    };
    std::string base = "re|" + fbn(inst.family, inst.bn, inst.bm) + "|" +
                       kkind_name(inst.kind) + "|" + std::to_string(inst.m);
    int samples = conjecture ? 1 : 3;
    for (int idx = 0; idx < samples; ++idx)
        jobs.push_back({base + "|s" + std::to_string(idx),
                        [run_one, idx]() { return run_one(idx, false); }});
    if (!conjecture && (inst.kind == KKind::A || inst.kind == KKind::B ||
                        inst.kind == KKind::C || inst.kind == KKind::AGL))
        jobs.push_back({base + "|neg", [run_one]() { return run_one(0, true); }});
}

Report corner_variant_report()
{
    RootSystem rs = build_root_system(Family::OSPodd, 0, 1);
    Op2 R = build_R(rs);
    KParams p = sample_params(rs, KKind::A, 1, 0);
    KBuild anti = build_K(rs, p, true);
    KParams p2 = p;
    p2.corner_second_diagonal = true;
    KBuild diag = build_K(rs, p2, true);
    Report anti_r = check_RE(rs, R, anti, false, {{"kind", "A"}});
    Report diag_r = check_RE(rs, R, diag, false, {{"kind", "A"}});
    Report out = make_report("re-corner-variant",
                             {{"family", "osp-odd"},
                              {"bn", "0"},
                              {"bm", "1"},
                              {"kind", "A"},
                              {"block", "1"}});
    bool resolved = anti_r.status == Status::Pass &&
                    diag_r.status == Status::Fail;
    out.status = resolved ? Status::Pass : Status::Fail;
    out.notes.push_back(
        "corner reading resolved by the reflection equation: the second "
        "corner term lies on the anti-diagonal (y_i' e_{i',i}); the "
        "printed diagonal reading fails");
    if (!resolved)
        out.witness = "anti-diagonal: " + status_name(anti_r.status) +
                      ", diagonal: " + status_name(diag_r.status);
    return out;
}

Report satake_enumeration_report(Family f, int bn, int bm)
{
    RootSystem rs = build_root_system(f, bn, bm);
    auto all = enumerate_satake(rs);
    Report r = make_report("satake-enumeration",
                           {{"family", family_name(f)},
                            {"bn", std::to_string(bn)},
                            {"bm", std::to_string(bm)},
                            {"name", rs.display_name()}});
    r.notes.push_back("count=" + std::to_string(all.size()));
    for (const auto& c : all)
        r.notes.push_back(c.family + " " + render_diagram(rs, c.d));
    for (const auto& c : all) {
        if (!is_admissible(rs, c.d.piL) || !is_pseudo_symmetric(rs, c.d) ||
            violates_selection_rules(rs, c.d).violates) {
            r.status = Status::Fail;
            r.witness = "re-check failed for " + render_diagram(rs, c.d);
            return r;
        }
        if (c.family == "unmatched") {
            r.status = Status::Fail;
            r.witness = "no family template matches " + render_diagram(rs, c.d);
            return r;
        }
        WeightMap th = theta_map(rs, c.d);
        if (!th.is_involutive() || !th.is_orthogonal(rs)) {
            r.status = Status::Fail;
            r.witness = "theta not involutive/orthogonal for " +
                        render_diagram(rs, c.d);
            return r;
        }
        for (int a : c.d.piL)
            if (!(th.apply(rs.simple[static_cast<size_t>(a)]) ==
                  rs.simple[static_cast<size_t>(a)])) {
                r.status = Status::Fail;
                r.witness = "theta does not fix the Levi subset";
                return r;
            }
        for (int a : c.d.piL_complement(rs.rank)) {
            Weight tr = tilde_root(rs, c.d, a);
            if (!rs.is_positive_root(tr)) {
                r.status = Status::Fail;
                r.witness = "tilde root is not positive at alpha=" +
                            std::to_string(a + 1);
                return r;
            }
            if (!(th.apply(rs.simple[static_cast<size_t>(a)]) ==
                  RootSystem::neg(tr))) {
                r.status = Status::Fail;
                r.witness = "theta(alpha) != -alpha~ at alpha=" +
                            std::to_string(a + 1);
                return r;
            }
        }
    }
    return r;
}

Report mixture_report(const REInstance& inst)
{
    RootSystem rs = build_root_system(inst.family, inst.bn, inst.bm);
    Representation rep = build_natural_rep(rs);
    KParams p = sample_params(rs, inst.kind, inst.m, 0);
    KBuild kb = build_K(rs, p, true);
    Decorated d = diagram_for_kind(rs, inst.kind, inst.m);
    Report r = make_report("mixture",
                           {{"family", family_name(inst.family)},
                            {"bn", std::to_string(inst.bn)},
                            {"bm", std::to_string(inst.bm)},
                            {"kind", kkind_name(inst.kind)},
                            {"block", std::to_string(inst.m)},
                            {"params", params_digest(p)}});
    auto sol = solve_mixture(rep, d, kb, inst.kind, inst.m);
    if (sol.count(-1)) {
        r.status = Status::PreconditionFail;
        r.witness = sol.at(-1).detail;
        return r;
    }
    auto expect = mixture_closed_forms(rs, inst.kind, inst.m, p);
    CoidealGenerators gens;
    gens.d = d;
    gens.kind = inst.kind;
    gens.m = inst.m;
    for (auto& [alpha, s] : sol) {
        if (s.status != Status::Pass || !s.c) {
            r.status = s.status == Status::Pass ? Status::Fail : s.status;
            r.witness = "alpha=" + std::to_string(alpha + 1) + ": " + s.detail;
            return r;
        }
        gens.c[alpha] = *s.c;
        if (s.c_grave)
            gens.c_grave[alpha] = *s.c_grave;
        auto it = expect.find(alpha);
        if (it != expect.end() && it->second.c) {
            if (!(*it->second.c == *s.c)) {
                r.status = Status::Fail;
                r.witness = "alpha=" + std::to_string(alpha + 1) +
                            ": solved c=" + s.c->str() +
                            " differs from the closed form " +
                            it->second.c->str();
                return r;
            }
            if (it->second.c_grave &&
                (!s.c_grave || !(*it->second.c_grave == *s.c_grave))) {
                r.status = Status::Fail;
                r.witness = "alpha=" + std::to_string(alpha + 1) +
                            ": grave coefficient differs from the closed form";
                return r;
            }
            r.notes.push_back("alpha=" + std::to_string(alpha + 1) +
                              " matches closed form c=" + s.c->str());
        }
    }
    Report comm = check_commutant(rep, gens, kb);
    if (comm.status != Status::Pass)
        return comm;
    return r;
}

Report spherical_report(Family f, int bn, int bm)
{
    RootSystem rs = build_root_system(f, bn, bm);
    Representation rep = build_natural_rep(rs);
    ClassicalAlgebra ca = build_classical(rep);
    Report r = make_report("spherical",
                           {{"family", family_name(f)},
                            {"bn", std::to_string(bn)},
                            {"bm", std::to_string(bm)},
                            {"name", rs.display_name()}});
    int checked = 0;
    for (const auto& piL : enumerate_admissible(rs)) {
        if (static_cast<int>(piL.size()) == rs.rank)
            continue;
        for (const auto& tau : enumerate_taus(rs, piL)) {
            Decorated d{piL, tau};
            if (!is_pseudo_symmetric(rs, d))
                continue;
            Report one = check_spherical(ca, d);
            ++checked;
            if (one.status != Status::Pass) {
                one.instance["name"] = rs.display_name();
                return one;
            }
        }
    }
    r.notes.push_back("diagrams=" + std::to_string(checked));
    return r;
}

}  // namespace

std::map<int, MixtureSolution> mixture_closed_forms(const RootSystem& rs,
                                                    KKind kind, int m,
                                                    const KParams& p)
{
    std::map<int, MixtureSolution> out;
    const int n = rs.rank;
    const int bm = rs.bm;
    const Scalar& lam = p.lambda;
    auto y = [&](int i) { return p.off.at(i); };
    auto set = [&](int alpha1, Scalar c) {
        MixtureSolution s;
        s.c = std::move(c);
        out[alpha1 - 1] = std::move(s);
    };
    auto sign = [](int k) { return Scalar(k % 2 ? -1 : 1); };
    int dm = 0;  // Kronecker delta m^bm

    switch (kind) {
    case KKind::AGL: {
        const int D = rs.dimV;
        const int N = rs.bn;
        Scalar mu = p.mu;
        for (int i = 1; i < m; ++i)
            set(i, (i == N + bm ? Scalar(-1) : Scalar(1)) * (y(i + 1) / y(i)));
        for (int i = D - m + 1; i <= n; ++i)
            set(i, (i == N + bm ? Scalar(-1) : Scalar(1)) * (y(i + 1) / y(i)));
        if (2 * m < D) {
            set(m, sign(N) * mu / y(m));
            Scalar c2 = (bm <= m)
                            ? sign(N + 1 + (m == bm ? 1 : 0)) *
                                  Scalar::q_pow(2 * D - 4 * m - 3) * lam / y(m)
                            : sign(N + 1) *
                                  Scalar::q_pow(2 * (N - 2 * bm) + 4 * m + 3) *
                                  lam / y(m);
            set(D - m, c2);
        } else {
            // m = D/2: the grave term participates
            MixtureSolution s;
            s.c = -(lam * mu * Scalar::q()) / (y(m) * y(m));
            s.c_grave = ((mu + lam) * Scalar::q()) /
                        ((Scalar::q_pow(2) - Scalar(1)) * y(m));
            s.has_grave_term = true;
            out[m - 1] = std::move(s);
        }
        break;
    }
    case KKind::A: {
        dm = (m == bm) ? 1 : 0;
        for (int i = 1; i < m; ++i)
            set(i, -(y(i + 1) / (Scalar::q() * y(i))));
        switch (rs.family) {
        case Family::OSPodd:
            if (m == n)
                set(m, -(lam / (y(m) * Scalar::q())));
            else
                set(m, sign(n - m - dm) * Scalar::q_pow(-2 * dm) * lam / y(m));
            break;
        case Family::OSPeven:
            if (m == n - 1) {
                Scalar c = -(lam / (y(m) * Scalar::q_pow(2)));
                set(n - 1, c);
                set(n, c);
            } else {
                set(m,
                    sign(n - m + 1 + dm) * Scalar::q_pow(-2 * dm) * lam / y(m));
            }
            break;
        case Family::SPO:
            set(m, sign(n - m + dm) * Scalar::q_pow(-2 * dm) * lam / y(m));
            break;
        default: break;
        }
        break;
    }
    case KKind::B: {
        dm = (m == bm) ? 1 : 0;
        for (int i = 2; i < m; i += 2)
            set(i, -(y(i + 1) / (Scalar::q() * y(i - 1))));
        switch (rs.family) {
        case Family::OSPodd:
            if (m == n)
                set(m, lam / (y(m - 1) * Scalar::q_pow(3)));
            else
                set(m, sign(n + dm) * Scalar::q_pow(-2 * dm - 1) * lam /
                           y(m - 1));
            break;
        case Family::OSPeven:
            if (m == n - 1) {
                Scalar c = -(lam / (Scalar::q_pow(3) * y(m - 1)));
                set(n - 1, c);
                set(n, c);
            } else {
                set(m, sign(n + 1 + dm) * Scalar::q_pow(-2 * dm - 1) * lam /
                           y(m - 1));
            }
            break;
        case Family::SPO:
            set(m, sign(n + dm) * Scalar::q_pow(-2 * dm - 1) * lam / y(m - 1));
            break;
        default: break;
        }
        break;
    }
    case KKind::C: {
        for (int i = 2; i + 1 < n; i += 2)
            set(i, -(y(i + 1) / (Scalar::q() * y(i - 1))));
        set(n, -(y(n + 2) / (y(n) * Scalar::q())));
        set(n - 1, -(y(n) / (y(n - 2) * Scalar::q())));
        break;
    }
    default: break;
    }
    return out;
}

std::vector<Report> run_suite(const RunConfig& cfg)
{
    std::vector<Job> jobs;
    auto want = [&](const std::string& check) {
        if (cfg.checks.empty())
            return true;
        for (const auto& c : cfg.checks)
            if (c == check)
                return true;
        return false;
    };

    if (want("relations"))
        for (auto [f, bn, bm] : grid_by_dim(cfg.max_dim))
            jobs.push_back({"relations|" + fbn(f, bn, bm),
                            [f = f, bn = bn, bm = bm]() {
                                RootSystem rs = build_root_system(f, bn, bm);
                                return check_defining_relations(
                                    build_natural_rep(rs));
                            }});
    if (want("ybe"))
        for (auto [f, bn, bm] : ybe_grid())
            jobs.push_back({"ybe|" + fbn(f, bn, bm),
                            [f = f, bn = bn, bm = bm]() {
                                RootSystem rs = build_root_system(f, bn, bm);
                                return check_YBE(rs, build_R(rs));
                            }});
    if (want("braid"))
        for (auto [f, bn, bm] : ybe_grid())
            jobs.push_back({"braid|" + fbn(f, bn, bm),
                            [f = f, bn = bn, bm = bm]() {
                                RootSystem rs = build_root_system(f, bn, bm);
                                return check_braid(rs, build_R(rs));
                            }});
    if (want("re")) {
        for (const auto& inst : re_grid(cfg.max_dim))
            add_re_jobs(jobs, inst, false);
        jobs.push_back({"re-corner-variant", corner_variant_report});
        for (const auto& inst : conjecture_grid())
            add_re_jobs(jobs, inst, true);
        // tail-swapped half-tail companion
        jobs.push_back({"re|half-tail-flipped", []() {
            RootSystem rs = build_root_system(Family::OSPeven, 2, 1);
            Op2 R = build_R(rs);
            KParams p = sample_params(rs, KKind::HalfTail, 0, 0);
            KBuild kb = build_K(rs, p, true);
            Op1 M = tail_swap_matrix(rs);
            kb.K.mat = M.mat * kb.K.mat * M.mat;
            return check_RE(rs, R, kb, true,
                            {{"kind", "half-tail"}, {"variant", "flipped"}});
        }});
    }
    if (want("satake"))
        for (auto [f, bn, bm] :
             std::vector<std::tuple<Family, int, int>>{{Family::GL, 1, 1},
                                                       {Family::GL, 2, 1},
                                                       {Family::OSPodd, 0, 1},
                                                       {Family::OSPodd, 0, 2},
                                                       {Family::OSPeven, 1, 2},
                                                       {Family::SPO, 1, 1}})
            jobs.push_back({"satake|" + fbn(f, bn, bm),
                            [f = f, bn = bn, bm = bm]() {
                                return satake_enumeration_report(f, bn, bm);
                            }});
    if (want("mixture"))
        for (const auto& inst : re_grid(std::min(cfg.max_dim, 8)))
            jobs.push_back({"mixture|" + fbn(inst.family, inst.bn, inst.bm) +
                                "|" + kkind_name(inst.kind) + "|" +
                                std::to_string(inst.m),
                            [inst]() { return mixture_report(inst); }});
    if (want("spherical"))
        for (auto [f, bn, bm] : grid_by_dim(std::min(cfg.max_dim, 6)))
            jobs.push_back({"spherical|" + fbn(f, bn, bm),
                            [f = f, bn = bn, bm = bm]() {
                                return spherical_report(f, bn, bm);
                            }});

    return run_jobs(std::move(jobs), cfg.parallelism);
}

int suite_exit_code(const std::vector<Report>& reports, bool strict)
{
    bool any_fail = false, any_pre = false;
    for (const auto& r : reports) {
        if (r.status == Status::Fail || r.status == Status::NonUnique)
            any_fail = true;
        if (r.status == Status::ConjectureFail && strict)
            any_fail = true;
        if (r.status == Status::PreconditionFail)
            any_pre = true;
    }
    if (any_fail)
        return 2;
    if (any_pre)
        return 3;
    return 0;
}

}  // namespace qsp
