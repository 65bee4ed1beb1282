#include "qsp/classical.hpp"
#include "qsp/coideal.hpp"
#include "qsp/kmat.hpp"
#include "qsp/natrep.hpp"
#include "qsp/rmat.hpp"
#include "qsp/satake.hpp"
#include "qsp/suite.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace qsp;

struct InstanceArgs {
    std::string family;
    int bn = 0;
    int bm = 1;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a)
{
    cmd->add_option("--family", a.family, "gl | osp-odd | osp-even | spo")
        ->required();
    cmd->add_option("--bn", a.bn, "bold n (N for gl)")->required();
    cmd->add_option("--bm", a.bm, "bold m")->required();
}

RootSystem rs_of(const InstanceArgs& a)
{
    auto f = family_from_name(a.family);
    if (!f)
        throw config_error("unknown family '" + a.family + "'");
    return build_root_system(*f, a.bn, a.bm);
}

int emit(const Report& r, bool json)
{
    if (json)
        std::cout << r.to_json().dump(2) << "\n";
    else {
        std::cout << status_name(r.status) << " " << r.check;
        for (const auto& [k, v] : r.instance)
            std::cout << " " << k << "=" << v;
        if (!r.witness.empty())
            std::cout << "\n  witness: " << r.witness;
        for (const auto& n : r.notes)
            std::cout << "\n  note: " << n;
        std::cout << "\n";
    }
    return suite_exit_code({r}, false);
}

KParams load_params(const RootSystem& rs, KKind kind, int m,
                    const std::string& path)
{
    if (path.empty()) {
        KParams p = sample_params(rs, kind, m, 0);
        return p;
    }
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open parameter file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("parameter file " + path + ": " + e.what());
    }
    KParams p;
    p.kind = kind;
    p.block = m;
    try {
        if (j.contains("lambda"))
            p.lambda = Scalar::parse(j["lambda"].get<std::string>());
        if (j.contains("mu"))
            p.mu = Scalar::parse(j["mu"].get<std::string>());
        if (j.contains("corner-diagonal"))
            p.corner_second_diagonal = j["corner-diagonal"].get<bool>();
        if (j.contains("off"))
            for (auto& [key, val] : j["off"].items())
                p.off[std::stoi(key)] = Scalar::parse(val.get<std::string>());
    } catch (const scalar_error& e) {
        throw config_error("parameter file " + path + ": " + e.what());
    }
    complete_params(rs, p);
    return p;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification of graded R/K-matrix identities and "
                 "spherical-pair combinatorics"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit reports as JSON");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run one exact check");
    verify->require_subcommand(1);
    InstanceArgs vy, vb, vr, vre, vco;
    auto* ybe = verify->add_subcommand("ybe", "Yang-Baxter identity");
    add_instance_options(ybe, vy);
    auto* braid = verify->add_subcommand("braid", "braid identity for PR");
    add_instance_options(braid, vb);
    auto* rel = verify->add_subcommand("relations",
                                       "defining relations in the natural "
                                       "representation");
    add_instance_options(rel, vr);

    std::string re_kind = "A", re_params, co_kind = "A", co_params;
    int re_block = 1, co_block = 1;
    bool re_negative = false;
    auto* re = verify->add_subcommand("re", "reflection equation");
    add_instance_options(re, vre);
    re->add_option("--kind", re_kind,
                   "A|B|C|a-gl|black-tail|white-tail|half-tail|"
                   "white-tail-twisted|gl-left|gl-right");
    re->add_option("--block", re_block, "block size m");
    re->add_option("--params", re_params, "JSON parameter file");
    re->add_flag("--negative", re_negative,
                 "perturb the parameters to break the constraints");
    auto* co = verify->add_subcommand("commutant",
                                      "K commutes with the coideal images");
    add_instance_options(co, vco);
    co->add_option("--kind", co_kind, "K-matrix kind");
    co->add_option("--block", co_block, "block size m");
    co->add_option("--params", co_params, "JSON parameter file");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "determine mixture parameters");
    solve->require_subcommand(1);
    InstanceArgs smx;
    std::string mx_kind = "A", mx_params;
    int mx_block = 1;
    auto* mixture = solve->add_subcommand("mixture",
                                          "solve [K, X_alpha] = 0 for the "
                                          "mixture parameters");
    add_instance_options(mixture, smx);
    mixture->add_option("--kind", mx_kind, "K-matrix kind");
    mixture->add_option("--block", mx_block, "block size m");
    mixture->add_option("--params", mx_params, "JSON parameter file");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "diagram combinatorics");
    enumerate->require_subcommand(1);
    InstanceArgs sat;
    std::string sat_format = "ascii";
    auto* satake = enumerate->add_subcommand("satake",
                                             "decorated diagrams surviving "
                                             "all filters");
    add_instance_options(satake, sat);
    satake->add_option("--format", sat_format, "json | ascii");

    // ---- check ----
    auto* check = app.add_subcommand("check", "classical screens");
    check->require_subcommand(1);
    InstanceArgs sph;
    auto* spherical = check->add_subcommand("spherical",
                                            "dim(k + b^-) = dim g for every "
                                            "pseudo-symmetric diagram");
    add_instance_options(spherical, sph);

    // ---- dump ----
    auto* dump = app.add_subcommand("dump", "serialize core objects");
    dump->require_subcommand(1);
    InstanceArgs drd, drm, dkm;
    auto* drootdata = dump->add_subcommand("rootdata", "root system data");
    add_instance_options(drootdata, drd);
    auto* drmatrix = dump->add_subcommand("rmatrix", "R-matrix entries");
    add_instance_options(drmatrix, drm);
    std::string dk_kind = "A", dk_params;
    int dk_block = 1;
    auto* dkmatrix = dump->add_subcommand("kmatrix", "K-matrix entries");
    add_instance_options(dkmatrix, dkm);
    dkmatrix->add_option("--kind", dk_kind, "K-matrix kind");
    dkmatrix->add_option("--block", dk_block, "block size m");
    dkmatrix->add_option("--params", dk_params, "JSON parameter file");

    // ---- run / golden ----
    auto* run = app.add_subcommand("run", "run the verification suite");
    std::string run_config, run_out;
    int run_par = 0;
    int run_maxdim = 0;
    bool run_strict = false;
    std::vector<std::string> run_checks;
    run->add_option("--config", run_config, "key = value configuration file");
    run->add_option("--parallelism", run_par, "worker threads");
    run->add_option("--max-dim", run_maxdim, "largest natural module size");
    run->add_option("--checks", run_checks, "subset of check names");
    run->add_flag("--strict-conjectures", run_strict,
                  "promote conjecture failures to errors");
    run->add_option("--out", run_out, "write the report JSON to this path");

    auto* golden = app.add_subcommand("golden", "byte-exact regression");
    golden->require_subcommand(1);
    std::string gd_config, gd_path, gb_config, gb_path;
    auto* gdiff = golden->add_subcommand("diff", "compare against a golden");
    gdiff->add_option("--config", gd_config, "configuration file");
    gdiff->add_option("--golden", gd_path, "golden file")->required();
    auto* gbless = golden->add_subcommand("bless", "rewrite the golden");
    gbless->add_option("--config", gb_config, "configuration file");
    gbless->add_option("--golden", gb_path, "golden file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ybe->parsed()) {
            RootSystem rs = rs_of(vy);
            return emit(check_YBE(rs, build_R(rs)), json_out);
        }
        if (braid->parsed()) {
            RootSystem rs = rs_of(vb);
            return emit(check_braid(rs, build_R(rs)), json_out);
        }
        if (rel->parsed()) {
            RootSystem rs = rs_of(vr);
            return emit(check_defining_relations(build_natural_rep(rs)),
                        json_out);
        }
        if (re->parsed()) {
            RootSystem rs = rs_of(vre);
            auto kind = kkind_from_name(re_kind);
            if (!kind)
                throw config_error("unknown K-matrix kind '" + re_kind + "'");
            KParams p = load_params(rs, *kind, re_block, re_params);
            if (re_negative) {
                auto idx = required_off_indices(rs, p);
                if (!idx.empty())
                    p.off[idx.back()] = p.off[idx.back()] * Scalar::q();
            }
            KBuild kb = build_K(rs, p, !re_negative);
            Op2 R = build_R(rs);
            bool conj = kkind_is_conjecture(*kind);
            std::map<std::string, std::string> extra{
                {"kind", kkind_name(*kind)},
                {"block", std::to_string(re_block)},
                {"params", params_digest(p)}};
            Report r;
            if (*kind == KKind::GLLeft || *kind == KKind::GLRight)
                r = check_RE_twisted_t(rs, R, kb, conj, extra);
            else if (*kind == KKind::WhiteTailTwisted)
                r = check_RE_twisted_theta(rs, R, kb, tail_swap_matrix(rs),
                                           conj, extra);
            else
                r = check_RE(rs, R, kb, conj, extra);
            return emit(r, json_out);
        }
        if (co->parsed() || mixture->parsed()) {
            const InstanceArgs& a = co->parsed() ? vco : smx;
            const std::string& kname = co->parsed() ? co_kind : mx_kind;
            int block = co->parsed() ? co_block : mx_block;
            const std::string& pfile = co->parsed() ? co_params : mx_params;
            RootSystem rs = rs_of(a);
            auto kind = kkind_from_name(kname);
            if (!kind)
                throw config_error("unknown K-matrix kind '" + kname + "'");
            Representation rep = build_natural_rep(rs);
            KParams p = load_params(rs, *kind, block, pfile);
            KBuild kb = build_K(rs, p, true);
            Decorated d = diagram_for_kind(rs, *kind, block);
            auto sol = solve_mixture(rep, d, kb, *kind, block);
            if (sol.count(-1)) {
                Report r = make_report("mixture", {{"kind", kname}});
                r.status = Status::PreconditionFail;
                r.witness = sol.at(-1).detail;
                return emit(r, json_out);
            }
            if (mixture->parsed()) {
                nlohmann::json out = nlohmann::json::array();
                auto expect = mixture_closed_forms(rs, *kind, block, p);
                int code = 0;
                for (const auto& [alpha, s] : sol) {
                    nlohmann::json e;
                    e["alpha"] = alpha + 1;
                    e["status"] = status_name(s.status);
                    if (s.c)
                        e["c"] = s.c->str();
                    if (s.c_grave)
                        e["c_grave"] = s.c_grave->str();
                    auto it = expect.find(alpha);
                    if (it != expect.end() && it->second.c && s.c)
                        e["matches_paper_form"] = (*it->second.c == *s.c);
                    if (s.status != Status::Pass)
                        code = 2;
                    out.push_back(e);
                }
                std::cout << out.dump(2) << "\n";
                return code;
            }
            CoidealGenerators gens;
            gens.d = d;
            gens.kind = *kind;
            gens.m = block;
            for (const auto& [alpha, s] : sol) {
                if (s.status != Status::Pass || !s.c) {
                    Report r = make_report("commutant", {{"kind", kname}});
                    r.status = Status::Fail;
                    r.witness = "mixture solve failed at alpha=" +
                                std::to_string(alpha + 1) + ": " + s.detail;
                    return emit(r, json_out);
                }
                gens.c[alpha] = *s.c;
                if (s.c_grave)
                    gens.c_grave[alpha] = *s.c_grave;
            }
            return emit(check_commutant(rep, gens, kb), json_out);
        }
        if (satake->parsed()) {
            RootSystem rs = rs_of(sat);
            auto all = enumerate_satake(rs);
            if (sat_format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& c : all)
                    out.push_back(satake_to_json(rs, c));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& c : all)
                    std::cout << c.family << (c.type_II ? " [II] " : " [I]  ")
                              << render_diagram(rs, c.d) << "\n";
                std::cout << "total " << all.size() << "\n";
            }
            return 0;
        }
        if (spherical->parsed()) {
            RootSystem rs = rs_of(sph);
            Representation rep = build_natural_rep(rs);
            ClassicalAlgebra ca = build_classical(rep);
            int code = 0;
            for (const auto& piL : enumerate_admissible(rs)) {
                if (static_cast<int>(piL.size()) == rs.rank)
                    continue;
                for (const auto& tau : enumerate_taus(rs, piL)) {
                    Decorated d{piL, tau};
                    if (!is_pseudo_symmetric(rs, d))
                        continue;
                    Report r = check_spherical(ca, d);
                    code = std::max(code, emit(r, json_out));
                }
            }
            return code;
        }
        if (drootdata->parsed()) {
            std::cout << rootdata_to_json(rs_of(drd)).dump(2) << "\n";
            return 0;
        }
        if (drmatrix->parsed()) {
            RootSystem rs = rs_of(drm);
            std::cout << op2_to_json(build_R(rs)).dump(2) << "\n";
            return 0;
        }
        if (dkmatrix->parsed()) {
            RootSystem rs = rs_of(dkm);
            auto kind = kkind_from_name(dk_kind);
            if (!kind)
                throw config_error("unknown K-matrix kind '" + dk_kind + "'");
            KParams p = load_params(rs, *kind, dk_block, dk_params);
            KBuild kb = build_K(rs, p, true);
            std::cout << op1_to_json(kb.K).dump(2) << "\n";
            return 0;
        }
        if (run->parsed() || gdiff->parsed() || gbless->parsed()) {
            std::string cfg_path = run->parsed()
                                       ? run_config
                                       : (gdiff->parsed() ? gd_config
                                                          : gb_config);
            RunConfig cfg;
            if (!cfg_path.empty())
                cfg = load_config(cfg_path);
            if (run->parsed()) {
                if (run_par > 0)
                    cfg.parallelism = run_par;
                if (run_maxdim > 0)
                    cfg.max_dim = run_maxdim;
                if (!run_checks.empty())
                    cfg.checks = run_checks;
                cfg.strict_conjectures |= run_strict;
                if (!run_out.empty())
                    cfg.output_path = run_out;
            }
            auto reports = run_suite(cfg);
            std::string doc = reports_to_string(reports);
            if (run->parsed()) {
                if (!cfg.output_path.empty()) {
                    std::ofstream out(cfg.output_path, std::ios::binary);
                    out << doc;
                } else if (json_out) {
                    std::cout << doc;
                } else {
                    for (const auto& r : reports) {
                        std::cout << status_name(r.status) << " " << r.check;
                        for (const auto& [k, v] : r.instance)
                            std::cout << " " << k << "=" << v;
                        if (!r.witness.empty())
                            std::cout << " :: " << r.witness;
                        std::cout << "\n";
                    }
                }
                return suite_exit_code(reports, cfg.strict_conjectures);
            }
            const std::string& path = gdiff->parsed() ? gd_path : gb_path;
            if (gbless->parsed()) {
                std::ofstream out(path, std::ios::binary);
                out << doc;
                std::cout << "blessed " << path << "\n";
                return 0;
            }
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                std::cerr << "golden file missing: " << path << "\n";
                return 4;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            if (ss.str() != doc) {
                // locate the first drifted line for the message
                std::istringstream a(ss.str()), b(doc);
                std::string la, lb;
                int line = 0;
                while (std::getline(a, la) && std::getline(b, lb)) {
                    ++line;
                    if (la != lb)
                        break;
                }
                std::cerr << "golden drift at line " << line << ":\n  golden: "
                          << la << "\n  actual: " << lb << "\n";
                return 1;
            }
            std::cout << "golden match\n";
            return 0;
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 4;
}
