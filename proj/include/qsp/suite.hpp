#pragma once

#include "qsp/coideal.hpp"
#include "qsp/kmat.hpp"
#include "qsp/report.hpp"
#include "qsp/rootdata.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsp {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int parallelism = 1;
    bool strict_conjectures = false;
    int max_dim = 8;                  // size grid bound for the full suite
    std::vector<std::string> checks;  // empty = all
    std::string golden_path;
    std::string output_path;
};

/* key = value lines, '#' comments; errors carry line numbers */
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

/* deterministic constraint-satisfying parameters (idx = 0,1,2,...) */
KParams sample_params(const RootSystem& rs, KKind kind, int m, int idx);
/* sample 0 with one dependent entry scaled by q: breaks the constraints */
KParams violating_params(const RootSystem& rs, KKind kind, int m);

std::string params_digest(const KParams& p);

/* instance grids */
std::vector<std::tuple<Family, int, int>> grid_by_dim(int max_dim);
std::vector<std::tuple<Family, int, int>> ybe_grid();
struct REInstance {
    Family family;
    int bn, bm;
    KKind kind;
    int m;
};
std::vector<REInstance> re_grid(int max_dim);
std::vector<REInstance> conjecture_grid();

/* jobs with deterministic keys, run with a worker pool */
struct Job {
    std::string key;
    std::function<Report()> fn;
};
std::vector<Report> run_jobs(std::vector<Job> jobs, int parallelism);

std::vector<Report> run_suite(const RunConfig& cfg);

/* 0 all pass, 2 any FAIL, 3 any PRECONDITION-FAIL, 4 reserved for config */
int suite_exit_code(const std::vector<Report>& reports, bool strict);

/* closed-form mixture parameters of the catalogued coideal generators */
std::map<int, MixtureSolution> mixture_closed_forms(const RootSystem& rs,
                                                    KKind kind, int m,
                                                    const KParams& p);

}  // namespace qsp
