#pragma once

#include "qsp/report.hpp"
#include "qsp/rmat.hpp"
#include "qsp/rootdata.hpp"

#include <map>
#include <optional>
#include <string>

namespace qsp {

enum class KKind {
    A,
    B,
    C,
    AGL,
    BlackTail,
    WhiteTail,
    HalfTail,
    WhiteTailTwisted,
    GLLeft,
    GLRight,
};

std::string kkind_name(KKind k);                      // "A", "a-gl", ...
std::optional<KKind> kkind_from_name(const std::string& s);
bool kkind_is_conjecture(KKind k);

struct KParams {
    KKind kind = KKind::A;
    int block = 0;              // m for A/B/black-tail
    Scalar lambda{1};
    Scalar mu;                  // only read for kinds with a free eigenvalue
    std::map<int, Scalar> off;  // 1-based V-index -> y_i / z_i / x_i
    /* A only: keep the corner term on the diagonal as literally printed
     * (y_{i'} e_{i',i'}) instead of the anti-diagonal e_{i',i}. */
    bool corner_second_diagonal = false;
};

struct KBuild {
    Op1 K;
    Scalar mu;                          // effective second eigenvalue
    std::vector<std::string> violated;  // parameter constraints that fail
    std::vector<std::string> notes;
};

/* Keys the off-diagonal parameter map must populate for this kind. */
std::vector<int> required_off_indices(const RootSystem& rs, const KParams& p);

/* Builds the matrix; throws std::invalid_argument on kind/family mismatch
 * or missing parameters.  With enforce=true a violated constraint throws;
 * with enforce=false it is recorded in `violated` (for negative tests). */
KBuild build_K(const RootSystem& rs, const KParams& p, bool enforce = true);

/* Fill the dependent off-diagonal values from the free ones so that every
 * product constraint holds (free index = the lower one of each pair). */
void complete_params(const RootSystem& rs, KParams& p);

/* untwisted reflection equation S K2 S K2 = K2 S K2 S with S = P R */
Report check_RE(const RootSystem& rs, const Op2& R, const KBuild& kb,
                bool conjecture = false,
                std::map<std::string, std::string> extra = {});

/* twisted form R21 K1 R21^{t1} K2 = K2 R12^{t2} K1 R21;
 * precondition R^{t1 t2} = R21 is verified first */
Report check_RE_twisted_t(const RootSystem& rs, const Op2& R, const KBuild& kb,
                          bool conjecture = false,
                          std::map<std::string, std::string> extra = {});

/* twisted form R21 K1 R12^{th1} K2 = K2 R21^{th2} K1 R12 with th =
 * conjugation by an even involutive matrix; preconditions verified first */
Report check_RE_twisted_theta(const RootSystem& rs, const Op2& R,
                              const KBuild& kb, const Op1& M,
                              bool conjecture = false,
                              std::map<std::string, std::string> extra = {});

/* conjugation matrix swapping the two middle indices (osp-even tail flip) */
Op1 tail_swap_matrix(const RootSystem& rs);

}  // namespace qsp
