#pragma once

#include "qsp/kmat.hpp"
#include "qsp/natrep.hpp"
#include "qsp/report.hpp"
#include "qsp/satake.hpp"

#include <map>
#include <optional>

namespace qsp {

/* Operator with its root and parity attached, for nesting q-commutators. */
struct RootedOp {
    Op1 op;
    Weight root;
    int parity = 0;
};

/* [x, y]_{q^{s i}} = x y - (-1)^{|x||y|} q^{-s ceil(i/2) (wx, wy)} y x
 * with i = |mode| in {0,1,2} and s = sign(mode). */
RootedOp q_commutator(const RootSystem& rs, const RootedOp& x,
                      const RootedOp& y, int mode);

/* F_beta = q^{h_beta} f_beta for a simple root index (0-based) */
RootedOp simple_F(const Representation& rep, int beta);

/* Decorated diagram attached to a K-matrix kind and block size. */
Decorated diagram_for_kind(const RootSystem& rs, KKind kind, int m);

/* Composite root vector F_{alpha~} for a complement simple root (0-based),
 * from the catalogued nested q-commutators; simple alpha~ falls back to
 * simple_F.  Throws std::invalid_argument for uncatalogued cases. */
RootedOp composite_F(const Representation& rep, const Decorated& d, KKind kind,
                     int m, int alpha);

struct MixtureSolution {
    Status status = Status::Pass;  // Pass / Fail / NonUnique / PreconditionFail
    std::optional<Scalar> c;
    std::optional<Scalar> c_grave;  // engaged only when u_alpha is eligible
    bool has_grave_term = false;
    std::string detail;
};

/* Coideal generator images for one decorated diagram + K-matrix kind. */
struct CoidealGenerators {
    Decorated d;
    KKind kind = KKind::A;
    int m = 0;
    std::map<int, Scalar> c;        // alpha -> c_alpha
    std::map<int, Scalar> c_grave;  // alpha -> grave c_alpha (eligible only)
};

/* True when the grave-c term (u_alpha = h_alpha) participates for alpha. */
bool grave_term_eligible(const RootSystem& rs, const Decorated& d, int alpha);

/* X_alpha = q^{h_alpha~ - h_alpha} e_alpha + c F_alpha~ + c`(q^{u_alpha}-1) */
Op1 mixed_generator(const Representation& rep, const Decorated& d, KKind kind,
                    int m, int alpha, const Scalar& c, const Scalar& c_grave);

/* Per-alpha linear solve of [K, X_alpha] = 0 for (c, c`); the Levi and
 * Cartan commutant preconditions are checked first. */
std::map<int, MixtureSolution> solve_mixture(const Representation& rep,
                                             const Decorated& d,
                                             const KBuild& kb, KKind kind,
                                             int m);

/* [K, image] = 0 for every coideal generator image. */
Report check_commutant(const Representation& rep, const CoidealGenerators& gens,
                       const KBuild& kb);

}  // namespace qsp
