#include "qsp/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

bool QMat::is_zero() const
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

QMat QMat::operator*(const QMat& o) const
{
    QMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const mpq_class& v = at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < n; ++j)
                if (o.at(k, j) != 0)
                    r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const
{
    QMat r(n);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] + o.a[i];
    return r;
}

QMat QMat::scaled(const mpq_class& v) const
{
    QMat r(n);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] * v;
    return r;
}

int ClassicalAlgebra::parity_of(const QMat& x) const
{
    int p = -1;
    for (int r = 0; r < x.n; ++r)
        for (int c = 0; c < x.n; ++c) {
            if (x.at(r, c) == 0)
                continue;
            int e = (g.parity[static_cast<size_t>(r)] +
                     g.parity[static_cast<size_t>(c)]) %
                    2;
            if (p < 0)
                p = e;
            else if (p != e)
                return -1;
        }
    return p < 0 ? 0 : p;
}

QMat ClassicalAlgebra::bracket(const QMat& x, const QMat& y) const
{
    int px = parity_of(x), py = parity_of(y);
    if (px < 0 || py < 0)
        throw std::invalid_argument("bracket needs homogeneous arguments");
    QMat xy = x * y;
    QMat yx = y * x;
    mpq_class s = (px * py) % 2 ? 1 : -1;
    return xy + yx.scaled(s);
}

namespace {

/* row echelon over Q; rows are coordinate vectors of length dim */
struct Echelon {
    int dim;
    std::vector<std::vector<mpq_class>> rows;  // reduced rows
    std::vector<int> lead;                     // leading column per row

    explicit Echelon(int d) : dim(d) {}

    /* reduce v against the rows; returns true (and absorbs) if independent */
    bool add(std::vector<mpq_class> v)
    {
        for (size_t r = 0; r < rows.size(); ++r) {
            int l = lead[r];
            if (v[static_cast<size_t>(l)] == 0)
                continue;
            mpq_class f = v[static_cast<size_t>(l)] /
                          rows[r][static_cast<size_t>(l)];
            for (int c = 0; c < dim; ++c)
                v[static_cast<size_t>(c)] -= f * rows[r][static_cast<size_t>(c)];
        }
        int l = -1;
        for (int c = 0; c < dim; ++c)
            if (v[static_cast<size_t>(c)] != 0) {
                l = c;
                break;
            }
        if (l < 0)
            return false;
        rows.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }
    int rank() const { return static_cast<int>(rows.size()); }
};

std::vector<mpq_class> flatten(const QMat& m) { return m.a; }

}  // namespace

int span_rank(const std::vector<QMat>& mats)
{
    if (mats.empty())
        return 0;
    Echelon e(mats[0].n * mats[0].n);
    for (const auto& m : mats)
        e.add(flatten(m));
    return e.rank();
}

namespace {

QMat scalar_eval(const Op1& op, int D)
{
    QMat m(D);
    for (const auto& [rc, v] : op.mat.a)
        m.at(rc.first, rc.second) = v.eval_q(1);
    return m;
}

/* close a generator list under the superbracket inside End(V) */
std::vector<QMat> bracket_closure(const ClassicalAlgebra& ca,
                                  std::vector<QMat> gens)
{
    const int D = ca.g.dim;
    Echelon ech(D * D);
    std::vector<QMat> basis;
    std::vector<QMat> fresh;
    for (auto& m : gens)
        if (ech.add(flatten(m))) {
            basis.push_back(m);
            fresh.push_back(m);
        }
    while (!fresh.empty()) {
        std::vector<QMat> next;
        for (const auto& x : fresh)
            for (const auto& y : basis) {
                QMat br = ca.bracket(x, y);
                if (br.is_zero())
                    continue;
                if (ech.add(flatten(br))) {
                    basis.push_back(br);
                    next.push_back(br);
                }
            }
        fresh = std::move(next);
        if (static_cast<int>(basis.size()) > D * D)
            throw std::logic_error("closure exceeded the ambient dimension");
    }
    return basis;
}

}  // namespace

ClassicalAlgebra build_classical(const Representation& rep)
{
    ClassicalAlgebra ca;
    ca.rs = rep.rs;
    ca.g = rep.g;
    const int D = ca.g.dim;
    for (int i = 0; i < rep.rs.rank; ++i) {
        ca.e.push_back(scalar_eval(rep.E[static_cast<size_t>(i)], D));
        ca.f.push_back(scalar_eval(rep.F[static_cast<size_t>(i)], D));
        QMat h(D);
        for (int j = 0; j < D; ++j)
            h.at(j, j) = rep.h_exp[static_cast<size_t>(i)][static_cast<size_t>(j)];
        ca.h.push_back(std::move(h));
    }
    if (rep.rs.family == Family::GL) {
        for (int i = 0; i < D; ++i) {
            QMat z(D);
            z.at(i, i) = ca.g.parity[static_cast<size_t>(i)] ? -1 : 1;
            ca.cartan_basis.push_back(std::move(z));
        }
    } else {
        ca.cartan_basis = ca.h;
    }
    std::vector<QMat> gens = ca.e;
    gens.insert(gens.end(), ca.f.begin(), ca.f.end());
    gens.insert(gens.end(), ca.cartan_basis.begin(), ca.cartan_basis.end());
    ca.basis = bracket_closure(ca, gens);
    ca.dim = static_cast<int>(ca.basis.size());
    return ca;
}

QMat ClassicalAlgebra::root_vector(const Weight& beta) const
{
    // the weight-beta subspace of the algebra: entries (r,c) allowed only
    // where wt_r - wt_c = beta
    const int D = g.dim;
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c)
            if (RootSystem::sub(rs.index_weight(r), rs.index_weight(c)) == beta)
                slots.emplace_back(r, c);
    // intersect span(basis) with the coordinate subspace on `slots`:
    // eliminate the forbidden coordinates from the span
    Echelon forbidden(D * D);
    std::vector<QMat> inside;
    for (const auto& b : basis) {
        bool ok = true;
        for (int r = 0; r < D && ok; ++r)
            for (int c = 0; c < D && ok; ++c)
                if (b.at(r, c) != 0 &&
                    std::find(slots.begin(), slots.end(),
                              std::make_pair(r, c)) == slots.end())
                    ok = false;
        if (ok && !b.is_zero())
            inside.push_back(b);
    }
    if (inside.size() == 1)
        return inside[0];
    // generic basis vectors may mix weights: project by solving instead
    // (rarely needed; the closure echelon keeps weight vectors separate for
    // these algebras, but fall back to a full solve when it does not)
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& b : basis)
        rows.push_back(flatten(b));
    // unknowns: coefficients x_b; constraints: off-slot coordinates vanish
    size_t nb = rows.size();
    std::vector<std::vector<mpq_class>> sys;  // each row: nb coefficients
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) {
            if (std::find(slots.begin(), slots.end(), std::make_pair(r, c)) !=
                slots.end())
                continue;
            std::vector<mpq_class> eq(nb, 0);
            bool nonzero = false;
            for (size_t b = 0; b < nb; ++b) {
                eq[b] = rows[b][static_cast<size_t>(r) * D + c];
                if (eq[b] != 0)
                    nonzero = true;
            }
            if (nonzero)
                sys.push_back(std::move(eq));
        }
    // kernel of sys
    Echelon ech(static_cast<int>(nb));
    for (auto& eq : sys)
        ech.add(std::move(eq));
    // find a kernel vector by elimination over the complement
    std::vector<bool> is_lead(nb, false);
    for (int l : ech.lead)
        is_lead[static_cast<size_t>(l)] = true;
    for (size_t freecol = 0; freecol < nb; ++freecol) {
        if (is_lead[freecol])
            continue;
        std::vector<mpq_class> x(nb, 0);
        x[freecol] = 1;
        for (size_t r = ech.rows.size(); r-- > 0;) {
            int l = ech.lead[r];
            mpq_class s = 0;
            for (size_t c = static_cast<size_t>(l) + 1; c < nb; ++c)
                s += ech.rows[r][c] * x[c];
            x[static_cast<size_t>(l)] = -s / ech.rows[r][static_cast<size_t>(l)];
        }
        QMat out(D);
        bool nonzero = false;
        for (size_t b = 0; b < nb; ++b) {
            if (x[b] == 0)
                continue;
            for (int k = 0; k < D * D; ++k)
                out.a[static_cast<size_t>(k)] += x[b] * rows[b][static_cast<size_t>(k)];
        }
        for (const auto& v : out.a)
            if (v != 0)
                nonzero = true;
        if (nonzero)
            return out;
    }
    throw std::invalid_argument("no root vector for the requested weight");
}

QMat ClassicalAlgebra::cartan_of(const std::vector<int>& simple_coords) const
{
    QMat m(g.dim);
    for (size_t i = 0; i < simple_coords.size(); ++i)
        if (simple_coords[i] != 0)
            m = m + h[i].scaled(simple_coords[i]);
    return m;
}

std::vector<MixtureSample> default_mixture_samples(const RootSystem& rs,
                                                   const Decorated& d,
                                                   int count)
{
    // fixed nonzero rationals; triviality is quantified over all values
    static const int nums[] = {1, 2, -1, 3, -2, 5, -3, 7, 4, -5};
    std::vector<MixtureSample> out;
    auto comp = d.piL_complement(rs.rank);
    for (int s = 0; s < count; ++s) {
        MixtureSample ms;
        int k = 0;
        for (int a : comp) {
            ms.c[a] = mpq_class(nums[(s + 2 * k) % 10], 1 + (s + k) % 3);
            ms.c_grave[a] = mpq_class(nums[(s + 2 * k + 5) % 10]);
            ++k;
        }
        out.push_back(std::move(ms));
    }
    return out;
}

std::vector<QMat> u_alpha_space(const ClassicalAlgebra& ca, const Decorated& d,
                                int alpha)
{
    const RootSystem& rs = ca.rs;
    if (rs.simple_parity[static_cast<size_t>(alpha)] != 0)
        return {};
    if (d.tau[static_cast<size_t>(alpha)] != alpha)
        return {};
    for (int a : d.piL)
        if (rs.pair(rs.simple[static_cast<size_t>(alpha)],
                    rs.simple[static_cast<size_t>(a)]) != 0)
            return {};
    Weight tilde = tilde_root(rs, d, alpha);
    if (!(tilde == rs.simple[static_cast<size_t>(alpha)]))
        return {};
    // centralizer of the Levi part in the Cartan, i.e. diagonals commuting
    // with every e_mu (mu in the Levi subset), intersected with the span
    // orthogonal to the Levi roots; both conditions coincide here: solve
    // alpha_mu(H) = 0 over the Cartan basis.
    const int D = ca.g.dim;
    size_t nb = ca.cartan_basis.size();
    std::vector<std::vector<mpq_class>> sys;
    for (int mu : d.piL) {
        // [H, e_mu] = 0 entrywise
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) {
                std::vector<mpq_class> eq(nb, 0);
                bool nz = false;
                for (size_t b = 0; b < nb; ++b) {
                    const QMat& H = ca.cartan_basis[b];
                    mpq_class coeff =
                        (H.at(r, r) - H.at(c, c)) * ca.e[static_cast<size_t>(mu)].at(r, c);
                    eq[b] = coeff;
                    if (coeff != 0)
                        nz = true;
                }
                if (nz)
                    sys.push_back(std::move(eq));
            }
    }
    Echelon ech(static_cast<int>(nb));
    for (auto& eq : sys)
        ech.add(std::move(eq));
    std::vector<bool> is_lead(nb, false);
    for (int l : ech.lead)
        is_lead[static_cast<size_t>(l)] = true;
    std::vector<QMat> out;
    for (size_t freecol = 0; freecol < nb; ++freecol) {
        if (is_lead[freecol])
            continue;
        std::vector<mpq_class> x(nb, 0);
        x[freecol] = 1;
        for (size_t r = ech.rows.size(); r-- > 0;) {
            int l = ech.lead[r];
            mpq_class s = 0;
            for (size_t c = static_cast<size_t>(l) + 1; c < nb; ++c)
                s += ech.rows[r][c] * x[c];
            x[static_cast<size_t>(l)] = -s / ech.rows[r][static_cast<size_t>(l)];
        }
        QMat H(D);
        for (size_t b = 0; b < nb; ++b)
            if (x[b] != 0)
                H = H + ca.cartan_basis[b].scaled(x[b]);
        if (!H.is_zero())
            out.push_back(std::move(H));
    }
    return out;
}

ClosureResult classical_k_closure(const ClassicalAlgebra& ca,
                                  const Decorated& d,
                                  const MixtureSample& sample)
{
    const RootSystem& rs = ca.rs;
    std::vector<QMat> gens;
    for (int mu : d.piL) {
        gens.push_back(ca.e[static_cast<size_t>(mu)]);
        gens.push_back(ca.f[static_cast<size_t>(mu)]);
    }
    for (int alpha : d.piL_complement(rs.rank)) {
        Weight tilde = tilde_root(rs, d, alpha);
        auto tc = rs.simple_coords(tilde);
        if (!tc)
            throw std::logic_error("tilde root outside the root lattice");
        // t-part: h_{alpha~} - h_alpha
        std::vector<int> diff = *tc;
        diff[static_cast<size_t>(alpha)] -= 1;
        QMat t = ca.cartan_of(diff);
        if (!t.is_zero())
            gens.push_back(std::move(t));
        // mixed generator x_alpha = e_alpha + c f_{alpha~} + c` u_alpha,
        // with u_alpha realized as h_alpha when alpha is eligible
        QMat x = ca.e[static_cast<size_t>(alpha)];
        QMat ft = ca.root_vector(RootSystem::neg(tilde));
        x = x + ft.scaled(sample.c.at(alpha));
        if (!u_alpha_space(ca, d, alpha).empty())
            x = x + ca.h[static_cast<size_t>(alpha)].scaled(
                        sample.c_grave.at(alpha));
        gens.push_back(std::move(x));
    }
    ClosureResult res;
    res.k_basis = bracket_closure(ca, std::move(gens));
    res.dim_k = static_cast<int>(res.k_basis.size());
    res.dim_g = ca.dim;
    res.k_equals_g = (res.dim_k == res.dim_g);
    return res;
}

Report check_spherical(const ClassicalAlgebra& ca, const Decorated& d)
{
    Report r = make_report("spherical",
                           {{"family", family_name(ca.rs.family)},
                            {"bn", std::to_string(ca.rs.bn)},
                            {"bm", std::to_string(ca.rs.bm)},
                            {"diagram", render_diagram(ca.rs, d)}});
    // lower Borel: Cartan plus all negative root spaces
    std::vector<QMat> lower = ca.cartan_basis;
    for (const auto& beta : ca.rs.positive)
        lower.push_back(ca.root_vector(RootSystem::neg(beta)));
    for (const auto& sample : default_mixture_samples(ca.rs, d, 3)) {
        ClosureResult res = classical_k_closure(ca, d, sample);
        std::vector<QMat> all = res.k_basis;
        all.insert(all.end(), lower.begin(), lower.end());
        int rank = span_rank(all);
        if (rank != ca.dim) {
            r.status = Status::Fail;
            r.witness = "dim(k + b^-) = " + std::to_string(rank) +
                        " < dim g = " + std::to_string(ca.dim);
            return r;
        }
    }
    return r;
}

bool is_trivial_pair(const ClassicalAlgebra& ca, const Decorated& d)
{
    for (const auto& sample : default_mixture_samples(ca.rs, d, 3)) {
        ClosureResult res = classical_k_closure(ca, d, sample);
        if (!res.k_equals_g)
            return false;
    }
    return true;
}

}  // namespace qsp
