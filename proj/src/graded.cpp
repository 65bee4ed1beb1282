#include "qsp/graded.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace qsp {

Grading Grading::minimal_symmetric(int n_even, int m)
{
    Grading g;
    g.dim = n_even + 2 * m;
    g.parity.assign(static_cast<size_t>(g.dim), 0);
    for (int i = 0; i < m; ++i) {
        g.parity[static_cast<size_t>(i)] = 1;
        g.parity[static_cast<size_t>(g.dim - 1 - i)] = 1;
    }
    return g;
}

bool Grading::is_symmetric() const
{
    for (int i = 0; i < dim; ++i)
        if (parity[static_cast<size_t>(i)] !=
            parity[static_cast<size_t>(conj(i))])
            return false;
    return true;
}

Mat Mat::identity(int size)
{
    Mat m(size);
    for (int i = 0; i < size; ++i)
        m.a[{i, i}] = Scalar(1);
    return m;
}

Mat Mat::unit(int size, int r, int c, const Scalar& v)
{
    Mat m(size);
    if (!v.is_zero())
        m.a[{r, c}] = v;
    return m;
}

const Scalar* Mat::find(int r, int c) const
{
    auto it = a.find({r, c});
    return it == a.end() ? nullptr : &it->second;
}

Scalar Mat::get(int r, int c) const
{
    const Scalar* p = find(r, c);
    return p ? *p : Scalar();
}

void Mat::add(int r, int c, const Scalar& v)
{
    if (v.is_zero())
        return;
    auto [it, inserted] = a.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            a.erase(it);
    }
}

void Mat::set(int r, int c, const Scalar& v)
{
    if (v.is_zero())
        a.erase({r, c});
    else
        a[{r, c}] = v;
}

Mat Mat::operator+(const Mat& o) const
{
    Mat r = *this;
    for (const auto& [rc, v] : o.a)
        r.add(rc.first, rc.second, v);
    return r;
}

Mat Mat::operator-(const Mat& o) const
{
    Mat r = *this;
    for (const auto& [rc, v] : o.a)
        r.add(rc.first, rc.second, -v);
    return r;
}

Mat Mat::operator*(const Mat& o) const
{
    if (n != o.n)
        throw std::invalid_argument("matrix size mismatch");
    // group the right factor by row for the sparse product
    std::map<int, std::vector<std::pair<int, const Scalar*>>> rows;
    for (const auto& [rc, v] : o.a)
        rows[rc.first].emplace_back(rc.second, &v);
    Mat r(n);
    for (const auto& [rc, v] : a) {
        auto it = rows.find(rc.second);
        if (it == rows.end())
            continue;
        for (const auto& [c2, v2] : it->second)
            r.add(rc.first, c2, v * (*v2));
    }
    return r;
}

Mat Mat::scaled(const Scalar& v) const
{
    Mat r(n);
    if (v.is_zero())
        return r;
    for (const auto& [rc, x] : a)
        r.a[rc] = x * v;
    return r;
}

Mat Mat::transpose() const
{
    Mat r(n);
    for (const auto& [rc, v] : a)
        r.a[{rc.second, rc.first}] = v;
    return r;
}

std::optional<std::pair<int, int>> Mat::first_difference(const Mat& x,
                                                         const Mat& y)
{
    auto ix = x.a.begin();
    auto iy = y.a.begin();
    while (ix != x.a.end() || iy != y.a.end()) {
        if (iy == y.a.end() || (ix != x.a.end() && ix->first < iy->first)) {
            return ix->first;
        }
        if (ix == x.a.end() || iy->first < ix->first) {
            return iy->first;
        }
        if (!(ix->second == iy->second))
            return ix->first;
        ++ix;
        ++iy;
    }
    return std::nullopt;
}

bool Op1::is_even() const
{
    for (const auto& [rc, v] : mat.a)
        if ((g.parity[static_cast<size_t>(rc.first)] +
             g.parity[static_cast<size_t>(rc.second)]) %
                2 !=
            0)
            return false;
    return true;
}

std::optional<int> Op1::homogeneous_parity() const
{
    std::optional<int> p;
    for (const auto& [rc, v] : mat.a) {
        int e = (g.parity[static_cast<size_t>(rc.first)] +
                 g.parity[static_cast<size_t>(rc.second)]) %
                2;
        if (!p)
            p = e;
        else if (*p != e)
            return std::nullopt;
    }
    if (!p)
        p = 0;  // zero operator counts as even
    return p;
}

bool Op2::is_even() const
{
    int d = g.dim;
    for (const auto& [rc, v] : mat.a) {
        int r1 = rc.first / d, r2 = rc.first % d;
        int c1 = rc.second / d, c2 = rc.second % d;
        int e = g.parity[static_cast<size_t>(r1)] +
                g.parity[static_cast<size_t>(r2)] +
                g.parity[static_cast<size_t>(c1)] +
                g.parity[static_cast<size_t>(c2)];
        if (e % 2 != 0)
            return false;
    }
    return true;
}

Op2 Op2::operator*(const Op2& o) const
{
    Op2 r;
    r.g = g;
    r.mat = mat * o.mat;
    if (has_terms && o.has_terms) {
        r.terms = multiply_terms(terms, o.terms, g);
        r.has_terms = true;
    }
    return r;
}

Op2 Op2::operator+(const Op2& o) const
{
    Op2 r;
    r.g = g;
    r.mat = mat + o.mat;
    if (has_terms && o.has_terms) {
        std::vector<Term2> t = terms;
        t.insert(t.end(), o.terms.begin(), o.terms.end());
        r = make_op2(g, std::move(t));
    }
    return r;
}

Op2 Op2::operator-(const Op2& o) const
{
    Op2 r;
    r.g = g;
    r.mat = mat - o.mat;
    if (has_terms && o.has_terms) {
        std::vector<Term2> t = terms;
        for (const Term2& x : o.terms)
            t.push_back({x.i, x.j, x.k, x.l, -x.c});
        r = make_op2(g, std::move(t));
    }
    return r;
}

Mat embed_terms(const std::vector<Term2>& terms, const Grading& g)
{
    int d = g.dim;
    Mat m(d * d);
    for (const Term2& t : terms) {
        int pb = (g.parity[static_cast<size_t>(t.k)] +
                  g.parity[static_cast<size_t>(t.l)]) %
                 2;
        int sign = (pb * g.parity[static_cast<size_t>(t.j)]) % 2;
        Scalar v = sign ? -t.c : t.c;
        m.add(t.i * d + t.k, t.j * d + t.l, v);
    }
    return m;
}

Op2 make_op2(const Grading& g, std::vector<Term2> terms)
{
    // combine and drop zeros for a canonical expansion
    std::map<std::tuple<int, int, int, int>, Scalar> acc;
    for (const Term2& t : terms) {
        auto key = std::make_tuple(t.i, t.j, t.k, t.l);
        auto [it, inserted] = acc.try_emplace(key, t.c);
        if (!inserted)
            it->second += t.c;
    }
    Op2 op;
    op.g = g;
    op.has_terms = true;
    for (const auto& [key, c] : acc)
        if (!c.is_zero())
            op.terms.push_back({std::get<0>(key), std::get<1>(key),
                                std::get<2>(key), std::get<3>(key), c});
    op.mat = embed_terms(op.terms, g);
    return op;
}

Op2 koszul_embed(const Op1& a, const Op1& b)
{
    if (!(a.g == b.g))
        throw std::invalid_argument("grading mismatch in tensor embedding");
    std::vector<Term2> terms;
    for (const auto& [rc1, v1] : a.mat.a)
        for (const auto& [rc2, v2] : b.mat.a)
            terms.push_back({rc1.first, rc1.second, rc2.first, rc2.second,
                             v1 * v2});
    return make_op2(a.g, std::move(terms));
}

Op2 graded_permutation(const Grading& g)
{
    std::vector<Term2> terms;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            Scalar c(g.parity[static_cast<size_t>(j)] ? -1 : 1);
            terms.push_back({i, j, j, i, c});
        }
    return make_op2(g, std::move(terms));
}

Op1 supertranspose(const Op1& a)
{
    Op1 r;
    r.g = a.g;
    r.mat = Mat(a.mat.n);
    for (const auto& [rc, v] : a.mat.a) {
        int i = rc.second, j = rc.first;  // (A^t)_{ij} = A_{ji} * sign
        int sign = ((a.g.parity[static_cast<size_t>(i)] +
                     a.g.parity[static_cast<size_t>(j)]) *
                    a.g.parity[static_cast<size_t>(i)]) %
                   2;
        r.mat.add(i, j, sign ? -v : v);
    }
    return r;
}

Op2 partial_supertranspose(const Op2& x, int leg)
{
    if (!x.has_terms)
        throw std::invalid_argument(
            "partial supertransposition needs the abstract expansion");
    std::vector<Term2> terms;
    for (const Term2& t : x.terms) {
        Term2 s = t;
        if (leg == 1) {
            // (e_{ij})^t = (-1)^{(|i|+|j|)|j|} e_{ji}
            int sign = ((x.g.parity[static_cast<size_t>(t.i)] +
                         x.g.parity[static_cast<size_t>(t.j)]) *
                        x.g.parity[static_cast<size_t>(t.j)]) %
                       2;
            s.i = t.j;
            s.j = t.i;
            if (sign)
                s.c = -s.c;
        } else if (leg == 2) {
            int sign = ((x.g.parity[static_cast<size_t>(t.k)] +
                         x.g.parity[static_cast<size_t>(t.l)]) *
                        x.g.parity[static_cast<size_t>(t.l)]) %
                       2;
            s.k = t.l;
            s.l = t.k;
            if (sign)
                s.c = -s.c;
        } else {
            throw std::invalid_argument("leg must be 1 or 2");
        }
        terms.push_back(s);
    }
    return make_op2(x.g, std::move(terms));
}

Op2 flip_legs(const Op2& x)
{
    if (!x.has_terms)
        throw std::invalid_argument("leg flip needs the abstract expansion");
    std::vector<Term2> terms;
    for (const Term2& t : x.terms) {
        int pa = (x.g.parity[static_cast<size_t>(t.i)] +
                  x.g.parity[static_cast<size_t>(t.j)]) %
                 2;
        int pb = (x.g.parity[static_cast<size_t>(t.k)] +
                  x.g.parity[static_cast<size_t>(t.l)]) %
                 2;
        Term2 s{t.k, t.l, t.i, t.j, (pa * pb) % 2 ? -t.c : t.c};
        terms.push_back(s);
    }
    return make_op2(x.g, std::move(terms));
}

Op2 conjugate_leg(const Op2& x, const Op1& m, const Op1& m_inv, int leg)
{
    if (!x.has_terms)
        throw std::invalid_argument("leg twist needs the abstract expansion");
    std::vector<Term2> terms;
    for (const Term2& t : x.terms) {
        Mat e = (leg == 1) ? Mat::unit(x.g.dim, t.i, t.j)
                           : Mat::unit(x.g.dim, t.k, t.l);
        Mat conj = m.mat * e * m_inv.mat;
        for (const auto& [rc, v] : conj.a) {
            Term2 s = t;
            if (leg == 1) {
                s.i = rc.first;
                s.j = rc.second;
            } else {
                s.k = rc.first;
                s.l = rc.second;
            }
            s.c = t.c * v;
            terms.push_back(s);
        }
    }
    return make_op2(x.g, std::move(terms));
}

Mat embed3(const Op2& x, int p, int q)
{
    if (!x.has_terms)
        throw std::invalid_argument(
            "three-leg embedding needs the abstract expansion");
    if (!(p == 1 && (q == 2 || q == 3)) && !(p == 2 && q == 3))
        throw std::invalid_argument("legs must be (1,2), (1,3) or (2,3)");
    int d = x.g.dim;
    Mat m(d * d * d);
    auto par = [&](int i) { return x.g.parity[static_cast<size_t>(i)]; };
    for (const Term2& t : x.terms) {
        int pa = (par(t.i) + par(t.j)) % 2;  // factor on leg p
        int pb = (par(t.k) + par(t.l)) % 2;  // factor on leg q
        // columns: the two acted slots take t.j / t.l, the bystander runs
        for (int b = 0; b < d; ++b) {
            int col[3], row[3];
            col[p - 1] = t.j;
            row[p - 1] = t.i;
            col[q - 1] = t.l;
            row[q - 1] = t.k;
            int free = 3 - (p - 1) - (q - 1);
            col[free] = b;
            row[free] = b;
            // sign: each factor passes the column slots before its leg
            int s = 0;
            for (int slot = 0; slot < p - 1; ++slot)
                s += pa * par(col[slot]);
            for (int slot = 0; slot < q - 1; ++slot)
                s += pb * par(col[slot]);
            int r = (row[0] * d + row[1]) * d + row[2];
            int c = (col[0] * d + col[1]) * d + col[2];
            m.add(r, c, (s % 2) ? -t.c : t.c);
        }
    }
    return m;
}

std::vector<Term2> multiply_terms(const std::vector<Term2>& x,
                                  const std::vector<Term2>& y,
                                  const Grading& g)
{
    // (e_{ij} (x) e_{kl}) (e_{ab} (x) e_{cd}) =
    //   (-1)^{(|k|+|l|)(|a|+|b|)} delta_{ja} delta_{lc} e_{ib} (x) e_{kd}
    std::vector<Term2> out;
    auto par = [&](int i) { return g.parity[static_cast<size_t>(i)]; };
    for (const Term2& s : x)
        for (const Term2& t : y) {
            if (s.j != t.i || s.l != t.k)
                continue;
            int sign = ((par(s.k) + par(s.l)) * (par(t.i) + par(t.j))) % 2;
            Scalar c = s.c * t.c;
            out.push_back({s.i, t.j, s.k, t.l, sign ? -c : c});
        }
    return out;
}

namespace {

nlohmann::json entries_json(const Mat& m, int order, int d)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [rc, v] : m.a) {
        nlohmann::json e = nlohmann::json::array();
        if (order == 1) {
            e.push_back(rc.first + 1);
            e.push_back(rc.second + 1);
        } else {
            e.push_back(rc.first / d + 1);
            e.push_back(rc.first % d + 1);
            e.push_back(rc.second / d + 1);
            e.push_back(rc.second % d + 1);
        }
        e.push_back(v.to_json());
        entries.push_back(e);
    }
    return entries;
}

}  // namespace

nlohmann::json op1_to_json(const Op1& op)
{
    nlohmann::json j;
    j["dim"] = op.g.dim;
    j["order"] = 1;
    j["parity"] = op.g.parity;
    j["entries"] = entries_json(op.mat, 1, op.g.dim);
    return j;
}

nlohmann::json op2_to_json(const Op2& op)
{
    nlohmann::json j;
    j["dim"] = op.g.dim;
    j["order"] = 2;
    j["parity"] = op.g.parity;
    j["entries"] = entries_json(op.mat, 2, op.g.dim);
    return j;
}

}  // namespace qsp
