#include "qsp/rootdata.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qsp {

std::string family_name(Family f)
{
    switch (f) {
    case Family::GL: return "gl";
    case Family::OSPodd: return "osp-odd";
    case Family::OSPeven: return "osp-even";
    case Family::SPO: return "spo";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s)
{
    if (s == "gl" || s == "GL")
        return Family::GL;
    if (s == "osp-odd" || s == "OSP-odd")
        return Family::OSPodd;
    if (s == "osp-even" || s == "OSP-even")
        return Family::OSPeven;
    if (s == "spo" || s == "SPO")
        return Family::SPO;
    return std::nullopt;
}

namespace {

int n_even_of(Family f, int bn)
{
    switch (f) {
    case Family::GL: return bn;
    case Family::OSPodd: return 2 * bn + 1;
    case Family::OSPeven: return 2 * bn;
    case Family::SPO: return 2 * bn;
    }
    return 0;
}

}  // namespace

Grading RootSystem::grading() const
{
    return Grading::minimal_symmetric(n_even_of(family, bn), bm);
}

std::string RootSystem::display_name() const
{
    std::string head;
    switch (family) {
    case Family::GL: head = "GL"; break;
    case Family::OSPodd:
    case Family::OSPeven: head = "OSP"; break;
    case Family::SPO: head = "SPO"; break;
    }
    return head + "(" + std::to_string(n_even_of(family, bn)) + "|" +
           std::to_string(2 * bm) + ")";
}

long RootSystem::pair(const Weight& u, const Weight& v) const
{
    long s = 0;
    for (int i = 0; i < basis_dim; ++i) {
        long sgn = (i < 2 * bm) ? -1 : 1;  // delta block negative
        s += sgn * static_cast<long>(u[static_cast<size_t>(i)]) *
             static_cast<long>(v[static_cast<size_t>(i)]);
    }
    return s;
}

int RootSystem::root_parity(const Weight& r) const
{
    long s = 0;
    for (int i = 0; i < 2 * bm; ++i)
        s += r[static_cast<size_t>(i)];
    return static_cast<int>(((s % 2) + 2) % 2);
}

std::vector<std::vector<long>> RootSystem::gram() const
{
    std::vector<std::vector<long>> g(static_cast<size_t>(rank),
                                     std::vector<long>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pair(simple[static_cast<size_t>(i)], simple[static_cast<size_t>(j)]);
    return g;
}

Weight RootSystem::index_weight(int i) const
{
    Weight w(static_cast<size_t>(basis_dim), 0);
    int p = i + 1;  // 1-based position
    if (family == Family::GL) {
        if (p <= bm)
            w[static_cast<size_t>(p - 1)] = 1;
        else if (p <= bm + bn)
            w[static_cast<size_t>(2 * bm + (p - bm) - 1)] = 1;
        else
            w[static_cast<size_t>((p - bn) - 1)] = 1;
        return w;
    }
    int half = dimV / 2;
    int pos = p, sgn = 1;
    if (2 * p > dimV + 1) {
        pos = dimV + 1 - p;
        sgn = -1;
    } else if (2 * p == dimV + 1) {
        return w;  // center of the odd orthogonal block
    }
    (void)half;
    if (pos <= bm)
        w[static_cast<size_t>(pos - 1)] = sgn;
    else
        w[static_cast<size_t>(2 * bm + (pos - bm) - 1)] = sgn;
    return w;
}

std::optional<std::vector<int>> RootSystem::simple_coords(const Weight& w) const
{
    // exact rational elimination over the rank x basis_dim system
    size_t rows = static_cast<size_t>(basis_dim);
    size_t cols = static_cast<size_t>(rank);
    std::vector<std::vector<mpq_class>> m(rows,
                                          std::vector<mpq_class>(cols + 1, 0));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c)
            m[r][c] = simple[c][r];
        m[r][cols] = w[r];
    }
    size_t row = 0;
    std::vector<int> pivot_of_col(cols, -1);
    for (size_t c = 0; c < cols && row < rows; ++c) {
        size_t p = row;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / m[row][c];
            for (size_t k = c; k <= cols; ++k)
                m[r][k] -= f * m[row][k];
        }
        pivot_of_col[c] = static_cast<int>(row);
        ++row;
    }
    std::vector<int> coords(cols, 0);
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] < 0)
            continue;
        size_t r = static_cast<size_t>(pivot_of_col[c]);
        mpq_class v = m[r][cols] / m[r][c];
        v.canonicalize();
        if (v.get_den() != 1)
            return std::nullopt;
        coords[c] = static_cast<int>(v.get_num().get_si());
    }
    // consistency: rows without pivots must have vanished
    for (size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0)
            return std::nullopt;
    if (weight_sum(coords) != w)
        return std::nullopt;
    return coords;
}

bool RootSystem::is_positive_root(const Weight& w) const
{
    return std::find(positive.begin(), positive.end(), w) != positive.end();
}

Weight RootSystem::weight_sum(const std::vector<int>& coords) const
{
    Weight w(static_cast<size_t>(basis_dim), 0);
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            for (size_t k = 0; k < w.size(); ++k)
                w[k] += coords[i] * simple[i][k];
    return w;
}

Weight RootSystem::add(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Weight RootSystem::sub(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Weight RootSystem::neg(const Weight& a)
{
    Weight r = a;
    for (auto& x : r)
        x = -x;
    return r;
}

namespace {

struct Builder {
    RootSystem rs;

    Weight delta(int i) const
    {
        Weight w(static_cast<size_t>(rs.basis_dim), 0);
        w[static_cast<size_t>(i - 1)] = 1;
        return w;
    }
    Weight eps(int i) const
    {
        Weight w(static_cast<size_t>(rs.basis_dim), 0);
        w[static_cast<size_t>(2 * rs.bm + i - 1)] = 1;
        return w;
    }
    void simple_root(const Weight& w)
    {
        rs.simple.push_back(w);
        rs.simple_parity.push_back(rs.root_parity(w));
    }
    void pos(const Weight& w) { rs.positive.push_back(w); }
};

}  // namespace

RootSystem build_root_system(Family f, int bn, int bm)
{
    if (bm < 1)
        throw std::invalid_argument("bm must be >= 1");
    if (f == Family::OSPodd) {
        if (bn < 0)
            throw std::invalid_argument("osp-odd needs bn >= 0");
    } else if (bn < 1) {
        throw std::invalid_argument(family_name(f) + " needs bn >= 1");
    }

    Builder b;
    RootSystem& rs = b.rs;
    rs.family = f;
    rs.bn = bn;
    rs.bm = bm;
    rs.eps_count = (f == Family::GL) ? bn : bn;
    rs.basis_dim = 2 * bm + rs.eps_count;
    rs.dimV = n_even_of(f, bn) + 2 * bm;

    const int N = bn;   // GL convention
    const int n = bn;   // bold n for the others

    switch (f) {
    case Family::GL: {
        rs.rank = N + 2 * bm - 1;
        for (int i = 1; i <= bm - 1; ++i)
            b.simple_root(RootSystem::sub(b.delta(i), b.delta(i + 1)));
        b.simple_root(RootSystem::sub(b.delta(bm), b.eps(1)));
        for (int i = 1; i <= N - 1; ++i)
            b.simple_root(RootSystem::sub(b.eps(i), b.eps(i + 1)));
        b.simple_root(RootSystem::sub(b.eps(N), b.delta(bm + 1)));
        for (int i = bm + 1; i <= 2 * bm - 1; ++i)
            b.simple_root(RootSystem::sub(b.delta(i), b.delta(i + 1)));
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                b.pos(RootSystem::sub(b.eps(i), b.eps(j)));
        for (int i = 1; i <= 2 * bm; ++i)
            for (int j = i + 1; j <= 2 * bm; ++j)
                b.pos(RootSystem::sub(b.delta(i), b.delta(j)));
        for (int i = 1; i <= bm; ++i)
            for (int j = 1; j <= N; ++j)
                b.pos(RootSystem::sub(b.delta(i), b.eps(j)));
        for (int i = bm + 1; i <= 2 * bm; ++i)
            for (int j = 1; j <= N; ++j)
                b.pos(RootSystem::sub(b.eps(j), b.delta(i)));
        break;
    }
    case Family::OSPodd: {
        rs.rank = bm + n;
        for (int i = 1; i <= bm - 1; ++i)
            b.simple_root(RootSystem::sub(b.delta(i), b.delta(i + 1)));
        if (n == 0) {
            b.simple_root(b.delta(bm));
        } else {
            b.simple_root(RootSystem::sub(b.delta(bm), b.eps(1)));
            for (int i = 1; i <= n - 1; ++i)
                b.simple_root(RootSystem::sub(b.eps(i), b.eps(i + 1)));
            b.simple_root(b.eps(n));
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                b.pos(RootSystem::sub(b.eps(i), b.eps(j)));
                b.pos(RootSystem::add(b.eps(i), b.eps(j)));
            }
        for (int i = 1; i <= bm; ++i)
            for (int j = i + 1; j <= bm; ++j) {
                b.pos(RootSystem::sub(b.delta(i), b.delta(j)));
                b.pos(RootSystem::add(b.delta(i), b.delta(j)));
            }
        for (int i = 1; i <= bm; ++i)
            for (int j = 1; j <= n; ++j) {
                b.pos(RootSystem::sub(b.delta(i), b.eps(j)));
                b.pos(RootSystem::add(b.delta(i), b.eps(j)));
            }
        for (int i = 1; i <= n; ++i)
            b.pos(b.eps(i));
        for (int i = 1; i <= bm; ++i) {
            b.pos(RootSystem::add(b.delta(i), b.delta(i)));
            b.pos(b.delta(i));
        }
        break;
    }
    case Family::OSPeven: {
        rs.rank = bm + n;
        for (int i = 1; i <= bm - 1; ++i)
            b.simple_root(RootSystem::sub(b.delta(i), b.delta(i + 1)));
        if (n == 1) {
            b.simple_root(RootSystem::sub(b.delta(bm), b.eps(1)));
            b.simple_root(RootSystem::add(b.delta(bm), b.eps(1)));
        } else {
            b.simple_root(RootSystem::sub(b.delta(bm), b.eps(1)));
            for (int i = 1; i <= n - 1; ++i)
                b.simple_root(RootSystem::sub(b.eps(i), b.eps(i + 1)));
            b.simple_root(RootSystem::add(b.eps(n - 1), b.eps(n)));
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                b.pos(RootSystem::sub(b.eps(i), b.eps(j)));
                b.pos(RootSystem::add(b.eps(i), b.eps(j)));
            }
        for (int i = 1; i <= bm; ++i)
            for (int j = i + 1; j <= bm; ++j) {
                b.pos(RootSystem::sub(b.delta(i), b.delta(j)));
                b.pos(RootSystem::add(b.delta(i), b.delta(j)));
            }
        for (int j = 1; j <= bm; ++j)
            for (int i = 1; i <= n; ++i) {
                b.pos(RootSystem::sub(b.delta(j), b.eps(i)));
                b.pos(RootSystem::add(b.delta(j), b.eps(i)));
            }
        for (int i = 1; i <= bm; ++i)
            b.pos(RootSystem::add(b.delta(i), b.delta(i)));
        break;
    }
    case Family::SPO: {
        rs.rank = bm + n;
        for (int i = 1; i <= bm - 1; ++i)
            b.simple_root(RootSystem::sub(b.delta(i), b.delta(i + 1)));
        b.simple_root(RootSystem::sub(b.delta(bm), b.eps(1)));
        for (int i = 1; i <= n - 1; ++i)
            b.simple_root(RootSystem::sub(b.eps(i), b.eps(i + 1)));
        b.simple_root(RootSystem::add(b.eps(n), b.eps(n)));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                b.pos(RootSystem::sub(b.eps(i), b.eps(j)));
                b.pos(RootSystem::add(b.eps(i), b.eps(j)));
            }
        for (int i = 1; i <= bm; ++i)
            for (int j = i + 1; j <= bm; ++j) {
                b.pos(RootSystem::sub(b.delta(i), b.delta(j)));
                b.pos(RootSystem::add(b.delta(i), b.delta(j)));
            }
        for (int j = 1; j <= bm; ++j)
            for (int i = 1; i <= n; ++i) {
                b.pos(RootSystem::sub(b.delta(j), b.eps(i)));
                b.pos(RootSystem::add(b.delta(j), b.eps(i)));
            }
        for (int i = 1; i <= n; ++i)
            b.pos(RootSystem::add(b.eps(i), b.eps(i)));
        break;
    }
    }
    if (static_cast<int>(rs.simple.size()) != rs.rank)
        throw std::logic_error("simple root count mismatch");
    return b.rs;
}

nlohmann::json rootdata_to_json(const RootSystem& rs)
{
    nlohmann::json j;
    j["family"] = family_name(rs.family);
    j["bn"] = rs.bn;
    j["bm"] = rs.bm;
    j["name"] = rs.display_name();
    j["rank"] = rs.rank;
    j["basis_dim"] = rs.basis_dim;
    j["dimV"] = rs.dimV;
    j["simple"] = rs.simple;
    j["parity"] = rs.simple_parity;
    j["positive"] = rs.positive;
    nlohmann::json gm = nlohmann::json::array();
    for (const auto& row : rs.gram())
        gm.push_back(row);
    j["gram"] = gm;
    return j;
}

}  // namespace qsp
