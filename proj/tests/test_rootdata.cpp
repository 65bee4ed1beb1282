#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/rootdata.hpp"

using namespace qsp;

namespace {

Weight delta(const RootSystem& rs, int i)
{
    Weight w(static_cast<size_t>(rs.basis_dim), 0);
    w[static_cast<size_t>(i - 1)] = 1;
    return w;
}
Weight eps(const RootSystem& rs, int i)
{
    Weight w(static_cast<size_t>(rs.basis_dim), 0);
    w[static_cast<size_t>(2 * rs.bm + i - 1)] = 1;
    return w;
}

}  // namespace

TEST_CASE("gl(1|2) simple roots are the two grey nodes")
{
    RootSystem rs = build_root_system(Family::GL, 1, 1);
    REQUIRE(rs.rank == 2);
    CHECK(rs.simple[0] == RootSystem::sub(delta(rs, 1), eps(rs, 1)));
    CHECK(rs.simple[1] == RootSystem::sub(eps(rs, 1), delta(rs, 2)));
    CHECK(rs.simple_parity == std::vector<int>{1, 1});
    CHECK(rs.pair(rs.simple[0], rs.simple[0]) == 0);
    auto g = rs.gram();
    // (delta_1 - eps_1, eps_1 - delta_2) = -(eps_1, eps_1) = -1
    CHECK(g[0][0] == 0);
    CHECK(g[0][1] == -1);
    CHECK(g[1][0] == -1);
    CHECK(g[1][1] == 0);
}

TEST_CASE("osp(1|2) is the single black-odd node")
{
    RootSystem rs = build_root_system(Family::OSPodd, 0, 1);
    REQUIRE(rs.rank == 1);
    CHECK(rs.simple[0] == delta(rs, 1));
    CHECK(rs.simple_parity[0] == 1);
    CHECK(rs.gram()[0][0] == -1);
    CHECK(rs.dimV == 3);
}

TEST_CASE("spo(2|2) ends with a doubled even root")
{
    RootSystem rs = build_root_system(Family::SPO, 1, 1);
    REQUIRE(rs.rank == 2);
    CHECK(rs.simple[0] == RootSystem::sub(delta(rs, 1), eps(rs, 1)));
    CHECK(rs.simple[1] == RootSystem::add(eps(rs, 1), eps(rs, 1)));
    CHECK(rs.simple_parity == std::vector<int>{1, 0});
    CHECK(rs.pair(rs.simple[1], rs.simple[1]) == 4);
}

TEST_CASE("bilinear form")
{
    RootSystem rs = build_root_system(Family::GL, 2, 1);
    CHECK(rs.pair(eps(rs, 1), eps(rs, 1)) == 1);
    CHECK(rs.pair(delta(rs, 1), eps(rs, 2)) == 0);
    CHECK(rs.pair(delta(rs, 1), delta(rs, 1)) == -1);
    Weight grey = RootSystem::sub(delta(rs, 1), eps(rs, 1));
    CHECK(rs.pair(grey, grey) == 0);
}

TEST_CASE("dynkin chains have orthogonal distant nodes")
{
    RootSystem rs = build_root_system(Family::OSPodd, 2, 2);
    auto g = rs.gram();
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            CHECK(g[i][j] == g[j][i]);
            if (std::abs(i - j) >= 2 &&
                !(rs.family == Family::OSPeven))
                CHECK(g[i][j] == 0);
        }
}

TEST_CASE("positive roots decompose over the simple roots")
{
    for (auto [f, bn, bm] :
         {std::tuple<Family, int, int>{Family::GL, 2, 1},
          {Family::OSPodd, 1, 1},
          {Family::OSPodd, 0, 2},
          {Family::OSPeven, 1, 1},
          {Family::OSPeven, 2, 1},
          {Family::SPO, 1, 2},
          {Family::SPO, 2, 1}}) {
        RootSystem rs = build_root_system(f, bn, bm);
        CHECK(static_cast<int>(rs.simple.size()) == rs.rank);
        for (const auto& beta : rs.positive) {
            auto coords = rs.simple_coords(beta);
            REQUIRE(coords.has_value());
            for (int c : *coords)
                CHECK(c >= 0);
        }
    }
}

TEST_CASE("odd root count for gl(N|2m)")
{
    for (int N = 1; N <= 3; ++N)
        for (int bm = 1; bm <= 2; ++bm) {
            RootSystem rs = build_root_system(Family::GL, N, bm);
            int odd = 0;
            for (const auto& beta : rs.positive)
                if (rs.root_parity(beta) == 1)
                    ++odd;
            CHECK(2 * odd == 2 * N * 2 * bm);  // pairs +-(eps_i - delta_j)
        }
}

TEST_CASE("index weights are symmetric under conjugation")
{
    for (auto [f, bn, bm] :
         {std::tuple<Family, int, int>{Family::OSPodd, 1, 1},
          {Family::OSPeven, 1, 1},
          {Family::SPO, 1, 1}}) {
        RootSystem rs = build_root_system(f, bn, bm);
        for (int i = 0; i < rs.dimV; ++i)
            CHECK(rs.index_weight(rs.dimV - 1 - i) ==
                  RootSystem::neg(rs.index_weight(i)));
    }
    RootSystem rs = build_root_system(Family::GL, 1, 1);
    CHECK(rs.index_weight(0) == delta(rs, 1));
    CHECK(rs.index_weight(1) == eps(rs, 1));
    CHECK(rs.index_weight(2) == delta(rs, 2));
}
