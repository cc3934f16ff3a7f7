#include "fintop/smith.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fintop;

namespace {

bool divisibility_chain(const smith_decomposition& s)
{
    auto d = s.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i)
    {
        if (d[i] < 0)
            return false;
        if (d[i] == 0 && d[i + 1] != 0)
            return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0)
            return false;
    }
    return true;
}

bool off_diagonal_zero(const int_matrix& m)
{
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0)
                return false;
    return true;
}

} // namespace

TEST_CASE("smith normal form on pinned inputs")
{
    SECTION("zero matrix")
    {
        int_matrix z(2, 3);
        smith_decomposition s = smith(z);
        CHECK(s.rank == 0);
        CHECK(s.d == z);
        CHECK(s.u == int_matrix::identity(2));
        CHECK(s.v == int_matrix::identity(3));
    }
    SECTION("diag(2,3) normalizes to diag(1,6)")
    {
        smith_decomposition s = smith(int_matrix{{2, 0}, {0, 3}});
        CHECK(s.diagonal() == std::vector<bigint>{1, 6});
        CHECK(s.u * int_matrix{{2, 0}, {0, 3}} * s.v == s.d);
    }
    SECTION("identity")
    {
        smith_decomposition s = smith(int_matrix::identity(4));
        CHECK(s.d == int_matrix::identity(4));
        CHECK(s.rank == 4);
    }
}

TEST_CASE("smith decomposition invariants on random matrices")
{
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
    for (int trial = 0; trial < 1000; ++trial)
    {
        int r = dim(rng), c = dim(rng);
        int_matrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                a.at(i, j) = entry(rng);
        smith_decomposition s = smith(a);
        REQUIRE(s.u * a * s.v == s.d);
        REQUIRE(off_diagonal_zero(s.d));
        REQUIRE(divisibility_chain(s));
        bigint du = testsupport::cofactor_det(s.u);
        bigint dv = testsupport::cofactor_det(s.v);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
    }
}

TEST_CASE("integer solve")
{
    SECTION("identity system")
    {
        std::vector<bigint> b{3, -1, 7};
        auto x = solve(int_matrix::identity(3), b);
        REQUIRE(x);
        CHECK(*x == b);
    }
    SECTION("parity obstruction")
    {
        CHECK_FALSE(solve(int_matrix{{2}}, std::vector<bigint>{3}));
    }
    SECTION("canonical-zero convention for a rank-1 system")
    {
        auto x = solve(int_matrix{{1, 1}}, std::vector<bigint>{5});
        REQUIRE(x);
        CHECK(*x == std::vector<bigint>{5, 0});
    }
}

TEST_CASE("solve agrees with exhaustive search on tiny systems")
{
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-3, 3), rhs(-4, 4);
    for (int trial = 0; trial < 300; ++trial)
    {
        int_matrix a(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                a.at(i, j) = entry(rng);
        std::vector<bigint> b{rhs(rng), rhs(rng)};
        auto x = solve(a, b);
        if (x)
        {
            CHECK(a * *x == b);
        }
        else
        {
            // no solution claimed: sweep a box large enough for 2x2 systems
            bool found = false;
            for (int u = -40; u <= 40 && !found; ++u)
                for (int v = -40; v <= 40 && !found; ++v)
                    if (a * std::vector<bigint>{u, v} == b)
                        found = true;
            CHECK_FALSE(found);
        }
    }
}

TEST_CASE("unimodularity and exact inverses")
{
    CHECK(is_unimodular(int_matrix::identity(3)));
    CHECK(invert_unimodular(int_matrix::identity(3)) == int_matrix::identity(3));

    int_matrix shear{{1, 1}, {0, 1}};
    CHECK(is_unimodular(shear));
    CHECK(invert_unimodular(shear) == int_matrix{{1, -1}, {0, 1}});

    CHECK_FALSE(is_unimodular(int_matrix{{2}}));
    CHECK_THROWS_AS(invert_unimodular(int_matrix{{2}}), std::invalid_argument);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 5);
    for (int trial = 0; trial < 200; ++trial)
    {
        int n = dim(rng);
        int_matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = entry(rng);
        bigint d = determinant(a);
        CHECK(d == testsupport::cofactor_det(a));
        if (d == 1 || d == -1)
            CHECK(a * invert_unimodular(a) == int_matrix::identity(n));
    }
}
