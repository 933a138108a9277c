#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gkm/witt.hpp"

using namespace gkm;

namespace {

GeneratorTable gens(std::vector<std::pair<Multidegree, long>> entries) {
    GeneratorTable g;
    for (auto& [m, c] : entries) g.n[m] = c;
    return g;
}

}  // namespace

TEST_CASE("binary alphabet dimensions") {
    auto d = witt_dimensions(gens({{{1}, 2}}), {8});
    std::vector<long> want = {2, 1, 2, 3, 6, 9, 18, 30};
    for (long h = 1; h <= 8; ++h) CHECK(d.d.at({h}) == want[h - 1]);
}

TEST_CASE("degree-two dimension is n(n-1)/2") {
    for (long n = 1; n <= 6; ++n) {
        auto d = witt_dimensions(gens({{{1}, n}}), {2});
        CHECK(d.d.at({2}) == n * (n - 1) / 2);
    }
}

TEST_CASE("bivariate free Lie dimensions") {
    auto d = witt_dimensions(gens({{{1, 0}, 1}, {{0, 1}, 1}}), {3, 3});
    CHECK(d.d.at({1, 1}) == 1);
    CHECK(d.d.at({2, 1}) == 1);
    CHECK(d.d.at({2, 2}) == 1);
    CHECK(d.d.at({3, 1}) == 1);
    CHECK(d.d.at({2, 0}) == 0);
    CHECK(d.d.at({3, 3}) == 3);  // length-6 Lyndon words with content (3,3)
}

TEST_CASE("repeated generator degree behaves like a bigger alphabet") {
    // n generators all at the same degree (1,1): the diagonal develops
    // binomial corrections, d(2,2) = C(n,2)
    for (long n : {2L, 5L}) {
        auto d = witt_dimensions(gens({{{1, 1}, n}}), {2, 2});
        CHECK(d.d.at({1, 1}) == n);
        CHECK(d.d.at({2, 2}) == n * (n - 1) / 2);
        CHECK(d.d.at({2, 1}) == 0);
    }
}

TEST_CASE("height cap limits the computed cells") {
    auto d = witt_dimensions(gens({{{1, 0}, 1}, {{0, 1}, 1}}), {4, 4}, 3);
    CHECK(d.d.count({2, 1}) == 1);
    CHECK(d.d.count({2, 2}) == 0);  // height 4 > cap
}

TEST_CASE("identity verification round trip") {
    auto g = gens({{{1, 0}, 2}, {{0, 1}, 1}, {{1, 1}, 1}});
    auto d = witt_dimensions(g, {5, 5}, 5);
    Box box = Box::orthant(2, 5, 5);
    CHECK(verify_witt_identity(g, d, box).ok());
}

TEST_CASE("tampering a dimension breaks the identity from that height on") {
    auto g = gens({{{1}, 2}});
    auto d = witt_dimensions(g, {6});
    d.d[{3}] += 1;
    auto rep = verify_witt_identity(g, d, Box::orthant(1, 6));
    REQUIRE(!rep.ok());
    CHECK(rep.mismatches.front().exponent == Multidegree{3});
}

TEST_CASE("coverage gaps are errors naming the degree") {
    auto g = gens({{{1}, 2}});
    auto d = witt_dimensions(g, {6});
    d.d.erase({4});
    CHECK_THROWS_WITH(verify_witt_identity(g, d, Box::orthant(1, 6)),
                      Catch::Matchers::ContainsSubstring("gap at degree 4"));
}

TEST_CASE("generator table validation") {
    CHECK_THROWS_AS(witt_dimensions(gens({{{0, 0}, 1}}), {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(witt_dimensions(gens({{{1, -1}, 1}}), {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(witt_dimensions(gens({{{1, 0}, 0}}), {2, 2}), std::invalid_argument);
    // empty table: every dimension is zero
    auto d = witt_dimensions(GeneratorTable{}, {3});
    for (const auto& [deg, v] : d.d) CHECK(v == 0);
}

TEST_CASE("randomized tables satisfy the generalized Witt identity") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> nvars(1, 3), degree(0, 2), count(1, 5), nsupp(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        size_t m = nvars(rng);
        GeneratorTable g;
        for (long s = nsupp(rng); s > 0; --s) {
            std::vector<long> e(m);
            bool zero = true;
            for (auto& x : e) zero &= (x = degree(rng)) == 0;
            if (zero) e[0] = 1;
            g.n[Multidegree(e)] += count(rng);
        }
        auto d = witt_dimensions(g, Multidegree(std::vector<long>(m, 6)), 6);
        CHECK(verify_witt_identity(g, d, Box::orthant(m, 6, 6)).ok());
    }
}

TEST_CASE("pushforward to total degree commutes with dimensions") {
    auto g = gens({{{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 1}});
    auto d2 = witt_dimensions(g, {6, 6}, 6);
    GeneratorTable collapsed{pushforward_grading(g.n, {{1, 1}})};
    auto d1 = witt_dimensions(collapsed, {6});
    auto transported = pushforward_grading(d2.d, {{1, 1}});
    for (long h = 1; h <= 6; ++h) CHECK(transported.at({h}) == d1.d.at({h}));
}

TEST_CASE("pushforward validation") {
    DegreeCounts t{{{1, 1}, Int(3)}};
    CHECK_THROWS_AS(pushforward_grading(t, {{1, -1}}), std::invalid_argument);  // zero image
    DegreeCounts u{{{0, 1}, Int(1)}};
    CHECK_THROWS_AS(pushforward_grading(u, {{1, -1}}), std::invalid_argument);  // negative image
    auto ok = pushforward_grading(t, {{1, 0}, {0, 1}});
    CHECK(ok.at({1, 1}) == 3);
}

TEST_CASE("block-granularity monster pushforward") {
    // generators (ad e_{-1})^l e_j at block granularity, toy sizes 2,3,5 for
    // labels 1,2,3; coordinates (label -1, label 1, label 2, label 3)
    DegreeCounts t;
    std::vector<long> size = {2, 3, 5};
    for (long j = 1; j <= 3; ++j)
        for (long l = 0; l < j; ++l) {
            std::vector<long> e(4, 0);
            e[0] = l;
            e[static_cast<size_t>(j)] = 1;
            t[Multidegree(e)] += size[j - 1];
        }
    // u = number of simple-root letters, v = sum of labels
    auto pushed = pushforward_grading(t, {{1, 1, 1, 1}, {-1, 1, 2, 3}});
    DegreeCounts want{{{1, 1}, Int(2)}, {{1, 2}, Int(3)}, {{2, 1}, Int(3)},
                      {{1, 3}, Int(5)}, {{2, 2}, Int(5)}, {{3, 1}, Int(5)}};
    CHECK(counts_diff(pushed, want).ok());
}

TEST_CASE("counts line format round trip") {
    DegreeCounts t{{{1, 2}, Int(3)}, {{0, 1}, Int(196884)}};
    std::string s = counts_str(t);
    CHECK(s == "0,1\t196884\n1,2\t3\n");
    std::istringstream in(s);
    CHECK(counts_diff(parse_counts(in), t).ok());
    std::istringstream bad("1,2 3\n");
    CHECK_THROWS_AS(parse_counts(bad), std::invalid_argument);
}
