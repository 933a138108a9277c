#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

#include "gkm/matrix.hpp"

using namespace gkm;

namespace {

bool has_violation(const ValidationReport& r, const std::string& cond) {
    for (const auto& v : r.violations)
        if (v.condition == cond) return true;
    return false;
}

}  // namespace

TEST_CASE("A2 cartan matrix is valid and all real") {
    auto m = dense_matrix_i({{2, -1}, {-1, 2}});
    CHECK(validate(m).ok());
    auto c = classify(m);
    CHECK(c.real_indices == std::vector<size_t>{0, 1});
    CHECK(c.imaginary_indices.empty());
    CHECK(c.theorem51_applicable);
}

TEST_CASE("symmetry violation is reported as C1") {
    auto m = dense_matrix_i({{2, -1}, {0, 2}});
    auto r = validate(m);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].condition == "C1");
    CHECK(r.violations[0].i == 0);
    CHECK(r.violations[0].j == 1);
}

TEST_CASE("positive off-diagonal entry is reported as C2") {
    auto m = dense_matrix_i({{2, 1}, {1, 2}});
    auto r = validate(m);
    CHECK(has_violation(r, "C2"));
    CHECK(!has_violation(r, "C1"));
}

TEST_CASE("non-integral 2a(i,j)/a(i,i) is reported as C3") {
    Rat half(-1, 2);
    auto m = dense_matrix({{Rat(2), half}, {half, Rat(-3)}});
    auto r = validate(m);
    CHECK(has_violation(r, "C3"));
    CHECK(!has_violation(r, "C2"));
}

TEST_CASE("violations are data, classification of invalid input throws") {
    auto m = dense_matrix_i({{2, 1}, {1, 2}});
    CHECK_THROWS_AS(classify(m), std::invalid_argument);
    CHECK_THROWS_AS(center_pairs(m), std::invalid_argument);
}

TEST_CASE("duplicate labels are structural violations") {
    auto m = dense_matrix_i({{-1, 0}, {0, -1}});
    m.labels = {"x", "x"};
    CHECK(has_violation(validate(m), "structure"));
}

TEST_CASE("classification of mixed and imaginary matrices") {
    auto mixed = dense_matrix_i({{2, 0}, {0, -2}});
    auto c = classify(mixed);
    CHECK(c.real_indices == std::vector<size_t>{0});
    CHECK(c.imaginary_indices == std::vector<size_t>{1});
    // the orthogonal pair here is real-imaginary, not imaginary-imaginary
    CHECK(c.theorem51_applicable);

    auto orth = classify(dense_matrix_i({{-1, 0}, {0, -1}}));
    CHECK(!orth.theorem51_applicable);

    auto imag = classify(dense_matrix_i({{-2, -3}, {-3, -4}}));
    CHECK(imag.real_indices.empty());
    CHECK(imag.theorem51_applicable);
}

TEST_CASE("dense center pairs come from equal columns") {
    auto none = center_pairs(dense_matrix_i({{2, -1}, {-1, 2}}));
    CHECK(none.total == 0);
    CHECK(none.dense_pairs.empty());

    auto all = center_pairs(dense_matrix_i({{-1, -1}, {-1, -1}}));
    REQUIRE(all.dense_pairs.size() == 1);
    CHECK(all.dense_pairs[0] == std::pair<size_t, size_t>{0, 1});
    CHECK(all.total == 1);

    auto three = center_pairs(dense_matrix_i({{-1, -1, -2}, {-1, -1, -2}, {-2, -2, 0}}));
    CHECK(three.total == 1);
}

TEST_CASE("center pairs are symmetric under transposition") {
    auto m = dense_matrix_i({{-1, -1, -2}, {-1, -1, -2}, {-2, -2, 0}});
    auto t = m;
    for (size_t i = 0; i < m.n(); ++i)
        for (size_t j = 0; j < m.n(); ++j) t.a[i][j] = m.a[j][i];
    auto pm = center_pairs(m), pt = center_pairs(t);
    CHECK(pm.dense_pairs == pt.dense_pairs);
    CHECK(pm.total == pt.total);
}

TEST_CASE("monster matrix blocks") {
    Int c1 = 196884, c2 = 21493760;
    auto m = monster_matrix(2, {c1, c2});
    REQUIRE(m.labels == std::vector<std::string>{"-1", "1", "2"});
    CHECK(m.sizes == std::vector<Int>{1, c1, c2});
    CHECK(m.a[0][0] == 2);    // -(-1 + -1)
    CHECK(m.a[0][1] == 0);    // -(-1 + 1)
    CHECK(m.a[0][2] == -1);   // -(-1 + 2)
    CHECK(m.a[1][1] == -2);
    CHECK(m.a[1][2] == -3);
    CHECK(m.a[2][2] == -4);
    CHECK(validate(m).ok());

    auto c = classify(m);
    CHECK(c.real_indices == std::vector<size_t>{0});
    CHECK(c.imaginary_indices == std::vector<size_t>{1, 2});
    CHECK(c.theorem51_applicable);

    auto p = center_pairs(m);
    CHECK(p.within.at(1) == c1 * (c1 - 1) / 2);
    CHECK(p.within.at(2) == c2 * (c2 - 1) / 2);
    CHECK(p.cross.empty());
    CHECK(p.total == c1 * (c1 - 1) / 2 + c2 * (c2 - 1) / 2);

    CHECK_THROWS_AS(monster_matrix(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(monster_matrix(2, {c1}), std::invalid_argument);
}

TEST_CASE("real blocks of size two or more violate C2 inside the block") {
    BorcherdsMatrix m;
    m.block = true;
    m.labels = {"r"};
    m.sizes = {2};
    m.a = {{Rat(2)}};
    CHECK(has_violation(validate(m), "C2"));

    m.sizes = {Int(0)};
    CHECK(has_violation(validate(m), "structure"));
}

TEST_CASE("imaginary block with zero diagonal blocks theorem 5.1") {
    BorcherdsMatrix m;
    m.block = true;
    m.labels = {"z"};
    m.sizes = {2};
    m.a = {{Rat(0)}};
    REQUIRE(validate(m).ok());
    CHECK(!classify(m).theorem51_applicable);
}

TEST_CASE("block expansion agrees with block-level answers") {
    // monster-shaped toy: labels -1,1,2 with small sizes
    BorcherdsMatrix m;
    m.block = true;
    m.labels = {"-1", "1", "2"};
    m.sizes = {1, 2, 3};
    for (long vi : {-1L, 1L, 2L}) {
        std::vector<Rat> row;
        for (long vj : {-1L, 1L, 2L}) row.emplace_back(-(vi + vj));
        m.a.push_back(std::move(row));
    }
    REQUIRE(validate(m).ok());
    auto d = expand_to_dense(m);
    CHECK(d.n() == 6);
    REQUIRE(validate(d).ok());

    auto cb = classify(m), cd = classify(d);
    CHECK(cb.theorem51_applicable == cd.theorem51_applicable);
    CHECK(cd.real_indices.size() == 1);
    CHECK(cd.imaginary_indices.size() == 5);

    auto pb = center_pairs(m), pd = center_pairs(d);
    // within-block pairs: C(2,2)=1 and C(3,2)=3; no cross-block pairs
    CHECK(pb.within.at(1) == 1);
    CHECK(pb.within.at(2) == 3);
    CHECK(pb.total == 4);
    CHECK(pd.dense_pairs.size() == 4);
    CHECK(pb.total == pd.total);

    CHECK_THROWS_AS(expand_to_dense(m, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_to_dense(d), std::invalid_argument);
}

TEST_CASE("json round trip") {
    auto m = monster_matrix(2, {Int(196884), Int(21493760)});
    auto j = matrix_to_json(m);
    auto back = matrix_from_json(j);
    CHECK(back.block);
    CHECK(back.labels == m.labels);
    CHECK(back.sizes == m.sizes);
    CHECK(back.a == m.a);

    std::string path = "/tmp/gkm_test_matrix.json";
    save_matrix(m, path);
    auto loaded = load_matrix(path);
    CHECK(loaded.a == m.a);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_matrix("/nonexistent/nope.json"), std::invalid_argument);
}

TEST_CASE("malformed matrix json is rejected") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"kind":"weird"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"kind":"dense","labels":["1"],"entries":[["2","0"]]})")),
        std::invalid_argument);
    // rationals must parse
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"kind":"dense","labels":["1"],"entries":[["x"]]})")),
        std::invalid_argument);
}
