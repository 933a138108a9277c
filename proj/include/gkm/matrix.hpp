#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gkm/multidegree.hpp"
#include "gkm/numeric.hpp"

namespace gkm {

// Symmetric rational matrix indexing the simple roots, either with one row
// per index (dense) or one row per block of equal indices (block form; the
// monster matrix has blocks of size c(j), far too large to expand).
struct BorcherdsMatrix {
    bool block = false;
    std::vector<std::string> labels;    // index labels, or block labels
    std::vector<Int> sizes;             // block form only: indices per block
    std::vector<std::vector<Rat>> a;    // entries at label granularity

    size_t n() const { return labels.size(); }
    const Rat& entry(size_t i, size_t j) const { return a[i][j]; }
    Int block_size(size_t i) const { return block ? sizes[i] : Int(1); }
    Int total_indices() const {
        Int t = 0;
        for (size_t i = 0; i < n(); ++i) t += block_size(i);
        return t;
    }
};

inline BorcherdsMatrix dense_matrix(std::vector<std::vector<Rat>> entries,
                                    std::vector<std::string> labels = {}) {
    BorcherdsMatrix m;
    m.block = false;
    m.a = std::move(entries);
    size_t k = m.a.size();
    for (const auto& row : m.a) require(row.size() == k, "matrix must be square");
    if (labels.empty())
        for (size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i + 1));
    require(labels.size() == k, "label count must match matrix size");
    m.labels = std::move(labels);
    return m;
}

inline BorcherdsMatrix dense_matrix_i(const std::vector<std::vector<long>>& entries) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : entries) rows.emplace_back(r.begin(), r.end());
    return dense_matrix(std::move(rows));
}

struct Violation {
    std::string condition;  // "structure", "C1", "C2", "C3"
    size_t i, j;            // label positions involved
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const {
        std::string s;
        for (const auto& v : violations)
            s += v.condition + " at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
                 "): " + v.detail + "\n";
        return s;
    }
};

// Checks the three defining conditions.  Violations are data, not errors:
// the caller decides whether to stop.
inline ValidationReport validate(const BorcherdsMatrix& m) {
    ValidationReport rep;
    auto flag = [&](std::string cond, size_t i, size_t j, std::string detail) {
        rep.violations.push_back({std::move(cond), i, j, std::move(detail)});
    };
    size_t k = m.n();
    for (const auto& row : m.a)
        if (row.size() != k) {
            flag("structure", 0, 0, "matrix is not square");
            return rep;
        }
    if (m.block) {
        if (m.sizes.size() != k) {
            flag("structure", 0, 0, "one size per block required");
            return rep;
        }
        for (size_t i = 0; i < k; ++i)
            if (m.sizes[i] < 1) flag("structure", i, i, "block size must be >= 1");
    }
    std::set<std::string> seen;
    for (size_t i = 0; i < k; ++i)
        if (!seen.insert(m.labels[i]).second)
            flag("structure", i, i, "duplicate label '" + m.labels[i] + "'");

    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (m.a[i][j] != m.a[j][i])
                flag("C1", i, j,
                     "a(i,j)=" + rat_str(m.a[i][j]) + " but a(j,i)=" + rat_str(m.a[j][i]));

    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            bool offdiag = i != j;
            // two distinct indices inside one block also see the diagonal entry
            if (i == j && m.block && m.sizes[i] >= 2) offdiag = true;
            if (offdiag && i <= j && m.a[i][j] > 0)
                flag("C2", i, j, "off-diagonal entry " + rat_str(m.a[i][j]) + " > 0");
        }
    }

    for (size_t i = 0; i < k; ++i) {
        if (m.a[i][i] <= 0) continue;  // imaginary row: no integrality demand
        for (size_t j = 0; j < k; ++j) {
            if (i == j && !(m.block && m.sizes[i] >= 2)) continue;
            Rat q = Rat(2) * m.a[i][j] / m.a[i][i];
            if (!is_integer(q))
                flag("C3", i, j, "2a(i,j)/a(i,i) = " + rat_str(q) + " is not an integer");
        }
    }
    return rep;
}

struct Classification {
    std::vector<size_t> real_indices;       // label positions with a(i,i) > 0
    std::vector<size_t> imaginary_indices;  // a(i,i) <= 0
    bool theorem51_applicable = false;      // no orthogonal pair of imaginary indices
};

inline Classification classify(const BorcherdsMatrix& m) {
    require(validate(m).ok(), "classify requires a valid matrix");
    Classification c;
    for (size_t i = 0; i < m.n(); ++i)
        (m.a[i][i] > 0 ? c.real_indices : c.imaginary_indices).push_back(i);
    c.theorem51_applicable = true;
    for (size_t x = 0; x < c.imaginary_indices.size() && c.theorem51_applicable; ++x) {
        size_t i = c.imaginary_indices[x];
        // a size->=2 imaginary block with zero diagonal entry holds an
        // orthogonal pair inside itself
        if (m.block && m.sizes[i] >= 2 && m.a[i][i] == 0) c.theorem51_applicable = false;
        for (size_t y = x + 1; y < c.imaginary_indices.size(); ++y)
            if (m.a[i][c.imaginary_indices[y]] == 0) c.theorem51_applicable = false;
    }
    return c;
}

// Pairs of distinct indices whose matrix columns coincide (these index the
// center-contributing pairs).  In block form the pair sets are reported at
// block granularity: every within-block pair qualifies automatically, and a
// cross-block pair qualifies iff the two block columns agree everywhere.
struct CenterPairSet {
    std::vector<std::pair<size_t, size_t>> dense_pairs;     // dense matrices
    std::map<size_t, Int> within;                           // block -> C(size,2)
    std::map<std::pair<size_t, size_t>, Int> cross;         // (b,b') -> size_b*size_b'
    Int total = 0;
};

inline CenterPairSet center_pairs(const BorcherdsMatrix& m) {
    require(validate(m).ok(), "center_pairs requires a valid matrix");
    CenterPairSet out;
    auto columns_equal = [&](size_t i, size_t j) {
        for (size_t k = 0; k < m.n(); ++k)
            if (m.a[k][i] != m.a[k][j]) return false;
        return true;
    };
    if (!m.block) {
        for (size_t i = 0; i < m.n(); ++i)
            for (size_t j = i + 1; j < m.n(); ++j)
                if (columns_equal(i, j)) {
                    out.dense_pairs.emplace_back(i, j);
                    out.total += 1;
                }
        return out;
    }
    for (size_t b = 0; b < m.n(); ++b)
        if (m.sizes[b] >= 2) {
            Int c = m.sizes[b] * (m.sizes[b] - 1) / 2;
            out.within[b] = c;
            out.total += c;
        }
    for (size_t b = 0; b < m.n(); ++b)
        for (size_t b2 = b + 1; b2 < m.n(); ++b2)
            if (columns_equal(b, b2)) {
                Int c = m.sizes[b] * m.sizes[b2];
                out.cross[{b, b2}] = c;
                out.total += c;
            }
    return out;
}

// Block matrix of the monster Lie algebra truncated to labels -1, 1..j_max.
// coeffs[i-1] = c(i) supplies the block sizes; entries are -(i+j).
inline BorcherdsMatrix monster_matrix(long j_max, const std::vector<Int>& coeffs) {
    require(j_max >= 1, "j_max must be >= 1");
    require(coeffs.size() >= static_cast<size_t>(j_max), "coefficient table too short");
    BorcherdsMatrix m;
    m.block = true;
    std::vector<long> vals{-1};
    for (long j = 1; j <= j_max; ++j) vals.push_back(j);
    m.labels.push_back("-1");
    m.sizes.push_back(1);
    for (long j = 1; j <= j_max; ++j) {
        m.labels.push_back(std::to_string(j));
        require(coeffs[j - 1] > 0, "c(" + std::to_string(j) + ") must be positive");
        m.sizes.push_back(coeffs[j - 1]);
    }
    for (long vi : vals) {
        std::vector<Rat> row;
        for (long vj : vals) row.emplace_back(-(vi + vj));
        m.a.push_back(std::move(row));
    }
    return m;
}

// Expand a block matrix into its dense form; refuse beyond `limit` indices.
inline BorcherdsMatrix expand_to_dense(const BorcherdsMatrix& m, long limit = 50) {
    require(m.block, "expand_to_dense needs a block matrix");
    require(m.total_indices() <= limit, "expansion exceeds the index limit");
    BorcherdsMatrix d;
    d.block = false;
    std::vector<size_t> owner;  // dense index -> block
    for (size_t b = 0; b < m.n(); ++b) {
        long s = static_cast<long>(m.sizes[b].get_si());
        for (long k = 1; k <= s; ++k) {
            d.labels.push_back(m.labels[b] + "." + std::to_string(k));
            owner.push_back(b);
        }
    }
    for (size_t i = 0; i < owner.size(); ++i) {
        std::vector<Rat> row;
        for (size_t j = 0; j < owner.size(); ++j) row.push_back(m.a[owner[i]][owner[j]]);
        d.a.push_back(std::move(row));
    }
    return d;
}

// --- file format ----------------------------------------------------------
// {"kind":"dense","labels":[...],"entries":[[rational strings]]}
// {"kind":"block","labels":[...],"sizes":[integer strings],"entries":[...]}

inline BorcherdsMatrix matrix_from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("kind"), "matrix file needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    require(kind == "dense" || kind == "block", "kind must be \"dense\" or \"block\"");
    BorcherdsMatrix m;
    m.block = (kind == "block");
    require(j.contains("labels") && j.at("labels").is_array(), "missing \"labels\" array");
    for (const auto& l : j.at("labels")) m.labels.push_back(l.get<std::string>());
    if (m.block) {
        require(j.contains("sizes") && j.at("sizes").is_array(), "block matrix needs \"sizes\"");
        for (const auto& s : j.at("sizes")) m.sizes.push_back(parse_int(s.get<std::string>()));
    }
    require(j.contains("entries") && j.at("entries").is_array(), "missing \"entries\" array");
    for (const auto& row : j.at("entries")) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(parse_rat(v.get<std::string>()));
        m.a.push_back(std::move(r));
    }
    require(m.a.size() == m.n(), "entry row count must match label count");
    for (const auto& row : m.a)
        require(row.size() == m.n(), "entry column count must match label count");
    return m;
}

inline nlohmann::json matrix_to_json(const BorcherdsMatrix& m) {
    nlohmann::json j;
    j["kind"] = m.block ? "block" : "dense";
    j["labels"] = m.labels;
    if (m.block) {
        std::vector<std::string> ss;
        for (const auto& s : m.sizes) ss.push_back(s.get_str());
        j["sizes"] = ss;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : m.a) {
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(rat_str(v));
        rows.push_back(std::move(r));
    }
    j["entries"] = rows;
    return j;
}

inline BorcherdsMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("matrix file '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

inline void save_matrix(const BorcherdsMatrix& m, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write matrix file '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

}  // namespace gkm
