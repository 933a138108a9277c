#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/matrix.hpp"
#include "gkm/tables.hpp"
#include "gkm/witt.hpp"

namespace gkm {

// Independent oracle for graded free-Lie dimensions and for dimensions of
// the quotient by the relation ideal: Lyndon words are enumerated one by
// one (never counted through the Witt formulas, which this oracle exists to
// check), and relation spans are ranked by exact rational elimination in
// the tensor algebra.

constexpr size_t kDefaultSymbolLimit = 12;

// Generator degrees expanded into one symbol per copy, ascending by degree.
inline std::vector<Multidegree> expand_symbols(const GeneratorTable& g,
                                               size_t limit = kDefaultSymbolLimit) {
    g.check();
    std::vector<Multidegree> sym;
    for (const auto& [deg, count] : g.n) {
        require(count <= static_cast<long>(limit), "generator count exceeds the symbol limit");
        for (Int k = 0; k < count; ++k) sym.push_back(deg);
    }
    require(sym.size() <= limit, "total symbol count " + std::to_string(sym.size()) +
                                     " exceeds the limit " + std::to_string(limit));
    return sym;
}

// Generate every Lyndon word over the symbol alphabet whose accumulated
// degree stays under the bound; recursive prenecklace extension (Duval
// style), with the degree accumulating monotonically so subtrees prune.
// emit(word, degree) receives the letters and the degree sum.
inline void lyndon_generate(
    const std::vector<Multidegree>& sym_deg, const Multidegree& max,
    std::optional<long> total_max,
    const std::function<void(const std::vector<int>&, const Multidegree&)>& emit) {
    size_t K = sym_deg.size();
    if (K == 0) return;
    long cap = 0;
    for (long x : max.e) cap += x;
    if (total_max) cap = std::min(cap, *total_max);
    std::vector<int> a(static_cast<size_t>(std::max(cap, 0L)));
    Multidegree acc = Multidegree::zero(max.arity());
    std::function<void(size_t, size_t)> rec = [&](size_t len, size_t p) {
        if (p == len) {
            std::vector<int> word(a.begin(), a.begin() + len);
            emit(word, acc);
        }
        if (len == a.size()) return;
        for (int s = a[len - p]; s < static_cast<int>(K); ++s) {
            acc += sym_deg[s];
            if (acc.dominated_by(max) && (!total_max || acc.height() <= *total_max)) {
                a[len] = s;
                rec(len + 1, s == a[len - p] ? p : len + 1);
            }
            acc = acc - sym_deg[s];
        }
    };
    for (int s = 0; s < static_cast<int>(K); ++s) {
        acc += sym_deg[s];
        if (acc.dominated_by(max) && (!total_max || acc.height() <= *total_max)) {
            a[0] = s;
            rec(1, 1);
        }
        acc = acc - sym_deg[s];
    }
}

// Free-Lie graded dimensions by direct count of Lyndon words per degree.
inline DimTable lyndon_dims(const GeneratorTable& g, const Multidegree& max,
                            std::optional<long> total_max = std::nullopt,
                            size_t limit = kDefaultSymbolLimit) {
    auto sym = expand_symbols(g, limit);
    for (const auto& d : sym)
        require(d.arity() == max.arity(), "generator/bound arity mismatch");
    DimTable out;
    lyndon_generate(sym, max, total_max,
                    [&](const std::vector<int>&, const Multidegree& deg) { out.d[deg] += 1; });
    return out;
}

// --- tensor algebra -------------------------------------------------------
// Words over symbol ids as byte strings; elements as sparse word -> rational
// maps.  The free Lie algebra embeds via the commutator, and ranks of
// relation spans are computed per degree by Gaussian elimination.

using TensorElt = std::map<std::string, Rat>;

inline void tensor_add(TensorElt& x, const std::string& w, const Rat& c) {
    if (c == 0) return;
    Rat& slot = x[w];
    slot += c;
    if (slot == 0) x.erase(w);
}

inline TensorElt bracket(const TensorElt& x, const TensorElt& y) {
    TensorElt r;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) {
            Rat c = cu * cv;
            tensor_add(r, u + v, c);
            tensor_add(r, v + u, -c);
        }
    return r;
}

inline TensorElt symbol_elt(int i) { return {{std::string(1, static_cast<char>(i)), Rat(1)}}; }

// Reduced row space keyed by pivot word (lexicographically smallest word of
// each stored row); insertion order cannot change the resulting rank.
struct RowSpace {
    std::map<std::string, TensorElt> rows;

    size_t rank() const { return rows.size(); }

    // Reduce v against the stored rows; if a nonzero remainder is left it
    // becomes a new row (pivot coefficient normalized to 1) and the return
    // value is true.
    bool insert(TensorElt v) {
        while (!v.empty()) {
            const std::string& pivot = v.begin()->first;
            auto it = rows.find(pivot);
            if (it == rows.end()) {
                Rat lead = v.begin()->second;
                for (auto& [w, c] : v) c /= lead;
                rows.emplace(pivot, std::move(v));
                return true;
            }
            Rat factor = v.begin()->second;
            for (const auto& [w, c] : it->second) tensor_add(v, w, -factor * c);
        }
        return false;
    }
};

// Standard bracketing of a Lyndon word: w = uv with v the longest proper
// Lyndon suffix, mapped to [b(u), b(v)].
inline TensorElt lyndon_bracketing(const std::vector<int>& w) {
    affirm(!w.empty(), "empty word has no bracketing");
    if (w.size() == 1) return symbol_elt(w[0]);
    auto is_lyndon = [](const std::vector<int>& u) {
        for (size_t k = 1; k < u.size(); ++k) {
            std::vector<int> rot(u.begin() + k, u.end());
            rot.insert(rot.end(), u.begin(), u.begin() + k);
            if (!(u < rot)) return false;
        }
        return true;
    };
    for (size_t cut = 1; cut < w.size(); ++cut) {
        std::vector<int> v(w.begin() + cut, w.end());
        if (is_lyndon(v)) {
            std::vector<int> u(w.begin(), w.begin() + cut);
            return bracket(lyndon_bracketing(u), lyndon_bracketing(v));
        }
    }
    throw internal_error("no standard factorization; input was not a Lyndon word");
}

// --- relation ideal and quotient dimensions -------------------------------

// Closure of the relation ideal of a dense matrix, height by height:
//   generators   (ad e_i)^(1-2a_ij/a_ii) e_j   for i != j with a_ii > 0,
//                [e_i, e_j]                    for i < j with a_ij = 0,
// then repeated bracketing with the e_i (which generate, so left-ad closure
// under them spans the full ideal in each degree).
class RelationIdeal {
  public:
    RelationIdeal(const BorcherdsMatrix& m, long max_height) : n_(m.n()) {
        require(!m.block, "relation ideal needs a dense matrix");
        require(validate(m).ok(), "relation ideal needs a valid matrix");
        require(max_height >= 1, "height bound must be >= 1");

        std::map<long, std::vector<std::pair<Multidegree, TensorElt>>> pending;
        auto schedule = [&](const Multidegree& deg, TensorElt elt) {
            if (deg.height() <= max_height) pending[deg.height()].push_back({deg, std::move(elt)});
        };
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j) {
                if (i == j) continue;
                if (m.a[i][i] > 0) {
                    Rat q = Rat(2) * m.a[i][j] / m.a[i][i];
                    affirm(is_integer(q), "C3 slipped through validation");
                    long power = 1 - q.get_num().get_si();
                    Multidegree deg = Multidegree::zero(n_);
                    deg.e[i] = power;
                    deg.e[j] += 1;
                    if (deg.height() > max_height) continue;
                    TensorElt elt = symbol_elt(static_cast<int>(j));
                    for (long k = 0; k < power; ++k)
                        elt = bracket(symbol_elt(static_cast<int>(i)), elt);
                    schedule(deg, std::move(elt));
                } else if (i < j && m.a[i][j] == 0) {
                    Multidegree deg = Multidegree::zero(n_);
                    deg.e[i] = deg.e[j] = 1;
                    schedule(deg, bracket(symbol_elt(static_cast<int>(i)),
                                          symbol_elt(static_cast<int>(j))));
                }
            }

        for (long h = 2; h <= max_height; ++h) {
            // brackets of everything one height down, then this height's
            // scheduled generators
            std::vector<std::pair<Multidegree, TensorElt>> grown;
            for (const auto& [deg, space] : span_)
                if (deg.height() == h - 1)
                    for (const auto& [pivot, row] : space.rows)
                        for (size_t i = 0; i < n_; ++i) {
                            Multidegree d2 = deg;
                            d2.e[i] += 1;
                            grown.push_back({d2, bracket(symbol_elt(static_cast<int>(i)), row)});
                        }
            for (auto& [deg, elt] : grown) span_[deg].insert(std::move(elt));
            auto it = pending.find(h);
            if (it != pending.end())
                for (auto& [deg, elt] : it->second) span_[deg].insert(std::move(elt));
        }
    }

    size_t rank_at(const Multidegree& deg) const {
        auto it = span_.find(deg);
        return it == span_.end() ? 0 : it->second.rank();
    }

    const RowSpace* space_at(const Multidegree& deg) const {
        auto it = span_.find(deg);
        return it == span_.end() ? nullptr : &it->second;
    }

    size_t index_count() const { return n_; }

  private:
    size_t n_;
    std::map<Multidegree, RowSpace> span_;
};

// Dimensions of the graded quotient: Lyndon count minus relation rank at
// every content of height <= max_height (zeros stored, so tables compare
// degree-for-degree against the Witt side).
struct OracleResult {
    DimTable dims;
    // content -> surviving Lyndon words (only when a basis was requested)
    std::map<Multidegree, std::vector<std::vector<int>>> basis;
};

inline OracleResult quotient_dims(const BorcherdsMatrix& m, long max_height,
                                  bool want_basis = false,
                                  size_t limit = kDefaultSymbolLimit) {
    require(!m.block, "quotient dimensions need a dense matrix");
    require(validate(m).ok(), "quotient dimensions need a valid matrix");
    size_t n = m.n();
    require(n <= limit, "index count exceeds the symbol limit");
    RelationIdeal ideal(m, max_height);

    std::vector<Multidegree> sym;
    for (size_t i = 0; i < n; ++i) sym.push_back(Multidegree::unit(n, i));
    Multidegree max(std::vector<long>(n, max_height));

    std::map<Multidegree, std::vector<std::vector<int>>> words;
    lyndon_generate(sym, max, max_height,
                    [&](const std::vector<int>& w, const Multidegree& deg) {
                        words[deg].push_back(w);
                    });

    OracleResult out;
    Multidegree content = Multidegree::zero(n);
    while (true) {  // every content with height in [1, max_height]
        long h = content.height();
        if (h >= 1 && h <= max_height) {
            auto it = words.find(content);
            size_t lyndon = it == words.end() ? 0 : it->second.size();
            size_t rank = ideal.rank_at(content);
            affirm(rank <= lyndon, "relation rank exceeds the free dimension at " + content.str());
            out.dims.d[content] = static_cast<long>(lyndon - rank);
            if (want_basis && it != words.end()) {
                // surviving words: those whose bracketings stay independent
                // modulo the relation span, in lexicographic word order
                RowSpace probe;
                if (const RowSpace* sp = ideal.space_at(content))
                    for (const auto& [pivot, row] : sp->rows) probe.insert(row);
                for (const auto& w : it->second)
                    if (probe.insert(lyndon_bracketing(w))) out.basis[content].push_back(w);
            }
        }
        size_t i = 0;
        while (i < n && content.e[i] == max_height) content.e[i++] = 0;
        if (i == n) break;
        ++content.e[i];
    }
    return out;
}

// --- free-generator split -------------------------------------------------

// For a matrix with no orthogonal pair of imaginary indices, the positive
// part decomposes over the real-rooted subalgebra: a sub-quotient on the
// real index set J plus a free Lie algebra whose generator count at each
// degree is the rank added by words (ad e_{i_1})...(ad e_{i_r}) e_j, i in
// J, j outside, modulo the relation span.
struct SplitResult {
    DimTable gJ_dims;          // quotient dims of the J-submatrix, embedded
    GeneratorTable free_gens;  // degrees of the free generators
};

inline SplitResult theorem51_split(const BorcherdsMatrix& m, long max_height,
                                   size_t limit = kDefaultSymbolLimit) {
    require(!m.block, "split needs a dense matrix");
    auto cls = classify(m);
    require(cls.theorem51_applicable,
            "split hypothesis violated: mutually orthogonal imaginary simple roots present");
    size_t n = m.n();
    require(n <= limit, "index count exceeds the symbol limit");
    const auto& J = cls.real_indices;

    SplitResult out;
    if (!J.empty()) {
        BorcherdsMatrix sub;
        sub.block = false;
        for (size_t x = 0; x < J.size(); ++x) {
            sub.labels.push_back(m.labels[J[x]]);
            std::vector<Rat> row;
            for (size_t y = 0; y < J.size(); ++y) row.push_back(m.a[J[x]][J[y]]);
            sub.a.push_back(std::move(row));
        }
        for (const auto& [deg, v] : quotient_dims(sub, max_height, false, limit).dims.d) {
            Multidegree full = Multidegree::zero(n);
            for (size_t x = 0; x < J.size(); ++x) full.e[J[x]] = deg.e[x];
            out.gJ_dims.d[full] = v;
        }
    }

    RelationIdeal ideal(m, max_height);
    // all words (ad e_{i_1})...(ad e_{i_r}) e_j grouped by content
    std::map<Multidegree, std::vector<TensorElt>> candidates;
    for (size_t j : cls.imaginary_indices) {
        std::function<void(const Multidegree&, const TensorElt&, long)> grow =
            [&](const Multidegree& deg, const TensorElt& elt, long height) {
                candidates[deg].push_back(elt);
                if (height == max_height) return;
                for (size_t i : J) {
                    Multidegree d2 = deg;
                    d2.e[i] += 1;
                    grow(d2, bracket(symbol_elt(static_cast<int>(i)), elt), height + 1);
                }
            };
        grow(Multidegree::unit(n, j), symbol_elt(static_cast<int>(j)), 1);
    }
    for (const auto& [deg, elts] : candidates) {
        RowSpace probe;
        if (const RowSpace* sp = ideal.space_at(deg))
            for (const auto& [pivot, row] : sp->rows) probe.insert(row);
        long added = 0;
        for (const auto& v : elts)
            if (probe.insert(v)) ++added;
        if (added > 0) out.free_gens.n[deg] = added;
    }
    return out;
}

// Reassemble the split and compare against the direct quotient, degree for
// degree up to the height bound.
inline MismatchReport verify_theorem51(const BorcherdsMatrix& m, long max_height,
                                       size_t limit = kDefaultSymbolLimit) {
    SplitResult split = theorem51_split(m, max_height, limit);
    DegreeCounts assembled = split.gJ_dims.d;
    if (!split.free_gens.n.empty()) {
        Multidegree max(std::vector<long>(m.n(), max_height));
        for (const auto& [deg, v] : witt_dimensions(split.free_gens, max, max_height).d)
            if (v != 0) assembled[deg] += v;
    }
    DegreeCounts direct;  // drop zero cells so both sides compare sparsely
    for (const auto& [deg, v] : quotient_dims(m, max_height, false, limit).dims.d)
        if (v != 0) direct[deg] = v;
    std::erase_if(assembled, [](const auto& kv) { return kv.second == 0; });
    return counts_diff(direct, assembled);
}

}  // namespace gkm
