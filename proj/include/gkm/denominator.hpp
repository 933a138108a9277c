#pragma once

// Both sides of the graded denominator identity of a Borcherds matrix,
// truncated at a configurable height: the product over positive roots with
// their multiplicities against the alternating Weyl-group sum with its
// orthogonal-imaginary correction terms, plus the factored form that splits
// off the free part (verify_cor52).
//
// Weight bookkeeping uses the convention (rho, alpha_i) = -a_ii/2 for every
// simple root, real or imaginary.  That sign choice makes w(rho+gamma)-rho a
// nonnegative combination of simple roots for every enumerated w, so the
// alternating sum is an honest power series; gkm_rhs hard-errors if any
// exponent ever leaves the positive cone.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkm/lie_oracle.hpp"
#include "gkm/matrix.hpp"
#include "gkm/series.hpp"
#include "gkm/tables.hpp"
#include "gkm/witt.hpp"

namespace gkm {

// One Weyl-group element, generated by the reflections in the real simple
// roots.  action holds w(alpha_j) in the simple-root basis, one column per
// j; C3 keeps every entry an integer.  rho_shift is w(rho) - rho.
struct WeylElement {
    std::vector<int> word;  // reduced word of real simple indices
    int sign = 1;           // det w = (-1)^length
    Multidegree rho_shift;
    std::vector<std::vector<Int>> action;
};

// All Weyl elements with ht(w(rho) - rho) <= height_bound, by breadth-first
// right extension w -> w r_i.  The extension is reduced exactly when
// w(alpha_i) is a positive root, and then w r_i (rho) - rho grows by
// w(alpha_i), so the shift height strictly increases along every reduced
// word and pruning at the bound loses nothing.
inline std::vector<WeylElement> weyl_enumerate(const BorcherdsMatrix& m, long height_bound) {
    require(!m.block, "weyl_enumerate expects a dense matrix");
    require(height_bound >= 0, "height bound must be nonnegative");
    auto cls = classify(m);
    size_t n = m.n();

    // row i of the integer Cartan data: q[j] = 2 a_ij / a_ii
    std::map<int, std::vector<Int>> cartan_row;
    for (int i : cls.real_indices) {
        std::vector<Int> row(n);
        for (size_t j = 0; j < n; ++j) {
            Rat q = Rat(2) * m.a[i][j] / m.a[i][i];
            affirm(is_integer(q), "non-integral reflection coefficient survived validation");
            row[j] = q.get_num();
        }
        cartan_row.emplace(i, std::move(row));
    }

    WeylElement id;
    id.rho_shift = Multidegree::zero(n);
    id.action.assign(n, std::vector<Int>(n, 0));
    for (size_t j = 0; j < n; ++j) id.action[j][j] = 1;

    auto key = [n](const WeylElement& w) {
        std::string k = w.rho_shift.str();
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                k += '|';
                k += w.action[r][c].get_str();
            }
        return k;
    };

    std::vector<WeylElement> out{id};
    std::set<std::string> seen{key(id)};
    std::vector<WeylElement> frontier{id};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (int i : cls.real_indices) {
                std::vector<Int> wai(n);  // w(alpha_i): column i of the action
                bool nonneg = true, nonzero = false;
                for (size_t r = 0; r < n; ++r) {
                    wai[r] = w.action[r][i];
                    nonneg = nonneg && wai[r] >= 0;
                    nonzero = nonzero || wai[r] != 0;
                }
                if (!nonneg || !nonzero) continue;  // w r_i not reduced

                Int ht = 0;
                for (size_t r = 0; r < n; ++r) ht += w.rho_shift.e[r] + wai[r];
                if (ht > height_bound) continue;  // no reduced extension returns

                WeylElement e;
                e.word = w.word;
                e.word.push_back(i);
                e.sign = -w.sign;
                e.rho_shift = w.rho_shift;
                for (size_t r = 0; r < n; ++r) {
                    affirm(wai[r].fits_slong_p(), "Weyl shift overflow");
                    e.rho_shift.e[r] += wai[r].get_si();
                }
                e.action = w.action;
                const auto& q = cartan_row.at(i);
                for (size_t c = 0; c < n; ++c) {
                    if (q[c] == 0) continue;
                    for (size_t r = 0; r < n; ++r) e.action[r][c] -= q[c] * wai[r];
                }
                if (!seen.insert(key(e)).second) continue;
                out.push_back(e);
                next.push_back(std::move(e));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// A set S of pairwise-orthogonal imaginary simple roots and its sum.
struct OmegaElement {
    std::vector<int> indices;  // ascending
    Multidegree gamma;
    size_t length() const { return indices.size(); }
};

// Every subset of the imaginary simple indices with a_ij = 0 for all chosen
// pairs and |S| <= height_bound, the empty set included.  All orthogonal
// subsets are accepted; whether each sum is itself a root is not tested
// here (see README on the correction-term convention).
inline std::vector<OmegaElement> omega0_enumerate(const BorcherdsMatrix& m, long height_bound) {
    require(!m.block, "omega0_enumerate expects a dense matrix");
    require(height_bound >= 0, "height bound must be nonnegative");
    auto cls = classify(m);
    std::vector<OmegaElement> out;
    OmegaElement cur{{}, Multidegree::zero(m.n())};
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        if (static_cast<long>(cur.indices.size()) >= height_bound) return;
        for (size_t t = from; t < cls.imaginary_indices.size(); ++t) {
            int j = cls.imaginary_indices[t];
            bool orthogonal = true;
            for (int i : cur.indices) orthogonal = orthogonal && m.a[i][j] == 0;
            if (!orthogonal) continue;
            cur.indices.push_back(j);
            cur.gamma.e[j] += 1;
            self(self, t + 1);
            cur.indices.pop_back();
            cur.gamma.e[j] -= 1;
        }
    };
    rec(rec, 0);
    return out;
}

// The alternating side of the identity:
//   sum over w in W, gamma in Omega(0) of
//     (det w) (-1)^{|gamma|} T^{w(rho+gamma)-rho}
// truncated to height <= order.  Exponents are computed as
// (w rho - rho) + w(gamma); since w permutes the positive imaginary roots,
// both summands stay in the positive cone, which is affirmed per term.
inline ExactSeries gkm_rhs(const BorcherdsMatrix& m, long order) {
    require(!m.block, "gkm_rhs expects a dense matrix");
    require(order >= 0, "order must be nonnegative");
    size_t n = m.n();
    auto weyl = weyl_enumerate(m, order);
    auto omega = omega0_enumerate(m, order);
    ExactSeries rhs(Box::orthant(n, order, order));
    for (const auto& w : weyl) {
        for (const auto& g : omega) {
            std::vector<Int> expo(n);
            Int ht = 0;
            for (size_t r = 0; r < n; ++r) {
                expo[r] = w.rho_shift.e[r];
                for (int j : g.indices) expo[r] += w.action[r][j];
                affirm(expo[r] >= 0,
                       "alternating-sum exponent left the positive cone at coordinate " +
                           std::to_string(r));
                ht += expo[r];
            }
            if (ht > order) continue;
            std::vector<long> e(n);
            for (size_t r = 0; r < n; ++r) e[r] = expo[r].get_si();
            rhs.add(Multidegree(e), (g.length() % 2 == 0) ? w.sign : -w.sign);
        }
    }
    return rhs;
}

// prod over degrees phi of (1 - T^phi)^{d(phi)} up to height order.  The
// table must answer for every nonzero degree in the window, zeros spelled
// out, because a missing entry is indistinguishable from an unknown
// dimension.
inline ExactSeries product_side(const DimTable& d, long order) {
    require(order >= 0, "order must be nonnegative");
    require(!d.d.empty(), "empty dimension table");
    size_t n = d.d.begin()->first.arity();
    Box box = Box::orthant(n, order, order);
    Multidegree probe(box.lo);
    while (true) {
        if (!probe.is_zero() && probe.height() <= order)
            require(d.d.count(probe) != 0, "dimension table gap at degree " + probe.str());
        size_t i = 0;
        while (i < n && probe.e[i] == box.hi[i]) {
            probe.e[i] = box.lo[i];
            ++i;
        }
        if (i == n) break;
        ++probe.e[i];
    }
    return product_over_table(d.d, box);
}

// Product side from the oracle dimensions against the alternating sum,
// compared coefficient by coefficient inside the window.
inline MismatchReport verify_eq6(const BorcherdsMatrix& m, long order,
                                 size_t symbol_limit = kDefaultSymbolLimit) {
    require(!m.block, "verify_eq6 expects a dense matrix");
    auto dims = quotient_dims(m, order, false, symbol_limit).dims;
    return compare_series(product_side(dims, order), gkm_rhs(m, order));
}

namespace detail {

// Factored form, dense path.  Dimensions are assembled from the split
// (real-part quotient plus Witt dimensions of the free generators), and the
// alternating sum factors as (Weyl numerator) * (1 - sum of generators).
inline MismatchReport cor52_dense(const BorcherdsMatrix& m, long order, size_t symbol_limit) {
    auto split = theorem51_split(m, order, symbol_limit);
    size_t n = m.n();
    DimTable dims = witt_dimensions(split.free_gens, Multidegree(std::vector<long>(n, order)), order);
    for (const auto& [deg, v] : split.gJ_dims.d) dims.d[deg] += v;
    ExactSeries lhs = product_side(dims, order);

    Box box = Box::orthant(n, order, order);
    ExactSeries numer(box);
    for (const auto& w : weyl_enumerate(m, order)) numer.add(w.rho_shift, w.sign);
    ExactSeries tail = ExactSeries::one(box);
    for (const auto& [deg, count] : split.free_gens.n) tail.add(deg, -count);
    return compare_series(lhs, series_mul(numer, tail));
}

// Factored form, block path, for monster-shaped matrices: one real block of
// size one at level -1, imaginary blocks at positive integer levels, block
// b regraded to (1, level_b).  With a single real root the surviving free
// generators are exactly (ad e_r)^t e_j for t = 0 .. -2 a_rj / a_rr, which
// the regrading places at (1+t, level_j - t); each one appears once per
// column of its block.  Everything is then a two-variable Witt computation:
// no per-copy symbols, so truncated monster matrices with c(n)-sized blocks
// stay cheap.
//
// The real root sits at (1,-1), outside the quadrant, so the positive
// factors are expanded in an internal window with one extra row of the
// second variable, the factor (1 - u v^{-1}) is applied last, and the
// comparison window lets the second variable reach -1.
inline MismatchReport cor52_block(const BorcherdsMatrix& m, long order) {
    auto cls = classify(m);
    require(cls.theorem51_applicable,
            "split hypothesis violated: mutually orthogonal imaginary simple roots present");
    require(cls.real_indices.size() == 1, "block identity check expects exactly one real block");
    size_t rb = static_cast<size_t>(cls.real_indices[0]);
    require(m.sizes[rb] == 1, "block identity check expects a real block of size one");
    require(order >= 1, "order must be at least 1");

    std::vector<long> level(m.n());
    for (size_t b = 0; b < m.n(); ++b) {
        try {
            level[b] = std::stol(m.labels[b]);
        } catch (const std::exception&) {
            throw std::invalid_argument("block identity check needs integer labels, got \"" +
                                        m.labels[b] + "\"");
        }
    }
    require(level[rb] == -1, "block identity check expects the real block at level -1");

    GeneratorTable gens;
    for (size_t b = 0; b < m.n(); ++b) {
        if (b == rb) continue;
        require(level[b] >= 1, "imaginary block levels must be positive integers");
        Rat q = Rat(-2) * m.entry(rb, b) / m.entry(rb, rb);
        affirm(is_integer(q), "non-integral reflection coefficient survived validation");
        affirm(q.get_num().fits_slong_p(), "Serre exponent overflow");
        long steps = q.get_num().get_si();
        for (long t = 0; t <= steps; ++t) {
            long u = 1 + t, v = level[b] - t;
            require(v >= 1, "free generator left the positive quadrant at block " + m.labels[b]);
            if (u > order || v > order + 1) continue;  // outside the working window
            gens.n[Multidegree({u, v})] += m.sizes[b];
        }
    }

    Box internal = Box::orthant(2, order, std::nullopt);
    internal.hi[1] = order + 1;
    Box window = internal;
    window.lo[1] = -1;
    window.hi[1] = order;
    Multidegree real_root({1, -1});

    DimTable dims = witt_dimensions(gens, Multidegree({order, order + 1}));
    ExactSeries positive = product_over_table(dims.d, internal);
    ExactSeries lhs = apply_one_minus_factor(positive, real_root, 1, window);

    ExactSeries tail = ExactSeries::one(internal);
    for (const auto& [deg, count] : gens.n) tail.add(deg, -count);
    ExactSeries rhs = apply_one_minus_factor(tail, real_root, 1, window);
    return compare_series(lhs, rhs);
}

}  // namespace detail

// The factored denominator identity:
//   prod (1-T^phi)^{dim} = [sum over W of (det w) T^{w rho - rho}]
//                          * [1 - sum of free-generator degrees]
// Dense matrices run the oracle-backed split; block matrices run the
// two-variable specialization.
inline MismatchReport verify_cor52(const BorcherdsMatrix& m, long order,
                                   size_t symbol_limit = kDefaultSymbolLimit) {
    require(order >= 0, "order must be nonnegative");
    return m.block ? detail::cor52_block(m, order) : detail::cor52_dense(m, order, symbol_limit);
}

}  // namespace gkm
