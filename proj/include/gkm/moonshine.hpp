#pragma once

// The modular side of the story: exact q-expansion of the j-function, the
// two-variable product identity u(J(u) - J(v)) = prod (1-u^i v^j)^{c(ij)},
// the monster root multiplicities dim g^{(i,j)} = c(ij) recovered through
// the Witt formula, and the recursive coefficient relations that follow.
//
// All series arithmetic is integer-exact; j is computed as E4^3 / Delta with
// Delta built from the 24th power of the pentagonal-number Euler product.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/combinatorics.hpp"
#include "gkm/series.hpp"
#include "gkm/tables.hpp"
#include "gkm/witt.hpp"

namespace gkm {

// q-expansion coefficients c(-1), c(0), ..., c(order) of j.  c(0) = 744 is
// stored but dropped whenever J = j - 744 is meant.
struct JExpansion {
    long order = -1;
    std::vector<Int> c;  // c[i + 1] holds c(i)

    const Int& at(long i) const {
        require(i >= -1 && i <= order,
                "j-coefficient c(" + std::to_string(i) + ") beyond computed order " +
                    std::to_string(order));
        return c[static_cast<size_t>(i + 1)];
    }

    // Fault-injection helper: a copy with c(n) shifted and *no* invariant
    // re-checks, so the damage can propagate to the verifiers under test.
    JExpansion with_perturbed(long n, long delta) const {
        require(n >= -1 && n <= order, "perturbation index out of range");
        JExpansion out = *this;
        out.c[static_cast<size_t>(n + 1)] += delta;
        return out;
    }
};

namespace detail {

// plain truncated integer series on q^0..q^(len-1)
inline std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b,
                                  size_t len) {
    std::vector<Int> r(len, 0);
    for (size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline std::vector<Int> pow_trunc(std::vector<Int> base, unsigned long e, size_t len) {
    std::vector<Int> r(len, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = mul_trunc(r, base, len);
        base = mul_trunc(base, base, len);
        e >>= 1;
    }
    return r;
}

// prod_{n>=1} (1 - q^n) via the pentagonal-number theorem
inline std::vector<Int> euler_product(size_t len) {
    std::vector<Int> r(len, 0);
    r[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (static_cast<size_t>(g1) >= len && static_cast<size_t>(g2) >= len) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (static_cast<size_t>(g1) < len) r[g1] += sign;
        if (static_cast<size_t>(g2) < len) r[g2] += sign;
    }
    return r;
}

// a / b with exact coefficient division at every step
inline std::vector<Int> div_trunc(const std::vector<Int>& a, const std::vector<Int>& b,
                                  size_t len) {
    affirm(!b.empty() && b[0] != 0, "series division by a series with no constant term");
    std::vector<Int> q(len, 0);
    for (size_t m = 0; m < len; ++m) {
        Int acc = m < a.size() ? a[m] : Int(0);
        for (size_t k = 1; k <= m && k < b.size(); ++k) acc -= b[k] * q[m - k];
        affirm(mpz_divisible_p(acc.get_mpz_t(), b[0].get_mpz_t()) != 0,
               "non-integer j-expansion coefficient");
        mpz_divexact(q[m].get_mpz_t(), acc.get_mpz_t(), b[0].get_mpz_t());
    }
    return q;
}

}  // namespace detail

// j = E4^3 / Delta expanded to q^order, exactly.  Delta's own coefficients
// are Ramanujan tau values, which pins the eta-power path: tau(1) = 1 and
// tau(2) = -24 are affirmed, and the path is run at a second truncation to
// catch any length-dependent bug.
inline JExpansion j_coefficients(long order) {
    require(order >= 1, "order must be at least 1");
    size_t len = static_cast<size_t>(order) + 2;  // exponents 0 .. order+1

    auto delta_over_q = detail::pow_trunc(detail::euler_product(len), 24, len);
    affirm(delta_over_q[0] == 1 && delta_over_q[1] == -24,
           "tau values off: eta-power expansion broken");
    auto replay = detail::pow_trunc(detail::euler_product(4), 24, 4);
    for (size_t k = 0; k < replay.size(); ++k)
        affirm(replay[k] == delta_over_q[k], "eta-power expansion depends on truncation length");

    std::vector<Int> e4(len, 0);
    e4[0] = 1;
    for (size_t m = 1; m < len; ++m) {
        Int sigma3 = 0;
        for (long d : divisors(static_cast<long>(m))) sigma3 += Int(d) * Int(d) * Int(d);
        e4[m] = 240 * sigma3;
    }

    auto q = detail::div_trunc(detail::mul_trunc(detail::mul_trunc(e4, e4, len), e4, len),
                               delta_over_q, len);
    JExpansion J;
    J.order = order;
    J.c = std::move(q);  // q[m] = c(m - 1)
    affirm(J.at(-1) == 1, "c(-1) must be 1");
    affirm(J.at(0) == 744, "c(0) must be 744");
    affirm(J.at(1) == 196884, "c(1) must be 196884");
    for (long i = -1; i <= order; ++i)
        affirm(J.at(i) >= 0, "negative j-coefficient at " + std::to_string(i));
    return J;
}

// u (J(u) - J(v)) with J = j - 744, truncated to u in [0, order] and
// v in [-1, order].  Support is the v = 0 column (from u J(u)) and the
// u = 1 row (from -u J(v)); the two overlap at uv, where c(1) appears once
// with each sign and cancels.
inline ExactSeries lhs_series(long order, const JExpansion& J) {
    require(order >= 1, "order must be at least 1");
    require(J.order >= order, "coefficient table shorter than the requested order");
    Box window = Box::orthant(2, order, std::nullopt);
    window.lo[1] = -1;
    ExactSeries s(window);
    for (long i = -1; i <= order; ++i) {
        if (i == 0) continue;  // J has no constant term
        s.add(Multidegree({i + 1, 0}), J.at(i));
        s.add(Multidegree({1, i}), -J.at(i));
    }
    return s;
}

inline ExactSeries lhs_series(long order) { return lhs_series(order, j_coefficients(order)); }

// prod_{i>=1, j in {-1} union Z+} (1 - u^i v^j)^{c(ij)} in the same window.
// The positive factors are expanded in an internal window whose v range is
// one row taller, [0, order+1]: the factor (1 - u v^{-1})^{c(-1)}, applied
// last, drags (i, order+1) terms with i <= order-1 back down to v = order,
// so that margin row belongs to the truncation even though the final window
// ends at v = order.  Everything at v = order+1 or u beyond the window dies
// in the restriction.
inline ExactSeries rhs_product(long order, const JExpansion& J) {
    require(order >= 1, "order must be at least 1");
    require(J.order >= order * order,
            "product factors need c up to " + std::to_string(order * order));
    Box internal = Box::orthant(2, order, std::nullopt);
    internal.hi[1] = order + 1;
    Box window = internal;
    window.lo[1] = -1;
    window.hi[1] = order;

    std::map<Multidegree, Int> table;
    for (long i = 1; i <= order; ++i) {
        for (long j = 1; j <= order + 1; ++j) {
            if (j == order + 1 && i > order - 1) continue;  // margin row, see above
            table[Multidegree({i, j})] = J.at(i * j);
        }
    }
    ExactSeries positive = product_over_table(table, internal);
    return apply_one_minus_factor(positive, Multidegree({1, -1}), J.at(-1), window);
}

inline ExactSeries rhs_product(long order) {
    return rhs_product(order, j_coefficients(order * order));
}

// coefficient-by-coefficient comparison of the two sides
inline MismatchReport verify_monster_product(long order, const JExpansion& J) {
    require(order >= 2, "order must be at least 2");
    return compare_series(lhs_series(order, J), rhs_product(order, J));
}

inline MismatchReport verify_monster_product(long order) {
    require(order >= 2, "order must be at least 2");
    return verify_monster_product(order, j_coefficients(order * order));
}

// Free generators of the positive part of the monster algebra after the
// level -1 root is split off: c(i+j-1) generators in degree (i, j) for
// every i, j >= 1.
inline GeneratorTable monster_generator_table(long order, const JExpansion& J) {
    require(order >= 1, "order must be at least 1");
    require(J.order >= 2 * order - 1, "generator counts need c up to 2*order-1");
    GeneratorTable g;
    for (long i = 1; i <= order; ++i)
        for (long j = 1; j <= order; ++j)
            if (J.at(i + j - 1) != 0) g.n[Multidegree({i, j})] = J.at(i + j - 1);
    return g;
}

// Witt dimensions of the free part plus the one-dimensional space at
// (1,-1), against the claimed c(ij), as a report.
inline MismatchReport verify_monster_dims(long order, const JExpansion& J) {
    require(order >= 1, "order must be at least 1");
    require(J.order >= order * order, "expected dimensions need c up to order^2");
    DimTable got =
        witt_dimensions(monster_generator_table(order, J), Multidegree({order, order}));
    got.d[Multidegree({1, -1})] += 1;

    DegreeCounts want;
    want[Multidegree({1, -1})] = 1;
    for (long i = 1; i <= order; ++i)
        for (long j = 1; j <= order; ++j) want[Multidegree({i, j})] = J.at(i * j);
    return counts_diff(got.d, want);
}

inline MismatchReport verify_monster_dims(long order) {
    return verify_monster_dims(order, j_coefficients(order * order));
}

// The dimension table itself; a disagreement with c(ij) here would falsify
// the whole pipeline, so it is a hard error rather than a report.
inline DimTable monster_root_dims(long order, const JExpansion& J) {
    auto rep = verify_monster_dims(order, J);
    affirm(rep.ok(), "monster root multiplicity drifted from c(ij):\n" + rep.str());
    DimTable dims =
        witt_dimensions(monster_generator_table(order, J), Multidegree({order, order}));
    dims.d[Multidegree({1, -1})] += 1;
    return dims;
}

inline DimTable monster_root_dims(long order) {
    return monster_root_dims(order, j_coefficients(order * order));
}

// One failed coefficient relation, with the per-divisor partial sums that
// went into the rational evaluation.
struct KangMismatch {
    Multidegree degree;  // (i, j)
    Int expected;        // c(ij)
    Rat computed;
    std::vector<std::pair<long, Rat>> terms;  // divisor k -> mu(k)/k * inner sum

    std::string str() const {
        std::ostringstream os;
        os << degree.str() << "\texpected " << expected.get_str() << "\tcomputed "
           << rat_str(computed);
        for (const auto& [k, v] : terms) os << "\tk=" << k << ": " << rat_str(v);
        return os.str();
    }
};

struct KangReport {
    std::vector<KangMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
    std::string str() const {
        std::ostringstream os;
        for (const auto& m : mismatches) os << m.str() << '\n';
        return os.str();
    }
};

// The recursive coefficient relations: for every i, j >= 1 with
// i + j <= order,
//   c(ij) = sum over k | gcd(i,j) of mu(k)/k *
//           sum over partitions a of (i/k, j/k) into positive pairs of
//           ((sum a - 1)! / prod a!) * prod c(r+s-1)^{a_rs}.
// Direct rational evaluation, no sharing with the Witt engine's memo.
inline KangReport kang_check(long order, const JExpansion& J) {
    require(order >= 2, "order must be at least 2");
    long max_product = (order / 2) * (order - order / 2);
    require(J.order >= std::max(max_product, order - 1),
            "relations need c up to " + std::to_string(std::max(max_product, order - 1)));

    KangReport report;
    for (long i = 1; i + 1 <= order; ++i) {
        for (long j = 1; i + j <= order; ++j) {
            long g = std::gcd(i, j);
            std::vector<std::pair<long, Rat>> terms;
            Rat total = 0;
            for (long k : divisors(g)) {
                int mu = moebius(k);
                if (mu == 0) continue;
                Multidegree target({i / k, j / k});
                std::vector<Multidegree> parts;
                for (long r = 1; r <= i / k; ++r)
                    for (long s = 1; s <= j / k; ++s) parts.push_back(Multidegree({r, s}));
                Rat inner = 0;
                for_each_partition(target, parts, [&](const PartitionMultiset& a) {
                    Rat w = multinomial_weight(a);
                    Int prod = 1;
                    for (const auto& [part, mult] : a) {
                        Int base = J.at(part.e[0] + part.e[1] - 1);
                        Int p;
                        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(),
                                   static_cast<unsigned long>(mult));
                        prod *= p;
                    }
                    inner += w * Rat(prod);
                });
                Rat term = Rat(mu) / Rat(k) * inner;
                terms.emplace_back(k, term);
                total += term;
            }
            if (total != Rat(J.at(i * j)))
                report.mismatches.push_back(
                    {Multidegree({i, j}), J.at(i * j), total, std::move(terms)});
        }
    }
    return report;
}

inline KangReport kang_check(long order) {
    long max_product = (order / 2) * (order - order / 2);
    return kang_check(order, j_coefficients(std::max({max_product, order - 1, 1L})));
}

}  // namespace gkm
