#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/multidegree.hpp"
#include "gkm/numeric.hpp"

namespace gkm {

// Sparse multivariate (Laurent) polynomial: the finite window of a formal
// series inside a truncation box.  Terms outside the box are dropped on
// write; a stored coefficient is never zero.  std::map keys make every
// iteration (printing, comparison, hashing-free dedup) deterministic.
struct ExactSeries {
    Box box;
    std::map<Multidegree, Int> terms;

    ExactSeries() = default;
    explicit ExactSeries(Box b) : box(std::move(b)) {}

    static ExactSeries one(const Box& b) {
        ExactSeries s(b);
        s.add(Multidegree::zero(b.arity()), 1);
        return s;
    }

    size_t arity() const { return box.arity(); }

    void add(const Multidegree& m, const Int& c) {
        if (c == 0 || !box.contains(m)) return;
        Int& slot = terms[m];
        slot += c;
        if (slot == 0) terms.erase(m);
    }

    const Int& coeff(const Multidegree& m) const {
        static const Int zero = 0;
        auto it = terms.find(m);
        return it == terms.end() ? zero : it->second;
    }

    // Re-truncate into a (typically smaller) box.
    ExactSeries restricted(const Box& b) const {
        ExactSeries r(b);
        for (const auto& [m, c] : terms) r.add(m, c);
        return r;
    }

    // sorted "exponent-tuple<TAB>coefficient" lines
    std::string str() const {
        std::ostringstream os;
        for (const auto& [m, c] : terms) os << m.str() << '\t' << c.get_str() << '\n';
        return os.str();
    }
};

inline ExactSeries series_mul(const ExactSeries& x, const ExactSeries& y) {
    require(x.arity() == y.arity(), "series arity mismatch");
    ExactSeries r(x.box.intersect(y.box));
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) r.add(mx + my, cx * cy);
    return r;
}

// True once the walk m, m+alpha, m+2*alpha, ... can never visit the box
// again.  Boxes are finite, so any nonzero alpha escapes eventually.
inline bool walk_escaped(const Multidegree& m, const Multidegree& alpha, const Box& box) {
    for (size_t i = 0; i < box.arity(); ++i) {
        if (alpha.e[i] > 0 && m.e[i] > box.hi[i]) return true;
        if (alpha.e[i] < 0 && m.e[i] < box.lo[i]) return true;
    }
    return false;
}

// (1 - T^alpha)^d expanded binomially inside the box.  d >= 0 may be huge
// (196884-sized exponents appear in the monster product); only the few
// binomials whose monomial k*alpha lands in the box are materialized.
inline ExactSeries one_minus_pow(const Multidegree& alpha, const Int& d, const Box& box) {
    require(alpha.arity() == box.arity(), "exponent arity mismatch");
    require(!alpha.is_zero(), "exponent vector must be nonzero");
    require(d >= 0, "negative multiplicity");
    ExactSeries r(box);
    Multidegree m = Multidegree::zero(box.arity());
    Int coeff = 1;  // (-1)^k C(d,k), maintained by the exact recurrence
    Int k = 0;
    while (true) {
        r.add(m, coeff);  // add() itself drops out-of-box terms
        if (k == d || walk_escaped(m, alpha, box)) break;
        k += 1;
        // coeff <- coeff * -(d-k+1)/k, exact at every step
        coeff *= -(d - k + 1);
        affirm(mpz_divisible_p(coeff.get_mpz_t(), k.get_mpz_t()) != 0,
               "binomial recurrence division not exact");
        mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), k.get_mpz_t());
        m += alpha;
    }
    return r;
}

// Multiply s by (1 - T^alpha)^d into a fresh target box.  This exists for
// factors that point out of the orthant the main product was computed in:
// the (1,-1)-graded real root of the monster product gets applied after the
// orthant-confined factors, mapping the internal window onto the final one.
inline ExactSeries apply_one_minus_factor(const ExactSeries& s, const Multidegree& alpha,
                                          const Int& d, Box target) {
    require(alpha.arity() == target.arity() && s.box.arity() == target.arity(),
            "series arity mismatch");
    require(!alpha.is_zero(), "exponent vector must be nonzero");
    require(d >= 0, "negative multiplicity");
    ExactSeries r(std::move(target));
    for (const auto& [base, c] : s.terms) {
        Multidegree m = base;
        Int coeff = c;
        Int k = 0;
        while (true) {
            r.add(m, coeff);
            if (k == d || walk_escaped(m, alpha, r.box)) break;
            k += 1;
            coeff *= -(d - k + 1);
            affirm(mpz_divisible_p(coeff.get_mpz_t(), k.get_mpz_t()) != 0,
                   "binomial recurrence division not exact");
            mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), k.get_mpz_t());
            m += alpha;
        }
    }
    return r;
}

// prod over table entries (alpha -> d) of (1 - T^alpha)^d inside the box.
// All alpha must lie in the nonnegative orthant: with monotone exponents a
// dropped term can never re-enter the box, so the factor order cannot
// affect the result.  (The one Laurent factor in the monster product is
// multiplied separately by its caller, margin first.)
inline ExactSeries product_over_table(const std::map<Multidegree, Int>& table, const Box& box) {
    ExactSeries r = ExactSeries::one(box);
    for (const auto& [alpha, d] : table) {
        require(alpha.nonnegative(), "product table exponent outside the nonnegative orthant");
        require(d >= 0, "negative multiplicity in product table");
        if (d == 0 || !box.contains(alpha)) continue;
        r = series_mul(r, one_minus_pow(alpha, d, box));
    }
    return r;
}

// One differing coefficient between two series (absent = 0).
struct Mismatch {
    Multidegree exponent;
    Int lhs, rhs;
};

struct MismatchReport {
    std::vector<Mismatch> mismatches;
    size_t compared = 0;  // how many coefficients the comparison covered
    bool ok() const { return mismatches.empty(); }
    std::string str() const {
        std::ostringstream os;
        for (const auto& m : mismatches)
            os << m.exponent.str() << '\t' << m.lhs.get_str() << '\t' << m.rhs.get_str() << '\n';
        return os.str();
    }
};

// Coefficientwise comparison over the union of supports, restricted to the
// intersection of the boxes.
inline MismatchReport compare_series(const ExactSeries& x, const ExactSeries& y) {
    require(x.arity() == y.arity(), "series arity mismatch");
    Box common = x.box.intersect(y.box);
    MismatchReport rep;
    auto visit = [&](const Multidegree& m) {
        if (!common.contains(m)) return;
        ++rep.compared;
        const Int &a = x.coeff(m), &b = y.coeff(m);
        if (a != b) rep.mismatches.push_back({m, a, b});
    };
    for (const auto& [m, c] : x.terms) visit(m);
    for (const auto& [m, c] : y.terms)
        if (x.terms.find(m) == x.terms.end()) visit(m);
    // keep the report deterministic regardless of which side a key came from
    std::sort(rep.mismatches.begin(), rep.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) { return a.exponent < b.exponent; });
    return rep;
}

}  // namespace gkm
