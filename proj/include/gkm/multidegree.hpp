#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

// Exponent vector of a formal monomial.  Entries are small signed integers
// (heights stay in the dozens); coefficients are the big ones.
struct Multidegree {
    std::vector<long> e;

    Multidegree() = default;
    explicit Multidegree(std::vector<long> v) : e(std::move(v)) {}
    Multidegree(std::initializer_list<long> v) : e(v) {}

    size_t arity() const { return e.size(); }
    long height() const { return std::accumulate(e.begin(), e.end(), 0L); }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    }
    bool nonnegative() const {
        return std::all_of(e.begin(), e.end(), [](long x) { return x >= 0; });
    }

    bool operator==(const Multidegree& o) const { return e == o.e; }
    bool operator!=(const Multidegree& o) const { return e != o.e; }
    // Lexicographic; gives every container a deterministic iteration order.
    bool operator<(const Multidegree& o) const { return e < o.e; }

    Multidegree& operator+=(const Multidegree& o) {
        affirm(e.size() == o.e.size(), "multidegree arity mismatch");
        for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
        return *this;
    }
    friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
    friend Multidegree operator-(Multidegree a, const Multidegree& b) {
        affirm(a.e.size() == b.e.size(), "multidegree arity mismatch");
        for (size_t i = 0; i < a.e.size(); ++i) a.e[i] -= b.e[i];
        return a;
    }
    friend Multidegree operator*(long k, Multidegree a) {
        for (auto& x : a.e) x *= k;
        return a;
    }

    // true iff every entry of this <= the corresponding entry of o
    bool dominated_by(const Multidegree& o) const {
        affirm(e.size() == o.e.size(), "multidegree arity mismatch");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // gcd of the entries (ignoring sign); 0 for the zero vector
    long content_gcd() const {
        long g = 0;
        for (long x : e) g = std::gcd(g, x < 0 ? -x : x);
        return g;
    }

    Multidegree divided_by(long k) const {
        Multidegree r = *this;
        for (auto& x : r.e) {
            affirm(x % k == 0, "multidegree not divisible");
            x /= k;
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        return os.str();
    }

    static Multidegree zero(size_t arity) { return Multidegree(std::vector<long>(arity, 0)); }
    static Multidegree unit(size_t arity, size_t i) {
        Multidegree m = zero(arity);
        m.e[i] = 1;
        return m;
    }
};

// Per-variable truncation window, plus an optional cap on the coordinate sum
// (identity checks "up to height N" are total-degree truncations).
struct Box {
    std::vector<long> lo, hi;
    std::optional<long> total_max;

    Box() = default;
    Box(std::vector<long> l, std::vector<long> h, std::optional<long> t = std::nullopt)
        : lo(std::move(l)), hi(std::move(h)), total_max(t) {
        require(lo.size() == hi.size(), "box bound arity mismatch");
        for (size_t i = 0; i < lo.size(); ++i)
            require(lo[i] <= hi[i], "empty box range in variable " + std::to_string(i));
    }

    // [0, cap]^arity, the common case
    static Box orthant(size_t arity, long cap, std::optional<long> total = std::nullopt) {
        return Box(std::vector<long>(arity, 0), std::vector<long>(arity, cap), total);
    }

    size_t arity() const { return lo.size(); }

    bool contains(const Multidegree& m) const {
        affirm(m.arity() == arity(), "box/degree arity mismatch");
        for (size_t i = 0; i < lo.size(); ++i)
            if (m.e[i] < lo[i] || m.e[i] > hi[i]) return false;
        if (total_max && m.height() > *total_max) return false;
        return true;
    }

    Box intersect(const Box& o) const {
        require(arity() == o.arity(), "box arity mismatch");
        Box r;
        r.lo.resize(arity());
        r.hi.resize(arity());
        for (size_t i = 0; i < arity(); ++i) {
            r.lo[i] = std::max(lo[i], o.lo[i]);
            r.hi[i] = std::min(hi[i], o.hi[i]);
            require(r.lo[i] <= r.hi[i], "box intersection empty in variable " + std::to_string(i));
        }
        if (total_max || o.total_max)
            r.total_max = std::min(total_max.value_or(std::numeric_limits<long>::max()),
                                   o.total_max.value_or(std::numeric_limits<long>::max()));
        return r;
    }
};

}  // namespace gkm
