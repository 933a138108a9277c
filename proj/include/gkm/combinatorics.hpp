#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gkm/multidegree.hpp"
#include "gkm/numeric.hpp"

namespace gkm {

// Moebius mu(n) by trial division.  n >= 1.
inline int moebius(long n) {
    require(n >= 1, "moebius needs n >= 1");
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // square factor
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

// A partition of a multidegree into parts with multiplicities.
using PartitionMultiset = std::map<Multidegree, long>;

// Enumerate all ways to write beta as a nonnegative-integer combination of
// the given parts.  Parts must be nonzero, in the nonnegative orthant, and
// of beta's arity.  Emission order: parts are visited in ascending
// lexicographic order and each multiplicity counts up from 0, so the stream
// is lexicographic in the multiplicity vector over the sorted part list.
inline void for_each_partition(const Multidegree& beta,
                               std::vector<Multidegree> parts,
                               const std::function<void(const PartitionMultiset&)>& emit) {
    require(!beta.is_zero(), "partition target must be nonzero");
    require(beta.nonnegative(), "partition target must be in the nonnegative orthant");
    for (const auto& p : parts) {
        require(p.arity() == beta.arity(), "part arity mismatch");
        require(!p.is_zero(), "zero part vector rejected");
        require(p.nonnegative(), "part outside the nonnegative orthant");
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    PartitionMultiset current;
    std::function<void(size_t, Multidegree)> rec = [&](size_t idx, Multidegree rest) {
        if (rest.is_zero()) {
            // remaining parts all get multiplicity 0
            emit(current);
            return;
        }
        if (idx == parts.size()) return;
        const Multidegree& p = parts[idx];
        // multiplicity 0 first, then count up while the part still fits
        rec(idx + 1, rest);
        long mult = 0;
        while (p.dominated_by(rest)) {
            rest = rest - p;
            current[p] = ++mult;
            rec(idx + 1, rest);
        }
        if (mult > 0) current.erase(p);
    };
    rec(0, beta);
}

inline std::vector<PartitionMultiset> partitions(const Multidegree& beta,
                                                 const std::vector<Multidegree>& parts) {
    std::vector<PartitionMultiset> out;
    for_each_partition(beta, parts, [&](const PartitionMultiset& a) { out.push_back(a); });
    return out;
}

// (|a| - 1)! / prod_alpha a_alpha!  for a partition multiset a, as an exact
// rational; |a| is the total number of parts counted with multiplicity.
inline Rat multinomial_weight(const PartitionMultiset& a) {
    require(!a.empty(), "weight of the empty partition is undefined");
    unsigned long total = 0;
    for (const auto& [part, mult] : a) {
        require(mult > 0, "partition multiplicities must be positive");
        total += static_cast<unsigned long>(mult);
    }
    Rat w(factorial(total - 1));
    for (const auto& [part, mult] : a)
        w /= Rat(factorial(static_cast<unsigned long>(mult)));
    return w;
}

// Ascending divisors of n >= 1.
inline std::vector<long> divisors(long n) {
    require(n >= 1, "divisors of n >= 1 only");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace gkm
