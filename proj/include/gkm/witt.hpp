#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkm/combinatorics.hpp"
#include "gkm/series.hpp"
#include "gkm/tables.hpp"

namespace gkm {

// Graded dimensions of the free Lie algebra on a table of generators,
// computed by Moebius inversion over the partition sum
//     S(gamma) = sum over partitions a of gamma:  (|a|-1)!/a! * n^a
//     d(beta)  = sum over k | gcd(beta):  mu(k)/k * S(beta/k).
// Exact rationals throughout; the final value must come out a nonnegative
// integer, and failing that is a hard error naming the degree.
class WittEngine {
  public:
    explicit WittEngine(const GeneratorTable& g) : gens_(g) {
        gens_.check();
        for (const auto& [deg, count] : gens_.n) support_.push_back(deg);
    }

    // S(gamma), memoized: one partition enumeration per distinct gamma
    const Rat& inner_sum(const Multidegree& gamma) {
        auto it = memo_.find(gamma);
        if (it != memo_.end()) return it->second;
        Rat total = 0;
        for_each_partition(gamma, support_, [&](const PartitionMultiset& a) {
            Rat term = multinomial_weight(a);
            for (const auto& [part, mult] : a) {
                Int pw;
                mpz_pow_ui(pw.get_mpz_t(), gens_.n.at(part).get_mpz_t(),
                           static_cast<unsigned long>(mult));
                term *= Rat(pw);
            }
            total += term;
        });
        return memo_.emplace(gamma, std::move(total)).first->second;
    }

    Int dimension(const Multidegree& beta) {
        require(!beta.is_zero(), "dimension of the zero degree is undefined");
        require(beta.nonnegative(), "degree outside the nonnegative orthant");
        Rat acc = 0;
        for (long k : divisors(beta.content_gcd())) {
            int mu = moebius(k);
            if (mu == 0) continue;
            acc += Rat(mu, k) * inner_sum(beta.divided_by(k));
        }
        affirm(is_integer(acc), "non-integral dimension at degree " + beta.str() +
                                    ": " + rat_str(acc));
        affirm(acc >= 0, "negative dimension at degree " + beta.str());
        return acc.get_num();
    }

  private:
    GeneratorTable gens_;
    std::vector<Multidegree> support_;
    std::map<Multidegree, Rat> memo_;
};

// All dimensions with degree componentwise <= max (and height <= total_max
// when given), zeros included so the table doubles as a coverage record.
inline DimTable witt_dimensions(const GeneratorTable& g, const Multidegree& max,
                                std::optional<long> total_max = std::nullopt) {
    require(max.nonnegative(), "bound must be nonnegative");
    WittEngine engine(g);
    DimTable out;
    Multidegree beta = Multidegree::zero(max.arity());
    // odometer over the box [0, max]
    while (true) {
        if (!beta.is_zero() && (!total_max || beta.height() <= *total_max))
            out.d[beta] = engine.dimension(beta);
        size_t i = 0;
        while (i < max.arity() && beta.e[i] == max.e[i]) beta.e[i++] = 0;
        if (i == max.arity()) break;
        ++beta.e[i];
    }
    return out;
}

// Check  1 - sum n_alpha T^alpha  =  prod (1 - T^phi)^(d_phi)  inside a box.
// d must cover every nonzero degree of the box: absent entries would be
// silently treated as dimension zero, so a gap is an error naming the degree.
inline MismatchReport verify_witt_identity(const GeneratorTable& g, const DimTable& d,
                                           const Box& box) {
    g.check();
    Multidegree probe(box.lo);
    while (true) {
        if (!probe.is_zero() && box.contains(probe))
            require(d.d.find(probe) != d.d.end(),
                    "dimension table gap at degree " + probe.str());
        size_t i = 0;
        while (i < box.arity() && probe.e[i] == box.hi[i]) probe.e[i++] = box.lo[i];
        if (i == box.arity()) break;
        ++probe.e[i];
    }
    ExactSeries lhs = ExactSeries::one(box);
    for (const auto& [alpha, n] : g.n) lhs.add(alpha, -n);
    ExactSeries rhs = product_over_table(d.d, box);
    return compare_series(lhs, rhs);
}

// Transport a table along an integer linear map psi (rows = target
// coordinates).  Counts at degrees with equal image add up.  Images of the
// support must stay nonzero and in the nonnegative orthant, so the result
// is again a valid grading.
inline DegreeCounts pushforward_grading(const DegreeCounts& t,
                                        const std::vector<std::vector<long>>& psi) {
    DegreeCounts out;
    for (const auto& [deg, count] : t) {
        std::vector<long> img(psi.size(), 0);
        for (size_t r = 0; r < psi.size(); ++r) {
            require(psi[r].size() == deg.arity(), "pushforward matrix arity mismatch");
            for (size_t c = 0; c < deg.arity(); ++c) img[r] += psi[r][c] * deg.e[c];
        }
        Multidegree m(img);
        require(!m.is_zero(), "pushforward collapses degree " + deg.str() + " to zero");
        require(m.nonnegative(),
                "pushforward sends degree " + deg.str() + " outside the nonnegative orthant");
        out[m] += count;
    }
    return out;
}

}  // namespace gkm
