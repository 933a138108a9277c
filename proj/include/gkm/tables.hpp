#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/multidegree.hpp"
#include "gkm/numeric.hpp"
#include "gkm/series.hpp"

namespace gkm {

// degree -> big-integer count; the shared currency between the generator
// side (how many free generators sit at a degree) and the dimension side
// (how big a graded piece is)
using DegreeCounts = std::map<Multidegree, Int>;

struct GeneratorTable {
    DegreeCounts n;

    size_t arity() const { return n.empty() ? 0 : n.begin()->first.arity(); }

    // generator degrees: nonzero, nonnegative orthant, positive counts
    void check() const {
        for (const auto& [deg, count] : n) {
            require(deg.arity() == arity(), "generator table arity mismatch");
            require(!deg.is_zero(), "generator degree must be nonzero");
            require(deg.nonnegative(), "generator degree outside the nonnegative orthant");
            require(count > 0, "generator count must be positive at " + deg.str());
        }
    }
};

// Graded dimensions.  Entries may be zero (a computed degree with nothing
// there) and monster tables carry the one negative-coordinate real root, so
// no orthant constraint lives on the type; consumers that need one check it.
struct DimTable {
    DegreeCounts d;
};

inline std::string counts_str(const DegreeCounts& t) {
    std::ostringstream os;
    for (const auto& [deg, count] : t) os << deg.str() << '\t' << count.get_str() << '\n';
    return os.str();
}

// "e1,e2,...<TAB>count" per line; blank lines and '#' comments allowed
inline DegreeCounts parse_counts(std::istream& in) {
    DegreeCounts t;
    std::string line;
    size_t arity = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        require(tab != std::string::npos, "expected TAB separator in line: " + line);
        std::vector<long> exps;
        std::stringstream ls(line.substr(0, tab));
        std::string tok;
        while (std::getline(ls, tok, ','))
            exps.push_back(parse_int(tok).get_si());
        Multidegree deg(exps);
        if (arity == 0) arity = deg.arity();
        require(deg.arity() == arity, "inconsistent exponent arity in line: " + line);
        require(t.find(deg) == t.end(), "duplicate degree " + deg.str());
        t[deg] = parse_int(line.substr(tab + 1));
    }
    return t;
}

// coefficientwise difference with absent = 0, as a mismatch report
inline MismatchReport counts_diff(const DegreeCounts& a, const DegreeCounts& b) {
    MismatchReport rep;
    auto get = [](const DegreeCounts& t, const Multidegree& m) -> Int {
        auto it = t.find(m);
        return it == t.end() ? Int(0) : it->second;
    };
    for (const auto& [m, v] : a) {
        ++rep.compared;
        Int w = get(b, m);
        if (v != w) rep.mismatches.push_back({m, v, w});
    }
    for (const auto& [m, w] : b)
        if (a.find(m) == a.end()) {
            ++rep.compared;
            if (w != 0) rep.mismatches.push_back({m, Int(0), w});
        }
    std::sort(rep.mismatches.begin(), rep.mismatches.end(),
              [](const Mismatch& x, const Mismatch& y) { return x.exponent < y.exponent; });
    return rep;
}

}  // namespace gkm
