#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gkm {

// All counts, coefficients and multiplicities are exact big integers; every
// intermediate that can be fractional (Witt weights, Gaussian elimination)
// is an exact rational.  No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Caller errors (bad input, violated precondition): invalid_argument.
// Internal invariant failures (things the math guarantees): internal_error,
// mapped to exit code 3 by the CLI.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline void affirm(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

inline Int parse_int(const std::string& s) {
    Int v;
    require(!s.empty() && v.set_str(s, 10) == 0, "not an integer: '" + s + "'");
    return v;
}

// Rationals in matrix files are "p" or "p/q" with q > 0 after canonicalization.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    require(den != 0, "zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// C(d, k) by the multiplicative recurrence with exact division at each step;
// d may be huge (block sizes like c(1) = 196884) while k stays small.
inline Int binomial(const Int& d, unsigned long k) {
    Int result = 1;
    Int num = d;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= num;
        affirm(mpz_divisible_ui_p(result.get_mpz_t(), i) != 0,
               "binomial recurrence division not exact");
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
        num -= 1;
    }
    return result;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace gkm
