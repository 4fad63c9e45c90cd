#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace scfut {

// Exact rational coefficient type.  All algebra in this library is over Q;
// no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// num/den as int64, for JSON payloads.  Structure constants in this library
// are tiny; anything outside int64 range indicates a misuse.
inline std::int64_t rat_num_i64(const Rat& r) {
    if (!r.get_num().fits_slong_p())
        throw std::overflow_error("rational numerator out of int64 range");
    return r.get_num().get_si();
}

inline std::int64_t rat_den_i64(const Rat& r) {
    if (!r.get_den().fits_slong_p())
        throw std::overflow_error("rational denominator out of int64 range");
    return r.get_den().get_si();
}

}  // namespace scfut
