#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lie {

/// Exact rational scalar. Every computation in the library is carried out
/// over Q; nothing is ever rounded.
using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" (decimal digits, optional leading '-') into canonical
/// reduced form. Throws Error on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }

/// base^e for integer e; negative exponents require a nonzero base.
Rat rat_pow(const Rat& base, long e);

}  // namespace lie
