#include "lie/rational.hpp"

namespace lie {

namespace {

bool digits_only(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

bool well_formed_int(const std::string& s, std::size_t from, std::size_t to) {
  if (from < to && s[from] == '-') ++from;
  return digits_only(s, from, to);
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = well_formed_int(s, 0, s.size());
  } else {
    ok = well_formed_int(s, 0, slash) && well_formed_int(s, slash + 1, s.size());
  }
  if (!ok) throw Error("malformed rational literal: '" + s + "'");
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw Error("malformed rational literal: '" + s + "'");
  if (sgn(x.get_den()) == 0)
    throw Error("zero denominator in rational literal: '" + s + "'");
  x.canonicalize();
  return x;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return 1;
  Rat b = base;
  unsigned long k;
  if (e < 0) {
    if (rat_is_zero(base)) throw Error("zero base with negative exponent");
    b = Rat(1) / base;
    k = static_cast<unsigned long>(-(e + 1)) + 1;
  } else {
    k = static_cast<unsigned long>(e);
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  return out;
}

}  // namespace lie
