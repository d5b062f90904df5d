#ifndef RRDEG_ARITH_HPP
#define RRDEG_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrdeg {

// Exact arithmetic types used throughout. All degree computations are done
// with arbitrary-precision integers; solver-facing code converts to binary64
// only at root extraction.
using Int = mpz_class;
using Rat = mpq_class;

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int int_pow(long base, unsigned long exp) { return int_pow(Int(base), exp); }

inline Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int binom(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (sum parts)! / prod(parts!). Parts must be nonnegative.
inline Int multinomial(const std::vector<int>& parts) {
  unsigned long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += static_cast<unsigned long>(p);
  }
  Int r = factorial(total);
  for (int p : parts) r /= factorial(static_cast<unsigned long>(p));
  return r;
}

// Quotient a/b, throwing if b does not divide a exactly.
inline Int exact_div(const Int& a, const Int& b, const char* what = "exact_div") {
  if (b == 0) throw InternalError(std::string(what) + ": division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw InternalError(std::string(what) + ": inexact division");
  return q;
}

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  return make_rat(Int(num), Int(den));
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace rrdeg

#endif
