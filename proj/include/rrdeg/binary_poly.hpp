#ifndef RRDEG_BINARY_POLY_HPP
#define RRDEG_BINARY_POLY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "rrdeg/arith.hpp"

namespace rrdeg::poly {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(Rat v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const Rat& leading() const { return c_.back(); }

  void trim();

 private:
  std::vector<Rat> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);
bool operator==(const RatPoly& a, const RatPoly& b);

RatPoly derivative(const RatPoly& p);
Rat eval(const RatPoly& p, const Rat& x);
std::complex<double> eval(const RatPoly& p, const std::complex<double>& x);

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Quotient of an exact division; throws InternalError if the remainder is
/// nonzero.
RatPoly exact_quotient(const RatPoly& a, const RatPoly& b, const char* what = "poly division");
/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);
/// p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

/// Number of distinct real roots of p, counted by a Sturm sequence over
/// (-inf, +inf). Multiple roots are counted once.
int sturm_distinct_real_roots(const RatPoly& p);

/// Resultant of A = sum_j A[j] y^j and B = sum_j B[j] y^j with respect to y,
/// where the coefficients A[j], B[j] are polynomials in another variable.
/// Computed as the determinant of the Sylvester matrix by fraction-free
/// (Bareiss) elimination. Zero input polynomials yield the zero resultant.
RatPoly sylvester_resultant(std::vector<RatPoly> a, std::vector<RatPoly> b);

/// Determinant of a square matrix with polynomial entries (Bareiss).
RatPoly poly_det(std::vector<std::vector<RatPoly>> mat);

// ---------------------------------------------------------------------------
// Homogeneous binary forms p(t0, t1) = sum_i coeffs[i] t0^(D-i) t1^i.
// The coefficient vector read in ascending index equals the coefficient
// vector of the dehomogenization p(1, t) in ascending powers of t.
// ---------------------------------------------------------------------------

struct BinaryForm {
  std::vector<Rat> coeffs;  // size degree+1; the zero form of degree D is all zeros

  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rat> c) : coeffs(std::move(c)) {}
  static BinaryForm zero(int degree) {
    return BinaryForm(std::vector<Rat>(static_cast<size_t>(degree) + 1, Rat(0)));
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
};

bool operator==(const BinaryForm& a, const BinaryForm& b);

BinaryForm bf_add(const BinaryForm& a, const BinaryForm& b);
BinaryForm bf_sub(const BinaryForm& a, const BinaryForm& b);
BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b);
BinaryForm bf_scale(const Rat& s, const BinaryForm& a);
BinaryForm bf_pow(const BinaryForm& a, int e);
BinaryForm bf_dt0(const BinaryForm& p);
BinaryForm bf_dt1(const BinaryForm& p);
Rat bf_eval(const BinaryForm& p, const Rat& t0, const Rat& t1);
std::complex<double> bf_eval(const BinaryForm& p, const std::complex<double>& t0,
                             const std::complex<double>& t1);

/// p(1, t) as a univariate polynomial (trailing zero coefficients trimmed).
RatPoly dehomogenize(const BinaryForm& p);

/// Integer-content-free representative: denominators cleared, coefficient gcd
/// divided out, sign normalized so the first nonzero coefficient (highest
/// t0 power) is positive. The zero form is returned unchanged.
BinaryForm bf_primitive(const BinaryForm& p);

/// Exact homogeneous division a / b; throws InternalError when b does not
/// divide a.
BinaryForm bf_exact_divide(const BinaryForm& a, const BinaryForm& b);

/// gcd of two binary forms (via the dehomogenizations plus the common power
/// of t1 carried by roots at [0:1]); primitive and sign-normalized.
BinaryForm bf_gcd(const BinaryForm& a, const BinaryForm& b);

}  // namespace rrdeg::poly

#endif
