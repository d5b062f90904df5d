#include "rrdeg/binary_poly.hpp"

#include <algorithm>

namespace rrdeg::poly {

RatPoly RatPoly::constant(Rat v) {
  if (v == 0) return RatPoly();
  return RatPoly(std::vector<Rat>{std::move(v)});
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  if (s == 0) return RatPoly();
  std::vector<Rat> c = a.coeffs();
  for (Rat& v : c) v *= s;
  return RatPoly(std::move(c));
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs() == b.coeffs(); }

RatPoly derivative(const RatPoly& p) {
  if (p.degree() < 1) return RatPoly();
  std::vector<Rat> c(static_cast<size_t>(p.degree()), Rat(0));
  for (int i = 1; i <= p.degree(); ++i) c[static_cast<size_t>(i) - 1] = Rat(i) * p[i];
  return RatPoly(std::move(c));
}

Rat eval(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

std::complex<double> eval(const RatPoly& p, const std::complex<double>& x) {
  std::complex<double> acc(0.0, 0.0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + to_double(p[i]);
  return acc;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lead = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat factor = rem[static_cast<size_t>(i)] / lead;
    if (factor == 0) continue;
    quot[static_cast<size_t>(i - b.degree())] = factor;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(i - b.degree() + j)] -= factor * b[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b, const char* what) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError(std::string(what) + ": inexact polynomial division");
  return q;
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.leading();
  return inv * p;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return monic(p);
  RatPoly g = gcd(p, derivative(p));
  if (g.degree() < 1) return monic(p);
  return monic(exact_quotient(p, g, "squarefree_part"));
}

namespace {

int sign_at_plus_inf(const RatPoly& p) { return sgn(p.leading()); }

int sign_at_minus_inf(const RatPoly& p) {
  int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_distinct_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<RatPoly> seq;
  seq.push_back(p);
  seq.push_back(derivative(p));
  while (!seq.back().is_zero()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rat(-1) * r);
  }
  std::vector<int> at_minus, at_plus;
  at_minus.reserve(seq.size());
  at_plus.reserve(seq.size());
  for (const RatPoly& q : seq) {
    if (q.is_zero()) continue;
    at_minus.push_back(sign_at_minus_inf(q));
    at_plus.push_back(sign_at_plus_inf(q));
  }
  return sign_variations(at_minus) - sign_variations(at_plus);
}

RatPoly poly_det(std::vector<std::vector<RatPoly>> mat) {
  const size_t n = mat.size();
  for (const auto& row : mat)
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix must be square");
  if (n == 0) return RatPoly::constant(Rat(1));
  int sign = 1;
  RatPoly prev = RatPoly::constant(Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && mat[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return RatPoly();  // singular
    if (pivot != k) {
      std::swap(mat[pivot], mat[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        RatPoly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        mat[i][j] = prev.degree() == 0 && prev.leading() == 1
                        ? std::move(num)
                        : exact_quotient(num, prev, "poly_det");
      }
      mat[i][k] = RatPoly();
    }
    prev = mat[k][k];
  }
  RatPoly det = mat[n - 1][n - 1];
  return sign == 1 ? det : Rat(-1) * det;
}

RatPoly sylvester_resultant(std::vector<RatPoly> a, std::vector<RatPoly> b) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  while (!b.empty() && b.back().is_zero()) b.pop_back();
  if (a.empty() || b.empty()) return RatPoly();
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da == 0 && db == 0) return RatPoly::constant(Rat(1));
  if (da == 0) {
    // Res(a0, B) = a0^db
    RatPoly r = RatPoly::constant(Rat(1));
    for (int i = 0; i < db; ++i) r = r * a[0];
    return r;
  }
  if (db == 0) {
    RatPoly r = RatPoly::constant(Rat(1));
    for (int i = 0; i < da; ++i) r = r * b[0];
    return r;
  }
  const int n = da + db;
  std::vector<std::vector<RatPoly>> mat(static_cast<size_t>(n),
                                        std::vector<RatPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) mat[i][i + j] = a[static_cast<size_t>(da - j)];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) mat[db + i][i + j] = b[static_cast<size_t>(db - j)];
  return poly_det(std::move(mat));
}

// ---------------------------------------------------------------------------
// Binary forms
// ---------------------------------------------------------------------------

bool BinaryForm::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs == b.coeffs; }

BinaryForm bf_add(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("bf_add: degree mismatch");
  BinaryForm r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

BinaryForm bf_sub(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("bf_sub: degree mismatch");
  BinaryForm r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r = BinaryForm::zero(a.degree() + b.degree());
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

BinaryForm bf_scale(const Rat& s, const BinaryForm& a) {
  BinaryForm r = a;
  for (Rat& c : r.coeffs) c *= s;
  return r;
}

BinaryForm bf_pow(const BinaryForm& a, int e) {
  if (e < 0) throw std::invalid_argument("bf_pow: negative exponent");
  BinaryForm r(std::vector<Rat>{Rat(1)});
  for (int i = 0; i < e; ++i) r = bf_mul(r, a);
  return r;
}

BinaryForm bf_dt0(const BinaryForm& p) {
  const int d = p.degree();
  if (d < 1) return BinaryForm(std::vector<Rat>{Rat(0)});
  BinaryForm r = BinaryForm::zero(d - 1);
  for (int i = 0; i <= d - 1; ++i)
    r.coeffs[static_cast<size_t>(i)] = Rat(d - i) * p.coeffs[static_cast<size_t>(i)];
  return r;
}

BinaryForm bf_dt1(const BinaryForm& p) {
  const int d = p.degree();
  if (d < 1) return BinaryForm(std::vector<Rat>{Rat(0)});
  BinaryForm r = BinaryForm::zero(d - 1);
  for (int i = 0; i <= d - 1; ++i)
    r.coeffs[static_cast<size_t>(i)] = Rat(i + 1) * p.coeffs[static_cast<size_t>(i) + 1];
  return r;
}

Rat bf_eval(const BinaryForm& p, const Rat& t0, const Rat& t1) {
  const int d = p.degree();
  Rat acc(0), pow1(1);
  std::vector<Rat> pow0(static_cast<size_t>(d) + 1, Rat(1));
  for (int i = 1; i <= d; ++i) pow0[static_cast<size_t>(i)] = pow0[static_cast<size_t>(i) - 1] * t0;
  for (int i = 0; i <= d; ++i) {
    acc += p.coeffs[static_cast<size_t>(i)] * pow0[static_cast<size_t>(d - i)] * pow1;
    pow1 *= t1;
  }
  return acc;
}

std::complex<double> bf_eval(const BinaryForm& p, const std::complex<double>& t0,
                             const std::complex<double>& t1) {
  const int d = p.degree();
  std::complex<double> acc(0.0), pow1(1.0);
  std::vector<std::complex<double>> pow0(static_cast<size_t>(d) + 1, std::complex<double>(1.0));
  for (int i = 1; i <= d; ++i) pow0[static_cast<size_t>(i)] = pow0[static_cast<size_t>(i) - 1] * t0;
  for (int i = 0; i <= d; ++i) {
    acc += to_double(p.coeffs[static_cast<size_t>(i)]) * pow0[static_cast<size_t>(d - i)] * pow1;
    pow1 *= t1;
  }
  return acc;
}

RatPoly dehomogenize(const BinaryForm& p) { return RatPoly(p.coeffs); }

BinaryForm bf_primitive(const BinaryForm& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs) {
    if (c == 0) continue;
    Int d = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  Int num_gcd = 0;
  std::vector<Int> scaled(p.coeffs.size());
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    Rat v = p.coeffs[i] * Rat(den_lcm);
    scaled[i] = v.get_num();  // denominator is 1 after scaling
    Int g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_mpz_t());
    num_gcd = g;
  }
  int lead_sign = 0;
  for (const Int& v : scaled) {
    if (v != 0) {
      lead_sign = sgn(v);
      break;
    }
  }
  if (lead_sign < 0) num_gcd = -num_gcd;
  BinaryForm r = BinaryForm::zero(p.degree());
  for (size_t i = 0; i < scaled.size(); ++i) r.coeffs[i] = Rat(scaled[i] / num_gcd);
  return r;
}

BinaryForm bf_exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw InternalError("bf_exact_divide: division by zero form");
  if (a.is_zero()) {
    if (a.degree() < b.degree()) throw InternalError("bf_exact_divide: degree underflow");
    return BinaryForm::zero(a.degree() - b.degree());
  }
  RatPoly pa = dehomogenize(a), pb = dehomogenize(b);
  const int inf_a = a.degree() - pa.degree();  // multiplicity of the root [0:1]
  const int inf_b = b.degree() - pb.degree();
  if (inf_b > inf_a || b.degree() > a.degree())
    throw InternalError("bf_exact_divide: not divisible (root at [0:1])");
  RatPoly q = exact_quotient(pa, pb, "bf_exact_divide");
  BinaryForm r = BinaryForm::zero(a.degree() - b.degree());
  for (int i = 0; i <= q.degree(); ++i) r.coeffs[static_cast<size_t>(i)] = q[i];
  return r;
}

BinaryForm bf_gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return bf_primitive(b);
  if (b.is_zero()) return bf_primitive(a);
  RatPoly pa = dehomogenize(a), pb = dehomogenize(b);
  const int inf_common =
      std::min(a.degree() - pa.degree(), b.degree() - pb.degree());
  RatPoly g = gcd(pa, pb);
  BinaryForm r = BinaryForm::zero(g.degree() + inf_common);
  for (int i = 0; i <= g.degree(); ++i) r.coeffs[static_cast<size_t>(i)] = g[i];
  return bf_primitive(r);
}

}  // namespace rrdeg::poly
