#include "rrdeg/bivariate.hpp"

#include <algorithm>
#include <cmath>

#include "rrdeg/roots.hpp"

namespace rrdeg::bivar {

using Cplx = std::complex<double>;

bool is_zero(const BiPoly& p) {
  for (const auto& row : p)
    if (!row.is_zero()) return false;
  return true;
}

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Cplx eval(const BiPoly& p, const Cplx& x, const Cplx& y) {
  Cplx acc(0.0), py(1.0);
  for (const auto& row : p) {
    acc += poly::eval(row, x) * py;
    py *= y;
  }
  return acc;
}

double eval_scale(const BiPoly& p, double ax, double ay) {
  double acc = 0.0, py = 1.0;
  for (const auto& row : p) {
    double prow = 0.0, px = 1.0;
    for (const Rat& c : row.coeffs()) {
      prow += std::abs(to_double(c)) * px;
      px *= ax;
    }
    acc += prow * py;
    py *= ay;
  }
  return std::max(acc, 1.0);
}

BiPoly dx(const BiPoly& p) {
  BiPoly out;
  out.reserve(p.size());
  for (const auto& row : p) out.push_back(poly::derivative(row));
  trim(out);
  return out;
}

BiPoly dy(const BiPoly& p) {
  BiPoly out;
  for (size_t j = 1; j < p.size(); ++j) out.push_back(Rat(static_cast<long>(j)) * p[j]);
  trim(out);
  return out;
}

namespace {

// coefficients of p(a, y) in ascending powers of y; near-zero leading
// coefficients are trimmed relative to the largest entry
std::vector<Cplx> slice_at_x(const BiPoly& p, const Cplx& a) {
  std::vector<Cplx> out;
  out.reserve(p.size());
  for (const auto& row : p) out.push_back(poly::eval(row, a));
  double max_abs = 0.0;
  for (const Cplx& c : out) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return {};
  while (out.size() > 1 && std::abs(out.back()) <= 1e-10 * max_abs) out.pop_back();
  return out;
}

struct NewtonSystem {
  const BiPoly &a, &b, &ax, &ay, &bx, &by;

  bool polish(Cplx& x, Cplx& y) const {
    for (int iter = 0; iter < 30; ++iter) {
      const Cplx fa = eval(a, x, y), fb = eval(b, x, y);
      const Cplx j11 = eval(ax, x, y), j12 = eval(ay, x, y);
      const Cplx j21 = eval(bx, x, y), j22 = eval(by, x, y);
      const Cplx det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-300) return false;
      const Cplx d1 = (fa * j22 - fb * j12) / det;
      const Cplx d2 = (j11 * fb - j21 * fa) / det;
      x -= d1;
      y -= d2;
      const double step = std::max(std::abs(d1), std::abs(d2));
      if (step < 1e-14 * std::max(1.0, std::max(std::abs(x), std::abs(y)))) return true;
    }
    return true;  // accepted or rejected on the final residual
  }
};

}  // namespace

SystemSolutions solve_system(const BiPoly& a_in, const BiPoly& b_in) {
  BiPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (is_zero(a) || is_zero(b))
    throw DegenerateInput("solve_system: an equation vanishes identically");

  SystemSolutions out;
  const BiPoly ax = dx(a), ay = dy(a), bx = dx(b), by = dy(b);
  const NewtonSystem newton{a, b, ax, ay, bx, by};

  auto push_candidate = [&](Cplx x, Cplx y) {
    if (!newton.polish(x, y)) return;
    const double sa = eval_scale(a, std::abs(x), std::abs(y));
    const double sb = eval_scale(b, std::abs(x), std::abs(y));
    if (std::abs(eval(a, x, y)) > 1e-9 * sa) return;
    if (std::abs(eval(b, x, y)) > 1e-9 * sb) return;
    out.points.emplace_back(x, y);
  };

  const int deg_a = static_cast<int>(a.size()) - 1;
  const int deg_b = static_cast<int>(b.size()) - 1;

  if (deg_a == 0 && deg_b == 0) {
    // neither involves y: any common root of the two univariates spans a line
    if (poly::gcd(a[0], b[0]).degree() >= 1)
      throw DegenerateInput("solve_system: one-dimensional solution set");
    return out;
  }

  if (deg_a == 0 || deg_b == 0) {
    const poly::RatPoly& uni = deg_a == 0 ? a[0] : b[0];
    const BiPoly& other = deg_a == 0 ? b : a;
    if (uni.degree() >= 1) {
      const poly::RatPoly reduced_uni = poly::squarefree_part(uni);
      std::vector<Cplx> uc;
      for (const Rat& c : reduced_uni.coeffs()) uc.push_back(Cplx(to_double(c), 0.0));
      for (const Cplx& root : roots::aberth_roots(uc)) {
        std::vector<Cplx> slice = slice_at_x(other, root);
        if (slice.empty())
          throw DegenerateInput("solve_system: vertical line of solutions");
        if (slice.size() == 1) continue;
        for (const Cplx& z : roots::aberth_roots(slice)) push_candidate(root, z);
      }
    }
    return out;
  }

  poly::RatPoly res = poly::sylvester_resultant(a, b);
  if (res.is_zero()) throw DegenerateInput("solve_system: the equations share a component");
  if (res.degree() < 1) return out;

  poly::RatPoly reduced = poly::squarefree_part(res);
  std::vector<Cplx> rc;
  double max_abs = 0.0;
  for (const Rat& c : reduced.coeffs()) max_abs = std::max(max_abs, std::abs(to_double(c)));
  for (const Rat& c : reduced.coeffs()) rc.push_back(Cplx(to_double(c) / max_abs, 0.0));
  for (const Cplx& x : roots::aberth_roots(rc)) {
    std::vector<Cplx> slice = slice_at_x(a, x);
    if (slice.empty()) {
      out.notes.push_back("resultant root annihilates every y-coefficient");
      continue;
    }
    if (slice.size() == 1) continue;  // spurious resultant root
    const double tol_b = 1e-5 * eval_scale(b, std::abs(x), 1.0);
    for (const Cplx& z : roots::aberth_roots(slice))
      if (std::abs(eval(b, x, z)) <= tol_b * std::max(1.0, std::pow(std::abs(z), deg_b)))
        push_candidate(x, z);
  }
  return out;
}

}  // namespace rrdeg::bivar
