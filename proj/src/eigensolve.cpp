#include "rrdeg/eigensolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rrdeg/bivariate.hpp"
#include "rrdeg/rank_test.hpp"
#include "rrdeg/roots.hpp"

namespace rrdeg::eigensolve {

using bw::Form;
using poly::BinaryForm;
using poly::RatPoly;
using Cplx = std::complex<double>;

poly::BinaryForm compose_with_map(const Form& f, const std::vector<BinaryForm>& g) {
  if (static_cast<int>(g.size()) != f.vars())
    throw std::invalid_argument("compose_with_map: component count must match variables");
  if (g.empty()) throw std::invalid_argument("compose_with_map: empty map");
  const int d = g.front().degree();
  for (const auto& gi : g)
    if (gi.degree() != d)
      throw std::invalid_argument("compose_with_map: components must share a degree");
  const int out_degree = f.degree() * d;

  // cache g_i^e for the exponents that actually occur
  std::vector<std::vector<BinaryForm>> powers(g.size());
  for (size_t i = 0; i < g.size(); ++i) powers[i].push_back(BinaryForm({std::vector<Rat>{Rat(1)}}));

  BinaryForm acc = BinaryForm::zero(out_degree);
  for (const auto& [alpha, c] : f.coeffs()) {
    BinaryForm term(std::vector<Rat>{f.coeff_raw(alpha)});
    for (size_t i = 0; i < g.size(); ++i) {
      const int e = alpha[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(poly::bf_mul(powers[i].back(), g[i]));
      term = poly::bf_mul(term, powers[i][static_cast<size_t>(e)]);
    }
    acc = poly::bf_add(acc, term);
  }
  return acc;
}

BinaryForm critical_binary_form(const std::vector<BinaryForm>& g, const Form& f,
                                const Form& q) {
  if (static_cast<int>(g.size()) != f.vars() || f.vars() != q.vars())
    throw std::invalid_argument("critical_binary_form: variable counts are inconsistent");
  if (q.degree() != 2)
    throw std::invalid_argument("critical_binary_form: q must be quadratic");
  if (f.degree() < 1) throw std::invalid_argument("critical_binary_form: f must be nonconstant");
  BinaryForm fg = compose_with_map(f, g);
  BinaryForm qg = compose_with_map(q, g);
  BinaryForm det = poly::bf_sub(poly::bf_mul(poly::bf_dt0(qg), poly::bf_dt1(fg)),
                                poly::bf_mul(poly::bf_dt1(qg), poly::bf_dt0(fg)));
  return poly::bf_primitive(det);
}

std::vector<RootCluster> roots_projective(const BinaryForm& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("roots_projective: zero form");
  const int total_degree = p.degree();
  RatPoly affine = poly::dehomogenize(p);
  const int infinity_mult = total_degree - affine.degree();

  std::vector<RootCluster> out;
  if (affine.degree() >= 1) {
    std::vector<Cplx> coeffs;
    double max_abs = 0.0;
    for (const Rat& c : affine.coeffs()) max_abs = std::max(max_abs, std::abs(to_double(c)));
    for (const Rat& c : affine.coeffs()) coeffs.push_back(Cplx(to_double(c) / max_abs, 0.0));
    auto raw = roots::aberth_roots(coeffs);
    for (const auto& cl : roots::cluster_roots(raw, tol)) {
      ProjectivePoint pt = normalize_projective({Cplx(1.0), cl.center}, 0);
      out.push_back({std::move(pt), cl.multiplicity});
    }
  }
  if (infinity_mult > 0)
    out.push_back({ProjectivePoint{{Cplx(0.0), Cplx(1.0)}, 1}, infinity_mult});
  return out;
}

int sturm_real_count(const BinaryForm& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_real_count: zero form");
  RatPoly affine = poly::dehomogenize(p);
  int count = affine.degree() >= 1 ? poly::sturm_distinct_real_roots(affine) : 0;
  if (affine.degree() < p.degree()) ++count;  // [0:1] is a (real) root
  return count;
}

std::vector<BinaryForm> veronese_map(int d) {
  if (d < 1) throw std::invalid_argument("veronese_map: d must be >= 1");
  std::vector<BinaryForm> g;
  for (int i = 0; i <= d; ++i) {
    BinaryForm mono = BinaryForm::zero(d);
    mono.coeffs[static_cast<size_t>(i)] = Rat(1);  // t0^(d-i) t1^i
    g.push_back(std::move(mono));
  }
  return g;
}

std::vector<Form> rational_normal_curve_equations(int d) {
  std::vector<Form> eqs;
  // 2x2 minors of the Hankel matrix (x_0 .. x_{d-1} ; x_1 .. x_d)
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Form m(d + 1, 2, bw::Convention::Raw);
      std::vector<int> a(static_cast<size_t>(d) + 1, 0), b(static_cast<size_t>(d) + 1, 0);
      a[static_cast<size_t>(i)] += 1;
      a[static_cast<size_t>(j + 1)] += 1;
      b[static_cast<size_t>(i + 1)] += 1;
      b[static_cast<size_t>(j)] += 1;
      m.add_coeff(a, Rat(1));
      m.add_coeff(b, Rat(-1));
      eqs.push_back(std::move(m));
    }
  }
  return eqs;
}

ParametrizedCurve projective_line_curve() {
  ParametrizedCurve c;
  c.map = veronese_map(1);
  c.quadric = bw::euclidean_quadric(2);
  c.codim = 0;
  return c;
}

ParametrizedCurve rational_normal_curve(int d) {
  ParametrizedCurve c;
  c.map = veronese_map(d);
  c.quadric = bw::euclidean_quadric(d + 1);
  c.equations = rational_normal_curve_equations(d);
  c.codim = d - 1;
  return c;
}

ParametrizedCurve conic_bw_curve() {
  ParametrizedCurve c;
  c.map = veronese_map(2);
  // Bombieri-Weyl quadratic form on binary quadratics: x0^2 + 2 x1^2 + x2^2
  c.quadric = bw::diagonal_quadric({Rat(1), Rat(2), Rat(1)});
  Form conic(3, 2, bw::Convention::Raw);
  conic.set_coeff({0, 2, 0}, Rat(1));
  conic.set_coeff({1, 0, 1}, Rat(-1));
  c.equations.push_back(std::move(conic));
  c.codim = 1;
  // q_BW o nu_2 = (t0^2 + t1^2)^2, so the critical form carries the isotropic
  // factor t0^2 + t1^2 whose roots cannot be normalized
  c.isotropic_factor = BinaryForm(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  return c;
}

namespace {

double coeff_scale(const Form& f) {
  double s = 0.0;
  for (const auto& [alpha, c] : f.coeffs()) s += std::abs(to_double(f.coeff_raw(alpha)));
  return std::max(s, 1.0);
}

struct CertifiedPoint {
  ProjectivePoint point;
  int multiplicity = 1;
  double residual = 0.0;
  bool real = false;
  std::optional<bw::Eigenpair> eigenpair;
};

// rank certificate rows (grad q / 2 ; grad f ; grad f_i) at the normalized
// representative, plus evaluation residuals of the defining equations
CertifiedPoint certify_point(ProjectivePoint pt, int multiplicity, const Form& f,
                             const Form& q, const std::vector<Form>& equations, int codim) {
  CertifiedPoint cp;
  cp.multiplicity = multiplicity;
  cp.real = pt.is_real();
  const std::vector<Cplx>& psi = pt.coords;

  std::vector<std::vector<Cplx>> rows;
  std::vector<Cplx> qrow = q.gradient(psi);
  for (Cplx& v : qrow) v *= 0.5;
  rows.push_back(std::move(qrow));
  rows.push_back(f.gradient(psi));
  for (const Form& e : equations) rows.push_back(e.gradient(psi));
  cp.residual = rank_residual(rows, codim + 1);

  for (const Form& e : equations)
    cp.residual = std::max(cp.residual, std::abs(e.evaluate(psi)) / coeff_scale(e));

  if (cp.real) {
    Cplx qv = q.evaluate(psi);
    if (std::abs(qv) > 1e-12) {
      const double scale = 1.0 / std::sqrt(qv.real());
      bw::Eigenpair pair;
      pair.psi.reserve(psi.size());
      for (const Cplx& c : psi) pair.psi.push_back(Cplx(c.real() * scale, 0.0));
      pair.lambda = f.evaluate(pair.psi);
      cp.eigenpair = std::move(pair);
    }
  }
  cp.point = std::move(pt);
  return cp;
}

void assemble_report(SolveReport& report, std::vector<CertifiedPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const CertifiedPoint& a, const CertifiedPoint& b) {
    for (size_t i = 0; i < std::min(a.point.coords.size(), b.point.coords.size()); ++i) {
      const Cplx &x = a.point.coords[i], &y = b.point.coords[i];
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
  });
  for (auto& cp : pts) {
    report.residual_max = std::max(report.residual_max, cp.residual);
    if (cp.multiplicity > 1)
      report.degeneracies.push_back("critical point of multiplicity " +
                                    std::to_string(cp.multiplicity));
    if (cp.real) {
      ++report.real_count;
      if (cp.eigenpair) report.real_eigenpairs.push_back(*cp.eigenpair);
    }
    report.points.push_back(std::move(cp.point));
  }
  report.complex_count = static_cast<int>(report.points.size());
  std::sort(report.real_eigenpairs.begin(), report.real_eigenpairs.end(),
            [](const bw::Eigenpair& a, const bw::Eigenpair& b) {
              return a.lambda.real() < b.lambda.real();
            });
}

}  // namespace

SolveReport eigenpoints_parametrized(const ParametrizedCurve& curve, const Form& f,
                                     double tol) {
  SolveReport report;
  BinaryForm det = critical_binary_form(curve.map, f, curve.quadric);
  if (det.is_zero())
    throw DegenerateInput("eigenpoints_parametrized: critical form vanishes identically");
  if (curve.isotropic_factor) {
    det = poly::bf_primitive(poly::bf_exact_divide(det, *curve.isotropic_factor));
    if (det.is_zero())
      throw DegenerateInput("eigenpoints_parametrized: critical form is the isotropic factor");
  }

  std::vector<CertifiedPoint> pts;
  for (const RootCluster& cl : roots_projective(det, tol)) {
    const Cplx w0 = cl.point.coords[0], w1 = cl.point.coords[1];
    std::vector<Cplx> image;
    image.reserve(curve.map.size());
    for (const BinaryForm& gi : curve.map) image.push_back(poly::bf_eval(gi, w0, w1));
    double norm = 0.0;
    for (const Cplx& c : image) norm = std::max(norm, std::abs(c));
    if (norm == 0.0) {
      report.degeneracies.push_back("root lies in the base locus of the parametrization");
      continue;
    }
    ProjectivePoint pt = normalize_projective(std::move(image), cl.point.chart_tag);
    pts.push_back(certify_point(std::move(pt), cl.multiplicity, f, curve.quadric,
                                curve.equations, curve.codim));
  }
  assemble_report(report, std::move(pts));
  return report;
}

// ---------------------------------------------------------------------------
// Plane curves: { f1 = 0, h = 0 } in P^2
// ---------------------------------------------------------------------------

namespace {

// restriction to the chart x0 = 1 as a bivariate polynomial in (x1, x2)
bivar::BiPoly chart1_restrict(const Form& F) {
  int max_x2 = 0;
  for (const auto& [alpha, c] : F.coeffs()) max_x2 = std::max(max_x2, alpha[2]);
  std::vector<std::vector<Rat>> buckets(static_cast<size_t>(max_x2) + 1);
  for (const auto& [alpha, c] : F.coeffs()) {
    auto& vec = buckets[static_cast<size_t>(alpha[2])];
    if (static_cast<int>(vec.size()) <= alpha[1]) vec.resize(static_cast<size_t>(alpha[1]) + 1, Rat(0));
    vec[static_cast<size_t>(alpha[1])] += F.coeff_raw(alpha);
  }
  bivar::BiPoly out(buckets.size());
  for (size_t j = 0; j < buckets.size(); ++j) out[j] = RatPoly(std::move(buckets[j]));
  bivar::trim(out);
  return out;
}

poly::BinaryForm form_to_binary(const Form& F) {
  if (F.vars() != 2) throw std::invalid_argument("form_to_binary: need two variables");
  poly::BinaryForm out = poly::BinaryForm::zero(F.degree());
  for (const auto& [alpha, c] : F.coeffs())
    out.coeffs[static_cast<size_t>(alpha[1])] = F.coeff_raw(alpha);
  return out;
}

Form plane_criticality_determinant(const Form& f1, const Form& f, const Form& q) {
  std::array<Form, 3> r0{Rat(1) / Rat(2) * partial(q, 0), Rat(1) / Rat(2) * partial(q, 1),
                         Rat(1) / Rat(2) * partial(q, 2)};
  std::array<Form, 3> r1{partial(f, 0), partial(f, 1), partial(f, 2)};
  std::array<Form, 3> r2{partial(f1, 0), partial(f1, 1), partial(f1, 2)};
  Form h = form_mul(r0[0], form_mul(r1[1], r2[2]) - form_mul(r1[2], r2[1])) -
           form_mul(r0[1], form_mul(r1[0], r2[2]) - form_mul(r1[2], r2[0])) +
           form_mul(r0[2], form_mul(r1[0], r2[1]) - form_mul(r1[1], r2[0]));
  return h;
}

}  // namespace

SolveReport eigenpoints_plane_curve(const Form& f1, const Form& f, const Form& q) {
  if (f1.vars() != 3 || f.vars() != 3 || q.vars() != 3)
    throw std::invalid_argument("eigenpoints_plane_curve: expects ternary forms");
  if (f1.is_zero() || f.is_zero())
    throw std::invalid_argument("eigenpoints_plane_curve: zero input form");
  if (q.degree() != 2) throw std::invalid_argument("eigenpoints_plane_curve: q must be quadratic");

  SolveReport report;
  Form h = plane_criticality_determinant(f1, f, q);
  if (h.is_zero())
    throw DegenerateInput("eigenpoints_plane_curve: criticality determinant vanishes on P^2");

  std::vector<CertifiedPoint> pts;
  const std::vector<Form> equations{f1, h};

  // chart x0 = 0: exact gcd of the two restrictions
  poly::BinaryForm f1_line = form_to_binary(f1.restrict_var_zero(0));
  poly::BinaryForm h_line = form_to_binary(h.restrict_var_zero(0));
  if (f1_line.is_zero() && h_line.is_zero())
    throw DegenerateInput("eigenpoints_plane_curve: the line x0 = 0 consists of solutions");
  poly::BinaryForm common = poly::bf_gcd(f1_line, h_line);
  if (common.degree() >= 1) {
    for (const RootCluster& cl : roots_projective(common)) {
      std::vector<Cplx> coords{Cplx(0.0), cl.point.coords[0], cl.point.coords[1]};
      ProjectivePoint pt = normalize_projective(std::move(coords), 0);
      pts.push_back(certify_point(std::move(pt), cl.multiplicity, f, q, {f1}, 1));
    }
  }

  // chart x0 = 1: eliminate x2 by a Sylvester resultant
  bivar::BiPoly a = chart1_restrict(f1);
  bivar::BiPoly b = chart1_restrict(h);
  if (bivar::is_zero(a) || bivar::is_zero(b))
    throw DegenerateInput("eigenpoints_plane_curve: a defining form vanishes on the chart");

  bivar::SystemSolutions affine = bivar::solve_system(a, b);
  for (const std::string& note : affine.notes) report.degeneracies.push_back(note);

  // dedup in the chart, then certify
  std::vector<ProjectivePoint> chart1_points;
  for (const auto& [x1, x2] : affine.points)
    chart1_points.push_back(normalize_projective({Cplx(1.0), x1, x2}, 1));
  chart1_points = dedup_points(std::move(chart1_points), 1e-8);
  for (ProjectivePoint& pt : chart1_points) {
    // transversality of {f1, h} at the solution; loss marks a multiple point
    std::vector<std::vector<Cplx>> jac{f1.gradient(pt.coords), h.gradient(pt.coords)};
    if (rank_residual(jac, 1) < 1e-6)
      report.degeneracies.push_back("rank-deficient Jacobian at a solution (multiple point)");
    pts.push_back(certify_point(std::move(pt), 1, f, q, {f1}, 1));
  }

  assemble_report(report, std::move(pts));

  // the criticality determinant must vanish on every reported point
  for (const ProjectivePoint& pt : report.points)
    report.residual_max = std::max(
        report.residual_max, std::abs(h.evaluate(pt.coords)) / coeff_scale(h));
  return report;
}

bool count_vs_formula(SolveReport& report, const Int& expected, double tol) {
  report.expected_degree = expected;
  bool ok = Int(report.complex_count) == expected && report.residual_max <= tol &&
            report.degeneracies.empty();
  report.match = ok;
  return ok;
}

Form random_form(int vars, int degree, SplitMix64& rng, long lo, long hi) {
  for (;;) {
    Form f(vars, degree, bw::Convention::Raw);
    for (const auto& alpha : bw::exponent_tuples(vars, degree))
      f.set_coeff(alpha, Rat(rng.range(lo, hi)));
    if (!f.is_zero()) return f;
  }
}

}  // namespace rrdeg::eigensolve
