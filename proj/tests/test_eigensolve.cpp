#include "rrdeg/eigensolve.hpp"

#include <cmath>

#include "doctest.h"
#include "rrdeg/formulas.hpp"

using namespace rrdeg;
using namespace rrdeg::eigensolve;
using bw::Convention;
using bw::Form;
using poly::BinaryForm;

namespace {

Form raw_form(int vars, int degree,
              std::initializer_list<std::pair<std::vector<int>, long>> entries) {
  Form f(vars, degree, Convention::Raw);
  for (const auto& [alpha, c] : entries) f.set_coeff(alpha, Rat(c));
  return f;
}

BinaryForm make_bf(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return BinaryForm(std::move(c));
}

Form binary_cubic() {
  return raw_form(2, 3, {{{3, 0}, 2}, {{2, 1}, -3}, {{1, 2}, 6}, {{0, 3}, -1}});
}

// ternary quadric c200 x0^2 + 2 c110 x0 x1 + 2 c101 x0 x2 + c020 x1^2
//                + 2 c011 x1 x2 + c002 x2^2
Form conic_objective(long c200, long c110, long c101, long c020, long c011, long c002) {
  Form f(3, 2, Convention::Raw);
  f.set_coeff({2, 0, 0}, Rat(c200));
  f.set_coeff({1, 1, 0}, Rat(2 * c110));
  f.set_coeff({1, 0, 1}, Rat(2 * c101));
  f.set_coeff({0, 2, 0}, Rat(c020));
  f.set_coeff({0, 1, 1}, Rat(2 * c011));
  f.set_coeff({0, 0, 2}, Rat(c002));
  return f;
}

bool contains_point(const std::vector<ProjectivePoint>& pts, std::vector<std::complex<double>> v,
                    double tol = 1e-8) {
  ProjectivePoint target = normalize_projective(std::move(v));
  for (const auto& p : pts)
    if (p.coords.size() == target.coords.size() && projective_distance(p, target) <= tol)
      return true;
  return false;
}

}  // namespace

TEST_CASE("critical form of the binary cubic on the line") {
  BinaryForm det = critical_binary_form(veronese_map(1), binary_cubic(), bw::euclidean_quadric(2));
  CHECK(det == make_bf({1, -2, -1, 2}));  // (t0 - 2 t1)(t0 - t1)(t0 + t1)
  CHECK(det.degree() == 3);               // (omega + 2) d - 2 at omega = 3, d = 1
}

TEST_CASE("critical sextics of the two conic instances") {
  Form f1 = conic_objective(42, 140, -60, 267, 210, -63);
  BinaryForm p1 = critical_binary_form(veronese_map(2), f1, bw::euclidean_quadric(3));
  CHECK(p1 == make_bf({4, 3, 14, -6, -6, -6, -6}));
  CHECK(p1.degree() == 6);  // (2 + 2) * 2 - 2

  Form f2 = conic_objective(189, 28, 60, 195, -84, 147);
  BinaryForm p2 = critical_binary_form(veronese_map(2), f2, bw::euclidean_quadric(3));
  CHECK(p2 == make_bf({2, 9, -20, -6, -12, -12, 6}));

  CHECK(sturm_real_count(p1) == 2);
  CHECK(sturm_real_count(p2) == 4);
}

TEST_CASE("bw conic critical form carries the isotropic factor") {
  SplitMix64 rng(11);
  const Form q_bw = bw::diagonal_quadric({Rat(1), Rat(2), Rat(1)});
  const BinaryForm circle = make_bf({1, 0, 1});
  for (int trial = 0; trial < 25; ++trial) {
    Form f = random_form(3, 2, rng);
    BinaryForm p = critical_binary_form(veronese_map(2), f, q_bw);
    if (p.is_zero()) continue;
    BinaryForm quotient = poly::bf_exact_divide(p, circle);  // throws if not divisible
    CHECK(quotient.degree() == 4);

    // quartic factor against its closed coefficient form, up to a scalar
    Rat c200 = f.coeff_raw({2, 0, 0});
    Rat c110 = f.coeff_raw({1, 1, 0}) / 2;
    Rat c101 = f.coeff_raw({1, 0, 1}) / 2;
    Rat c020 = f.coeff_raw({0, 2, 0});
    Rat c011 = f.coeff_raw({0, 1, 1}) / 2;
    Rat c002 = f.coeff_raw({0, 0, 2});
    std::vector<Rat> expect{c110, c020 - 2 * c200 + 2 * c101, 3 * (c011 - c110),
                            2 * c002 - c020 - 2 * c101, -c011};
    BinaryForm closed(std::move(expect));
    if (closed.is_zero()) continue;
    CHECK(poly::bf_primitive(quotient) == poly::bf_primitive(closed));
  }
}

TEST_CASE("inconsistent inputs are rejected") {
  // component count must match the variable count of f and q
  CHECK_THROWS_AS(critical_binary_form(veronese_map(2), binary_cubic(), bw::euclidean_quadric(2)),
                  std::invalid_argument);
  // q must be quadratic
  CHECK_THROWS_AS(critical_binary_form(veronese_map(1), binary_cubic(), binary_cubic()),
                  std::invalid_argument);
  CHECK_THROWS_AS(roots_projective(BinaryForm::zero(4)), std::invalid_argument);
}

TEST_CASE("projective roots") {
  auto clusters = roots_projective(make_bf({1, -2, -1, 2}));
  REQUIRE(clusters.size() == 3);
  std::vector<ProjectivePoint> pts;
  for (auto& c : clusters) pts.push_back(c.point);
  CHECK(contains_point(pts, {2.0, 1.0}));
  CHECK(contains_point(pts, {1.0, 1.0}));
  CHECK(contains_point(pts, {1.0, -1.0}));

  // p = t1^d has the d-fold root [1:0]
  auto mono = roots_projective(make_bf({0, 0, 0, 1}));
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].multiplicity == 3);
  CHECK(projective_distance(mono[0].point, normalize_projective({1.0, 0.0})) < 1e-12);

  // p = t0^d has the d-fold root [0:1]
  auto inf = roots_projective(make_bf({1, 0, 0, 0}));
  REQUIRE(inf.size() == 1);
  CHECK(inf[0].multiplicity == 3);
  CHECK(std::abs(inf[0].point.coords[0]) == 0.0);

  // roots of the second conic instance: four real and one conjugate pair
  BinaryForm p2 = make_bf({2, 9, -20, -6, -12, -12, 6});
  auto r2 = roots_projective(p2);
  std::vector<ProjectivePoint> pts2;
  for (auto& c : r2) pts2.push_back(c.point);
  CHECK(pts2.size() == 6);
  for (double t : {-6.08441, -0.807225, 0.34297, 2.04914})
    CHECK(contains_point(pts2, {t, 1.0}, 2e-5));
  CHECK(contains_point(pts2, {{-0.000239, 0.932267}, 1.0}, 2e-5));
  CHECK(contains_point(pts2, {{-0.000239, -0.932267}, 1.0}, 2e-5));
}

TEST_CASE("sturm projective count handles roots at infinity") {
  CHECK(sturm_real_count(make_bf({0, 0, 1, -1})) == 2);      // t1^2 (t0 - t1): [1:0] and [1:1]
  CHECK(sturm_real_count(make_bf({1, 0, 0})) == 1);          // t0^2: [0:1]
  CHECK(sturm_real_count(poly::bf_mul(make_bf({1, 0, 1}), make_bf({1, -1}))) == 1);
  CHECK_THROWS_AS(sturm_real_count(BinaryForm::zero(4)), std::invalid_argument);
}

TEST_CASE("eigenpoints of the binary cubic on P^1") {
  SolveReport report = eigenpoints_parametrized(projective_line_curve(), binary_cubic());
  CHECK(report.complex_count == 3);
  CHECK(report.real_count == 3);
  CHECK(report.residual_max < 1e-10);
  CHECK(report.degeneracies.empty());
  CHECK(contains_point(report.points, {2.0, 1.0}));
  CHECK(contains_point(report.points, {1.0, 1.0}));
  CHECK(contains_point(report.points, {1.0, -1.0}));

  // eigenvalues up to sign: 3 sqrt5 / 5, sqrt2, 3 sqrt2
  REQUIRE(report.real_eigenpairs.size() == 3);
  std::vector<double> lambdas;
  for (const auto& p : report.real_eigenpairs) lambdas.push_back(std::abs(p.lambda));
  std::sort(lambdas.begin(), lambdas.end());
  CHECK(std::abs(lambdas[0] - 3.0 * std::sqrt(5.0) / 5.0) < 1e-10);
  CHECK(std::abs(lambdas[1] - std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(lambdas[2] - 3.0 * std::sqrt(2.0)) < 1e-10);

  // the max-|lambda| pair is BW-closest among the real candidates
  bw::Eigenpair best = bw::closest_rank_one(binary_cubic(), report.real_eigenpairs);
  CHECK(std::abs(std::abs(best.lambda) - 3.0 * std::sqrt(2.0)) < 1e-10);
  bw::NumForm fn = bw::to_numeric(binary_cubic());
  double best_dist = std::abs(bw::bw_dist_sq(fn, bw::rank_one_power_num(best.psi, best.lambda, 3)));
  for (const auto& p : report.real_eigenpairs) {
    double d = std::abs(bw::bw_dist_sq(fn, bw::rank_one_power_num(p.psi, p.lambda, 3)));
    CHECK(best_dist <= d + 1e-9);
  }
  CHECK(std::abs(best_dist - 2.0) < 1e-8);
}

TEST_CASE("rational normal curves match the closed degree count") {
  for (int d = 1; d <= 4; ++d) {
    ParametrizedCurve curve = rational_normal_curve(d);
    for (int omega = 2; omega <= 4; ++omega) {
      int matched = 0;
      for (uint64_t seed = 1; seed <= 5; ++seed) {
        SplitMix64 rng(seed * 977 + static_cast<uint64_t>(100 * d + omega));
        Form f = random_form(d + 1, omega, rng);
        SolveReport report = eigenpoints_parametrized(curve, f);
        Int expected = formulas::rrdeg_generic_morphism(1, d, omega);
        if (count_vs_formula(report, expected)) ++matched;
      }
      CHECK(matched >= 4);  // rare non-generic draws may fail a seed
    }
  }
}

TEST_CASE("conic under its BW quadric has four critical points") {
  ParametrizedCurve curve = conic_bw_curve();
  int matched = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SplitMix64 rng(seed);
    Form f = random_form(3, 2, rng);
    SolveReport report = eigenpoints_parametrized(curve, f);
    if (count_vs_formula(report, Int(4))) ++matched;
    CHECK(report.complex_count <= 4);
  }
  CHECK(matched >= 9);
}

TEST_CASE("Fermat cubic end to end") {
  Form fermat = raw_form(3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
  Form f = raw_form(3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 10}, {{0, 1, 1}, 2}, {{0, 0, 2}, 8}});
  SolveReport report = eigenpoints_plane_curve(fermat, f, bw::euclidean_quadric(3));

  CHECK(report.complex_count == 12);
  CHECK(report.real_count == 4);
  CHECK(report.residual_max < 1e-8);
  CHECK(report.degeneracies.empty());

  int on_line = 0;
  for (const auto& p : report.points)
    if (std::abs(p.coords[0]) < 1e-10) ++on_line;
  CHECK(on_line == 3);
  // the three solutions on x0 = 0 are [0 : 1 : -xi] for the cube roots xi of 1
  CHECK(contains_point(report.points, {0.0, 1.0, -1.0}));
  const std::complex<double> xi(-0.5, std::sqrt(3.0) / 2.0);
  CHECK(contains_point(report.points, {0.0, 1.0, -xi}));
  CHECK(contains_point(report.points, {0.0, 1.0, -(xi * xi)}));

  REQUIRE(report.real_eigenpairs.size() == 4);
  bw::Eigenpair best = bw::closest_rank_one(f, report.real_eigenpairs);
  CHECK(std::abs(best.lambda - std::complex<double>(8.0)) < 1e-9);
  const double s = std::sqrt(2.0) / 2.0;
  bool matches_psi = true;
  std::vector<double> expect{0.0, s, -s};
  for (int i = 0; i < 3; ++i) {
    // up to global sign
    if (std::abs(best.psi[static_cast<size_t>(i)].real() - expect[static_cast<size_t>(i)]) > 1e-9 &&
        std::abs(best.psi[static_cast<size_t>(i)].real() + expect[static_cast<size_t>(i)]) > 1e-9)
      matches_psi = false;
    CHECK(std::abs(best.psi[static_cast<size_t>(i)].imag()) < 1e-9);
  }
  CHECK(matches_psi);

  // BW distance^2 from f to 8 (psi*)^2 = 4 (x1 - x2)^2 is exactly 103
  Form closest = raw_form(3, 2, {{{0, 2, 0}, 4}, {{0, 1, 1}, -8}, {{0, 0, 2}, 4}});
  CHECK(bw::bw_dist_sq(f, closest) == 103);
  bw::NumForm numeric_closest = bw::rank_one_power_num(best.psi, best.lambda, 2);
  CHECK(std::abs(bw::bw_dist_sq(bw::to_numeric(f), numeric_closest) -
                 std::complex<double>(103.0)) < 1e-7);

  // conjugation closure of the solution multiset
  for (const auto& p : report.points) {
    std::vector<std::complex<double>> conj;
    for (const auto& c : p.coords) conj.push_back(std::conj(c));
    CHECK(contains_point(report.points, conj, 1e-7));
  }

  Int expected = formulas::rrdeg_hypersurface(2, 3, 2);
  CHECK(count_vs_formula(report, expected));
}

TEST_CASE("random plane curves match delta(delta + omega - 1)") {
  for (long delta = 1; delta <= 3; ++delta) {
    int matched = 0;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      SplitMix64 rng(seed * 31 + static_cast<uint64_t>(delta));
      Form f1 = random_form(3, static_cast<int>(delta), rng);
      Form f = random_form(3, 2, rng);
      SolveReport report;
      try {
        report = eigenpoints_plane_curve(f1, f, bw::euclidean_quadric(3));
      } catch (const DegenerateInput&) {
        continue;
      }
      Int expected = formulas::rrdeg_hypersurface(2, delta, 2);
      if (count_vs_formula(report, expected)) ++matched;
    }
    CHECK(matched >= 4);
  }
}

TEST_CASE("objective vanishing on the curve is degenerate") {
  Form conic(3, 2, Convention::Raw);
  conic.set_coeff({0, 2, 0}, Rat(1));
  conic.set_coeff({1, 0, 1}, Rat(-1));
  // f = f1 makes every point of the curve critical: grad f and grad f1 are
  // proportional, so the determinant vanishes on X and the solution set on
  // the curve is infinite; the solver must refuse or flag
  bool rejected = false;
  try {
    SolveReport r = eigenpoints_plane_curve(conic, conic, bw::euclidean_quadric(3));
    rejected = !r.degeneracies.empty() || !count_vs_formula(r, Int(6));
  } catch (const DegenerateInput&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("root multiplicities of the critical form sum to its degree") {
  SplitMix64 rng(8086);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + static_cast<int>(rng.range(0, 2));
    const int omega = 2 + static_cast<int>(rng.range(0, 2));
    Form f = random_form(d + 1, omega, rng);
    BinaryForm p = critical_binary_form(veronese_map(d), f, bw::euclidean_quadric(d + 1));
    if (p.is_zero()) continue;
    CHECK(p.degree() == (omega + 2) * d - 2);
    int mult_sum = 0;
    for (const auto& cl : roots_projective(p)) mult_sum += cl.multiplicity;
    CHECK(mult_sum == p.degree());
  }
}

TEST_CASE("sturm count agrees with the numeric real-root count") {
  SplitMix64 rng(90210);
  int sampled = 0;
  while (sampled < 100) {
    Form f = random_form(3, 2, rng);
    BinaryForm p = critical_binary_form(veronese_map(2), f, bw::euclidean_quadric(3));
    if (p.is_zero()) continue;
    poly::RatPoly affine = poly::dehomogenize(p);
    if (affine.degree() < 6) continue;
    if (poly::gcd(affine, poly::derivative(affine)).degree() > 0) continue;
    int numeric_real = 0;
    for (const auto& cl : roots_projective(p))
      if (cl.point.is_real(1e-8)) ++numeric_real;
    CHECK(sturm_real_count(p) == numeric_real);
    ++sampled;
  }
}

TEST_CASE("conic as a plane curve has six eigenpoints, at most four real") {
  Form conic(3, 2, Convention::Raw);
  conic.set_coeff({0, 2, 0}, Rat(1));
  conic.set_coeff({1, 0, 1}, Rat(-1));
  int matched = 0;
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    SplitMix64 rng(seed * 17 + 3);
    Form f = random_form(3, 2, rng);
    SolveReport report;
    try {
      report = eigenpoints_plane_curve(conic, f, bw::euclidean_quadric(3));
    } catch (const DegenerateInput&) {
      continue;
    }
    if (count_vs_formula(report, formulas::rrdeg_hypersurface(2, 2, 2))) ++matched;
    CHECK(report.real_count <= 4);
  }
  CHECK(matched >= 7);
}

TEST_CASE("coefficient relations of the conic critical sextic hold on random objectives") {
  SplitMix64 rng(2718);
  int verified = 0;
  while (verified < 50) {
    Form f = random_form(3, 2, rng);
    BinaryForm p = critical_binary_form(veronese_map(2), f, bw::euclidean_quadric(3));
    if (p.is_zero()) continue;
    REQUIRE(p.degree() == 6);
    const auto& y = p.coeffs;
    CHECK(3 * y[2] - y[4] + 8 * y[6] == 0);
    CHECK(2 * y[1] - y[3] + 2 * y[5] == 0);
    CHECK(3 * y[0] + y[4] + y[6] == 0);
    ++verified;
  }
}

TEST_CASE("real root counts of conic critical sextics are two or four") {
  SplitMix64 rng(31415);
  int sampled = 0;
  while (sampled < 100) {
    Form f = random_form(3, 2, rng);
    BinaryForm p = critical_binary_form(veronese_map(2), f, bw::euclidean_quadric(3));
    if (p.is_zero()) continue;
    poly::RatPoly affine = poly::dehomogenize(p);
    if (affine.degree() < 6) continue;  // keep to the generic stratum
    if (poly::gcd(affine, poly::derivative(affine)).degree() > 0) continue;  // multiple roots
    int real_roots = sturm_real_count(p);
    CHECK((real_roots == 2 || real_roots == 4));
    ++sampled;
  }
}
