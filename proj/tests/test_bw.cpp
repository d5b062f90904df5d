#include "rrdeg/forms.hpp"

#include <cmath>
#include <cstdint>

#include "doctest.h"

using namespace rrdeg;
using namespace rrdeg::bw;

namespace {

struct SplitMix {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

Form raw_form(int vars, int degree,
              std::initializer_list<std::pair<std::vector<int>, long>> entries) {
  Form f(vars, degree, Convention::Raw);
  for (const auto& [alpha, c] : entries) f.set_coeff(alpha, Rat(c));
  return f;
}

// the binary cubic 2 x0^3 - 3 x0^2 x1 + 6 x0 x1^2 - x1^3
Form binary_cubic() {
  return raw_form(2, 3, {{{3, 0}, 2}, {{2, 1}, -3}, {{1, 2}, 6}, {{0, 3}, -1}});
}

}  // namespace

TEST_CASE("convention conversion is exact and involutive") {
  Form f = binary_cubic();
  Form scaled = f.to_convention(Convention::Scaled);
  CHECK(scaled.coeff({3, 0}) == 2);
  CHECK(scaled.coeff({2, 1}) == -1);
  CHECK(scaled.coeff({1, 2}) == 2);
  CHECK(scaled.coeff({0, 3}) == -1);
  Form back = scaled.to_convention(Convention::Raw);
  CHECK(back.coeff({2, 1}) == -3);
  CHECK(bw_dist_sq(f, back) == 0);
}

TEST_CASE("bw basis normalization") {
  for (int omega = 1; omega <= 4; ++omega) {
    Form f(3, omega, Convention::Raw);
    std::vector<int> alpha{omega, 0, 0};
    f.set_coeff(alpha, Rat(1));
    CHECK(bw_inner(f, f) == 1);
  }
}

TEST_CASE("bw multiplicativity on rank-one powers") {
  SplitMix rng{42};
  for (int trial = 0; trial < 100; ++trial) {
    const int vars = static_cast<int>(rng.range(2, 4));
    const int omega = static_cast<int>(rng.range(1, 5));
    std::vector<Rat> phi, psi;
    for (int i = 0; i < vars; ++i) {
      phi.push_back(make_rat(Int(rng.range(-6, 6)), Int(rng.range(1, 4))));
      psi.push_back(make_rat(Int(rng.range(-6, 6)), Int(rng.range(1, 4))));
    }
    Form fp = rank_one_power(phi, Rat(1), omega);
    Form fq = rank_one_power(psi, Rat(1), omega);
    Rat dot(0);
    for (int i = 0; i < vars; ++i) dot += phi[static_cast<size_t>(i)] * psi[static_cast<size_t>(i)];
    Rat expected(1);
    for (int e = 0; e < omega; ++e) expected *= dot;
    CHECK(bw_inner(fp, fq) == expected);
  }
}

TEST_CASE("bw symmetry and bilinearity") {
  SplitMix rng{5};
  for (int trial = 0; trial < 40; ++trial) {
    const int vars = 3, omega = 3;
    auto rand_form = [&]() {
      Form f(vars, omega, Convention::Raw);
      for (const auto& alpha : exponent_tuples(vars, omega))
        f.set_coeff(alpha, Rat(rng.range(-9, 9)));
      return f;
    };
    Form a = rand_form(), b = rand_form(), c = rand_form();
    CHECK(bw_inner(a, b) == bw_inner(b, a));
    Rat s(rng.range(-4, 4));
    CHECK(bw_inner(a + s * b, c) == bw_inner(a, c) + s * bw_inner(b, c));
    if (!(a - b).is_zero()) CHECK(bw_dist_sq(a, b) > 0);
  }
}

TEST_CASE("binary cubic distances to its critical rank-one forms") {
  Form f = binary_cubic();
  // g1 = (3/25)(2 x0 + x1)^3, g2 = (1/2)(x0 + x1)^3, g3 = (3/2)(x0 - x1)^3
  Form g1 = rank_one_power({Rat(2), Rat(1)}, make_rat(Int(3), Int(25)), 3);
  Form g2 = rank_one_power({Rat(1), Rat(1)}, make_rat(Int(1), Int(2)), 3);
  Form g3 = rank_one_power({Rat(1), Rat(-1)}, make_rat(Int(3), Int(2)), 3);
  CHECK(g1.coeff_scaled({3, 0}) == make_rat(Int(24), Int(25)));
  CHECK(g1.coeff_scaled({2, 1}) == make_rat(Int(12), Int(25)));
  CHECK(bw_dist_sq(f, g1) == make_rat(Int(91), Int(5)));  // printed as 18.2
  CHECK(bw_dist_sq(f, g2) == 18);
  CHECK(bw_dist_sq(f, g3) == 2);
  CHECK(bw_dist_sq(f, f) == 0);
  // decimal cross-check to three significant figures
  CHECK(std::abs(to_double(bw_dist_sq(f, g1)) - 18.2) < 0.05);
}

TEST_CASE("quadric distance in the Fermat setup") {
  Form f = raw_form(3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 10}, {{0, 1, 1}, 2}, {{0, 0, 2}, 8}});
  Form g = raw_form(3, 2, {{{0, 2, 0}, 4}, {{0, 1, 1}, -8}, {{0, 0, 2}, 4}});  // 4(x1-x2)^2
  CHECK(bw_dist_sq(f, g) == 103);
}

TEST_CASE("rank one powers") {
  // numeric: psi = (sqrt2/2, -sqrt2/2), lambda = 3 sqrt2 gives (3/2)(x0-x1)^3
  const double s = std::sqrt(2.0) / 2.0;
  NumForm g = rank_one_power_num({{s, 0.0}, {-s, 0.0}}, {3.0 * std::sqrt(2.0), 0.0}, 3);
  CHECK(std::abs(g.scaled[{3, 0}] - std::complex<double>(1.5)) < 1e-12);
  CHECK(std::abs(g.scaled[{2, 1}] - std::complex<double>(-1.5)) < 1e-12);

  Form zero = rank_one_power({Rat(1), Rat(2)}, Rat(0), 3);
  CHECK(zero.is_zero());

  // psi = (0, sqrt2/2, -sqrt2/2), lambda = 8, omega = 2 -> 4 (x1 - x2)^2
  NumForm h = rank_one_power_num({{0.0, 0.0}, {s, 0.0}, {-s, 0.0}}, {8.0, 0.0}, 2);
  CHECK(std::abs(h.scaled[{0, 2, 0}] - std::complex<double>(4.0)) < 1e-12);
  CHECK(std::abs(h.scaled[{0, 1, 1}] - std::complex<double>(-4.0)) < 1e-12);
  CHECK(std::abs(h.scaled[{0, 0, 2}] - std::complex<double>(4.0)) < 1e-12);
}

TEST_CASE("eigen residual") {
  Form f = binary_cubic();
  const double r5 = std::sqrt(5.0);
  auto [lambda, res] = eigen_residual(f, {{2.0 / r5, 0.0}, {1.0 / r5, 0.0}});
  CHECK(std::abs(lambda - std::complex<double>(3.0 / r5)) < 1e-12);
  CHECK(res < 1e-12);

  for (int omega = 1; omega <= 4; ++omega) {
    Form g(2, omega, Convention::Raw);
    g.set_coeff({omega, 0}, Rat(1));
    auto [lg, rg] = eigen_residual(g, {{1.0, 0.0}, {0.0, 0.0}});
    CHECK(std::abs(lg - std::complex<double>(1.0)) < 1e-14);
    CHECK(rg < 1e-14);
  }
  CHECK_THROWS_AS(eigen_residual(binary_cubic(), {{2.0, 0.0}, {1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("closest rank-one selection") {
  Form f = binary_cubic();
  const double r5 = std::sqrt(5.0), r2 = std::sqrt(2.0);
  std::vector<Eigenpair> pairs{
      {{{2.0 / r5, 0.0}, {1.0 / r5, 0.0}}, {3.0 / r5, 0.0}},
      {{{r2 / 2.0, 0.0}, {r2 / 2.0, 0.0}}, {r2, 0.0}},
      {{{r2 / 2.0, 0.0}, {-r2 / 2.0, 0.0}}, {3.0 * r2, 0.0}},
  };
  Eigenpair best = closest_rank_one(f, pairs);
  CHECK(std::abs(best.lambda - std::complex<double>(3.0 * r2)) < 1e-12);

  // max-|lambda| minimizes the BW distance among the candidates
  NumForm fn = to_numeric(f);
  double best_dist = 1e300;
  for (const auto& p : pairs)
    best_dist = std::min(best_dist,
                         std::abs(bw_dist_sq(fn, rank_one_power_num(p.psi, p.lambda, 3))));
  CHECK(std::abs(bw_dist_sq(fn, rank_one_power_num(best.psi, best.lambda, 3)) -
                 std::complex<double>(best_dist)) < 1e-9);
  CHECK(std::abs(best_dist - 2.0) < 1e-9);

  CHECK_THROWS_AS(closest_rank_one(f, {}), std::invalid_argument);
  Eigenpair single{{{1.0, 0.0}, {0.0, 0.0}}, {7.0, 0.0}};
  CHECK(std::abs(closest_rank_one(f, {single}).lambda - std::complex<double>(7.0)) == 0.0);
}

TEST_CASE("shape mismatches are rejected") {
  Form a(2, 3, Convention::Raw), b(3, 3, Convention::Raw), c(2, 2, Convention::Raw);
  CHECK_THROWS_AS(bw_inner(a, b), std::invalid_argument);
  CHECK_THROWS_AS(bw_inner(a, c), std::invalid_argument);
  CHECK_THROWS_AS(bw_dist_sq(a, b), std::invalid_argument);
}

TEST_CASE("restriction to a coordinate hyperplane") {
  Form f = raw_form(3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
  Form r = f.restrict_var_zero(0);
  CHECK(r.vars() == 2);
  CHECK(r.coeff_raw({3, 0}) == 1);
  CHECK(r.coeff_raw({0, 3}) == 1);
  CHECK(r.coeff_raw({2, 1}) == 0);
}
