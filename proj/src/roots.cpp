#include "rrdeg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace rrdeg::roots {

namespace {

using Cplx = std::complex<double>;

// p(z) and p'(z) by a joint Horner pass
std::pair<Cplx, Cplx> eval_with_derivative(const std::vector<Cplx>& c, Cplx z) {
  Cplx p(0.0), dp(0.0);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + c[static_cast<size_t>(i)];
  }
  return {p, dp};
}

// running bound sum |c_i| |z|^i, used for the backward-error stop
double backward_scale(const std::vector<Cplx>& c, double az) {
  double s = 0.0, pw = 1.0;
  for (const Cplx& ci : c) {
    s += std::abs(ci) * pw;
    pw *= az;
  }
  return s;
}

}  // namespace

std::vector<Cplx> aberth_roots(std::vector<Cplx> coeffs, const AberthOptions& opts) {
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  if (coeffs.size() < 2) throw std::invalid_argument("aberth_roots: degree must be >= 1");
  const int n = static_cast<int>(coeffs.size()) - 1;

  // make monic
  const Cplx lead = coeffs.back();
  for (Cplx& c : coeffs) c /= lead;

  // strip exact zero roots (vanishing trailing coefficients)
  int zero_roots = 0;
  while (zero_roots < n && std::abs(coeffs[static_cast<size_t>(zero_roots)]) == 0.0)
    ++zero_roots;
  std::vector<Cplx> work(coeffs.begin() + zero_roots, coeffs.end());
  const int deg = n - zero_roots;

  std::vector<Cplx> z(static_cast<size_t>(deg));
  if (deg > 0) {
    // Cauchy-style radius
    double radius = 0.0;
    for (int i = 0; i < deg; ++i)
      radius = std::max(radius, std::pow(std::abs(work[static_cast<size_t>(i)]),
                                         1.0 / static_cast<double>(deg - i)));
    radius = std::max(0.5, 1.2 * radius);
    for (int j = 0; j < deg; ++j) {
      // fixed phase offset breaks symmetric configurations; staggered radii
      // avoid starting on a common circle of roots
      double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.3) /
                         static_cast<double>(deg) +
                     0.62;
      double rj = radius * (0.9 + 0.25 * static_cast<double>(j) / std::max(1, deg));
      z[static_cast<size_t>(j)] = Cplx(rj * std::cos(angle), rj * std::sin(angle));
    }

    std::vector<bool> frozen(static_cast<size_t>(deg), false);
    bool settled = false;
    for (int iter = 0; iter < opts.max_iterations && !settled; ++iter) {
      settled = true;
      for (int j = 0; j < deg; ++j) {
        if (frozen[static_cast<size_t>(j)]) continue;
        Cplx& zj = z[static_cast<size_t>(j)];
        auto [p, dp] = eval_with_derivative(work, zj);
        const double scale = backward_scale(work, std::abs(zj));
        if (std::abs(p) <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
          frozen[static_cast<size_t>(j)] = true;
          continue;
        }
        Cplx newton = (std::abs(dp) == 0.0) ? Cplx(1e-3, 1e-3) : p / dp;
        Cplx repel(0.0);
        for (int k = 0; k < deg; ++k) {
          if (k == j) continue;
          Cplx diff = zj - z[static_cast<size_t>(k)];
          if (std::abs(diff) < 1e-300) diff = Cplx(1e-12, 1e-12);
          repel += 1.0 / diff;
        }
        Cplx denom = 1.0 - newton * repel;
        Cplx w = (std::abs(denom) < 1e-300) ? newton : newton / denom;
        zj -= w;
        if (std::abs(w) > opts.update_tol * std::max(1.0, std::abs(zj))) settled = false;
        else frozen[static_cast<size_t>(j)] = true;
      }
    }
    if (!settled) {
      // accept anyway if every iterate has machine-level backward error
      for (int j = 0; j < deg; ++j) {
        auto [p, dp] = eval_with_derivative(work, z[static_cast<size_t>(j)]);
        (void)dp;
        const double scale = backward_scale(work, std::abs(z[static_cast<size_t>(j)]));
        if (std::abs(p) > 1e4 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0))
          throw NumericFailure("aberth_roots: no convergence after " +
                               std::to_string(opts.max_iterations) + " iterations");
      }
    }
  }

  std::vector<Cplx> result(static_cast<size_t>(zero_roots), Cplx(0.0));
  result.insert(result.end(), z.begin(), z.end());
  // deterministic order
  std::sort(result.begin(), result.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return result;
}

std::vector<Cluster> cluster_roots(const std::vector<Cplx>& roots, double radius) {
  const size_t n = roots.size();
  std::vector<int> group(n, -1);
  int next = 0;
  for (size_t i = 0; i < n; ++i) {
    if (group[i] != -1) continue;
    group[i] = next;
    // flood-fill: membership is transitive within the radius
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t a = 0; a < n; ++a) {
        if (group[a] != next) continue;
        for (size_t b = 0; b < n; ++b) {
          if (group[b] == -1 && std::abs(roots[a] - roots[b]) <= radius) {
            group[b] = next;
            grew = true;
          }
        }
      }
    }
    ++next;
  }
  std::vector<Cluster> clusters(static_cast<size_t>(next));
  std::vector<int> counts(static_cast<size_t>(next), 0);
  for (size_t i = 0; i < n; ++i) {
    clusters[static_cast<size_t>(group[i])].center += roots[i];
    ++counts[static_cast<size_t>(group[i])];
  }
  for (size_t g = 0; g < clusters.size(); ++g) {
    clusters[g].center /= static_cast<double>(counts[g]);
    clusters[g].multiplicity = counts[g];
  }
  return clusters;
}

}  // namespace rrdeg::roots
