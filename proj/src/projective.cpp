#include "rrdeg/projective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rrdeg {

bool ProjectivePoint::is_real(double tol) const {
  for (const auto& c : coords)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

ProjectivePoint normalize_projective(std::vector<std::complex<double>> coords, int chart_tag) {
  double max_abs = 0.0;
  for (const auto& c : coords) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) throw std::invalid_argument("normalize_projective: zero vector");
  size_t pivot = 0;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (std::abs(coords[i]) >= (1.0 - 1e-12) * max_abs) {
      pivot = i;
      break;
    }
  }
  const std::complex<double> inv = 1.0 / coords[pivot];
  for (auto& c : coords) c *= inv;
  coords[pivot] = 1.0;  // exact
  return ProjectivePoint{std::move(coords), chart_tag};
}

double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("projective_distance: dimension mismatch");
  double d = 0.0;
  for (size_t i = 0; i < a.coords.size(); ++i)
    d = std::max(d, std::abs(a.coords[i] - b.coords[i]));
  return d;
}

std::vector<ProjectivePoint> dedup_points(std::vector<ProjectivePoint> points, double tol) {
  std::vector<ProjectivePoint> unique;
  for (auto& p : points) {
    bool seen = false;
    for (const auto& q : unique) {
      if (projective_distance(p, q) <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(std::move(p));
  }
  std::sort(unique.begin(), unique.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
    for (size_t i = 0; i < std::min(a.coords.size(), b.coords.size()); ++i) {
      if (a.coords[i].real() != b.coords[i].real())
        return a.coords[i].real() < b.coords[i].real();
      if (a.coords[i].imag() != b.coords[i].imag())
        return a.coords[i].imag() < b.coords[i].imag();
    }
    return a.coords.size() < b.coords.size();
  });
  return unique;
}

}  // namespace rrdeg
