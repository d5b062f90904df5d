#ifndef RRDEG_PROJECTIVE_HPP
#define RRDEG_PROJECTIVE_HPP

#include <complex>
#include <vector>

namespace rrdeg {

/// A point of complex projective space with a fixed normalization: the
/// coordinate of largest modulus is scaled to exactly 1 (real, positive
/// phase). `chart_tag` records which dehomogenization produced the point.
struct ProjectivePoint {
  std::vector<std::complex<double>> coords;
  int chart_tag = 0;

  bool is_real(double tol = 1e-8) const;
};

/// Scales by the inverse of the largest-modulus coordinate. The pivot is the
/// first index within a relative 1e-12 of the maximum, so nearly-tied
/// magnitudes normalize consistently.
ProjectivePoint normalize_projective(std::vector<std::complex<double>> coords,
                                     int chart_tag = 0);

/// Max coordinate distance between two normalized points.
double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Deduplicates points within `tol` and sorts the result lexicographically by
/// (re, im) of the normalized coordinates, for reproducible reports.
std::vector<ProjectivePoint> dedup_points(std::vector<ProjectivePoint> points, double tol);

}  // namespace rrdeg

#endif
