#ifndef RRDEG_ROOTS_HPP
#define RRDEG_ROOTS_HPP

#include <complex>
#include <vector>

#include "rrdeg/arith.hpp"

namespace rrdeg::roots {

struct AberthOptions {
  int max_iterations = 200;
  double update_tol = 1e-13;   // relative update threshold
  double cluster_radius = 1e-8;
};

/// All complex roots of the polynomial with the given ascending coefficients
/// (leading coefficient nonzero), by Aberth-Ehrlich simultaneous iteration in
/// binary64. Initial guesses lie on a deterministically perturbed circle.
/// A root is frozen once its update is below tol or its backward error
/// reaches machine level. Throws NumericFailure when the iteration fails to
/// settle within max_iterations.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> coeffs,
                                               const AberthOptions& opts = {});

struct Cluster {
  std::complex<double> center;
  int multiplicity = 1;
};

/// Groups roots whose pairwise distance is below `radius` (transitively) and
/// returns cluster means with multiplicities.
std::vector<Cluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                   double radius);

}  // namespace rrdeg::roots

#endif
