#ifndef RRDEG_BIVARIATE_HPP
#define RRDEG_BIVARIATE_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "rrdeg/binary_poly.hpp"

namespace rrdeg::bivar {

/// Bivariate polynomial in (x, y): entry [j] is the Q[x] coefficient of y^j.
using BiPoly = std::vector<poly::RatPoly>;

bool is_zero(const BiPoly& p);
void trim(BiPoly& p);
std::complex<double> eval(const BiPoly& p, const std::complex<double>& x,
                          const std::complex<double>& y);
/// sum |c| |x|^i |y|^j, floored at 1; the natural backward-error scale.
double eval_scale(const BiPoly& p, double ax, double ay);
BiPoly dx(const BiPoly& p);
BiPoly dy(const BiPoly& p);

struct SystemSolutions {
  std::vector<std::pair<std::complex<double>, std::complex<double>>> points;
  std::vector<std::string> notes;  // nonfatal diagnostics
};

/// All isolated common zeros of {a = 0, b = 0} in C^2, found by a Sylvester
/// resultant eliminating y, Aberth root extraction, back-substitution, and a
/// Newton polish of every candidate. Throws DegenerateInput when the common
/// zero set has a one-dimensional component.
SystemSolutions solve_system(const BiPoly& a, const BiPoly& b);

}  // namespace rrdeg::bivar

#endif
