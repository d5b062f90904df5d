#ifndef RRDEG_EIGENSOLVE_HPP
#define RRDEG_EIGENSOLVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrdeg/binary_poly.hpp"
#include "rrdeg/forms.hpp"
#include "rrdeg/prng.hpp"
#include "rrdeg/projective.hpp"

namespace rrdeg::eigensolve {

/// A distinct projective solution with the multiplicity of its root cluster.
struct RootCluster {
  ProjectivePoint point;
  int multiplicity = 1;
};

/// Result of one solve: deduplicated points, counts, worst residual, and any
/// degeneracy diagnostics. `expected_degree`/`match` are filled when the
/// caller supplies a formula value to compare against.
struct SolveReport {
  std::vector<ProjectivePoint> points;
  int complex_count = 0;
  int real_count = 0;
  double residual_max = 0.0;
  std::optional<Int> expected_degree;
  std::optional<bool> match;
  uint64_t seed = 0;
  int attempts = 1;
  std::vector<std::string> degeneracies;
  std::vector<bw::Eigenpair> real_eigenpairs;
};

/// The critical-point form on P^1 for an objective pulled back through a
/// curve parametrization g = (g_0 : ... : g_n):
///   det( grad_t (q o g) ; grad_t (f o g) ),
/// an exact binary form of degree (omega+2) d - 2 with integer content
/// removed and the sign normalized.
poly::BinaryForm critical_binary_form(const std::vector<poly::BinaryForm>& g,
                                      const bw::Form& f, const bw::Form& q);

/// Composition f(g_0, ..., g_n) as an exact binary form.
poly::BinaryForm compose_with_map(const bw::Form& f, const std::vector<poly::BinaryForm>& g);

/// Distinct roots of a nonzero binary form in P^1. The root [0:1] is
/// detected exactly from vanishing trailing coefficients; affine roots come
/// from Aberth-Ehrlich iteration on the dehomogenization and are clustered
/// within `tol` into distinct points with multiplicities.
std::vector<RootCluster> roots_projective(const poly::BinaryForm& p, double tol = 1e-8);

/// Exact number of distinct real projective roots: a Sturm count over the
/// affine line plus one when [0:1] is a root.
int sturm_real_count(const poly::BinaryForm& p);

/// Components (t0^d, t0^(d-1) t1, ..., t1^d) of the degree-d Veronese map
/// P^1 -> P^d.
std::vector<poly::BinaryForm> veronese_map(int d);

/// The 2x2 minors x_i x_{j+1} - x_{i+1} x_j cutting out the rational normal
/// curve of degree d in P^d.
std::vector<bw::Form> rational_normal_curve_equations(int d);

/// A curve given by a parametrization from P^1, together with everything the
/// residual certificates need: the ambient quadric, implicit equations of the
/// image (may be empty for X = P^1), the codimension, and an optional exact
/// binary factor of the critical form to divide out (the isotropic factor in
/// the Bombieri-Weyl conic case).
struct ParametrizedCurve {
  std::vector<poly::BinaryForm> map;
  bw::Form quadric{1, 0};
  std::vector<bw::Form> equations;
  int codim = 0;
  std::optional<poly::BinaryForm> isotropic_factor;
};

ParametrizedCurve projective_line_curve();                 // X = P^1
ParametrizedCurve rational_normal_curve(int d);            // X = nu_d(P^1), Euclidean quadric
ParametrizedCurve conic_bw_curve();                        // X = nu_2(P^1), BW quadric

/// Enumerates the X-eigenpoints of f for a parametrized curve: roots of the
/// critical binary form, mapped through the parametrization into the ambient
/// space, with rank-residual certificates and eigenvalue records at the real
/// points.
SolveReport eigenpoints_parametrized(const ParametrizedCurve& curve, const bw::Form& f,
                                     double tol = 1e-8);

/// Enumerates the solutions in P^2 of { f1 = 0, h = 0 } where h is the
/// criticality determinant det(grad q / 2 ; grad f ; grad f1). Chart x0 = 0
/// is solved exactly by a binary-form gcd; chart x0 = 1 by a Sylvester
/// resultant eliminating x2, Aberth root extraction, and Newton-polished
/// back-substitution. Throws DegenerateInput when the solution set is not
/// finite.
SolveReport eigenpoints_plane_curve(const bw::Form& f1, const bw::Form& f, const bw::Form& q);

/// True iff the report matches the expected count with residuals within tol
/// and no degeneracy flags. Also records expected/match into the report.
bool count_vs_formula(SolveReport& report, const Int& expected, double tol = 1e-8);

/// Homogeneous form with integer coefficients drawn uniformly from
/// [lo, hi]; resampled until not identically zero.
bw::Form random_form(int vars, int degree, SplitMix64& rng, long lo = -10, long hi = 10);

}  // namespace rrdeg::eigensolve

#endif
