#ifndef RRDEG_FORMULAS_HPP
#define RRDEG_FORMULAS_HPP

#include <string>
#include <vector>

#include "rrdeg/arith.hpp"

namespace rrdeg::formulas {

/// Face data of a lattice polytope: normalized volumes grouped by codimension.
struct PolytopeFaceData {
  struct Face {
    int codim = 0;
    Int volume;
  };
  std::vector<Face> faces;

  /// Largest codimension present (the polytope dimension when a codim-m face
  /// exists for every m).
  int max_codim() const;
  /// Sum of normalized volumes of the codimension-i faces.
  Int volume_at_codim(int i) const;
};

/// Face data of the k-dimensional unit cube: 2^i * binom(k,i) faces of
/// codimension i, each of normalized volume (k-i)!.
PolytopeFaceData cube_faces(int k);

// ---------------------------------------------------------------------------
// Closed Rayleigh-Ritz degree and distance degree formulas. All functions
// return exact big integers; quotient expressions are implemented as
// division-free finite sums so no case split on omega is needed.
// ---------------------------------------------------------------------------

/// Degree count for a generic complete intersection of codimension c in P^n
/// cut out by hypersurfaces of degrees `deltas`:
///   delta_1...delta_c * sum_{i_0+...+i_c=n-c} sum_{l=0}^{i_0} (omega-1)^l
///     * prod_k (delta_k-1)^{i_k}.
/// For non-generic inputs the value is an upper bound; genericity is the
/// caller's claim.
Int rrdeg_complete_intersection(int n, const std::vector<long>& deltas, long omega);

/// Specialization to a hypersurface of degree delta in P^n:
///   delta * sum_{i=0}^{n-1} sum_{l=0}^{i} (omega-1)^l * (delta-1)^{n-1-i}.
Int rrdeg_hypersurface(int n, long delta, long omega);

/// Degree count for the image of a generic degree-d morphism P^m -> P^n,
/// via the division-free sum sum_{i=0}^{m} (2d-1)^{m-i} (omega*d-1)^i.
/// Requires omega >= 2.
Int rrdeg_generic_morphism(int m, long d, long omega);

/// Closed-form variant with the omega=2 / omega>2 case split; used as a
/// second route in tests.
Int rrdeg_generic_morphism_closed(int m, long d, long omega);

/// Generic distance degree of the (omega*d)-th Veronese re-embedding of P^m:
///   ((2*omega*d-1)^(m+1) - (omega*d-1)^(m+1)) / (omega*d).
/// The division is checked to be exact.
Int gdd_veronese(int m, long d, long omega);

/// Weight sum_{j=0}^{m-i} omega^{m-i-j} 2^j appearing in the general-position
/// degree formula.
Int general_position_weight(int m, int i, long omega);

/// Degree of a nonsingular m-dimensional variety in general position with
/// respect to the isotropic quadric, from the degrees chern_data[i] of
/// c_i . L^(m-i):
///   sum_{i=0}^m (-1)^i (sum_{j=0}^{m-i} omega^{m-i-j} 2^j) chern_data[i].
Int rrdeg_general_position(int m, long omega, const std::vector<Int>& chern_data);

/// Same value through the closed forms ((m+1-i) 2^(m-i) for omega = 2,
/// (omega^(m+1-i) - 2^(m+1-i))/(omega-2) otherwise); test route.
Int rrdeg_general_position_closed(int m, long omega, const std::vector<Int>& chern_data);

/// Generic distance degree from Chern data:
///   sum_{i=0}^m (-1)^i (2^(m+1-i) - 1) chern_data[i].
Int gdd_chern(int m, const std::vector<Int>& chern_data);

/// Toric specialization: chern_data[i] = total normalized volume of the
/// codimension-i faces.
Int rrdeg_toric(const PolytopeFaceData& faces, long omega);

/// Segre-Veronese variety of P^{m_1} x ... x P^{m_k} embedded by degrees d,
/// in general position with respect to the isotropic quadric.
Int rrdeg_segre_veronese_general(const std::vector<int>& m, const std::vector<int>& d,
                                 long omega);

/// Same value computed entirely inside the Chow ring (build the Chern classes
/// and the polarization there, form the alternating sum, extract the top
/// coefficient); an independent route used for cross-checks.
Int rrdeg_segre_veronese_ring(const std::vector<int>& m, const std::vector<int>& d,
                              long omega);

/// Same variety under the Bombieri-Weyl quadric: the coefficient of
/// h_1^{m_1}...h_k^{m_k} in prod_i sum_{a+b=m_i} hhat_i^a h_i^b with
/// hhat_i = omega*L - h_i and L = sum_j d_j h_j.
Int rrdeg_segre_veronese_bw(const std::vector<int>& m, const std::vector<int>& d, long omega);

/// Product of k projective lines under the Bombieri-Weyl quadric: omega^k k!.
Int rrdeg_product_lines_bw(int k, long omega);

/// Rank-one (m1+1) x (m2+1) matrices under the Bombieri-Weyl quadric:
///   sum_{j=0}^{min(m1,m2)} A_j(m1) A_j(m2) omega^{2j}
/// with A_j(m) = sum_{l=0}^{m-j} binom(l+j, j) (omega-1)^l.
Int rrdeg_matrix_bw(int m1, int m2, long omega);

/// The omega=2 simplification sum_i binom(m1+1,i) binom(m2+1,i) 4^(i-1);
/// test route.
Int rrdeg_matrix_bw_omega2(int m1, int m2);

/// Checks the decomposition identity
///   RRdeg_omega(X) = gDD(nu_omega(X)) - (omega-1) gDD(nu_omega(X cap Q))
/// on Segre-Veronese input, deriving the Chern data of the quadric section
/// from that of X.
bool rrdeg_decomposition_check(const std::vector<int>& m, const std::vector<int>& d,
                               long omega);

/// Codimension of the span of the doubly re-embedded variety inside the full
/// symmetric power:
///   binom(omega-1 + prod binom(m_i+d_i, d_i), omega) - prod binom(m_i+omega*d_i, omega*d_i).
Int span_codim(const std::vector<int>& m, const std::vector<int>& d, long omega);

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

struct CrossCheck {
  std::string name;
  bool agreed = false;
};

/// Structured result of a degree computation: the value, a human-readable
/// provenance string (formula identifier plus parameter echo), and any
/// cross-checks that were run.
struct RRReport {
  Int degree;
  std::string provenance;
  std::vector<CrossCheck> cross_checks;

  bool all_agreed() const;
};

}  // namespace rrdeg::formulas

#endif
