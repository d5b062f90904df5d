#ifndef RRDEG_TENSOR_PROJ_HPP
#define RRDEG_TENSOR_PROJ_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "rrdeg/arith.hpp"
#include "rrdeg/eigensolve.hpp"

namespace rrdeg::tensorproj {

/// Index i = (i_1..i_k) into the factors of a tensor product, 0 <= i_l <= m_l.
using MultiIndex = std::vector<int>;
/// Per-factor content vectors: entry l counts how often each value 0..m_l
/// occurs in the pair (i_l, j_l). Equal keys mean equivalent index pairs.
using ClassKey = std::vector<std::vector<int>>;

void check_multi_index(const std::vector<int>& shape, const MultiIndex& idx);

/// Canonical class key of an unordered index pair.
ClassKey index_class(const std::vector<int>& shape, const MultiIndex& i, const MultiIndex& j);

/// All multi-indices of the shape, in lexicographic order.
std::vector<MultiIndex> enumerate_indices(const std::vector<int>& shape);

/// A symmetric matrix indexed by multi-indices: an element of Sym^2 of the
/// tensor product of C^{m_l+1}. Entries are stored once per unordered pair.
class SymMatrix {
 public:
  explicit SymMatrix(std::vector<int> shape);

  const std::vector<int>& shape() const { return shape_; }
  int dim() const { return dim_; }
  void set(const MultiIndex& i, const MultiIndex& j, Rat value);
  Rat get(const MultiIndex& i, const MultiIndex& j) const;
  const std::map<std::pair<MultiIndex, MultiIndex>, Rat>& entries() const { return entries_; }

 private:
  std::vector<int> shape_;
  int dim_;
  std::map<std::pair<MultiIndex, MultiIndex>, Rat> entries_;

  std::pair<MultiIndex, MultiIndex> canonical(const MultiIndex& i, const MultiIndex& j) const;
};

/// A k-homogeneous polynomial of multidegree `degrees` on the product of the
/// factors, with exact rational coefficients in the scaled convention
///   f = sum_alpha c_alpha prod_l binom(d_l, alpha_l) x_l^{alpha_l}.
struct MultiForm {
  std::vector<int> shape;
  std::vector<int> degrees;
  std::map<ClassKey, Rat> coeffs;  // block exponents alpha, |alpha_l| = d_l

  Rat coeff(const ClassKey& alpha) const;
  Rat coeff_raw(const ClassKey& alpha) const;
  std::complex<double> evaluate(
      const std::vector<std::vector<std::complex<double>>>& vectors) const;
  /// Gradient with respect to the factor-i block of variables.
  std::vector<std::complex<double>> gradient_block(
      int factor, const std::vector<std::vector<std::complex<double>>>& vectors) const;
};

/// The linear projection Sym^2 V -> tensor of Sym^2 C^{m_l+1}: coefficient at
/// the class alpha is the average of the matrix entries over that class.
MultiForm project_sym2(const SymMatrix& h);

/// True iff the matrix is constant on every equivalence class, i.e. lies in
/// the span of the doubly-embedded Segre variety.
bool span_membership(const SymMatrix& h);

/// max over factors of || (1/d_i) grad_i f(v) - sigma v_i ||_inf. Each v_i
/// must satisfy sum_j v_{i,j}^2 = 1 within tol.
double singular_tuple_residual(const MultiForm& f,
                               const std::vector<std::vector<std::complex<double>>>& tuple,
                               const std::complex<double>& sigma, double tol = 1e-6);

struct SingularTuple {
  std::vector<std::vector<std::complex<double>>> vectors;  // normalized factors
  std::complex<double> sigma;
  double residual = 0.0;
  bool isotropic = false;  // a factor with sum v^2 = 0 cannot be normalized
  int multiplicity = 1;
};

/// All singular pairs of a bilinear-shape form (shape (1,1), degrees (2,2)):
/// the two fixed-point equations are solved by exact resultant elimination on
/// the affine chart plus exact gcds on the boundary charts.
std::vector<SingularTuple> singular_pairs_2x2(const MultiForm& f);

/// Full pipeline for a symmetric 4x4 matrix H on C^2 (x) C^2: projects to a
/// biquadratic form, enumerates its singular pairs, and reports the induced
/// rank-one points z = v1 (x) v2 with criticality certificates against H.
eigensolve::SolveReport segre_2x2_report(const SymMatrix& h);

}  // namespace rrdeg::tensorproj

#endif
