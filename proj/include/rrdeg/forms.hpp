#ifndef RRDEG_FORMS_HPP
#define RRDEG_FORMS_HPP

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "rrdeg/arith.hpp"

namespace rrdeg::bw {

/// Coefficient conventions for a homogeneous form of degree w:
///   Raw:    f = sum_a coeff[a] * x^a
///   Scaled: f = sum_a binom(w, a) * coeff[a] * x^a
/// The scaled convention is the one in which the Bombieri-Weyl inner product
/// is the weighted coefficient sum; raw is natural for solver I/O.
enum class Convention { Scaled, Raw };

Int multinomial_coeff(int degree, const std::vector<int>& alpha);

/// A homogeneous polynomial in `vars` variables of degree `degree` with
/// exact rational coefficients, stored in one of the two conventions.
/// Conversions between conventions are exact.
class Form {
 public:
  using Exponents = std::vector<int>;
  using CoeffMap = std::map<Exponents, Rat>;

  Form(int vars, int degree, Convention conv = Convention::Raw);

  int vars() const { return vars_; }
  int degree() const { return degree_; }
  Convention convention() const { return conv_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void set_coeff(const Exponents& alpha, Rat value);
  void add_coeff(const Exponents& alpha, const Rat& value);
  /// Coefficient in the form's own convention (0 when absent).
  Rat coeff(const Exponents& alpha) const;
  Rat coeff_raw(const Exponents& alpha) const;
  Rat coeff_scaled(const Exponents& alpha) const;

  Form to_convention(Convention conv) const;

  Rat evaluate(const std::vector<Rat>& x) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& x) const;
  std::vector<Rat> gradient(const std::vector<Rat>& x) const;
  std::vector<std::complex<double>> gradient(const std::vector<std::complex<double>>& x) const;

  /// Restriction to the hyperplane x_var = 0, i.e. drop every monomial with a
  /// positive exponent of x_var, keeping the remaining variables in order.
  Form restrict_var_zero(int var) const;

 private:
  int vars_;
  int degree_;
  Convention conv_;
  CoeffMap coeffs_;

  void check_alpha(const Exponents& alpha) const;
};

Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
/// Product of homogeneous forms (degrees add); both sides converted to raw.
Form form_mul(const Form& a, const Form& b);
Form operator*(const Rat& s, const Form& a);

/// Partial derivative with respect to x_var.
Form partial(const Form& f, int var);

/// Standard Euclidean quadratic form x_0^2 + ... + x_{vars-1}^2.
Form euclidean_quadric(int vars);
/// Diagonal quadratic form sum_i weights[i] x_i^2.
Form diagonal_quadric(const std::vector<Rat>& weights);

/// All exponent tuples of the given length summing to `degree`, in
/// lexicographic order.
std::vector<std::vector<int>> exponent_tuples(int vars, int degree);

// --- Bombieri-Weyl inner product ---------------------------------------------

/// <f,g>_BW = sum_a binom(w,a) f_a g_a in the scaled convention.
Rat bw_inner(const Form& f, const Form& g);
/// <f-g, f-g>_BW.
Rat bw_dist_sq(const Form& f, const Form& g);

/// lambda * (psi_0 x_0 + ... + psi_n x_n)^w, exact.
Form rank_one_power(const std::vector<Rat>& psi, const Rat& lambda, int omega);

// --- Numeric twin for solver output ------------------------------------------

/// Dense numeric counterpart of Form, always in the scaled convention.
struct NumForm {
  int vars = 0;
  int degree = 0;
  std::map<std::vector<int>, std::complex<double>> scaled;
};

NumForm to_numeric(const Form& f);
NumForm rank_one_power_num(const std::vector<std::complex<double>>& psi,
                       const std::complex<double>& lambda, int omega);
/// Complex-bilinear BW pairing sum_a binom(w,a) f_a g_a (no conjugation).
std::complex<double> bw_inner(const NumForm& f, const NumForm& g);
std::complex<double> bw_dist_sq(const NumForm& f, const NumForm& g);

// --- Eigenpairs ---------------------------------------------------------------

/// A critical point of a form restricted to the unit sphere of a quadric:
/// psi with q(psi) = 1 and eigenvalue lambda = f(psi).
struct Eigenpair {
  std::vector<std::complex<double>> psi;
  std::complex<double> lambda;
};

/// Complex quadric value q(psi) = sum psi_i^2 for the Euclidean form (no
/// conjugation; isotropic vectors have q = 0).
std::complex<double> euclidean_q(const std::vector<std::complex<double>>& psi);

/// lambda = f(psi) and the max-norm of (1/w) grad f(psi) - lambda psi.
/// Requires |q(psi) - 1| <= tol for the Euclidean q.
std::pair<std::complex<double>, double> eigen_residual(
    const Form& f, const std::vector<std::complex<double>>& psi, double tol = 1e-6);

/// The pair of maximal |lambda|; ties broken by the lexicographically
/// smallest psi. Throws std::invalid_argument on an empty list.
Eigenpair closest_rank_one(const Form& f, const std::vector<Eigenpair>& real_eigenpairs);

}  // namespace rrdeg::bw

#endif
