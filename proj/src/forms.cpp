#include "rrdeg/forms.hpp"

#include <algorithm>
#include <cmath>

namespace rrdeg::bw {

Int multinomial_coeff(int degree, const std::vector<int>& alpha) {
  int sum = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("multinomial_coeff: negative exponent");
    sum += a;
  }
  if (sum != degree) throw std::invalid_argument("multinomial_coeff: exponents must sum to degree");
  return multinomial(alpha);
}

Form::Form(int vars, int degree, Convention conv) : vars_(vars), degree_(degree), conv_(conv) {
  if (vars < 1) throw std::invalid_argument("Form: need at least one variable");
  if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

void Form::check_alpha(const Exponents& alpha) const {
  if (static_cast<int>(alpha.size()) != vars_)
    throw std::invalid_argument("Form: exponent tuple arity mismatch");
  int sum = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("Form: negative exponent");
    sum += a;
  }
  if (sum != degree_) throw std::invalid_argument("Form: exponent tuple degree mismatch");
}

void Form::set_coeff(const Exponents& alpha, Rat value) {
  check_alpha(alpha);
  if (value == 0)
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = std::move(value);
}

void Form::add_coeff(const Exponents& alpha, const Rat& value) {
  check_alpha(alpha);
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) {
    if (value != 0) coeffs_.emplace(alpha, value);
  } else {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rat Form::coeff(const Exponents& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat Form::coeff_raw(const Exponents& alpha) const {
  Rat c = coeff(alpha);
  if (conv_ == Convention::Raw) return c;
  return c * Rat(multinomial_coeff(degree_, alpha));
}

Rat Form::coeff_scaled(const Exponents& alpha) const {
  Rat c = coeff(alpha);
  if (conv_ == Convention::Scaled) return c;
  return c / Rat(multinomial_coeff(degree_, alpha));
}

Form Form::to_convention(Convention conv) const {
  if (conv == conv_) return *this;
  Form out(vars_, degree_, conv);
  for (const auto& [alpha, c] : coeffs_) {
    Rat v = conv == Convention::Raw ? coeff_raw(alpha) : coeff_scaled(alpha);
    out.set_coeff(alpha, std::move(v));
  }
  return out;
}

namespace {

template <typename Scalar>
Scalar scalar_from(const Rat& q);

template <>
Rat scalar_from<Rat>(const Rat& q) {
  return q;
}

template <>
std::complex<double> scalar_from<std::complex<double>>(const Rat& q) {
  return {to_double(q), 0.0};
}

template <typename Scalar>
Scalar evaluate_impl(const Form& f, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != f.vars())
    throw std::invalid_argument("Form::evaluate: point dimension mismatch");
  Scalar acc{};
  for (const auto& [alpha, c] : f.coeffs()) {
    Scalar term = scalar_from<Scalar>(f.coeff_raw(alpha));
    for (int i = 0; i < f.vars(); ++i)
      for (int e = 0; e < alpha[static_cast<size_t>(i)]; ++e) term *= x[static_cast<size_t>(i)];
    acc += term;
  }
  return acc;
}

template <typename Scalar>
std::vector<Scalar> gradient_impl(const Form& f, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != f.vars())
    throw std::invalid_argument("Form::gradient: point dimension mismatch");
  std::vector<Scalar> grad(x.size(), Scalar{});
  for (const auto& [alpha, c] : f.coeffs()) {
    Scalar raw = scalar_from<Scalar>(f.coeff_raw(alpha));
    for (int v = 0; v < f.vars(); ++v) {
      const int av = alpha[static_cast<size_t>(v)];
      if (av == 0) continue;
      Scalar term = raw * scalar_from<Scalar>(Rat(av));
      for (int i = 0; i < f.vars(); ++i) {
        int e = alpha[static_cast<size_t>(i)] - (i == v ? 1 : 0);
        for (int rep = 0; rep < e; ++rep) term *= x[static_cast<size_t>(i)];
      }
      grad[static_cast<size_t>(v)] += term;
    }
  }
  return grad;
}

}  // namespace

Rat Form::evaluate(const std::vector<Rat>& x) const { return evaluate_impl(*this, x); }
std::complex<double> Form::evaluate(const std::vector<std::complex<double>>& x) const {
  return evaluate_impl(*this, x);
}
std::vector<Rat> Form::gradient(const std::vector<Rat>& x) const { return gradient_impl(*this, x); }
std::vector<std::complex<double>> Form::gradient(
    const std::vector<std::complex<double>>& x) const {
  return gradient_impl(*this, x);
}

Form Form::restrict_var_zero(int var) const {
  if (var < 0 || var >= vars_) throw std::invalid_argument("restrict_var_zero: bad variable");
  Form out(vars_ - 1, degree_, Convention::Raw);
  for (const auto& [alpha, c] : coeffs_) {
    if (alpha[static_cast<size_t>(var)] != 0) continue;
    Exponents rest;
    rest.reserve(alpha.size() - 1);
    for (int i = 0; i < vars_; ++i)
      if (i != var) rest.push_back(alpha[static_cast<size_t>(i)]);
    out.add_coeff(rest, coeff_raw(alpha));
  }
  return out;
}

Form operator+(const Form& a, const Form& b) {
  if (a.vars() != b.vars() || a.degree() != b.degree())
    throw std::invalid_argument("form add: shape mismatch");
  Form out = a.to_convention(Convention::Raw);
  for (const auto& [alpha, c] : b.coeffs()) out.add_coeff(alpha, b.coeff_raw(alpha));
  return out;
}

Form operator-(const Form& a, const Form& b) {
  if (a.vars() != b.vars() || a.degree() != b.degree())
    throw std::invalid_argument("form sub: shape mismatch");
  Form out = a.to_convention(Convention::Raw);
  for (const auto& [alpha, c] : b.coeffs()) {
    Rat v = -b.coeff_raw(alpha);
    out.add_coeff(alpha, v);
  }
  return out;
}

Form form_mul(const Form& a, const Form& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("form_mul: variable count mismatch");
  Form out(a.vars(), a.degree() + b.degree(), Convention::Raw);
  std::vector<int> gamma(static_cast<size_t>(a.vars()));
  for (const auto& [alpha, ca] : a.coeffs()) {
    Rat ra = a.coeff_raw(alpha);
    for (const auto& [beta, cb] : b.coeffs()) {
      for (size_t i = 0; i < gamma.size(); ++i) gamma[i] = alpha[i] + beta[i];
      Rat v = ra * b.coeff_raw(beta);
      out.add_coeff(gamma, v);
    }
  }
  return out;
}

Form operator*(const Rat& s, const Form& a) {
  Form out(a.vars(), a.degree(), a.convention());
  if (s == 0) return out;
  for (const auto& [alpha, c] : a.coeffs()) out.set_coeff(alpha, s * c);
  return out;
}

Form partial(const Form& f, int var) {
  if (var < 0 || var >= f.vars()) throw std::invalid_argument("partial: bad variable index");
  if (f.degree() == 0) return Form(f.vars(), 0, Convention::Raw);
  Form out(f.vars(), f.degree() - 1, Convention::Raw);
  for (const auto& [alpha, c] : f.coeffs()) {
    const int av = alpha[static_cast<size_t>(var)];
    if (av == 0) continue;
    Form::Exponents beta = alpha;
    --beta[static_cast<size_t>(var)];
    Rat v = Rat(av) * f.coeff_raw(alpha);
    out.add_coeff(beta, v);
  }
  return out;
}

Form euclidean_quadric(int vars) {
  Form q(vars, 2, Convention::Raw);
  for (int i = 0; i < vars; ++i) {
    Form::Exponents alpha(static_cast<size_t>(vars), 0);
    alpha[static_cast<size_t>(i)] = 2;
    q.set_coeff(alpha, Rat(1));
  }
  return q;
}

Form diagonal_quadric(const std::vector<Rat>& weights) {
  Form q(static_cast<int>(weights.size()), 2, Convention::Raw);
  for (size_t i = 0; i < weights.size(); ++i) {
    Form::Exponents alpha(weights.size(), 0);
    alpha[i] = 2;
    q.set_coeff(alpha, weights[i]);
  }
  return q;
}

std::vector<std::vector<int>> exponent_tuples(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == vars - 1) {
      tuple[static_cast<size_t>(pos)] = remaining;
      out.push_back(tuple);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      tuple[static_cast<size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, degree);
  return out;
}

Rat bw_inner(const Form& f, const Form& g) {
  if (f.vars() != g.vars() || f.degree() != g.degree())
    throw std::invalid_argument("bw_inner: shape mismatch");
  Rat acc(0);
  // iterate the union of supports in the scaled convention
  auto accumulate = [&](const Form::Exponents& alpha) {
    acc += Rat(multinomial_coeff(f.degree(), alpha)) * f.coeff_scaled(alpha) *
           g.coeff_scaled(alpha);
  };
  for (const auto& [alpha, c] : f.coeffs()) accumulate(alpha);
  for (const auto& [alpha, c] : g.coeffs())
    if (f.coeffs().find(alpha) == f.coeffs().end()) accumulate(alpha);
  return acc;
}

Rat bw_dist_sq(const Form& f, const Form& g) {
  Form diff = f - g;
  return bw_inner(diff, diff);
}

Form rank_one_power(const std::vector<Rat>& psi, const Rat& lambda, int omega) {
  if (psi.size() < 2) throw std::invalid_argument("rank_one_power: need at least two entries");
  if (omega < 1) throw std::invalid_argument("rank_one_power: omega must be >= 1");
  const int vars = static_cast<int>(psi.size());
  Form out(vars, omega, Convention::Scaled);
  if (lambda == 0) return out;
  for (const auto& alpha : exponent_tuples(vars, omega)) {
    Rat c = lambda;
    for (int i = 0; i < vars; ++i)
      for (int e = 0; e < alpha[static_cast<size_t>(i)]; ++e) c *= psi[static_cast<size_t>(i)];
    out.set_coeff(alpha, std::move(c));
  }
  return out;
}

NumForm to_numeric(const Form& f) {
  NumForm out;
  out.vars = f.vars();
  out.degree = f.degree();
  for (const auto& [alpha, c] : f.coeffs())
    out.scaled[alpha] = std::complex<double>(to_double(f.coeff_scaled(alpha)), 0.0);
  return out;
}

NumForm rank_one_power_num(const std::vector<std::complex<double>>& psi,
                       const std::complex<double>& lambda, int omega) {
  if (psi.size() < 2) throw std::invalid_argument("rank_one_power: need at least two entries");
  NumForm out;
  out.vars = static_cast<int>(psi.size());
  out.degree = omega;
  for (const auto& alpha : exponent_tuples(out.vars, omega)) {
    std::complex<double> c = lambda;
    for (int i = 0; i < out.vars; ++i)
      for (int e = 0; e < alpha[static_cast<size_t>(i)]; ++e) c *= psi[static_cast<size_t>(i)];
    if (c != 0.0) out.scaled[alpha] = c;
  }
  return out;
}

std::complex<double> bw_inner(const NumForm& f, const NumForm& g) {
  if (f.vars != g.vars || f.degree != g.degree)
    throw std::invalid_argument("bw_inner: shape mismatch");
  std::complex<double> acc(0.0);
  auto term = [&](const std::vector<int>& alpha) {
    auto fa = f.scaled.find(alpha);
    auto ga = g.scaled.find(alpha);
    std::complex<double> fv = fa == f.scaled.end() ? 0.0 : fa->second;
    std::complex<double> gv = ga == g.scaled.end() ? 0.0 : ga->second;
    acc += multinomial_coeff(f.degree, alpha).get_d() * fv * gv;
  };
  for (const auto& [alpha, c] : f.scaled) term(alpha);
  for (const auto& [alpha, c] : g.scaled)
    if (f.scaled.find(alpha) == f.scaled.end()) term(alpha);
  return acc;
}

std::complex<double> bw_dist_sq(const NumForm& f, const NumForm& g) {
  NumForm diff = f;
  for (const auto& [alpha, c] : g.scaled) diff.scaled[alpha] -= c;
  return bw_inner(diff, diff);
}

std::complex<double> euclidean_q(const std::vector<std::complex<double>>& psi) {
  std::complex<double> acc(0.0);
  for (const auto& c : psi) acc += c * c;
  return acc;
}

std::pair<std::complex<double>, double> eigen_residual(
    const Form& f, const std::vector<std::complex<double>>& psi, double tol) {
  if (static_cast<int>(psi.size()) != f.vars())
    throw std::invalid_argument("eigen_residual: dimension mismatch");
  if (std::abs(euclidean_q(psi) - 1.0) > tol)
    throw std::invalid_argument("eigen_residual: psi is not normalized");
  const std::complex<double> lambda = f.evaluate(psi);
  std::vector<std::complex<double>> grad = f.gradient(psi);
  double res = 0.0;
  for (size_t i = 0; i < psi.size(); ++i)
    res = std::max(res,
                   std::abs(grad[i] / static_cast<double>(f.degree()) - lambda * psi[i]));
  return {lambda, res};
}

Eigenpair closest_rank_one(const Form& f, const std::vector<Eigenpair>& real_eigenpairs) {
  (void)f;
  if (real_eigenpairs.empty())
    throw std::invalid_argument("closest_rank_one: no eigenpairs supplied");
  auto lex_less = [](const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return a.size() < b.size();
  };
  const Eigenpair* best = &real_eigenpairs.front();
  for (const Eigenpair& p : real_eigenpairs) {
    const double cur = std::abs(p.lambda), top = std::abs(best->lambda);
    if (cur > top + 1e-14 || (std::abs(cur - top) <= 1e-14 && lex_less(p.psi, best->psi)))
      best = &p;
  }
  return *best;
}

}  // namespace rrdeg::bw
