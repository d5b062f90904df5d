#include "rrdeg/tensor_proj.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rrdeg/bivariate.hpp"
#include "rrdeg/rank_test.hpp"

namespace rrdeg::tensorproj {

using Cplx = std::complex<double>;

void check_multi_index(const std::vector<int>& shape, const MultiIndex& idx) {
  if (idx.size() != shape.size())
    throw std::invalid_argument("multi-index arity does not match the shape");
  for (size_t l = 0; l < shape.size(); ++l)
    if (idx[l] < 0 || idx[l] > shape[l])
      throw std::invalid_argument("multi-index entry outside the shape bounds");
}

ClassKey index_class(const std::vector<int>& shape, const MultiIndex& i, const MultiIndex& j) {
  check_multi_index(shape, i);
  check_multi_index(shape, j);
  ClassKey key(shape.size());
  for (size_t l = 0; l < shape.size(); ++l) {
    key[l].assign(static_cast<size_t>(shape[l]) + 1, 0);
    ++key[l][static_cast<size_t>(i[l])];
    ++key[l][static_cast<size_t>(j[l])];
  }
  return key;
}

std::vector<MultiIndex> enumerate_indices(const std::vector<int>& shape) {
  std::vector<MultiIndex> out;
  MultiIndex cur(shape.size(), 0);
  for (;;) {
    out.push_back(cur);
    size_t pos = shape.size();
    while (pos > 0) {
      --pos;
      if (cur[pos] < shape[pos]) {
        ++cur[pos];
        std::fill(cur.begin() + static_cast<long>(pos) + 1, cur.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
  }
}

SymMatrix::SymMatrix(std::vector<int> shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("SymMatrix: empty shape");
  long dim = 1;
  for (int m : shape_) {
    if (m < 0) throw std::invalid_argument("SymMatrix: negative shape entry");
    dim *= m + 1;
  }
  dim_ = static_cast<int>(dim);
}

std::pair<MultiIndex, MultiIndex> SymMatrix::canonical(const MultiIndex& i,
                                                       const MultiIndex& j) const {
  check_multi_index(shape_, i);
  check_multi_index(shape_, j);
  return j < i ? std::make_pair(j, i) : std::make_pair(i, j);
}

void SymMatrix::set(const MultiIndex& i, const MultiIndex& j, Rat value) {
  entries_[canonical(i, j)] = std::move(value);
}

Rat SymMatrix::get(const MultiIndex& i, const MultiIndex& j) const {
  auto it = entries_.find(canonical(i, j));
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat MultiForm::coeff(const ClassKey& alpha) const {
  auto it = coeffs.find(alpha);
  return it == coeffs.end() ? Rat(0) : it->second;
}

Rat MultiForm::coeff_raw(const ClassKey& alpha) const {
  Rat c = coeff(alpha);
  for (size_t l = 0; l < alpha.size(); ++l) {
    std::vector<int> parts(alpha[l].begin(), alpha[l].end());
    c *= Rat(multinomial(parts));
  }
  return c;
}

std::complex<double> MultiForm::evaluate(
    const std::vector<std::vector<Cplx>>& vectors) const {
  if (vectors.size() != shape.size())
    throw std::invalid_argument("MultiForm::evaluate: factor count mismatch");
  Cplx acc(0.0);
  for (const auto& [alpha, c] : coeffs) {
    Cplx term(to_double(coeff_raw(alpha)), 0.0);
    for (size_t l = 0; l < alpha.size(); ++l)
      for (size_t j = 0; j < alpha[l].size(); ++j)
        for (int e = 0; e < alpha[l][j]; ++e) term *= vectors[l][j];
    acc += term;
  }
  return acc;
}

std::vector<Cplx> MultiForm::gradient_block(
    int factor, const std::vector<std::vector<Cplx>>& vectors) const {
  std::vector<Cplx> grad(vectors[static_cast<size_t>(factor)].size(), Cplx(0.0));
  for (const auto& [alpha, c] : coeffs) {
    const Cplx raw(to_double(coeff_raw(alpha)), 0.0);
    for (size_t v = 0; v < grad.size(); ++v) {
      const int av = alpha[static_cast<size_t>(factor)][v];
      if (av == 0) continue;
      Cplx term = raw * static_cast<double>(av);
      for (size_t l = 0; l < alpha.size(); ++l) {
        for (size_t j = 0; j < alpha[l].size(); ++j) {
          int e = alpha[l][j];
          if (static_cast<int>(l) == factor && j == v) --e;
          for (int rep = 0; rep < e; ++rep) term *= vectors[l][j];
        }
      }
      grad[v] += term;
    }
  }
  return grad;
}

MultiForm project_sym2(const SymMatrix& h) {
  MultiForm f;
  f.shape = h.shape();
  f.degrees.assign(h.shape().size(), 2);
  std::map<ClassKey, std::pair<Rat, long>> classes;  // sum and class size
  const std::vector<MultiIndex> indices = enumerate_indices(h.shape());
  for (size_t a = 0; a < indices.size(); ++a) {
    for (size_t b = a; b < indices.size(); ++b) {
      ClassKey key = index_class(h.shape(), indices[a], indices[b]);
      auto& [sum, count] = classes[key];
      sum += h.get(indices[a], indices[b]);
      ++count;
    }
  }
  for (auto& [key, data] : classes) {
    Rat avg = data.first / Rat(data.second);
    if (avg != 0) f.coeffs.emplace(key, std::move(avg));
  }
  return f;
}

bool span_membership(const SymMatrix& h) {
  std::map<ClassKey, Rat> representative;
  const std::vector<MultiIndex> indices = enumerate_indices(h.shape());
  for (size_t a = 0; a < indices.size(); ++a) {
    for (size_t b = a; b < indices.size(); ++b) {
      ClassKey key = index_class(h.shape(), indices[a], indices[b]);
      Rat value = h.get(indices[a], indices[b]);
      auto [it, inserted] = representative.emplace(key, value);
      if (!inserted && it->second != value) return false;
    }
  }
  return true;
}

double singular_tuple_residual(const MultiForm& f,
                               const std::vector<std::vector<Cplx>>& tuple,
                               const Cplx& sigma, double tol) {
  if (tuple.size() != f.shape.size())
    throw std::invalid_argument("singular_tuple_residual: factor count mismatch");
  for (size_t l = 0; l < tuple.size(); ++l) {
    Cplx q(0.0);
    for (const Cplx& v : tuple[l]) q += v * v;
    if (std::abs(q - 1.0) > tol)
      throw std::invalid_argument("singular_tuple_residual: factor is not normalized");
  }
  double res = 0.0;
  for (size_t l = 0; l < tuple.size(); ++l) {
    std::vector<Cplx> grad = f.gradient_block(static_cast<int>(l), tuple);
    for (size_t j = 0; j < grad.size(); ++j)
      res = std::max(res, std::abs(grad[j] / static_cast<double>(f.degrees[l]) -
                                   sigma * tuple[l][j]));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Singular pairs of biquadratic forms on P^1 x P^1
// ---------------------------------------------------------------------------

namespace {

// raw coefficient of x10^(2-a) x11^a x20^(2-b) x21^b
std::array<std::array<Rat, 3>, 3> raw_biquadratic(const MultiForm& f) {
  std::array<std::array<Rat, 3>, 3> raw;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      raw[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          f.coeff_raw({{2 - a, a}, {2 - b, b}});
  return raw;
}

struct Biquadratic {
  // fixed-point equations e1 = x10 d/dx11 f - x11 d/dx10 f and the analogue
  // in the second factor, both of bidegree (2, 2); entry [a][b] multiplies
  // x10^(2-a) x11^a x20^(2-b) x21^b
  std::array<std::array<Rat, 3>, 3> e1{}, e2{};
};

Biquadratic fixed_point_equations(const MultiForm& f) {
  const auto raw = raw_biquadratic(f);
  Biquadratic eq;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      Rat v1(0), v2(0);
      if (a <= 1) v1 += Rat(a + 1) * raw[static_cast<size_t>(a + 1)][static_cast<size_t>(b)];
      if (a >= 1) v1 -= Rat(3 - a) * raw[static_cast<size_t>(a - 1)][static_cast<size_t>(b)];
      if (b <= 1) v2 += Rat(b + 1) * raw[static_cast<size_t>(a)][static_cast<size_t>(b + 1)];
      if (b >= 1) v2 -= Rat(3 - b) * raw[static_cast<size_t>(a)][static_cast<size_t>(b - 1)];
      eq.e1[static_cast<size_t>(a)][static_cast<size_t>(b)] = v1;
      eq.e2[static_cast<size_t>(a)][static_cast<size_t>(b)] = v2;
    }
  }
  return eq;
}

bivar::BiPoly to_bipoly(const std::array<std::array<Rat, 3>, 3>& e) {
  bivar::BiPoly out(3);
  for (int b = 0; b <= 2; ++b) {
    std::vector<Rat> coeffs{e[0][static_cast<size_t>(b)], e[1][static_cast<size_t>(b)],
                            e[2][static_cast<size_t>(b)]};
    out[static_cast<size_t>(b)] = poly::RatPoly(std::move(coeffs));
  }
  bivar::trim(out);
  return out;
}

// slice at v1 = (0, 1): binary form in v2 with coefficients e[2][b]
poly::BinaryForm boundary_slice_first(const std::array<std::array<Rat, 3>, 3>& e) {
  return poly::BinaryForm(std::vector<Rat>{e[2][0], e[2][1], e[2][2]});
}

poly::BinaryForm boundary_slice_second(const std::array<std::array<Rat, 3>, 3>& e) {
  return poly::BinaryForm(std::vector<Rat>{e[0][2], e[1][2], e[2][2]});
}

std::vector<Cplx> normalize_factor(std::vector<Cplx> v, bool& isotropic) {
  Cplx q(0.0);
  double scale = 0.0;
  for (const Cplx& c : v) {
    q += c * c;
    scale = std::max(scale, std::abs(c));
  }
  if (std::abs(q) < 1e-10 * scale * scale) {
    isotropic = true;
    return v;
  }
  const Cplx inv = 1.0 / std::sqrt(q);
  for (Cplx& c : v) c *= inv;
  return v;
}

}  // namespace

std::vector<SingularTuple> singular_pairs_2x2(const MultiForm& f) {
  if (f.shape != std::vector<int>{1, 1} || f.degrees != std::vector<int>{2, 2})
    throw std::invalid_argument("singular_pairs_2x2: expects shape (1,1) and degrees (2,2)");

  const Biquadratic eq = fixed_point_equations(f);
  bivar::BiPoly a = to_bipoly(eq.e1);
  bivar::BiPoly b = to_bipoly(eq.e2);
  if (bivar::is_zero(a) || bivar::is_zero(b))
    throw DegenerateInput("singular_pairs_2x2: a fixed-point equation vanishes identically");

  // projective pairs prior to sphere normalization
  std::vector<std::array<std::vector<Cplx>, 2>> raw_pairs;
  for (const auto& [s, t] : bivar::solve_system(a, b).points)
    raw_pairs.push_back({std::vector<Cplx>{Cplx(1.0), s}, std::vector<Cplx>{Cplx(1.0), t}});

  // boundary v1 = [0:1]: common roots in v2 of both slices
  {
    poly::BinaryForm s1 = boundary_slice_first(eq.e1);
    poly::BinaryForm s2 = boundary_slice_first(eq.e2);
    if (s1.is_zero() && s2.is_zero())
      throw DegenerateInput("singular_pairs_2x2: boundary line of singular pairs");
    poly::BinaryForm common = poly::bf_gcd(s1, s2);
    if (common.degree() >= 1)
      for (const auto& cl : eigensolve::roots_projective(common))
        raw_pairs.push_back(
            {std::vector<Cplx>{Cplx(0.0), Cplx(1.0)}, cl.point.coords});
  }
  // boundary v2 = [0:1], excluding the corner already covered above
  {
    poly::BinaryForm s1 = boundary_slice_second(eq.e1);
    poly::BinaryForm s2 = boundary_slice_second(eq.e2);
    if (s1.is_zero() && s2.is_zero())
      throw DegenerateInput("singular_pairs_2x2: boundary line of singular pairs");
    poly::BinaryForm common = poly::bf_gcd(s1, s2);
    if (common.degree() >= 1)
      for (const auto& cl : eigensolve::roots_projective(common))
        if (std::abs(cl.point.coords[0]) > 1e-12)
          raw_pairs.push_back(
              {cl.point.coords, std::vector<Cplx>{Cplx(0.0), Cplx(1.0)}});
  }

  // projective dedup across both factors
  std::vector<std::array<ProjectivePoint, 2>> unique;
  for (auto& pair : raw_pairs) {
    std::array<ProjectivePoint, 2> norm{normalize_projective(pair[0]),
                                        normalize_projective(pair[1])};
    bool seen = false;
    for (const auto& u : unique)
      if (projective_distance(u[0], norm[0]) <= 1e-8 &&
          projective_distance(u[1], norm[1]) <= 1e-8)
        seen = true;
    if (!seen) unique.push_back(std::move(norm));
  }
  std::sort(unique.begin(), unique.end(),
            [](const std::array<ProjectivePoint, 2>& x, const std::array<ProjectivePoint, 2>& y) {
              for (int f2 = 0; f2 < 2; ++f2)
                for (size_t i = 0; i < 2; ++i) {
                  const Cplx &a2 = x[static_cast<size_t>(f2)].coords[i],
                             &b2 = y[static_cast<size_t>(f2)].coords[i];
                  if (a2.real() != b2.real()) return a2.real() < b2.real();
                  if (a2.imag() != b2.imag()) return a2.imag() < b2.imag();
                }
              return false;
            });

  std::vector<SingularTuple> tuples;
  for (const auto& pair : unique) {
    SingularTuple tup;
    bool isotropic = false;
    tup.vectors.push_back(normalize_factor(pair[0].coords, isotropic));
    tup.vectors.push_back(normalize_factor(pair[1].coords, isotropic));
    tup.isotropic = isotropic;
    if (!isotropic) {
      tup.sigma = f.evaluate(tup.vectors);
      tup.residual = singular_tuple_residual(f, tup.vectors, tup.sigma);
    }
    tuples.push_back(std::move(tup));
  }
  return tuples;
}

eigensolve::SolveReport segre_2x2_report(const SymMatrix& h) {
  if (h.shape() != std::vector<int>{1, 1})
    throw std::invalid_argument("segre_2x2_report: expects shape (1,1)");
  eigensolve::SolveReport report;
  const MultiForm f = project_sym2(h);
  const std::vector<SingularTuple> tuples = singular_pairs_2x2(f);

  // numeric H in the lexicographic index order (0,0),(0,1),(1,0),(1,1)
  const std::vector<MultiIndex> indices = enumerate_indices(h.shape());
  std::array<std::array<double, 4>, 4> hm{};
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c)
      hm[r][c] = to_double(h.get(indices[r], indices[c]));

  for (const SingularTuple& tup : tuples) {
    if (tup.isotropic) {
      report.degeneracies.push_back("isotropic singular pair (cannot be normalized)");
      continue;
    }
    report.residual_max = std::max(report.residual_max, tup.residual);
    // rank-one image z = v1 (x) v2: a critical point of the matrix problem
    std::vector<Cplx> z{tup.vectors[0][0] * tup.vectors[1][0],
                        tup.vectors[0][0] * tup.vectors[1][1],
                        tup.vectors[0][1] * tup.vectors[1][0],
                        tup.vectors[0][1] * tup.vectors[1][1]};
    std::vector<Cplx> hz(4, Cplx(0.0));
    for (size_t r = 0; r < 4; ++r)
      for (size_t c = 0; c < 4; ++c) hz[r] += hm[r][c] * z[c];
    // conormal of the Segre quadric z0 z3 - z1 z2
    std::vector<Cplx> det_grad{z[3], -z[2], -z[1], z[0]};
    report.residual_max = std::max(
        report.residual_max, rank_residual({z, hz, det_grad}, 2));

    ProjectivePoint pt = normalize_projective(z, 0);
    if (pt.is_real()) {
      ++report.real_count;
      bw::Eigenpair pair;
      // z is already on the sphere: q(z) = q(v1) q(v2) = 1
      for (const Cplx& c : z) pair.psi.push_back(Cplx(c.real(), 0.0));
      Cplx lambda(0.0);
      for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) lambda += hm[r][c] * pair.psi[r] * pair.psi[c];
      pair.lambda = lambda;
      report.real_eigenpairs.push_back(std::move(pair));
    }
    report.points.push_back(std::move(pt));
  }
  report.complex_count = static_cast<int>(report.points.size());
  std::sort(report.real_eigenpairs.begin(), report.real_eigenpairs.end(),
            [](const bw::Eigenpair& x, const bw::Eigenpair& y) {
              return x.lambda.real() < y.lambda.real();
            });
  return report;
}

}  // namespace rrdeg::tensorproj
