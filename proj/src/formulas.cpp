#include "rrdeg/formulas.hpp"

#include <algorithm>
#include <functional>

#include "rrdeg/chow.hpp"

namespace rrdeg::formulas {

int PolytopeFaceData::max_codim() const {
  int m = 0;
  for (const Face& f : faces) m = std::max(m, f.codim);
  return m;
}

Int PolytopeFaceData::volume_at_codim(int i) const {
  Int v = 0;
  for (const Face& f : faces) {
    if (f.codim == i) v += f.volume;
  }
  return v;
}

PolytopeFaceData cube_faces(int k) {
  if (k < 1) throw std::invalid_argument("cube_faces: k must be positive");
  PolytopeFaceData data;
  for (int i = 0; i <= k; ++i) {
    Int count = int_pow(2l, static_cast<unsigned long>(i)) *
                binom(static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    Int vol = factorial(static_cast<unsigned long>(k - i));
    // aggregate the 2^i * binom(k,i) faces of codim i into one entry
    data.faces.push_back({i, count * vol});
  }
  return data;
}

namespace {

// sum_{l=0}^{top} base^l, with 0^0 = 1
Int geometric_sum(const Int& base, int top) {
  Int acc = 0;
  Int p = 1;
  for (int l = 0; l <= top; ++l) {
    acc += p;
    p *= base;
  }
  return acc;
}

void check_omega(long omega, long minimum = 1) {
  if (omega < minimum)
    throw std::domain_error("omega must be at least " + std::to_string(minimum));
}

void check_shape(const std::vector<int>& m, const std::vector<int>& d, const char* what) {
  if (m.empty() || m.size() != d.size())
    throw std::invalid_argument(std::string(what) + ": m and d must be nonempty, equal length");
  for (int mj : m)
    if (mj < 1) throw std::invalid_argument(std::string(what) + ": m entries must be >= 1");
  for (int dj : d)
    if (dj < 1) throw std::invalid_argument(std::string(what) + ": d entries must be >= 1");
}

std::vector<Int> segre_veronese_chern_data(const std::vector<int>& m,
                                           const std::vector<int>& d) {
  int total = 0;
  for (int mj : m) total += mj;
  std::vector<Int> data(total + 1);
  for (int i = 0; i <= total; ++i) data[i] = chow::chern_degree(m, d, i);
  return data;
}

}  // namespace

Int rrdeg_complete_intersection(int n, const std::vector<long>& deltas, long omega) {
  const int c = static_cast<int>(deltas.size());
  if (c < 1 || c > n)
    throw std::invalid_argument("rrdeg_complete_intersection: need 1 <= c <= n");
  for (long delta : deltas)
    if (delta < 1)
      throw std::invalid_argument("rrdeg_complete_intersection: degrees must be >= 1");
  check_omega(omega);

  Int total = 0;
  std::vector<int> bounds(c + 1, n - c);
  chow::for_each_bounded_tuple(bounds, n - c, [&](const std::vector<int>& idx) {
    Int term = geometric_sum(Int(omega - 1), idx[0]);
    for (int k = 1; k <= c; ++k)
      term *= int_pow(deltas[k - 1] - 1, static_cast<unsigned long>(idx[k]));
    total += term;
  });
  for (long delta : deltas) total *= delta;
  return total;
}

Int rrdeg_hypersurface(int n, long delta, long omega) {
  if (n < 1) throw std::invalid_argument("rrdeg_hypersurface: n must be >= 1");
  if (delta < 1) throw std::invalid_argument("rrdeg_hypersurface: delta must be >= 1");
  check_omega(omega);
  Int total = 0;
  for (int i = 0; i <= n - 1; ++i) {
    Int term = geometric_sum(Int(omega - 1), i);
    term *= int_pow(delta - 1, static_cast<unsigned long>(n - 1 - i));
    total += term;
  }
  return delta * total;
}

Int rrdeg_generic_morphism(int m, long d, long omega) {
  if (m < 1) throw std::invalid_argument("rrdeg_generic_morphism: m must be >= 1");
  if (d < 1) throw std::invalid_argument("rrdeg_generic_morphism: d must be >= 1");
  check_omega(omega, 2);
  Int a(2 * d - 1), b(omega * d - 1);
  Int total = 0;
  for (int i = 0; i <= m; ++i)
    total += int_pow(a, static_cast<unsigned long>(m - i)) *
             int_pow(b, static_cast<unsigned long>(i));
  return total;
}

Int rrdeg_generic_morphism_closed(int m, long d, long omega) {
  if (m < 1) throw std::invalid_argument("rrdeg_generic_morphism_closed: m must be >= 1");
  if (d < 1) throw std::invalid_argument("rrdeg_generic_morphism_closed: d must be >= 1");
  check_omega(omega, 2);
  if (omega == 2) return Int(m + 1) * int_pow(2 * d - 1, static_cast<unsigned long>(m));
  Int num = int_pow(omega * d - 1, static_cast<unsigned long>(m + 1)) -
            int_pow(2 * d - 1, static_cast<unsigned long>(m + 1));
  return exact_div(num, Int(d) * Int(omega - 2), "rrdeg_generic_morphism_closed");
}

Int gdd_veronese(int m, long d, long omega) {
  if (m < 1 || d < 1) throw std::invalid_argument("gdd_veronese: m, d must be >= 1");
  check_omega(omega);
  const Int e = Int(omega) * Int(d);
  Int num = int_pow(2 * e - 1, static_cast<unsigned long>(m + 1)) -
            int_pow(e - 1, static_cast<unsigned long>(m + 1));
  return exact_div(num, e, "gdd_veronese");
}

Int general_position_weight(int m, int i, long omega) {
  Int w = 0;
  for (int j = 0; j <= m - i; ++j)
    w += int_pow(omega, static_cast<unsigned long>(m - i - j)) *
         int_pow(2l, static_cast<unsigned long>(j));
  return w;
}

Int rrdeg_general_position(int m, long omega, const std::vector<Int>& chern_data) {
  if (m < 0) throw std::invalid_argument("rrdeg_general_position: m must be >= 0");
  if (static_cast<int>(chern_data.size()) != m + 1)
    throw std::invalid_argument("rrdeg_general_position: chern_data must have m+1 entries");
  check_omega(omega);
  Int total = 0;
  for (int i = 0; i <= m; ++i) {
    Int term = general_position_weight(m, i, omega) * chern_data[i];
    if (i % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Int rrdeg_general_position_closed(int m, long omega, const std::vector<Int>& chern_data) {
  if (static_cast<int>(chern_data.size()) != m + 1)
    throw std::invalid_argument("rrdeg_general_position_closed: chern_data size mismatch");
  check_omega(omega);
  Int total = 0;
  for (int i = 0; i <= m; ++i) {
    Int w;
    if (omega == 2) {
      w = Int(m + 1 - i) * int_pow(2l, static_cast<unsigned long>(m - i));
    } else {
      Int num = int_pow(omega, static_cast<unsigned long>(m + 1 - i)) -
                int_pow(2l, static_cast<unsigned long>(m + 1 - i));
      w = exact_div(num, Int(omega - 2), "rrdeg_general_position_closed");
    }
    Int term = w * chern_data[i];
    if (i % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Int gdd_chern(int m, const std::vector<Int>& chern_data) {
  if (m < 0) throw std::invalid_argument("gdd_chern: m must be >= 0");
  if (static_cast<int>(chern_data.size()) != m + 1)
    throw std::invalid_argument("gdd_chern: chern_data must have m+1 entries");
  Int total = 0;
  for (int i = 0; i <= m; ++i) {
    Int term = (int_pow(2l, static_cast<unsigned long>(m + 1 - i)) - 1) * chern_data[i];
    if (i % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Int rrdeg_toric(const PolytopeFaceData& faces, long omega) {
  check_omega(omega);
  const int m = faces.max_codim();
  std::vector<Int> chern_data(m + 1);
  for (int i = 0; i <= m; ++i) {
    chern_data[i] = faces.volume_at_codim(i);
    if (chern_data[i] < 0)
      throw std::invalid_argument("rrdeg_toric: face volumes must be nonnegative");
  }
  return rrdeg_general_position(m, omega, chern_data);
}

Int rrdeg_segre_veronese_general(const std::vector<int>& m, const std::vector<int>& d,
                                 long omega) {
  check_shape(m, d, "rrdeg_segre_veronese_general");
  check_omega(omega);
  int total = 0;
  for (int mj : m) total += mj;
  return rrdeg_general_position(total, omega, segre_veronese_chern_data(m, d));
}

Int rrdeg_segre_veronese_ring(const std::vector<int>& m, const std::vector<int>& d,
                              long omega) {
  check_shape(m, d, "rrdeg_segre_veronese_ring");
  check_omega(omega);
  int dim = 0;
  for (int mj : m) dim += mj;
  chow::RingDescriptor ring = chow::ring_create(m);
  chow::ChowElement total = chow::total_chern_ps(m);
  std::vector<Int> dcoeffs(d.begin(), d.end());
  chow::ChowElement big_l = chow::ChowElement::linear(ring, dcoeffs);
  chow::ChowElement acc = chow::ChowElement::zero(ring);
  for (int i = 0; i <= dim; ++i) {
    Int w = general_position_weight(dim, i, omega);
    if (i % 2 == 1) w = -w;
    acc = acc + w * chow::multiply(chow::graded_part(total, i), chow::power(big_l, dim - i));
  }
  return chow::coefficient(acc, m);
}

Int rrdeg_segre_veronese_bw(const std::vector<int>& m, const std::vector<int>& d, long omega) {
  check_shape(m, d, "rrdeg_segre_veronese_bw");
  check_omega(omega);
  const int k = static_cast<int>(m.size());
  chow::RingDescriptor ring = chow::ring_create(m);
  std::vector<Int> dcoeffs(d.begin(), d.end());
  chow::ChowElement big_l = chow::ChowElement::linear(ring, dcoeffs);
  chow::ChowElement omega_l = Int(omega) * big_l;

  chow::ChowElement prod = chow::ChowElement::one(ring);
  for (int i = 0; i < k; ++i) {
    chow::ChowElement hi = chow::ChowElement::hyperplane(ring, i);
    chow::ChowElement hhat = omega_l - hi;
    // division-free expansion of (hhat^(m_i+1) - h_i^(m_i+1)) / (hhat - h_i)
    chow::ChowElement factor = chow::ChowElement::zero(ring);
    for (int a = 0; a <= m[i]; ++a)
      factor = factor + chow::power(hhat, a) * chow::power(hi, m[i] - a);
    prod = prod * factor;
  }
  return chow::coefficient(prod, m);
}

Int rrdeg_product_lines_bw(int k, long omega) {
  if (k < 1) throw std::invalid_argument("rrdeg_product_lines_bw: k must be >= 1");
  check_omega(omega);
  return int_pow(omega, static_cast<unsigned long>(k)) *
         factorial(static_cast<unsigned long>(k));
}

namespace {

// A_j(m) = sum_{l=0}^{m-j} binom(l+j, j) (omega-1)^l
Int matrix_bw_row_sum(int m, int j, long omega) {
  Int acc = 0;
  for (int l = 0; l <= m - j; ++l)
    acc += binom(static_cast<unsigned long>(l + j), static_cast<unsigned long>(j)) *
           int_pow(omega - 1, static_cast<unsigned long>(l));
  return acc;
}

}  // namespace

Int rrdeg_matrix_bw(int m1, int m2, long omega) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("rrdeg_matrix_bw: m1, m2 must be >= 1");
  check_omega(omega);
  Int total = 0;
  const int top = std::min(m1, m2);
  for (int j = 0; j <= top; ++j)
    total += matrix_bw_row_sum(m1, j, omega) * matrix_bw_row_sum(m2, j, omega) *
             int_pow(omega, static_cast<unsigned long>(2 * j));
  return total;
}

Int rrdeg_matrix_bw_omega2(int m1, int m2) {
  Int total = 0;
  const int top = std::min(m1, m2) + 1;
  for (int i = 1; i <= top; ++i)
    total += binom(static_cast<unsigned long>(m1 + 1), static_cast<unsigned long>(i)) *
             binom(static_cast<unsigned long>(m2 + 1), static_cast<unsigned long>(i)) *
             int_pow(4l, static_cast<unsigned long>(i - 1));
  return total;
}

bool rrdeg_decomposition_check(const std::vector<int>& m, const std::vector<int>& d,
                               long omega) {
  check_shape(m, d, "rrdeg_decomposition_check");
  check_omega(omega);
  int dim = 0;
  for (int mj : m) dim += mj;

  const std::vector<Int> cd = segre_veronese_chern_data(m, d);
  Int lhs = rrdeg_general_position(dim, omega, cd);

  // nu_omega rescales the polarization by omega: deg(c_i . (omega L)^(dim-i))
  std::vector<Int> scaled(dim + 1);
  for (int i = 0; i <= dim; ++i)
    scaled[i] = int_pow(omega, static_cast<unsigned long>(dim - i)) * cd[i];
  Int gdd_x = gdd_chern(dim, scaled);

  Int rhs;
  if (dim == 0) {
    rhs = gdd_x;
  } else {
    // Chern data of the quadric section:
    //   deg(c_i(X cap Q) . L^(dim-1-i)) = 2 sum_{j<=i} (-2)^(i-j) deg(c_j . L^(dim-j))
    std::vector<Int> section(dim);
    for (int i = 0; i <= dim - 1; ++i) {
      Int acc = 0;
      for (int j = 0; j <= i; ++j) {
        Int term = int_pow(2l, static_cast<unsigned long>(i - j)) * cd[j];
        if ((i - j) % 2 == 1) term = -term;
        acc += term;
      }
      section[i] = 2 * acc * int_pow(omega, static_cast<unsigned long>(dim - 1 - i));
    }
    rhs = gdd_x - Int(omega - 1) * gdd_chern(dim - 1, section);
  }
  return lhs == rhs;
}

Int span_codim(const std::vector<int>& m, const std::vector<int>& d, long omega) {
  check_shape(m, d, "span_codim");
  check_omega(omega);
  const int k = static_cast<int>(m.size());
  Int prod_small = 1, prod_big = 1;
  for (int i = 0; i < k; ++i) {
    prod_small *= binom(static_cast<unsigned long>(m[i] + d[i]), static_cast<unsigned long>(d[i]));
    prod_big *= binom(static_cast<unsigned long>(m[i] + omega * d[i]),
                      static_cast<unsigned long>(omega * d[i]));
  }
  Int dim_w = binom(Int(omega - 1) + prod_small, static_cast<unsigned long>(omega));
  return dim_w - prod_big;
}

bool RRReport::all_agreed() const {
  for (const CrossCheck& c : cross_checks)
    if (!c.agreed) return false;
  return true;
}

}  // namespace rrdeg::formulas
