#ifndef RRDEG_CHOW_HPP
#define RRDEG_CHOW_HPP

#include <functional>
#include <map>
#include <vector>

#include "rrdeg/arith.hpp"

namespace rrdeg::chow {

/// The Chow ring of a product of projective spaces P^{m_1} x ... x P^{m_k},
/// i.e. Z[h_1..h_k] / (h_1^{m_1+1}, ..., h_k^{m_k+1}). `caps` holds the
/// nilpotency bounds m_i.
struct RingDescriptor {
  std::vector<int> caps;

  int arity() const { return static_cast<int>(caps.size()); }
  bool operator==(const RingDescriptor&) const = default;
};

RingDescriptor ring_create(const std::vector<int>& caps);

/// A truncated multigraded polynomial with exact integer coefficients.
/// Invariants: every stored exponent tuple is within the caps, and no zero
/// coefficient is stored. Truncation is applied eagerly on every product.
class ChowElement {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Int>;

  explicit ChowElement(RingDescriptor ring) : ring_(std::move(ring)) {}

  static ChowElement zero(const RingDescriptor& ring) { return ChowElement(ring); }
  static ChowElement constant(const RingDescriptor& ring, Int value);
  static ChowElement one(const RingDescriptor& ring) { return constant(ring, 1); }
  /// The hyperplane class h_{index+1} pulled back from the given factor.
  static ChowElement hyperplane(const RingDescriptor& ring, int index);
  /// The linear combination sum_i coeffs[i] * h_{i+1}.
  static ChowElement linear(const RingDescriptor& ring, const std::vector<Int>& coeffs);

  const RingDescriptor& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds `value` to the coefficient at `exps`; drops the term when it
  /// exceeds a cap or the coefficient cancels to zero.
  void add_term(const Exponents& exps, const Int& value);

  bool operator==(const ChowElement& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
  }

 private:
  RingDescriptor ring_;
  TermMap terms_;
};

ChowElement operator+(const ChowElement& a, const ChowElement& b);
ChowElement operator-(const ChowElement& a, const ChowElement& b);
ChowElement operator*(const ChowElement& a, const ChowElement& b);
ChowElement operator*(const Int& s, const ChowElement& a);

ChowElement multiply(const ChowElement& a, const ChowElement& b);
ChowElement power(const ChowElement& a, int e);

/// Stored coefficient at the exponent tuple, zero if absent. The tuple must
/// be within the ring's caps.
Int coefficient(const ChowElement& a, const std::vector<int>& exponents);

/// Sum of the terms of total degree `degree`.
ChowElement graded_part(const ChowElement& a, int degree);

/// Total Chern class of P^{m_1} x ... x P^{m_k}: prod_i (1+h_i)^{m_i+1},
/// computed in the ring with caps m.
ChowElement total_chern_ps(const std::vector<int>& m);

/// Degree of c_i . L^{m-i} on the Segre-Veronese image of P^m with
/// L = sum_j d_j h_j, where m = sum m_j. Evaluated through two independent
/// routes (closed combinatorial sum and ring arithmetic) that must agree.
Int chern_degree(const std::vector<int>& m, const std::vector<int>& d, int i);

/// The closed combinatorial sum:
///   (m-i)! * sum over alpha (|alpha|=i, alpha_j <= m_j) of
///   d^(m-alpha) * prod_j binom(m_j+1, alpha_j) / (m_j-alpha_j)!
Int chern_degree_sum(const std::vector<int>& m, const std::vector<int>& d, int i);

/// Same degree via ring arithmetic: extract the coefficient of
/// h_1^{m_1}...h_k^{m_k} in c_i * L^(m-i).
Int chern_degree_ring(const std::vector<int>& m, const std::vector<int>& d, int i);

/// Enumerates all tuples t with 0 <= t_j <= bounds_j and sum t_j == total.
void for_each_bounded_tuple(const std::vector<int>& bounds, int total,
                            const std::function<void(const std::vector<int>&)>& fn);

}  // namespace rrdeg::chow

#endif
