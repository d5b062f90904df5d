#include "rrdeg/chow.hpp"

#include <algorithm>

namespace rrdeg::chow {

RingDescriptor ring_create(const std::vector<int>& caps) {
  if (caps.empty()) throw std::invalid_argument("ring_create: caps must be nonempty");
  for (int c : caps) {
    if (c < 0) throw std::invalid_argument("ring_create: caps must be nonnegative");
  }
  return RingDescriptor{caps};
}

ChowElement ChowElement::constant(const RingDescriptor& ring, Int value) {
  ChowElement e(ring);
  if (value != 0) e.terms_.emplace(Exponents(ring.caps.size(), 0), std::move(value));
  return e;
}

ChowElement ChowElement::hyperplane(const RingDescriptor& ring, int index) {
  if (index < 0 || index >= ring.arity())
    throw std::invalid_argument("hyperplane: factor index out of range");
  ChowElement e(ring);
  if (ring.caps[index] >= 1) {
    Exponents exps(ring.caps.size(), 0);
    exps[index] = 1;
    e.terms_.emplace(std::move(exps), Int(1));
  }
  return e;
}

ChowElement ChowElement::linear(const RingDescriptor& ring, const std::vector<Int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ring.arity())
    throw std::invalid_argument("linear: coefficient count must match ring arity");
  ChowElement e(ring);
  for (int i = 0; i < ring.arity(); ++i) {
    if (coeffs[i] == 0 || ring.caps[i] < 1) continue;
    Exponents exps(ring.caps.size(), 0);
    exps[i] = 1;
    e.terms_.emplace(std::move(exps), coeffs[i]);
  }
  return e;
}

void ChowElement::add_term(const Exponents& exps, const Int& value) {
  if (static_cast<int>(exps.size()) != ring_.arity())
    throw std::invalid_argument("add_term: exponent arity mismatch");
  if (value == 0) return;
  for (int i = 0; i < ring_.arity(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("add_term: negative exponent");
    if (exps[i] > ring_.caps[i]) return;  // truncated away
  }
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, value);
  } else {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void check_same_ring(const ChowElement& a, const ChowElement& b, const char* op) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument(std::string(op) + ": ring mismatch");
}

}  // namespace

ChowElement operator+(const ChowElement& a, const ChowElement& b) {
  check_same_ring(a, b, "chow add");
  ChowElement r = a;
  for (const auto& [exps, c] : b.terms()) r.add_term(exps, c);
  return r;
}

ChowElement operator-(const ChowElement& a, const ChowElement& b) {
  check_same_ring(a, b, "chow sub");
  ChowElement r = a;
  for (const auto& [exps, c] : b.terms()) {
    Int neg = -c;
    r.add_term(exps, neg);
  }
  return r;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) { return multiply(a, b); }

ChowElement operator*(const Int& s, const ChowElement& a) {
  ChowElement r(a.ring());
  if (s == 0) return r;
  for (const auto& [exps, c] : a.terms()) {
    Int sc = s * c;
    r.add_term(exps, sc);
  }
  return r;
}

ChowElement multiply(const ChowElement& a, const ChowElement& b) {
  check_same_ring(a, b, "multiply");
  const int k = a.ring().arity();
  ChowElement r(a.ring());
  std::vector<int> exps(k);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      bool in_cap = true;
      for (int i = 0; i < k; ++i) {
        exps[i] = ea[i] + eb[i];
        if (exps[i] > a.ring().caps[i]) {
          in_cap = false;
          break;
        }
      }
      if (!in_cap) continue;
      Int prod = ca * cb;
      r.add_term(exps, prod);
    }
  }
  return r;
}

ChowElement power(const ChowElement& a, int e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  ChowElement result = ChowElement::one(a.ring());
  ChowElement base = a;
  // binary powering; truncation keeps intermediate term counts bounded
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Int coefficient(const ChowElement& a, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != a.ring().arity())
    throw std::invalid_argument("coefficient: exponent arity mismatch");
  for (int i = 0; i < a.ring().arity(); ++i) {
    if (exponents[i] < 0 || exponents[i] > a.ring().caps[i])
      throw std::invalid_argument("coefficient: exponent outside the ring caps");
  }
  auto it = a.terms().find(exponents);
  return it == a.terms().end() ? Int(0) : it->second;
}

ChowElement graded_part(const ChowElement& a, int degree) {
  ChowElement r(a.ring());
  for (const auto& [exps, c] : a.terms()) {
    int total = 0;
    for (int e : exps) total += e;
    if (total == degree) r.add_term(exps, c);
  }
  return r;
}

ChowElement total_chern_ps(const std::vector<int>& m) {
  RingDescriptor ring = ring_create(m);
  ChowElement r = ChowElement::one(ring);
  for (int i = 0; i < ring.arity(); ++i) {
    ChowElement factor = ChowElement::one(ring) + ChowElement::hyperplane(ring, i);
    r = multiply(r, power(factor, m[i] + 1));
  }
  return r;
}

void for_each_bounded_tuple(const std::vector<int>& bounds, int total,
                            const std::function<void(const std::vector<int>&)>& fn) {
  const int k = static_cast<int>(bounds.size());
  std::vector<int> tuple(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == k - 1) {
      if (remaining <= bounds[pos]) {
        tuple[pos] = remaining;
        fn(tuple);
      }
      return;
    }
    const int hi = std::min(remaining, bounds[pos]);
    for (int v = 0; v <= hi; ++v) {
      tuple[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (k == 0) {
    if (total == 0) fn(tuple);
    return;
  }
  if (total >= 0) rec(0, total);
}

namespace {

void check_chern_args(const std::vector<int>& m, const std::vector<int>& d, int i) {
  if (m.empty() || m.size() != d.size())
    throw std::invalid_argument("chern_degree: m and d must be nonempty and of equal length");
  int total = 0;
  for (int mj : m) {
    if (mj < 0) throw std::invalid_argument("chern_degree: m entries must be nonnegative");
    total += mj;
  }
  for (int dj : d) {
    if (dj < 1) throw std::invalid_argument("chern_degree: d entries must be positive");
  }
  if (i < 0 || i > total) throw std::invalid_argument("chern_degree: i out of range");
}

}  // namespace

Int chern_degree_sum(const std::vector<int>& m, const std::vector<int>& d, int i) {
  check_chern_args(m, d, i);
  const int k = static_cast<int>(m.size());
  Int total = 0;
  for_each_bounded_tuple(m, i, [&](const std::vector<int>& alpha) {
    // (m-i)!/prod (m_j-alpha_j)! is the multinomial over the complements
    std::vector<int> complement(k);
    for (int j = 0; j < k; ++j) complement[j] = m[j] - alpha[j];
    Int term = multinomial(complement);
    for (int j = 0; j < k; ++j) {
      term *= int_pow(static_cast<long>(d[j]), static_cast<unsigned long>(complement[j]));
      term *= binom(static_cast<unsigned long>(m[j] + 1), static_cast<unsigned long>(alpha[j]));
    }
    total += term;
  });
  return total;
}

Int chern_degree_ring(const std::vector<int>& m, const std::vector<int>& d, int i) {
  check_chern_args(m, d, i);
  int total_dim = 0;
  for (int mj : m) total_dim += mj;
  RingDescriptor ring = ring_create(m);
  ChowElement ci = graded_part(total_chern_ps(m), i);
  std::vector<Int> dcoeffs(d.begin(), d.end());
  ChowElement big_l = ChowElement::linear(ring, dcoeffs);
  ChowElement prod = multiply(ci, power(big_l, total_dim - i));
  return coefficient(prod, m);
}

Int chern_degree(const std::vector<int>& m, const std::vector<int>& d, int i) {
  Int by_sum = chern_degree_sum(m, d, i);
  Int by_ring = chern_degree_ring(m, d, i);
  if (by_sum != by_ring)
    throw InternalError("chern_degree: combinatorial sum and ring arithmetic disagree");
  return by_sum;
}

}  // namespace rrdeg::chow
