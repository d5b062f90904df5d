#include "rrdeg/rank_test.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace rrdeg {

double rank_residual(const std::vector<std::vector<std::complex<double>>>& rows,
                     int target_rank) {
  if (rows.empty()) return 0.0;
  const int cols = static_cast<int>(rows.front().size());
  std::vector<const std::vector<std::complex<double>>*> kept;
  for (const auto& r : rows) {
    double norm = 0.0;
    for (const auto& c : r) norm += std::norm(c);
    if (norm > 0.0) kept.push_back(&r);
  }
  if (static_cast<int>(kept.size()) <= target_rank || cols <= target_rank) return 0.0;

  Eigen::MatrixXcd m(static_cast<Eigen::Index>(kept.size()), cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double norm = 0.0;
    for (const auto& c : *kept[static_cast<size_t>(i)]) norm += std::norm(c);
    const double inv = 1.0 / std::sqrt(norm);
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = (*kept[static_cast<size_t>(i)])[static_cast<size_t>(j)] * inv;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() <= target_rank) return 0.0;
  if (sv(0) == 0.0) return 0.0;
  return sv(target_rank) / sv(0);
}

}  // namespace rrdeg
