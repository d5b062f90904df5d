#ifndef RRDEG_RANK_TEST_HPP
#define RRDEG_RANK_TEST_HPP

#include <complex>
#include <vector>

namespace rrdeg {

/// Relative rank residual of a complex matrix given as rows: the ratio
/// sigma_{r+1}/sigma_1 of singular values, where r = target_rank. Zero when
/// the matrix has at most target_rank rows or columns. Rows are normalized
/// to unit length first so heterogeneous polynomial degrees do not skew the
/// scale; an identically zero row is dropped.
double rank_residual(const std::vector<std::vector<std::complex<double>>>& rows,
                     int target_rank);

}  // namespace rrdeg

#endif
