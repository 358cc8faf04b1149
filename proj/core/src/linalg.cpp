#include "nonarch/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nonarch {

KernelResult certified_kernel(const QpMatrix& rows, std::size_t ncols, unsigned long p) {
  QpMatrix m = rows;
  for (const auto& r : m) {
    if (r.size() != ncols) throw std::invalid_argument("certified_kernel: ragged matrix");
  }
  const std::size_t nrows = m.size();
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot_col(ncols, false);
  KernelResult out;

  std::size_t r = 0;
  while (r < nrows) {
    // Minimal-valuation determined entry in the unreduced block.
    long best_v = Qp::kZeroVal;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = r; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot_col[j] || m[i][j].is_zero()) continue;
        if (m[i][j].valuation() < best_v) {
          best_v = m[i][j].valuation();
          bi = i;
          bj = j;
        }
      }
    }
    if (best_v == Qp::kZeroVal) break;
    std::swap(m[r], m[bi]);
    const Qp inv = m[r][bj].inverse();
    for (auto& e : m[r]) e = e * inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][bj].is_exact_zero()) continue;
      const Qp factor = m[i][bj];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (!m[r][j].is_exact_zero()) m[i][j] = m[i][j] - factor * m[r][j];
      }
      m[i][bj] = Qp(m[r][bj].prime());
    }
    pivot_col_of_row.push_back(static_cast<long>(bj));
    is_pivot_col[bj] = true;
    ++r;
  }
  out.rank = static_cast<long>(r);
  for (std::size_t i = r; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!is_pivot_col[j] && !m[i][j].is_exact_zero()) out.ill_conditioned = true;
    }
  }

  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Qp> v(ncols, Qp(p));
    v[f] = Qp::exact(p, 1);
    for (std::size_t i = 0; i < r; ++i) {
      v[static_cast<std::size_t>(pivot_col_of_row[i])] = -m[i][f];
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace nonarch
