#pragma once

#include <vector>

#include "nonarch/padic.hpp"

namespace nonarch {

using QpMatrix = std::vector<std::vector<Qp>>;

struct KernelResult {
  long rank = 0;
  /// Some entry left after elimination is zero only at precision, so the
  /// rank is a lower bound and the kernel an upper bound.
  bool ill_conditioned = false;
  std::vector<std::vector<Qp>> basis;
};

/// Kernel of the linear map given by `rows` (each of length ncols) by
/// Gaussian elimination with minimal-valuation pivots. A pivot is accepted
/// only when its valuation is determined.
KernelResult certified_kernel(const QpMatrix& rows, std::size_t ncols, unsigned long p);

}  // namespace nonarch
