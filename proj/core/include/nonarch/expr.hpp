#pragma once

#include <string_view>

#include "nonarch/padic.hpp"

namespace nonarch {

/// Evaluates an arithmetic expression over Q(pi) at the prime p, e.g.
/// "p", "p^2", "1/3", "2 + pi", "-(p - 1)*p^-2". The symbol p is the prime
/// itself and pi the uniformizer with pi^2 = p. The result is exact.
PadicNumber parse_padic_expr(std::string_view text, unsigned long p);

}  // namespace nonarch
