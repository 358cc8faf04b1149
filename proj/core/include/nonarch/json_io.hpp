#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nonarch/berkovich.hpp"
#include "nonarch/padic.hpp"
#include "nonarch/pole_orders.hpp"
#include "nonarch/series.hpp"
#include "nonarch/skeleton.hpp"
#include "nonarch/tate.hpp"
#include "nonarch/torsor.hpp"

namespace nonarch {

using json = nlohmann::ordered_json;

/// Base-p digit expansion, e.g. "2 + p + 2*p^3 + O(p^5)". Exact values
/// with a finite expansion drop the O-term; other exact values print as
/// the rational "a/b".
std::string format_digits(const Qp& x);
std::string format_digits(const PadicNumber& x);

std::string ext_string(const ExtRational& x);

/// {"p", "val", "unit", "prec", "exact"}; ramified values nest the two
/// components as {"p", "a": {...}, "b": {...}}.
json to_json(const PadicNumber& x);
/// Accepts the object form or an expression string such as "1 + p^2".
PadicNumber padic_from_json(const json& j, unsigned long p);

/// {"coeffs": [...], "tail": {"alpha", "beta"}} with v(a_k) >= alpha*k + beta.
json to_json(const BoundedSeries& f);
BoundedSeries series_from_json(const json& j, unsigned long p);

json to_json(const BallPoint& b);
BallPoint ball_from_json(const json& j, unsigned long p);

/// {"value", "error_valuation", "relative_error"}.
json to_json(const Certified& c);

/// {"ring": "Z"|"Zp"|"Z/nZ", "p", "period": int|null, "window": [jmin, jmax],
///  "cusp": {"j": "a/b"}, "spine": {"j": "a/b"}}. Missing cusp values are
/// zero; spine values may be given only at jmin and are then propagated.
json to_json(const Current& c);
Current current_from_json(const json& j);

/// {"m": int, "zeros": {"j": k}, "scalar": "a/b"}.
FactoredFunction factored_from_json(const json& j);
json to_json(const FactoredFunction& f);

/// {"p", "degree", "poles": [...], "x"}.
PoleFamily family_from_json(const json& j);

json to_json(const OrderSetResult& r);
json to_json(const ArtinSchreierData& d);
json to_json(const LadderResult& r);

/// {"vertices": n, "edges": [[u, v, "len"]], "cusps": [v]}.
json to_json(const SkeletonGraph& g);
SkeletonGraph graph_from_json(const json& j);

/// {"graphs": [...], "refinements": [{"coarse": i, "fine": i + 1,
///  "vertex_map", "edge_paths": [[[e, dir], ...]], "cusp_map"}]}.
json to_json(const Tower& t);
Tower tower_from_json(const json& j);

}  // namespace nonarch
