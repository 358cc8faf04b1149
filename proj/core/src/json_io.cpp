#include "nonarch/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonarch/expr.hpp"

namespace nonarch {

namespace {

std::string power_term(const mpz_class& digit, long k) {
  std::string pk = k == 0 ? "" : (k == 1 ? "p" : "p^" + std::to_string(k));
  if (k == 0) return digit.get_str();
  if (digit == 1) return pk;
  return digit.get_str() + "*" + pk;
}

// Digits of the integer n (>= 0) read as p^shift * n.
std::string digit_string(mpz_class n, unsigned long p, long shift) {
  std::string out;
  long k = shift;
  while (n != 0) {
    mpz_class d;
    mpz_fdiv_qr_ui(n.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t(), p);
    if (d != 0) {
      if (!out.empty()) out += " + ";
      out += power_term(d, k);
    }
    ++k;
  }
  return out;
}

mpq_class rational_field(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as an integer or \"a/b\" string");
}

long long_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<long>();
}

unsigned long prime_field(const json& j) {
  const long p = long_field(j, "p");
  if (p < 2 || !is_prime(static_cast<unsigned long>(p))) throw std::invalid_argument("p must be prime");
  return static_cast<unsigned long>(p);
}

json qp_json(const Qp& x) {
  json j;
  j["p"] = x.prime();
  if (x.is_zero()) {
    j["val"] = "inf";
    j["unit"] = "0";
  } else {
    j["val"] = x.valuation();
    j["unit"] = rational_string(x.unit());
  }
  if (x.is_exact()) {
    j["prec"] = nullptr;
  } else {
    j["prec"] = x.absprec();
  }
  j["exact"] = x.is_exact();
  return j;
}

Qp qp_from_json(const json& j, unsigned long p) {
  const unsigned long q = j.contains("p") ? prime_field(j) : p;
  const bool exact = j.value("exact", !j.contains("prec") || j.at("prec").is_null());
  const std::string val = j.contains("val") ? (j.at("val").is_string() ? j.at("val").get<std::string>()
                                                                         : std::to_string(j.at("val").get<long>()))
                                            : std::string("0");
  const mpq_class unit = j.contains("unit") ? rational_field(j.at("unit")) : mpq_class(0);
  if (exact) {
    if (val == "inf" || unit == 0) return Qp::zero(q);
    const long v = std::stol(val);
    mpq_class x = unit;
    if (v >= 0) {
      x *= ipow(q, static_cast<unsigned long>(v));
    } else {
      x /= ipow(q, static_cast<unsigned long>(-v));
    }
    return Qp::exact(q, x);
  }
  const long prec = long_field(j, "prec");
  if (val == "inf" || unit == 0) return Qp::zero(q, prec);
  if (unit.get_den() != 1) throw std::invalid_argument("inexact unit must be an integer");
  return Qp::from_digits(q, std::stol(val), unit.get_num(), prec);
}

}  // namespace

std::string format_digits(const Qp& x) {
  const unsigned long p = x.prime();
  if (x.is_exact()) {
    if (x.is_zero()) return "0";
    const mpq_class q = x.lift();
    if (q < 0 || x.unit().get_den() != 1) return rational_string(q);
    return digit_string(x.unit().get_num(), p, x.valuation());
  }
  const std::string tail = "O(" + (x.absprec() == 1 ? std::string("p") : "p^" + std::to_string(x.absprec())) + ")";
  if (x.is_zero()) return tail;
  mpz_class u = x.unit().get_num();
  const mpz_class mod = ipow(p, static_cast<unsigned long>(x.absprec() - x.valuation()));
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  return digit_string(u, p, x.valuation()) + " + " + tail;
}

std::string format_digits(const PadicNumber& x) {
  if (!x.ramified() || x.b().is_exact_zero()) return format_digits(x.a());
  return "(" + format_digits(x.a()) + ") + (" + format_digits(x.b()) + ")*pi";
}

std::string ext_string(const ExtRational& x) { return x.to_string(); }

json to_json(const PadicNumber& x) {
  if (!x.ramified()) {
    json j = qp_json(x.a());
    j["digits"] = format_digits(x);
    return j;
  }
  json j;
  j["p"] = x.prime();
  j["a"] = qp_json(x.a());
  j["b"] = qp_json(x.b());
  j["digits"] = format_digits(x);
  return j;
}

PadicNumber padic_from_json(const json& j, unsigned long p) {
  if (j.is_string()) return parse_padic_expr(j.get<std::string>(), p);
  if (j.is_number_integer()) return PadicNumber::exact(p, j.get<long>());
  if (!j.is_object()) throw std::invalid_argument("p-adic value must be an object or expression string");
  if (j.contains("a") || j.contains("b")) {
    const unsigned long q = j.contains("p") ? prime_field(j) : p;
    const Qp a = j.contains("a") ? qp_from_json(j.at("a"), q) : Qp::zero(q);
    const Qp b = j.contains("b") ? qp_from_json(j.at("b"), q) : Qp::zero(q);
    return PadicNumber(a, b);
  }
  return qp_from_json(j, p);
}

json to_json(const BoundedSeries& f) {
  json j;
  j["p"] = f.prime();
  j["coeffs"] = json::array();
  for (const auto& c : f.coeffs()) j["coeffs"].push_back(to_json(c));
  if (f.tail()) {
    j["tail"] = {{"alpha", rational_string(f.tail()->slope)}, {"beta", rational_string(f.tail()->intercept)}};
  } else {
    j["tail"] = nullptr;
  }
  return j;
}

BoundedSeries series_from_json(const json& j, unsigned long p) {
  const unsigned long q = j.contains("p") ? prime_field(j) : p;
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw std::invalid_argument("series: missing coeffs");
  std::vector<PadicNumber> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(padic_from_json(c, q));
  std::optional<AffineTail> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    tail = AffineTail{rational_field(j.at("tail").at("alpha")), rational_field(j.at("tail").at("beta"))};
  }
  return BoundedSeries(q, std::move(coeffs), tail);
}

json to_json(const BallPoint& b) {
  return {{"center", to_json(b.center)}, {"logradius", ext_string(b.logradius)}};
}

BallPoint ball_from_json(const json& j, unsigned long p) {
  BallPoint b;
  b.center = padic_from_json(j.at("center"), p);
  const json& r = j.at("logradius");
  b.logradius = r.is_string() ? ExtRational::parse(r.get<std::string>()) : ExtRational(r.get<long>());
  return b;
}

json to_json(const Certified& c) {
  const PadicNumber shown = c.error.is_finite() ? c.value.round(c.error) : c.value;
  return {{"value", format_digits(shown)},
          {"error_valuation", ext_string(c.error)},
          {"relative_error", ext_string(c.relative_error())}};
}

json to_json(const Current& c) {
  json j;
  switch (c.ring) {
    case CurrentRing::kZ: j["ring"] = "Z"; break;
    case CurrentRing::kZp: j["ring"] = "Zp"; j["p"] = c.p; break;
    case CurrentRing::kZmodN: j["ring"] = "Z/" + std::to_string(c.modulus) + "Z"; break;
  }
  if (c.periodic) {
    j["period"] = c.period();
  } else {
    j["period"] = nullptr;
  }
  j["window"] = {c.jmin, c.jmax};
  json cusp = json::object();
  json spine = json::object();
  for (long k = c.jmin; k <= c.jmax; ++k) {
    cusp[std::to_string(k)] = rational_string(c.cusp_at(k));
    spine[std::to_string(k)] = rational_string(c.spine_at(k));
  }
  j["cusp"] = cusp;
  j["spine"] = spine;
  return j;
}

Current current_from_json(const json& j) {
  const std::string ring = j.value("ring", std::string("Z"));
  CurrentRing r = CurrentRing::kZ;
  long modulus = 0;
  unsigned long p = 0;
  if (ring == "Zp") {
    r = CurrentRing::kZp;
    p = prime_field(j);
  } else if (ring.size() > 3 && ring.rfind("Z/", 0) == 0 && ring.back() == 'Z') {
    r = CurrentRing::kZmodN;
    modulus = std::stol(ring.substr(2, ring.size() - 3));
  } else if (ring != "Z") {
    throw std::invalid_argument("current: unknown ring \"" + ring + "\"");
  }
  if (!j.contains("window") || !j.at("window").is_array() || j.at("window").size() != 2) {
    throw std::invalid_argument("current: window must be [jmin, jmax]");
  }
  const long jmin = j.at("window")[0].get<long>();
  const long jmax = j.at("window")[1].get<long>();
  Current c;
  if (j.contains("period") && !j.at("period").is_null()) {
    const long period = j.at("period").get<long>();
    if (period != jmax - jmin + 1) throw std::invalid_argument("current: period must equal the window length");
    c = Current::with_period(jmin, period, r);
  } else {
    c = Current::windowed(jmin, jmax, r);
  }
  c.modulus = modulus;
  c.p = p;
  auto read_map = [&](const char* key) {
    std::map<long, mpq_class> out;
    if (!j.contains(key)) return out;
    for (const auto& [k, v] : j.at(key).items()) {
      const long idx = std::stol(k);
      if (idx < jmin || idx > jmax) throw std::invalid_argument(std::string("current: ") + key + " index outside the window");
      out[idx] = rational_field(v);
    }
    return out;
  };
  const auto cusp = read_map("cusp");
  const auto spine = read_map("spine");
  for (const auto& [k, v] : cusp) c.cusp[static_cast<std::size_t>(k - jmin)] = v;
  if (spine.size() == static_cast<std::size_t>(c.period())) {
    for (const auto& [k, v] : spine) c.spine[static_cast<std::size_t>(k - jmin)] = v;
  } else if (spine.size() <= 1 && (spine.empty() || spine.begin()->first == jmin)) {
    c.propagate_spine(spine.empty() ? mpq_class(0) : spine.begin()->second);
  } else {
    throw std::invalid_argument("current: give spine values on the whole window or only at jmin");
  }
  if (const auto bad = validate_current(c)) {
    throw std::invalid_argument("current: violation at " + std::to_string(bad->index) + ": " + bad->reason);
  }
  return c;
}

FactoredFunction factored_from_json(const json& j) {
  FactoredFunction f;
  f.m = j.value("m", 0L);
  if (j.contains("zeros")) {
    for (const auto& [k, v] : j.at("zeros").items()) {
      const long mult = v.get<long>();
      if (mult != 0) f.zeros[std::stol(k)] = mult;
    }
  }
  if (j.contains("scalar") && !j.at("scalar").is_null()) f.scalar = rational_field(j.at("scalar"));
  return f;
}

json to_json(const FactoredFunction& f) {
  json zeros = json::object();
  for (const auto& [k, v] : f.zeros) zeros[std::to_string(k)] = v;
  json j{{"m", f.m}, {"zeros", zeros}};
  if (f.scalar) {
    j["scalar"] = rational_string(*f.scalar);
  } else {
    j["scalar"] = nullptr;
  }
  return j;
}

PoleFamily family_from_json(const json& j) {
  PoleFamily fam;
  fam.p = prime_field(j);
  fam.degree = static_cast<int>(j.value("degree", 1L));
  if (!j.at("poles").is_array()) throw std::invalid_argument("poles must be an array");
  for (const auto& x : j.at("poles")) fam.poles.push_back(padic_from_json(x, fam.p));
  fam.x = padic_from_json(j.at("x"), fam.p);
  validate_family(fam);
  return fam;
}

json to_json(const OrderSetResult& r) {
  return {{"nmax", r.nmax},
          {"orders", r.orders},
          {"u", r.u},
          {"dims", r.dims},
          {"ill_conditioned", r.ill_conditioned}};
}

json to_json(const ArtinSchreierData& d) {
  return {{"e", d.e},       {"p", d.p},         {"m", d.m},
          {"d", d.d},       {"genus", d.genus}, {"forces_vertex", d.forces_vertex},
          {"residue_equation", d.residue_equation}};
}

json to_json(const LadderResult& r) {
  json ratios = json::array();
  for (const auto& q : r.ratios) ratios.push_back(rational_string(q));
  return {{"ord", r.ord},
          {"cusp", r.cusp},
          {"indices", r.indices},
          {"ratios", ratios},
          {"increments", r.increments},
          {"stabilized", r.stabilized},
          {"estimate", rational_string(r.estimate)}};
}

json to_json(const SkeletonGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, rational_string(e.length)});
  return {{"vertices", g.num_vertices}, {"edges", edges}, {"cusps", g.cusps}};
}

SkeletonGraph graph_from_json(const json& j) {
  SkeletonGraph g;
  g.num_vertices = long_field(j, "vertices");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("graph: edges are [u, v, length]");
    g.edges.push_back({e[0].get<long>(), e[1].get<long>(), rational_field(e[2])});
  }
  if (j.contains("cusps")) g.cusps = j.at("cusps").get<std::vector<long>>();
  validate_graph(g);
  return g;
}

json to_json(const Tower& t) {
  json graphs = json::array();
  for (const auto& g : t.graphs) graphs.push_back(to_json(g));
  json refs = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const Refinement& r = t.steps[i];
    json paths = json::array();
    for (const auto& path : r.edge_paths) {
      json steps = json::array();
      for (const auto& [e, d] : path) steps.push_back({e, d});
      paths.push_back(steps);
    }
    refs.push_back({{"coarse", i},
                    {"fine", i + 1},
                    {"vertex_map", r.vertex_map},
                    {"edge_paths", paths},
                    {"cusp_map", r.cusp_map}});
  }
  return {{"graphs", graphs}, {"refinements", refs}};
}

Tower tower_from_json(const json& j) {
  Tower t;
  for (const auto& g : j.at("graphs")) t.graphs.push_back(graph_from_json(g));
  const std::size_t n = t.graphs.size();
  std::vector<std::optional<Refinement>> steps(n ? n - 1 : 0);
  for (const auto& r : j.value("refinements", json::array())) {
    const long coarse = long_field(r, "coarse");
    const long fine = long_field(r, "fine");
    if (coarse < 0 || fine != coarse + 1 || static_cast<std::size_t>(fine) >= n) {
      throw std::invalid_argument("tower: refinements must map level i to level i + 1");
    }
    Refinement ref;
    ref.coarse = t.graphs[static_cast<std::size_t>(coarse)];
    ref.fine = t.graphs[static_cast<std::size_t>(fine)];
    ref.vertex_map = r.at("vertex_map").get<std::vector<long>>();
    for (const auto& path : r.at("edge_paths")) {
      std::vector<std::pair<long, int>> steps_of_path;
      for (const auto& s : path) steps_of_path.emplace_back(s.at(0).get<long>(), s.at(1).get<int>());
      ref.edge_paths.push_back(std::move(steps_of_path));
    }
    if (r.contains("cusp_map")) ref.cusp_map = r.at("cusp_map").get<std::vector<long>>();
    if (steps[static_cast<std::size_t>(coarse)]) throw std::invalid_argument("tower: duplicate refinement");
    steps[static_cast<std::size_t>(coarse)] = std::move(ref);
  }
  for (auto& s : steps) {
    if (!s) throw std::invalid_argument("tower: missing refinement between consecutive levels");
    t.steps.push_back(std::move(*s));
  }
  validate_tower(t);
  return t;
}

}  // namespace nonarch
