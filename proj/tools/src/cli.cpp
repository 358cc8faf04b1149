#include "nonarch_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nonarch/errors.hpp"
#include "nonarch/expr.hpp"
#include "nonarch/json_io.hpp"

namespace nonarch::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
}

PadicNumber tate_parameter(const std::string& expr, unsigned long p) {
  PadicNumber q = parse_padic_expr(expr, p);
  validate_q(q);
  return q;
}

std::vector<PadicNumber> parse_list(const std::string& text, unsigned long p) {
  std::vector<PadicNumber> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_padic_expr(item, p));
  return out;
}

std::map<long, long> parse_zeros(const std::string& text) {
  std::map<long, long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--zeros entries are j:k");
    const long k = std::stol(item.substr(colon + 1));
    if (k != 0) out[std::stol(item.substr(0, colon))] += k;
  }
  return out;
}

PoleFamily random_family(std::uint64_t seed, unsigned long p, long count) {
  if (count < 1) throw std::invalid_argument("--count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, 4 * count + 8);
  std::set<long> chosen;
  while (static_cast<long>(chosen.size()) < count) chosen.insert(pick(rng));
  PoleFamily fam;
  fam.p = p;
  for (long i : chosen) fam.poles.push_back(PadicNumber::exact(p, i));
  fam.x = PadicNumber::exact(p, 0);
  return fam;
}

json error_report(const std::string& kind, const std::string& reason) {
  return {{"error", kind}, {"reason", reason}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified non-archimedean computations", "nonarch"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for every randomized choice")->capture_default_str();

  json input;
  std::function<json()> action;
  auto bind = [&](CLI::App* sub, std::function<json()> f) {
    sub->callback([&, sub, f] {
      input = json::object();
      for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        const auto res = opt->results();
        if (opt->get_expected_max() == 0) {
          input[opt->get_name()] = true;
        } else if (res.size() == 1) {
          input[opt->get_name()] = res.front();
        } else {
          input[opt->get_name()] = res;
        }
      }
      input["seed"] = seed;
      action = f;
    });
  };

  // splitting-radius
  unsigned long sr_p = 0;
  long sr_n_big = 1, sr_n = 1;
  bool sr_numeric = false;
  auto* sr = app.add_subcommand("splitting-radius", "Splitting log-radius of the Kummer torsor of 1 + X^N");
  sr->add_option("--p", sr_p)->required();
  sr->add_option("--N", sr_n_big)->required()->check(CLI::PositiveNumber);
  sr->add_option("--n", sr_n)->required()->check(CLI::NonNegativeNumber);
  sr->add_flag("--numeric", sr_numeric, "Also expand the root series and certify its radius");
  bind(sr, [&] {
    require_prime(sr_p);
    const auto cert = artin_schreier_certificate(sr_n_big, sr_p);
    json r{{"logradius", rational_string(splitting_logradius_exact(sr_n_big, sr_n, sr_p))},
           {"genus_flag", cert.forces_vertex},
           {"genus", cert.genus}};
    if (sr_numeric) {
      std::vector<PadicNumber> c(static_cast<std::size_t>(sr_n_big + 1), PadicNumber::exact(sr_p, 0));
      c.front() = PadicNumber::exact(sr_p, 1);
      c.back() = PadicNumber::exact(sr_p, 1);
      const LogRadius lr = splitting_logradius_numeric(RamifiedGerm(BoundedSeries(sr_p, c)), sr_n);
      r["numeric"] = {{"logradius", ext_string(lr.value)}, {"undecidable", lr.undecidable}};
      r["agrees"] = lr.value == ExtRational(splitting_logradius_exact(sr_n_big, sr_n, sr_p));
    }
    return r;
  });

  // as-genus
  long ag_e = 1;
  unsigned long ag_p = 0;
  auto* ag = app.add_subcommand("as-genus", "Artin-Schreier reduction data for ramification index e");
  ag->add_option("--e", ag_e)->required()->check(CLI::PositiveNumber);
  ag->add_option("--p", ag_p)->required();
  bind(ag, [&] {
    require_prime(ag_p);
    return to_json(artin_schreier_certificate(ag_e, ag_p));
  });

  // order-set
  std::string os_file, os_x;
  long os_nmax = 12, os_prec = kDefaultPrecision;
  auto* os = app.add_subcommand("order-set", "Achievable vanishing orders of sum a_i/(X - i)");
  os->add_option("--poles", os_file, "Pole family JSON {p, degree, poles, x}")->required();
  os->add_option("--x", os_x, "Expansion point, overriding the file");
  os->add_option("--nmax", os_nmax)->check(CLI::Range(0L, 400L));
  os->add_option("--prec", os_prec)->check(CLI::PositiveNumber);
  bind(os, [&] {
    json fj = read_json_file(os_file);
    if (!os_x.empty()) fj["x"] = os_x;
    const PoleFamily fam = family_from_json(fj);
    return to_json(order_set(fam, os_nmax, os_prec));
  });

  // find-order
  unsigned long fo_p = 0;
  std::string fo_file;
  long fo_count = 6, fo_nmax = 12, fo_prec = kDefaultPrecision;
  auto* fo = app.add_subcommand("find-order", "Combination whose order + 1 is not a power of p");
  fo->add_option("--p", fo_p)->required();
  fo->add_option("--poles", fo_file, "Pole family JSON; a seeded integer family otherwise");
  fo->add_option("--count", fo_count, "Size of the seeded family");
  fo->add_option("--nmax", fo_nmax)->check(CLI::Range(0L, 400L));
  fo->add_option("--prec", fo_prec)->check(CLI::PositiveNumber);
  bind(fo, [&] {
    require_prime(fo_p);
    PoleFamily fam;
    if (fo_file.empty()) {
      fam = random_family(seed, fo_p, fo_count);
    } else {
      json fj = read_json_file(fo_file);
      fj["p"] = fo_p;
      fam = family_from_json(fj);
    }
    const NonPPowerCombination c = find_nonppower_order(fam, fo_nmax, fo_prec);
    json coeffs = json::array();
    for (const auto& a : c.coeffs) coeffs.push_back(format_digits(a));
    json poles = json::array();
    for (const auto& i : fam.poles) poles.push_back(format_digits(i));
    const long check = order_of_combination(c.coeffs, fam);
    return json{{"poles", poles},
                {"x", format_digits(fam.x)},
                {"order", c.order},
                {"coeffs", coeffs},
                {"verified_order", check},
                {"order_plus_one_is_p_power", is_power_of(static_cast<unsigned long>(check + 1), fo_p)}};
  });

  // current
  unsigned long cu_p = 0;
  std::string cu_file, cu_q = "p", cu_z;
  long cu_periods = 8;
  auto* cu = app.add_subcommand("current", "Validate a current and evaluate alpha and delta at z");
  cu->add_option("--p", cu_p)->required();
  cu->add_option("--file", cu_file, "Current JSON")->required();
  cu->add_option("--q", cu_q, "Tate parameter");
  cu->add_option("--z", cu_z, "Evaluation point");
  cu->add_option("--periods", cu_periods, "Whole periods kept on each side")->check(CLI::PositiveNumber);
  bind(cu, [&] {
    require_prime(cu_p);
    const Current c = current_from_json(read_json_file(cu_file));
    const PadicNumber q = tate_parameter(cu_q, cu_p);
    json r{{"current", to_json(c)}, {"valid", true}};
    if (!c.periodic && c.ring == CurrentRing::kZ) {
      bool integral = true;
      for (long j = c.jmin; j <= c.jmax; ++j) integral = integral && c.cusp_at(j).get_den() == 1 && c.spine_at(j).get_den() == 1;
      if (integral) r["factored_alpha"] = to_json(factored_alpha(c));
    }
    if (!cu_z.empty()) {
      const PadicNumber z = parse_padic_expr(cu_z, cu_p);
      r["alpha"] = to_json(alpha_eval(c, q, z, cu_periods));
      const DeltaValue d = delta_eval(c, q, z, cu_periods);
      if (d.pole) {
        r["delta"] = {{"pole", true}};
      } else {
        r["delta"] = to_json(*d.value);
      }
    }
    return r;
  });

  // moebius-check
  unsigned long mc_p = 0;
  std::string mc_q = "p";
  long mc_n = 1, mc_j = 12;
  auto* mc = app.add_subcommand("moebius-check", "delta(c_n)(1) against q^n");
  mc->add_option("--p", mc_p)->required();
  mc->add_option("--q", mc_q);
  mc->add_option("--n", mc_n)->check(CLI::PositiveNumber);
  mc->add_option("--J", mc_j)->check(CLI::PositiveNumber);
  bind(mc, [&] {
    require_prime(mc_p);
    const PadicNumber q = tate_parameter(mc_q, mc_p);
    const Certified v = delta_at_one(mc_n, q, mc_j);
    const PadicNumber target = q.pow(mc_n);
    const ExtRational gap = valuation_lower_bound(v.value - target);
    json r = to_json(v);
    r["target"] = format_digits(target);
    r["ok"] = gap >= v.error;
    return r;
  });

  // poly-eval
  unsigned long pe_p = 0;
  std::string pe_q = "p", pe_coeffs;
  long pe_j = 12;
  auto* pe = app.add_subcommand("poly-eval", "delta(c_P)(1) against P(q)");
  pe->add_option("--p", pe_p)->required();
  pe->add_option("--q", pe_q);
  pe->add_option("--coeffs", pe_coeffs, "a_0,a_1,... as expressions")->required();
  pe->add_option("--J", pe_j)->check(CLI::PositiveNumber);
  bind(pe, [&] {
    require_prime(pe_p);
    const PadicNumber q = tate_parameter(pe_q, pe_p);
    const auto coeffs = parse_list(pe_coeffs, pe_p);
    const Certified v = poly_current_eval(coeffs, q, pe_j);
    PadicNumber direct = PadicNumber::exact(pe_p, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) direct = direct * q + *it;
    json r = to_json(v);
    r["direct"] = format_digits(direct);
    r["ok"] = valuation_lower_bound(v.value - direct) >= v.error;
    return r;
  });

  // theta
  unsigned long th_p = 0;
  std::string th_q = "p", th_zeros, th_z0 = "1 + p";
  std::vector<std::string> th_z;
  long th_l = 1, th_m = 6;
  auto* th = app.add_subcommand("theta", "Automorphy factor of the theta product of a factored function");
  th->add_option("--p", th_p)->required();
  th->add_option("--q", th_q);
  th->add_option("--zeros", th_zeros, "Divisor j:k,... of prod (x - q^j)^k, total degree 0")->required();
  th->add_option("--l", th_l)->check(CLI::PositiveNumber);
  th->add_option("--z", th_z, "Sample points (repeatable)")->required();
  th->add_option("--z0", th_z0, "Base point off q^Z");
  th->add_option("--M", th_m, "Truncation: |k| <= M")->check(CLI::PositiveNumber);
  bind(th, [&] {
    require_prime(th_p);
    const PadicNumber q = tate_parameter(th_q, th_p);
    FactoredFunction f;
    f.zeros = parse_zeros(th_zeros);
    const PadicNumber z0 = parse_padic_expr(th_z0, th_p);
    json ratios = json::array();
    std::vector<Certified> values;
    for (const auto& zs : th_z) {
      values.push_back(theta_automorphy(f, q, th_l, parse_padic_expr(zs, th_p), z0, th_m));
      ratios.push_back(to_json(values.back()));
    }
    bool constant = true;
    for (std::size_t i = 1; i < values.size(); ++i) constant = constant && values[i].agrees_with(values[0]);
    return json{{"ratios", ratios}, {"constant", constant}};
  });

  // ladder-ord
  unsigned long lo_p = 0;
  std::string lo_file, lo_q = "p", lo_z;
  long lo_nmax = 6;
  auto* lo = app.add_subcommand("ladder-ord", "ord_z(delta(c)) read off the splitting ladder");
  lo->add_option("--p", lo_p)->required();
  lo->add_option("--file", lo_file, "Current JSON")->required();
  lo->add_option("--q", lo_q);
  lo->add_option("--z", lo_z)->required();
  lo->add_option("--nmax", lo_nmax)->check(CLI::Range(3L, 40L));
  bind(lo, [&] {
    require_prime(lo_p);
    const Current c = current_from_json(read_json_file(lo_file));
    const PadicNumber q = tate_parameter(lo_q, lo_p);
    return to_json(ladder_ord(c, q, parse_padic_expr(lo_z, lo_p), lo_nmax));
  });

  // skeleton-tower
  std::string st_file, st_check = "compose";
  long st_samples = 64, st_depth = 3;
  auto* st = app.add_subcommand("skeleton-tower", "Check retraction compatibilities on a tower of skeleta");
  st->add_option("--file", st_file, "Tower JSON; a seeded random tower otherwise");
  st->add_option("--check", st_check)->check(CLI::IsMember({"compose", "separation"}));
  st->add_option("--samples", st_samples)->check(CLI::PositiveNumber);
  st->add_option("--depth", st_depth, "Depth of the seeded tower")->check(CLI::Range(1L, 12L));
  bind(st, [&] {
    const Tower t = st_file.empty() ? random_tower(seed, static_cast<int>(st_depth)) : tower_from_json(read_json_file(st_file));
    validate_tower(t);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    json r{{"levels", t.graphs.size()}};
    if (st_check == "compose") {
      json checks = json::array();
      bool ok = true;
      for (std::size_t i = 0; i + 2 < t.graphs.size(); ++i) {
        const auto samples = random_points(t.graphs[i + 2], rng, static_cast<int>(st_samples));
        const ComposeReport rep = compose_check(t.steps[i + 1], t.steps[i], samples);
        json c{{"coarse", i}, {"fine", i + 2}, {"ok", rep.ok}};
        if (!rep.ok) {
          c["counterexample"] = to_string(*rep.counterexample);
          c["detail"] = rep.detail;
        }
        ok = ok && rep.ok;
        checks.push_back(c);
      }
      r["checks"] = checks;
      r["ok"] = ok;
    } else {
      const auto pts = random_points(t.graphs.back(), rng, static_cast<int>(st_samples));
      json pairs = json::array();
      long separated = 0;
      for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const GraphPoint a = canonical_point(t.graphs.back(), pts[i]);
        const GraphPoint b = canonical_point(t.graphs.back(), pts[i + 1]);
        if (a == b) continue;
        const std::size_t level = tower_separation(t, a, b);
        ++separated;
        pairs.push_back({{"x", to_string(a)}, {"y", to_string(b)}, {"level", level}});
      }
      r["pairs"] = pairs;
      r["separated"] = separated;
      r["ok"] = true;
    }
    return r;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", error_report("usage", e.what())}}.dump(2) << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", error_report("usage", e.what())}}.dump(2) << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  json report{{"command", command}, {"input", input}};
  int code = kOk;
  try {
    report["result"] = action();
  } catch (const PrecisionError& e) {
    report["error"] = error_report("precision", e.what());
    code = kPrecision;
  } catch (const MathFailure& e) {
    report["error"] = error_report("math_failure", e.what());
    code = kMathFailure;
  } catch (const std::invalid_argument& e) {
    report["error"] = error_report("usage", e.what());
    code = kUsage;
  } catch (const std::out_of_range& e) {
    report["error"] = error_report("usage", e.what());
    code = kUsage;
  } catch (const std::domain_error& e) {
    report["error"] = error_report("math_failure", e.what());
    code = kMathFailure;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  (code == kOk ? out : err) << report.dump(2) << "\n";
  return code;
}

}  // namespace nonarch::cli
