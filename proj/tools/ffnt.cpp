/*
 * Copyright 2026 The ffnt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Experiment runner: every subcommand binds one module, reads the same
// configuration surface (flags, optionally seeded from a JSON file where
// flags win), and writes CSV tables or JSON reports. Exit codes: 0 pass,
// 1 invariant violation (a finding), 2 usage or configuration error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffnt/charsum.hpp"
#include "ffnt/families.hpp"
#include "ffnt/lfunc.hpp"
#include "ffnt/parallel.hpp"
#include "ffnt/theta.hpp"
#include "ffnt/variety.hpp"

using nlohmann::json;
using namespace ffnt;

namespace {

constexpr int kPass = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;

// 12 significant digits, the CSV contract for real-valued columns.
std::string real12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Field field_from_q(std::uint64_t q) {
  if (q < 2) throw CLI::ValidationError("--q", "q must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % p != 0) throw CLI::ValidationError("--q", "q must be a prime power");
    r /= p;
    ++e;
  }
  return Field::make(std::uint32_t(p), e);
}

// Accepts either the full "GF(p^e): c0,c1,..." form or a bare coefficient
// list interpreted over the field implied by --q.
Poly parse_poly_arg(const Field& k, const std::string& text) {
  if (text.find("GF") != std::string::npos) {
    Poly f = poly_parse(text);
    if (!f.field().same(k)) throw CLI::ValidationError("polynomial field does not match --q");
    return f;
  }
  return poly_parse(k, text);
}

std::vector<unsigned> parse_unsigned_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(unsigned(std::stoul(item)));
  return out;
}

// u is an exact rational multiple of q^{-1/2}, e.g. "1" or "3/2", so the
// critical radius is representable without float parsing.
std::complex<double> parse_u(const std::string& text, std::uint64_t q) {
  long long num = 0, den = 1;
  auto slash = text.find('/');
  num = std::stoll(text.substr(0, slash));
  if (slash != std::string::npos) den = std::stoll(text.substr(slash + 1));
  if (den == 0) throw CLI::ValidationError("--u", "zero denominator");
  return {double(num) / double(den) / std::sqrt(double(q)), 0.0};
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw CLI::ValidationError("--output", "cannot open " + path);
    os << text;
  }
};

// Seeds each subcommand's flags from a JSON object {"flag": value, ...};
// flags given on the command line keep priority because CLI11 processes
// these injected values as defaults.
void apply_config(CLI::App* sub, const std::string& path, int argc, char** argv) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
  json cfg = json::parse(is);
  for (auto& [key, val] : cfg.items()) {
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) continue;
    bool on_command_line = false;
    for (int i = 1; i < argc; ++i)
      if (std::string(argv[i]) == "--" + key) on_command_line = true;
    if (on_command_line) continue;
    std::string text = val.is_string() ? val.get<std::string>() : val.dump();
    opt->add_result(text);
  }
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

// ---------------------------------------------------------------------------

int run_weil_check(const Field& k, const Poly& g, double tol, const Output& out) {
  ResidueRing ring(k, g);
  std::string csv = csv_join({"character_id", "degree", "primitive", "odd",
                              "reciprocal_root_moduli", "max_deviation_from_sqrt_q"});
  auto chars = characters(ring);
  bool violation = false;
  for (std::size_t id = 0; id < chars.size(); ++id) {
    const Character& chi = chars[id];
    if (chi.is_trivial()) continue;
    LPolynomial l(chi);
    RhReport rep = check_rh(l, tol);
    if (!rep.converged) throw std::runtime_error("root finder did not converge");
    bool prim = is_primitive(chi), odd = is_odd(chi);
    if (prim && odd && rep.max_deviation > tol) violation = true;
    std::string moduli;
    for (std::size_t i = 0; i < rep.reciprocal_root_moduli.size(); ++i) {
      if (i) moduli += ';';
      moduli += real12(rep.reciprocal_root_moduli[i]);
    }
    csv += csv_join({std::to_string(id), std::to_string(std::max(l.degree(), 0)),
                     prim ? "1" : "0", odd ? "1" : "0", moduli, real12(rep.max_deviation)});
  }
  out.write(csv);
  return violation ? kFinding : kPass;
}

int run_moments(const Field& k, const Poly& g, unsigned kk, const std::string& u_text,
                const std::string& population, const Output& out) {
  ResidueRing ring(k, g);
  Population pop =
      population == "primitive-odd" ? Population::kPrimitiveOdd : Population::kAllNontrivial;
  std::complex<double> u = parse_u(u_text, k.order());
  MomentReport rep = moment_direct(ring, u, kk, pop);
  json j{{"modulus", poly_format(g)},
         {"k", kk},
         {"u", {u.real(), u.imag()}},
         {"population", population},
         {"group_order", rep.group_order},
         {"characters_included", rep.selected},
         {"moment", rep.value}};
  out.write(j.dump(2) + "\n");
  return rep.value >= 0.0 ? kPass : kFinding;
}

json point_to_json(const VarietyPoint& pt) {
  json a = json::array();
  for (const Poly& f : pt) a.push_back(poly_format(f));
  return a;
}

int run_variety_count(const Field& k, const Poly& g, const std::vector<unsigned>& degrees,
                      unsigned kk, const std::vector<Fe>& c, std::uint64_t cap,
                      const Output& out) {
  ResidueRing ring(k, g);
  VarietySpec spec(ring, degrees, kk);
  spec.deformation = c;
  spec.enumeration_cap = cap;
  CountResult res = count_points(spec);
  json j{{"modulus", poly_format(g)},
         {"degrees", degrees},
         {"k", kk},
         {"count", res.count}};
  if (c.empty()) {
    OrthogonalityResult orth = orthogonality_identity(spec);
    j["orthogonality"] = {{"lhs_real", orth.lhs.real()},
                          {"lhs_imag", orth.lhs.imag()},
                          {"rhs", orth.rhs},
                          {"pass", orth.pass}};
    out.write(j.dump(2) + "\n");
    return orth.pass ? kPass : kFinding;
  }
  out.write(j.dump(2) + "\n");
  return kPass;
}

int run_singular_scan(const Field& k, const Poly& g, const std::vector<unsigned>& degrees,
                      unsigned kk, std::uint64_t cap, const Output& out) {
  ResidueRing ring(k, g);
  VarietySpec spec(ring, degrees, kk);
  spec.enumeration_cap = cap;
  SingularScan scan = singular_scan(spec);
  json pts = json::array();
  for (const VarietyPoint& p : scan.singular) pts.push_back(point_to_json(p));
  json j{{"modulus", poly_format(g)},
         {"degrees", degrees},
         {"k", kk},
         {"count", scan.total_points},
         {"singular_points", pts},
         {"criteria_agreement", scan.criteria_agree}};
  out.write(j.dump(2) + "\n");
  return kPass;  // disagreement over a splitting field is reported, not failed
}

int run_family_count(const std::string& family, const Field& k, unsigned k_max,
                     std::optional<std::uint64_t> t_value, bool sweep, const Output& out) {
  FamilyKind kind = family == "cubic" ? FamilyKind::kCubic : FamilyKind::kConic;
  std::vector<Fe> ts;
  if (sweep)
    for (std::uint64_t t = 0; t < k.order(); ++t) ts.push_back(Fe(t));
  else
    ts.push_back(Fe(t_value.value_or(0)));
  std::vector<Fe> singular = singular_parameters(kind, k);
  auto is_singular_t = [&](Fe t) {
    return std::find(singular.begin(), singular.end(), t) != singular.end();
  };
  std::string csv = csv_join({"t", "k", "count", "prediction", "deviation"});
  bool violation = false;
  for (Fe t : ts) {
    ZetaConsistency z = zeta_consistency(kind, k, t, k_max);
    for (unsigned r = 0; r < k_max; ++r) {
      std::uint64_t dev = z.counts[r] > z.predicted[r] ? z.counts[r] - z.predicted[r]
                                                       : z.predicted[r] - z.counts[r];
      csv += csv_join({std::to_string(t), std::to_string(r + 1), std::to_string(z.counts[r]),
                       std::to_string(z.predicted[r]), std::to_string(dev)});
    }
    if (!is_singular_t(t) && !z.pass) violation = true;  // smooth fibers must be consistent
  }
  out.write(csv);
  return violation ? kFinding : kPass;
}

int run_charsum(const Field& k, const Poly& g, const Poly& f, unsigned n, bool all_chars,
                const Output& out) {
  ResidueRing ring(k, g);
  std::string csv = csv_join({"character_id", "sum_real", "sum_imag", "abs_sum", "trivial_bound",
                              "ss_bound", "within_ss_bound"});
  auto chars = characters(ring);
  bool violation = false;
  bool sf = is_squarefree(g);
  for (std::size_t id = 0; id < chars.size(); ++id) {
    const Character& chi = chars[id];
    if (chi.is_trivial() && !all_chars) continue;
    IntervalSum s = char_sum(chi, f, n);
    if (std::abs(s.value) > double(s.interval) + 1e-9) violation = true;
    std::string bound = "", within = "";
    if (sf && !chi.is_trivial()) {
      SsBoundCheck ck = check_ss_bound(chi, f, n);
      bound = real12(ck.bound);
      within = ck.within ? "1" : "0";
      if (!ck.within) violation = true;
    }
    csv += csv_join({std::to_string(id), real12(s.value.real()), real12(s.value.imag()),
                     real12(std::abs(s.value)), std::to_string(s.interval), bound, within});
  }
  out.write(csv);
  return violation ? kFinding : kPass;
}

int run_lang_verify(const Field& k, const Poly& g, const Poly& f, unsigned n, const Output& out) {
  ResidueRing ring(k, g);
  TorsorReport rep = verify_torsor(ring, f, n);
  json checks = json::array();
  for (const TorsorCheck& c : rep.checks)
    checks.push_back({{"h", poly_format(c.h)},
                      {"fiber_size", c.fiber_size},
                      {"size_ok", c.size_ok},
                      {"action_ok", c.action_ok},
                      {"frobenius_ok", c.frobenius_ok},
                      {"witness", poly_format(c.witness)}});
  json j{{"modulus", poly_format(g)},
         {"f", poly_format(f)},
         {"n", n},
         {"group_order", rep.group_order},
         {"checks", checks},
         {"pass", rep.pass}};
  out.write(j.dump(2) + "\n");
  return rep.pass ? kPass : kFinding;
}

int run_theta_scan(const Field& k, unsigned genus, const std::string& f_coeffs, unsigned a,
                   unsigned b, const std::string& x_text, bool all_x, const Output& out) {
  Poly f = parse_poly_arg(k, f_coeffs);
  HyperellipticCurve curve(f);
  if (curve.genus() != genus)
    throw CLI::ValidationError("--genus", "deg f = 2g+1 does not match --genus");
  JacobianTable jac = enumerate_jacobian(curve);
  json summary{{"f", poly_format(f)},
               {"genus", genus},
               {"a", a},
               {"b", b},
               {"jacobian_order", jac.order()},
               {"zeta_fit_order", jacobian_order_from_zeta(curve)}};
  if (!all_x && !x_text.empty()) {
    auto semi = x_text.find(';');
    if (semi == std::string::npos)
      throw CLI::ValidationError("--x", "expected \"u-coeffs;v-coeffs\"");
    MumfordDivisor x{parse_poly_arg(k, x_text.substr(0, semi)).monic(),
                     parse_poly_arg(k, x_text.substr(semi + 1))};
    if (!mumford_valid(curve, x)) throw CLI::ValidationError("--x", "not a reduced Mumford pair");
    summary["count"] = theta_intersection_count(curve, jac, a, b, x);
    out.write(summary.dump(2) + "\n");
    return kPass;
  }
  EquidistributionReport rep = equidistribution_report(curve, jac, a, b);
  std::string csv = csv_join({"x_id", "count", "expected", "deviation"});
  for (const EquidistributionRow& row : rep.rows)
    csv += csv_join({std::to_string(row.x_index), std::to_string(row.count),
                     real12(row.expected), real12(row.deviation)});
  summary["theta_a_size"] = rep.theta_a;
  summary["theta_b_size"] = rep.theta_b;
  summary["max_deviation"] = rep.max_deviation;
  summary["rms_deviation"] = rep.rms_deviation;
  summary["double_count_ok"] = rep.double_count_ok;
  out.write(csv + summary.dump(2) + "\n");
  bool sound = rep.double_count_ok && jac.order() == jacobian_order_from_zeta(curve);
  return sound ? kPass : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification lab for L-functions, point counts, and character sums over F_q[T]"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers only what it uses.
  std::uint64_t q = 0;
  std::string g_text, f_text, config, output, u_text = "1", population = "all";
  std::string degrees_text, c_text, family = "conic", f_coeffs, x_text;
  double tol = 1e-6;
  unsigned kk = 1, n = 1, k_max = 3, genus = 1, a = 0, b = 0;
  std::uint64_t cap = 100000000, t_value = 0;
  bool sweep = false, all_chars = false, all_x = false;
  bool t_given = false;

  auto add_common = [&](CLI::App* sub, bool needs_g) {
    sub->add_option("--q", q, "field order (prime power)")->required();
    if (needs_g) sub->add_option("--g", g_text, "modulus polynomial")->required();
    sub->add_option("--config", config, "JSON config file; flags override");
    sub->add_option("--output", output, "output file (default stdout)");
    return sub;
  };

  CLI::App* weil = add_common(app.add_subcommand("weil-check", "root moduli of L-polynomials"), true);
  weil->add_option("--tol", tol, "modulus tolerance");

  CLI::App* mom = add_common(app.add_subcommand("moments", "direct moment of |L|^{2k}"), true);
  mom->add_option("--k", kk, "moment exponent");
  mom->add_option("--u", u_text, "rational multiple of q^{-1/2}, e.g. 1 or 3/2");
  mom->add_option("--population", population, "all | primitive-odd");

  CLI::App* vc = add_common(app.add_subcommand("variety-count", "point count of the congruence variety"), true);
  vc->add_option("--degrees", degrees_text, "d1,d2,... (2k entries)")->required();
  vc->add_option("--k", kk, "half-length of the tuple");
  vc->add_option("--c", c_text, "deformation constants c1,...,cm");
  vc->add_option("--cap", cap, "enumeration cap");

  CLI::App* ss = add_common(app.add_subcommand("singular-scan", "singular points by dual criteria"), true);
  ss->add_option("--degrees", degrees_text, "d1,d2,... (2k entries)")->required();
  ss->add_option("--k", kk, "half-length of the tuple");
  ss->add_option("--cap", cap, "enumeration cap");

  CLI::App* fam = app.add_subcommand("family-count", "degenerating plane families");
  fam->add_option("--family", family, "conic | cubic");
  fam->add_option("--q", q, "field order (prime power)")->required();
  fam->add_option("--k-max", k_max, "extension depth");
  fam->add_option("--t", t_value, "parameter value (element id)")->each([&](const std::string&) {
    t_given = true;
  });
  fam->add_flag("--sweep", sweep, "all parameter values");
  fam->add_option("--config", config, "JSON config file; flags override");
  fam->add_option("--output", output, "output file (default stdout)");

  CLI::App* cs = add_common(app.add_subcommand("charsum", "short character sums"), true);
  cs->add_option("--f", f_text, "interval center polynomial")->required();
  cs->add_option("--n", n, "interval exponent (deg h < n)");
  cs->add_flag("--all-chars", all_chars, "include the trivial character");

  CLI::App* lv = add_common(app.add_subcommand("lang-verify", "torsor checks for the q-power covering"), true);
  lv->add_option("--f", f_text, "interval center polynomial")->required();
  lv->add_option("--n", n, "interval exponent (deg h < n)");

  CLI::App* th = app.add_subcommand("theta-scan", "theta intersection counts on a Jacobian");
  th->add_option("--q", q, "field order (prime power)")->required();
  th->add_option("--genus", genus, "curve genus")->required();
  th->add_option("--f-coeffs", f_coeffs, "curve polynomial, monic degree 2g+1")->required();
  th->add_option("--a", a, "first theta index")->required();
  th->add_option("--b", b, "second theta index")->required();
  th->add_option("--x", x_text, "translate as \"u-coeffs;v-coeffs\"");
  th->add_flag("--all-x", all_x, "full equidistribution table");
  th->add_option("--config", config, "JSON config file; flags override");
  th->add_option("--output", output, "output file (default stdout)");

  CLI::App* parsed = nullptr;
  try {
    // Two-phase parse: the first pass only discovers --config so its values
    // can seed the real parse.
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") config = argv[i + 1];
    if (!config.empty() && argc >= 2) {
      CLI::App* sub = app.get_subcommand_no_throw(argv[1]);
      if (sub) apply_config(sub, config, argc, argv);
    }
    app.parse(argc, argv);
    parsed = app.get_subcommands().front();
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kPass : kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }

  try {
    Output out{output};
    if (parsed == fam) {
      Field k = field_from_q(q);
      std::optional<std::uint64_t> t = t_given ? std::optional<std::uint64_t>(t_value)
                                               : std::nullopt;
      return run_family_count(family, k, k_max, t, sweep, out);
    }
    if (parsed == th) {
      Field k = field_from_q(q);
      return run_theta_scan(k, genus, f_coeffs, a, b, x_text, all_x, out);
    }
    Field k = field_from_q(q);
    Poly g = parse_poly_arg(k, g_text);
    if (parsed == weil) return run_weil_check(k, g, tol, out);
    if (parsed == mom) return run_moments(k, g, kk, u_text, population, out);
    if (parsed == vc) {
      std::vector<Fe> c;
      if (!c_text.empty())
        for (unsigned v : parse_unsigned_list(c_text)) c.push_back(Fe(v));
      return run_variety_count(k, g, parse_unsigned_list(degrees_text), kk, c, cap, out);
    }
    if (parsed == ss)
      return run_singular_scan(k, g, parse_unsigned_list(degrees_text), kk, cap, out);
    if (parsed == cs) return run_charsum(k, g, parse_poly_arg(k, f_text), n, all_chars, out);
    if (parsed == lv) return run_lang_verify(k, g, parse_poly_arg(k, f_text), n, out);
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
