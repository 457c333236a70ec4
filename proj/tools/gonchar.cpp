// gonchar: command-line front end. Exit codes: 0 ok, 1 verification failure, 2 usage, 3 numeric.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gonchar/equilibrium.hpp"
#include "gonchar/factorlab.hpp"
#include "gonchar/io.hpp"
#include "gonchar/rootkit_real.hpp"
#include "gonchar/zerogeom.hpp"
#include "suites.hpp"

namespace {

using namespace gonchar;
using io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::optional<int> d, d_min, d_max;
  std::string q = "1";
  std::optional<long> prec;
  std::string tol = "1e-30";
  std::string out, svg;
  int primes = 25;
  std::string suite = "all";
  std::string format;
  std::optional<double> R;
  int samples = 181;
};

enum class Format { Json, Csv, Text };

Format resolve_format(const RunConfig& c) {
  if (c.format == "json") return Format::Json;
  if (c.format == "csv") return Format::Csv;
  if (c.format == "text") return Format::Text;
  if (!c.format.empty()) throw UsageError("unknown --format '" + c.format + "'");
  auto ends = [&](const char* s) {
    const std::string suf = s;
    return c.out.size() >= suf.size() && c.out.compare(c.out.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends(".csv")) return Format::Csv;
  if (ends(".txt")) return Format::Text;
  return Format::Json;
}

// Accuracy target: 2^-prec when --prec is given, else --tol.
mp::Real target_tol(const RunConfig& c) {
  if (c.prec) {
    if (*c.prec < 8 || *c.prec > mp::kCeilingBits) throw UsageError("--prec must lie in [8, 16384]");
    return mp::ldexp(mp::Real(1L, static_cast<mp::Bits>(*c.prec) + 64), -*c.prec);
  }
  mp::Real t(256);
  try {
    t = mp::Real(c.tol, 256);
  } catch (const std::exception&) {
    throw UsageError("malformed --tol '" + c.tol + "'");
  }
  if (!(t > 0.0) || !(t < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  return t;
}

long tol_bits(const mp::Real& tol) {
  return static_cast<long>(std::ceil(-mp::log2(tol).to_double()));
}

RatQ charge(const RunConfig& c) {
  RatQ q;
  try {
    q = parse_rat(c.q);
  } catch (const DomainError&) {
    throw UsageError("malformed --q '" + c.q + "'");
  }
  if (sgn(q) <= 0) throw UsageError("--q must be positive");
  return q;
}

int need_d(const RunConfig& c) {
  if (!c.d) throw UsageError(c.subcommand + " requires --d");
  if (*c.d < 1) throw UsageError("--d must be >= 1");
  return *c.d;
}

Json command_echo(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}};
  if (c.d) j["d"] = *c.d;
  if (c.d_min) j["d_min"] = *c.d_min;
  if (c.d_max) j["d_max"] = *c.d_max;
  j["q"] = c.q;
  if (c.prec) j["prec"] = *c.prec;
  j["tol"] = c.tol;
  if (c.R) j["R"] = *c.R;
  if (c.subcommand == "factors") j["primes"] = c.primes;
  if (c.subcommand == "verify") j["suite"] = c.suite;
  return j;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    io::write_file(c.out, text);
  }
}

std::string num_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Zero rows for G(d;z), memoized in the cache under (d, 1, bits).
std::vector<io::ZeroRow> zero_rows_for(int d, const mp::Real& tol) {
  const long bits = tol_bits(tol);
  if (auto hit = io::cache_load(d, RatQ(1), bits)) return *hit;
  auto rows = io::zero_rows(classify_zeros(d, tol));
  try {
    io::cache_store(d, RatQ(1), bits, rows);
  } catch (const io::IoError& e) {
    std::cerr << "warning: cache not written: " << e.what() << '\n';
  }
  return rows;
}

std::string coeff_list(const IntPoly& p) {
  std::string s;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += (k ? " " : "") + p.coeffs()[k].get_str();
  return s;
}

Json coeff_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

// ---------------------------------------------------------------------------

int cmd_poly(const RunConfig& c) {
  const int d = need_d(c);
  const RatQ q = charge(c);
  const GoncharInstance g = gonchar_poly_q(d, q);
  const Format f = resolve_format(c);
  if (f == Format::Csv) {
    std::string s = "k,coefficient\n";
    for (std::size_t k = 0; k < g.poly.coeffs().size(); ++k) s += std::to_string(k) + ',' + g.poly.coeffs()[k].get_str() + '\n';
    emit(c, s);
  } else if (f == Format::Text) {
    emit(c, "G(" + std::to_string(d) + "," + rat_to_string(q) + ";z) ascending: " + coeff_list(g.poly) + "\n");
  } else {
    Json p{{"d", d},
           {"q", rat_to_string(q)},
           {"degree", g.poly.degree()},
           {"clearing_factor", g.clearing_factor.get_str()},
           {"coefficients", coeff_json(g.poly)}};
    emit(c, io::dump(io::envelope(command_echo(c), "ok", p)));
  }
  return kOk;
}

int cmd_rho(const RunConfig& c) {
  const int d = need_d(c);
  const RatQ q = charge(c);
  const mp::Real tol = target_tol(c);
  const RootApprox r = critical_distance(d, q, tol);
  const int digits = static_cast<int>(std::ceil(-mp::log10(tol).to_double())) + 3;
  const mp::Real rho_v = r.value - 1L;
  const Format f = resolve_format(c);
  if (f == Format::Csv) throw UsageError("rho has no CSV form");
  if (f == Format::Text) {
    std::string s = "R_q = " + mp::to_decimal(r.value, digits) + "\nrho = " + mp::to_decimal(rho_v, digits) +
                    "\nradius = " + mp::to_decimal(r.radius, 3, MPFR_RNDU) + "\n";
    if (r.exact) s += "exact = " + rat_to_string(*r.exact) + "\n";
    emit(c, s);
    return kOk;
  }
  Json p{{"d", d},
         {"q", rat_to_string(q)},
         {"R_q", io::real_json(r.value, digits)},
         {"rho", io::real_json(rho_v, digits)},
         {"radius", mp::to_decimal(r.radius, 3, MPFR_RNDU)},
         {"working_precision_bits", static_cast<long>(r.working_precision)},
         {"exact", r.exact.has_value()}};
  if (r.exact) {
    p["exact_R_q"] = rat_to_string(*r.exact);
    p["exact_rho"] = rat_to_string(*r.exact - 1);
  }
  emit(c, io::dump(io::envelope(command_echo(c), "ok", p)));
  return kOk;
}

int cmd_zeros(const RunConfig& c) {
  const int d = need_d(c);
  if (charge(c) != 1) throw UsageError("zeros supports q = 1 only");
  const mp::Real tol = target_tol(c);
  const auto rows = zero_rows_for(d, tol);
  if (!c.svg.empty()) io::write_file(c.svg, io::emit_svg_zeroplot(rows));
  const Format f = resolve_format(c);
  if (f == Format::Csv) {
    emit(c, io::emit_zeros_csv(rows));
  } else if (f == Format::Text) {
    std::string s;
    for (const auto& r : rows) s += r.re + (r.im[0] == '-' ? " - " + r.im.substr(1) : " + " + r.im) + "i  " + to_string(r.region) + "\n";
    emit(c, s);
  } else {
    Json p{{"d", d},
           {"n", 2 * d - 1},
           {"precision_bits", tol_bits(tol)},
           {"census", io::census_json(io::census_from_rows(d, rows))},
           {"zeros", io::zero_rows_json(rows)}};
    emit(c, io::dump(io::envelope(command_echo(c), "ok", p)));
  }
  return kOk;
}

int cmd_census(const RunConfig& c) {
  int lo, hi;
  if (c.d) {
    if (c.d_min || c.d_max) throw UsageError("use either --d or --d-min/--d-max");
    lo = hi = need_d(c);
  } else {
    if (!c.d_min || !c.d_max) throw UsageError("census requires --d or both --d-min and --d-max");
    lo = *c.d_min;
    hi = *c.d_max;
    if (lo < 1 || hi < lo) throw UsageError("need 1 <= d-min <= d-max");
  }
  const mp::Real tol = target_tol(c);
  std::vector<Census> rows;
  std::vector<io::ZeroRow> all;
  for (int d = lo; d <= hi; ++d) {
    const auto z = zero_rows_for(d, tol);
    rows.push_back(io::census_from_rows(d, z));
    if (!c.svg.empty()) all.insert(all.end(), z.begin(), z.end());
  }
  if (!c.svg.empty()) io::write_file(c.svg, io::emit_svg_zeroplot(all));
  const Format f = resolve_format(c);
  if (f == Format::Csv) {
    emit(c, io::emit_census_csv(rows));
  } else if (f == Format::Text) {
    std::string s = "   d    n   N1   N2   N3  on_circle  intersection_pair\n";
    for (const auto& r : rows) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%4d %4d %4d %4d %4d %10d  %s\n", r.d, r.n(), r.N1, r.N2, r.N3, r.on_circle,
                    r.has_intersection_pair ? "yes" : "no");
      s += buf;
    }
    emit(c, s);
  } else {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(io::census_json(r));
    emit(c, io::dump(io::envelope(command_echo(c), "ok", Json{{"precision_bits", tol_bits(tol)}, {"rows", a}})));
  }
  return kOk;
}

int cmd_factors(const RunConfig& c) {
  const int d = need_d(c);
  if (c.primes < 1) throw UsageError("--primes must be >= 1");
  const IntPoly reduced = reduced_polynomial(d);
  const IrredVerdict v = irreducibility_certificate(reduced, c.primes);
  const Divisibility div = known_divisibility(d);
  const Format f = resolve_format(c);
  if (f == Format::Csv) throw UsageError("factors has no CSV form");
  if (f == Format::Text) {
    std::string s = "G(" + std::to_string(d) + ";z) / ell: degree " + std::to_string(reduced.degree()) + ", " +
                    to_string(v.status) + " (" + std::to_string(v.primes_used.size()) + " primes)\n";
    for (const auto& w : v.witnesses) s += "  factor: " + coeff_list(w) + "\n";
    emit(c, s);
    return kOk;
  }
  Json patterns = Json::array();
  for (const auto& pat : v.patterns) patterns.push_back(Json{{"p", pat.p}, {"degrees", pat.degrees}});
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(coeff_json(w));
  Json p{{"d", d},
         {"ell", coeff_json(ell_factor(d))},
         {"divides_z_plus_1", div.divides_z_plus_1},
         {"divides_z2_minus_z_plus_1", div.divides_cyclotomic},
         {"reduced_degree", reduced.degree()},
         {"status", to_string(v.status)},
         {"primes_used", v.primes_used},
         {"patterns", patterns},
         {"surviving_degrees", std::vector<int>(v.surviving.begin(), v.surviving.end())},
         {"witnesses", witnesses}};
  emit(c, io::dump(io::envelope(command_echo(c), "ok", p)));
  return kOk;
}

int cmd_density(const RunConfig& c) {
  const int d = need_d(c);
  if (!c.R) throw UsageError("density requires --R");
  const double R = *c.R;
  if (!(R > 1.0)) throw UsageError("--R must exceed 1");
  if (c.samples < 2) throw UsageError("--samples must be >= 2");
  const RatQ qr = charge(c);
  const double q = qr.get_d();
  const Format f = resolve_format(c);
  if (f == Format::Csv) {
    std::string s = "t,density\n";
    for (const auto& [t, v] : density_profile(R, q, d, c.samples).samples) s += num_string(t) + ',' + num_string(v) + '\n';
    emit(c, s);
    return kOk;
  }
  const CapReport cap = positive_cap(R, q, d);
  const double mass = total_mass(R, q, d);
  const RootApprox Rq = critical_distance(d, qr, mp::Real("1e-30", 256));
  if (f == Format::Text) {
    emit(c, "min density (t = 0) = " + num_string(density(0.0, R, q, d)) + "\ncap boundary t0 = " + num_string(cap.t0) +
                "\npositive mass = " + num_string(cap.positive_mass) + "\ntotal mass = " + num_string(mass) +
                "\nR_q = " + mp::to_decimal(Rq.value, 20) + "\n");
    return kOk;
  }
  Json p{{"d", d},
         {"R", R},
         {"q", rat_to_string(qr)},
         {"min_density", density(0.0, R, q, d)},
         {"density_at_south_pole", density(std::numbers::pi, R, q, d)},
         {"t0", cap.t0},
         {"cos_t0", std::cos(cap.t0)},
         {"positive_mass", cap.positive_mass},
         {"total_mass", mass},
         {"critical_distance", io::real_json(Rq.value, 20)},
         {"nonnegative_everywhere", density(0.0, R, q, d) >= 0.0}};
  emit(c, io::dump(io::envelope(command_echo(c), "ok", p)));
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  bool known = c.suite == "all";
  for (const auto& n : suites::suite_names()) known |= c.suite == n;
  if (!known) throw UsageError("unknown --suite '" + c.suite + "'");
  const auto results = suites::run_suite(c.suite);
  bool all_pass = true;
  for (const auto& r : results) all_pass &= r.pass;
  const Format f = resolve_format(c);
  if (f == Format::Csv) throw UsageError("verify has no CSV form");
  if (f == Format::Text) {
    std::string s;
    for (const auto& r : results)
      s += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.suite + ": " + r.name + (r.pass ? "" : " -- " + r.detail) + "\n";
    emit(c, s);
  } else {
    Json checks = Json::array();
    for (const auto& r : results)
      checks.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(c, io::dump(io::envelope(command_echo(c), all_pass ? "ok" : "failed",
                                  Json{{"suite", c.suite}, {"passed", all_pass}, {"checks", checks}})));
  }
  return all_pass ? kOk : kVerifyFailed;
}

int dispatch(const RunConfig& c) {
  if (c.subcommand == "poly") return cmd_poly(c);
  if (c.subcommand == "rho") return cmd_rho(c);
  if (c.subcommand == "zeros") return cmd_zeros(c);
  if (c.subcommand == "census") return cmd_census(c);
  if (c.subcommand == "factors") return cmd_factors(c);
  if (c.subcommand == "density") return cmd_density(c);
  if (c.subcommand == "verify") return cmd_verify(c);
  throw UsageError("unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Gonchar polynomials: critical distances, zeros, factor patterns and the signed equilibrium"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  struct CommandHelp {
    const char* name;
    const char* help;
  };
  const CommandHelp commands[] = {{"poly", "coefficients of G(d,q;z), ascending"},
                        {"rho", "critical distance R_q and rho = R_q - 1"},
                        {"zeros", "certified zeros of G(d;z) with region tags"},
                        {"census", "zero counts per region over a range of d"},
                        {"factors", "irreducibility evidence for G(d;z)/ell(d;z)"},
                        {"density", "signed-equilibrium density, cap and mass"},
                        {"verify", "run a property suite"}};
  std::vector<CLI::Option*> path_opts;
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--d", cfg.d, "dimension d >= 1");
    sub->add_option("--d-min", cfg.d_min, "first d of a range");
    sub->add_option("--d-max", cfg.d_max, "last d of a range");
    sub->add_option("--q", cfg.q, "charge as a or a/b (default 1)");
    sub->add_option("--prec", cfg.prec, "accuracy target in bits (overrides --tol)");
    sub->add_option("--tol", cfg.tol, "accuracy target (default 1e-30)");
    path_opts.push_back(sub->add_option("--out", cfg.out, "output file (default stdout)"));
    path_opts.push_back(sub->add_option("--svg", cfg.svg, "SVG zero plot path"));
    sub->add_option("--primes", cfg.primes, "prime budget for factor patterns (default 25)");
    sub->add_option("--suite", cfg.suite, "all | poly | roots | factors | geometry | equilibrium");
    sub->add_option("--format", cfg.format, "json | csv | text");
    sub->add_option("--R", cfg.R, "distance of the point charge (density)");
    sub->add_option("--samples", cfg.samples, "profile samples for density CSV (default 181)");
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (const CLI::Option* o : path_opts) {
    if (o->count() > 0 && o->as<std::string>().empty()) {
      std::cerr << "i/o error: empty path for " << o->get_name() << '\n';
      return kUsage;
    }
  }

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const UnresolvedClassification& e) {
    std::cerr << "unresolved classification: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency check failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
}
