// sce: construct, integrate, expand and verify the SCE polynomial families.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sce/families.hpp"
#include "sce/format.hpp"
#include "sce/genfunc.hpp"
#include "sce/integrals.hpp"
#include "sce/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr double kCheckTolerance = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n_cap() {
  const char* env = std::getenv("SCE_MAX_N");
  if (env == nullptr || *env == '\0') return 64;
  int cap = 0;
  std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || ptr != s.data() + s.size() || cap < 0) {
    throw UsageError("SCE_MAX_N must be a non-negative integer");
  }
  return cap;
}

void check_cap(int n, const char* what) {
  const int cap = max_n_cap();
  if (n > cap) {
    throw UsageError(std::string(what) + " = " + std::to_string(n) + " exceeds SCE_MAX_N = " + std::to_string(cap));
  }
}

std::optional<sce::Rational> parse_rate(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    sce::Rational m = sce::Rational::parse(text);
    if (m.is_zero()) throw UsageError("rate must be nonzero");
    return m;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

sce::OutputFormat parse_format(const std::string& text) {
  auto f = sce::parse_output_format(text);
  if (!f) throw UsageError("unknown format '" + text + "'");
  return *f;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

// ---------------------------------------------------------------- poly

struct PolyArgs {
  std::string family;
  int n = 0;
  std::string m;
  std::string format = "text";
};

int run_poly(const PolyArgs& args) {
  auto tag = sce::parse_family(args.family);
  if (!tag) throw UsageError("unknown family '" + args.family + "'");
  check_cap(args.n, "n");
  sce::FamilyId id{*tag, args.n, parse_rate(args.m)};
  if (id.tag == sce::Family::EM && !id.m) throw UsageError("family em requires --m");
  if (id.tag != sce::Family::EM && id.m) throw UsageError("--m applies to family em only");
  const sce::Poly p = sce::family_poly(id);
  switch (parse_format(args.format)) {
    case sce::OutputFormat::Text: std::cout << sce::to_text(p) << '\n'; break;
    case sce::OutputFormat::Latex: std::cout << sce::to_latex(p) << '\n'; break;
    case sce::OutputFormat::Json: std::cout << sce::to_json(id, p) << '\n'; break;
    case sce::OutputFormat::Csv: std::cout << sce::to_csv(p); break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- integrate

struct IntegrateArgs {
  std::string kind;
  int n = 0;
  std::string m;
  std::optional<double> a;
  std::optional<double> b;
  bool check = false;
  std::string format = "text";
};

int run_integrate(const IntegrateArgs& args) {
  auto kind = sce::parse_kind(args.kind);
  if (!kind) throw UsageError("unknown kind '" + args.kind + "'");
  check_cap(args.n, "n");
  auto m = parse_rate(args.m);
  if (m && *kind != sce::Kind::Exp) throw UsageError("--m applies to kind exp only");
  if (args.a.has_value() != args.b.has_value()) throw UsageError("--a and --b must be given together");
  if (args.check && !args.a) throw UsageError("--check needs --a and --b");
  const sce::ClosedForm cf = sce::closed_form(*kind, args.n, m);

  if (!args.a) {
    const auto fmt = parse_format(args.format);
    if (fmt == sce::OutputFormat::Latex) {
      std::cout << sce::to_latex(cf) << '\n';
    } else if (fmt == sce::OutputFormat::Text) {
      std::cout << sce::to_text(cf) << '\n';
    } else {
      throw UsageError("integrate supports --format text or latex");
    }
    return kExitOk;
  }

  const double a = *args.a;
  const double b = *args.b;
  if (!std::isfinite(a) || !std::isfinite(b)) throw UsageError("endpoints must be finite");
  double value = 0.0;
  try {
    value = sce::definite_integral(cf, a, b);
  } catch (const std::overflow_error& e) {
    throw UsageError(e.what());
  }
  std::cout << "integral = " << shortest(value) << '\n';
  if (!args.check) return kExitOk;

  const sce::Rational rate = m.value_or(sce::Rational(1));
  sce::QuadResult q = a <= b ? sce::quad_adaptive(*kind, args.n, rate, a, b)
                             : sce::quad_adaptive(*kind, args.n, rate, b, a);
  if (a > b) q.value = -q.value;
  const double discrepancy = std::abs(value - q.value) / std::max(1.0, std::abs(q.value));
  const bool pass = discrepancy <= kCheckTolerance;
  std::cout << "quadrature = " << shortest(q.value) << '\n'
            << "relative discrepancy = " << shortest(discrepancy) << '\n'
            << "check: " << (pass ? "pass" : "FAIL") << '\n';
  return pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& suite, int max_n) {
  bool known = false;
  for (auto name : sce::suite_names()) known = known || name == suite;
  if (!known) throw UsageError("unknown suite '" + suite + "'");
  check_cap(max_n, "max-n");
  const sce::Report report = sce::run_suite(suite, max_n);

  // One line per identity, in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::vector<int>> failing;
  std::map<std::string, std::pair<int, int>> range;
  for (const auto& r : report.results()) {
    auto [it, inserted] = range.try_emplace(r.identity, r.n, r.n);
    if (inserted) order.push_back(r.identity);
    it->second.first = std::min(it->second.first, r.n);
    it->second.second = std::max(it->second.second, r.n);
    if (!r.passed) failing[r.identity].push_back(r.n);
  }
  for (const auto& id : order) {
    const auto [lo, hi] = range[id];
    auto f = failing.find(id);
    if (f == failing.end()) {
      std::cout << "PASS  " << id << "  [n=" << lo << ".." << hi << "]\n";
    } else {
      std::cout << "FAIL  " << id << "  [failing n:";
      for (int n : f->second) std::cout << ' ' << n;
      std::cout << "]\n";
    }
  }
  std::cout << suite << ": " << order.size() << " identities, " << report.results().size() << " checks, "
            << report.failures() << " failures\n";
  return report.all_passed() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- genfunc

struct GenfuncArgs {
  std::string family;
  int order = 0;
  std::string m;
  std::string format = "text";
};

int run_genfunc(const GenfuncArgs& args) {
  check_cap(args.order, "order");
  auto m = parse_rate(args.m);
  if (args.family != "em" && m) throw UsageError("--m applies to family em only");
  std::optional<sce::FormalSeries> series;
  if (args.family == "e") {
    series = sce::series_E(args.order);
  } else if (args.family == "s") {
    series = sce::series_S(args.order);
  } else if (args.family == "c") {
    series = sce::series_C(args.order);
  } else if (args.family == "em") {
    if (!m) throw UsageError("family em requires --m");
    series = sce::series_Em(*m, args.order);
  } else {
    throw UsageError("unknown generating-function family '" + args.family + "'");
  }

  switch (parse_format(args.format)) {
    case sce::OutputFormat::Text: std::cout << sce::to_text(*series) << '\n'; break;
    case sce::OutputFormat::Latex: std::cout << sce::to_latex(*series) << '\n'; break;
    case sce::OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["family"] = args.family;
      j["order"] = args.order;
      if (m) j["m"] = m->to_string();
      auto coeffs = nlohmann::ordered_json::array();
      for (const auto& p : series->coeffs()) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& c : p.coeffs()) row.push_back({{"re", c.re().to_string()}, {"im", c.im().to_string()}});
        coeffs.push_back(std::move(row));
      }
      j["coeffs"] = std::move(coeffs);
      std::cout << j.dump() << '\n';
      break;
    }
    case sce::OutputFormat::Csv:
      std::cout << "t_power,degree,re_num,re_den,im_num,im_den\n";
      for (int k = 0; k <= series->order(); ++k) {
        const auto& p = series->coeff(k);
        for (int d = 0; d <= p.degree(); ++d) {
          const auto& c = p.coeff(d);
          std::cout << k << ',' << d << ',' << c.re().numerator().get_str() << ','
                    << c.re().denominator().get_str() << ',' << c.im().numerator().get_str() << ','
                    << c.im().denominator().get_str() << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of the SCE polynomial families"};
  app.require_subcommand(1);

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print one polynomial of a family");
  poly->add_option("family", poly_args.family, "e, s, c, shat, chat or em")->required();
  poly->add_option("--n", poly_args.n, "Index")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--m", poly_args.m, "Rate for family em, as p/q or an integer");
  poly->add_option("--format", poly_args.format, "text, latex, json or csv");

  IntegrateArgs int_args;
  auto* integrate = app.add_subcommand("integrate", "Antiderivative of x^n sin x, x^n cos x or x^n e^(mx)");
  integrate->add_option("--kind", int_args.kind, "sin, cos or exp")->required();
  integrate->add_option("--n", int_args.n, "Power of x")->required()->check(CLI::NonNegativeNumber);
  integrate->add_option("--m", int_args.m, "Rate for kind exp, as p/q or an integer (default 1)");
  integrate->add_option("--a", int_args.a, "Lower endpoint");
  integrate->add_option("--b", int_args.b, "Upper endpoint");
  integrate->add_flag("--check", int_args.check, "Compare against adaptive quadrature");
  integrate->add_option("--format", int_args.format, "text or latex (closed form only)");

  std::string suite = "all";
  int max_n = 30;
  auto* verify = app.add_subcommand("verify", "Run a suite of exact identity checks");
  verify->add_option("--suite", suite, "routes, recurrences, odes, genfunc, laguerre, theorem1, theorem2 or all");
  verify->add_option("--max-n", max_n, "Largest index or series order")->check(CLI::NonNegativeNumber);

  GenfuncArgs gen_args;
  auto* genfunc = app.add_subcommand("genfunc", "Expand a generating function in powers of t");
  genfunc->add_option("--family", gen_args.family, "e, s, c or em")->required();
  genfunc->add_option("--order", gen_args.order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
  genfunc->add_option("--m", gen_args.m, "Rate for family em");
  genfunc->add_option("--format", gen_args.format, "text, latex, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return run_poly(poly_args);
    if (*integrate) return run_integrate(int_args);
    if (*verify) return run_verify(suite, max_n);
    if (*genfunc) return run_genfunc(gen_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
