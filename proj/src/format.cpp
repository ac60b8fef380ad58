#include "sce/format.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace sce {

namespace {

enum class Style { Text, Latex };

std::string power_text(int k, Style style, std::string_view var = "x") {
  if (k == 0) return "";
  if (k == 1) return std::string(var);
  if (style == Style::Latex) return std::string(var) + "^{" + std::to_string(k) + "}";
  return std::string(var) + "^" + std::to_string(k);
}

// Magnitude of a nonzero real coefficient times x^k, e.g. "2x", "x^2/2", "1/2".
std::string real_term(const Rational& c, int k, Style style) {
  const std::string num = abs(c).numerator().get_str();
  const std::string den = c.denominator().get_str();
  const std::string mono = power_text(k, style);
  if (style == Style::Latex) {
    if (den != "1") return "\\frac{" + num + "}{" + den + "}" + mono;
    return (num == "1" && k > 0) ? mono : num + mono;
  }
  std::string text = (num == "1" && k > 0) ? mono : num + mono;
  if (den != "1") text += "/" + den;
  return text;
}

struct Term {
  bool negative = false;
  std::string body;
};

Term make_term(const GaussianRational& c, int k, Style style) {
  if (c.is_real()) return {c.re().sign() < 0, real_term(c.re(), k, style)};
  const std::string z = c.to_string();
  if (style == Style::Latex) return {false, "\\left(" + z + "\\right)" + power_text(k, style)};
  return {false, "(" + z + ")" + power_text(k, style)};
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == 0) {
      out += (terms[k].negative ? "-" : "") + terms[k].body;
    } else {
      out += (terms[k].negative ? " - " : " + ") + terms[k].body;
    }
  }
  return out;
}

std::vector<Term> poly_terms(const Poly& p, Style style) {
  std::vector<Term> terms;
  for (int k = p.degree(); k >= 0; --k) {
    if (!p.coeff(k).is_zero()) terms.push_back(make_term(p.coeff(k), k, style));
  }
  return terms;
}

std::string render(const Poly& p, Style style) { return join(poly_terms(p, style)); }

// p * factor, e.g. "2x sin x", "-cos x", "(x^2 - 2x + 2) e^x". Empty factor means
// a plain t-power or similar that is appended after a space.
Term factor_term(const Poly& p, const std::string& factor, Style style) {
  auto terms = poly_terms(p, style);
  if (terms.size() == 1) {
    Term t = terms.front();
    if (t.body == "1") return {t.negative, factor};
    return {t.negative, t.body + " " + factor};
  }
  const std::string open = style == Style::Latex ? "\\left(" : "(";
  const std::string close = style == Style::Latex ? "\\right)" : ")";
  return {false, open + render(p, style) + close + " " + factor};
}

std::string render_series(const FormalSeries& f, Style style) {
  std::vector<Term> terms;
  for (int k = 0; k <= f.order(); ++k) {
    const Poly& c = f.coeff(k);
    if (c.is_zero()) continue;
    if (k == 0) {
      auto inner = poly_terms(c, style);
      if (inner.size() == 1) {
        terms.push_back(inner.front());
      } else {
        terms.push_back({false, render(c, style)});
      }
      continue;
    }
    terms.push_back(factor_term(c, power_text(k, style, "t"), style));
  }
  return join(terms);
}

std::string exp_factor(const Rational& rate, Style style) {
  if (rate == Rational(1)) return "e^x";
  const std::string sign = rate.sign() < 0 ? "-" : "";
  if (style == Style::Latex) return "e^{" + sign + real_term(rate, 1, style) + "}";
  return "e^(" + sign + real_term(rate, 1, style) + ")";
}

std::string render_closed_form(const ClosedForm& cf, Style style) {
  std::vector<Term> terms;
  const std::string sin = style == Style::Latex ? "\\sin x" : "sin x";
  const std::string cos = style == Style::Latex ? "\\cos x" : "cos x";
  auto add = [&](const Poly& p, const std::string& factor) {
    if (!p.is_zero()) terms.push_back(factor_term(p, factor, style));
  };
  switch (cf.kind) {
    case Kind::Sin:
      add(cf.main_part, cos);
      add(cf.hat_part, sin);
      break;
    case Kind::Cos:
      add(cf.main_part, sin);
      add(cf.hat_part, cos);
      break;
    case Kind::Exp: add(cf.main_part, exp_factor(cf.rate, style)); break;
  }
  if (!cf.constant.is_zero()) terms.push_back({cf.constant.sign() < 0, real_term(cf.constant, 0, style)});
  terms.push_back({false, "C"});
  return join(terms);
}

using ojson = nlohmann::ordered_json;

Rational rational_field(const ojson& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("missing rational string field '") + key + "'");
  }
  return Rational::parse(j.at(key).get<std::string>());
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string to_text(const Poly& p) { return render(p, Style::Text); }
std::string to_latex(const Poly& p) { return render(p, Style::Latex); }

std::string to_csv(const Poly& p) {
  std::ostringstream os;
  os << "degree,re_num,re_den,im_num,im_den\n";
  for (int k = 0; k <= p.degree(); ++k) {
    const auto& c = p.coeff(k);
    os << k << ',' << c.re().numerator().get_str() << ',' << c.re().denominator().get_str() << ','
       << c.im().numerator().get_str() << ',' << c.im().denominator().get_str() << '\n';
  }
  return os.str();
}

std::string to_json(const FamilyId& id, const Poly& p) {
  ojson j;
  j["family"] = std::string(family_name(id.tag));
  j["n"] = id.n;
  if (id.m) j["m"] = id.m->to_string();
  ojson coeffs = ojson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back({{"re", c.re().to_string()}, {"im", c.im().to_string()}});
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

PolyRecord parse_poly_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("polynomial record must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) throw std::invalid_argument("missing 'family'");
  auto family = parse_family(j["family"].get<std::string>());
  if (!family) throw std::invalid_argument("unknown family '" + j["family"].get<std::string>() + "'");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("missing integer 'n'");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw std::invalid_argument("missing 'coeffs' array");

  PolyRecord rec;
  rec.id.tag = *family;
  rec.id.n = j["n"].get<int>();
  if (j.contains("m")) rec.id.m = rational_field(j, "m");
  std::vector<GaussianRational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.emplace_back(rational_field(c, "re"), rational_field(c, "im"));
  rec.poly = Poly(std::move(coeffs));
  return rec;
}

std::string to_text(const FormalSeries& f) { return render_series(f, Style::Text); }
std::string to_latex(const FormalSeries& f) { return render_series(f, Style::Latex); }

std::string to_text(const ClosedForm& cf) { return render_closed_form(cf, Style::Text); }
std::string to_latex(const ClosedForm& cf) { return render_closed_form(cf, Style::Latex); }

}  // namespace sce
