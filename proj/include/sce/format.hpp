#pragma once

// Text, LaTeX, JSON and CSV renderings used by the command-line tool.
// Polynomials print in descending powers; rationals keep full precision.

#include <string>
#include <string_view>

#include "sce/families.hpp"
#include "sce/genfunc.hpp"
#include "sce/integrals.hpp"
#include "sce/poly.hpp"

namespace sce {

enum class OutputFormat { Text, Latex, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// "x^2 - 2x + 2", "x^2/2 - 1", "0" for the zero polynomial.
std::string to_text(const Poly& p);
/// "x^{2} - 2x + 2", "\frac{1}{2}x^{2} - 1".
std::string to_latex(const Poly& p);
/// Header "degree,re_num,re_den,im_num,im_den", one row per stored degree.
std::string to_csv(const Poly& p);

/// {"family":..,"n":..,"m":..?,"coeffs":[{"re":"p/q","im":"p/q"},..]}, ascending degree.
std::string to_json(const FamilyId& id, const Poly& p);

struct PolyRecord {
  FamilyId id;
  Poly poly;
};

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
PolyRecord parse_poly_json(std::string_view text);

/// "1 + (x - 1) t + (x^2/2 - x + 1) t^2"
std::string to_text(const FormalSeries& f);
std::string to_latex(const FormalSeries& f);

/// "(x^2 - 2x + 2) e^x + C", "-cos x + C".
std::string to_text(const ClosedForm& cf);
std::string to_latex(const ClosedForm& cf);

}  // namespace sce
