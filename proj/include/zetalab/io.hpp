#pragma once

// JSON persistence of models, symbols and series, and pole-table export.
// Exact values are always written as strings ("p/q", "p/q+r/s i", radical
// or hex-float forms) so that reloading is lossless.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetalab/spectral.hpp"
#include "zetalab/symbol.hpp"

namespace zetalab {

using Json = nlohmann::json;

Json to_json(const AsymptoticSeries& s);
AsymptoticSeries series_from_json(const Json& j);
Json to_json(const SpectralMapSpec& m);
SpectralMapSpec map_from_json(const Json& j);
Json to_json(const SpectralModel& m);
SpectralModel model_from_json(const Json& j);
Json to_json(const SymbolExpansion& s);
SymbolExpansion symbol_from_json(const Json& j);

// Text forms; parse failures raise ParseError.
std::string model_to_text(const SpectralModel& m);
SpectralModel model_from_text(const std::string& text);
std::string symbol_to_text(const SymbolExpansion& s);
SymbolExpansion symbol_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Decimal rendering; complex values as "re+im i".
std::string decimal(const ExactScalar& x, int digits = 20);

struct PoleRow {
  Rational sigma;
  SpectralFunction function;
  ExactScalar residue;
};

// Residues of zeta_up, zeta_down, zeta_abs and eta at every admissible point
// k/m with floor <= k <= n, k != 0, descending in sigma.
std::vector<PoleRow> pole_table(const SpectralModel& model, long floor, long depth = -1, long prec = kDefaultPrecision);

// Columns: sigma,function,residue_exact,residue_float
std::string pole_table_csv(const std::vector<PoleRow>& rows);
Json pole_table_json(const std::vector<PoleRow>& rows);

}  // namespace zetalab
