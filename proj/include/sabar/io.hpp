#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sabar/persistence.hpp"
#include "sabar/sa_pipeline.hpp"

namespace sabar {

/// Malformed input text; the message carries the line number when known.
struct ParseError : ContractError {
  using ContractError::ContractError;
};

/// "filtration v1", optional "steps N", lines "<birth> <v0> ... <vd>" and
/// "value <index> <rational or thom json>". '#' starts a comment.
Filtration read_filtration(std::string_view text);
std::string write_filtration(const Filtration& f);

/// One point per line, comma-separated rationals.
std::vector<Point> read_points_csv(std::string_view text);

nlohmann::json thom_to_json(const ThomEncoding& t);
ThomEncoding thom_from_json(const nlohmann::json& j);
nlohmann::json value_to_json(const FiltrationValue& v);

/// [{"p": int, "bars": [{"birth": value, "death": value | "inf", "mult": int}]}]
nlohmann::json barcodes_json(const std::vector<Barcode>& bs);
std::string emit_barcode_json(const std::vector<Barcode>& bs);
std::string emit_barcode_svg(const std::vector<Barcode>& bs);

/// Plain text, one bar per line.
std::string barcodes_text(const std::vector<Barcode>& bs);

}  // namespace sabar
