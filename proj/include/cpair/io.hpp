#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cpair/catalog.hpp"

namespace cpair {

/// Courant pair (and optional module) read from a JSON document.
struct PairDocument {
  CourantPair pair;
  std::optional<CPModule> module;
};

struct DeformationDocument {
  Deformation deformation;
  /// Set when the document refers to its pair by catalog name.
  std::optional<std::string> catalog_name;
};

/// Rationals are strings "p/q" (or integer strings / JSON integers); floats are
/// rejected. Indices may be integers or basis labels. Throws ParseError with a
/// JSON pointer to the offending entry.
PairDocument parse_pair_document(const nlohmann::json& doc);
DeformationDocument parse_deformation_document(const nlohmann::json& doc);
/// True for documents carrying deformation coefficients.
bool is_deformation_document(const nlohmann::json& doc);

/// Parses text, turning syntax errors into ParseError.
nlohmann::json parse_json_text(const std::string& text);
/// Reads and parses a file; unreadable files raise InputError.
nlohmann::json read_json_file(const std::string& path);

nlohmann::json export_pair(const CourantPair& pair, const CPModule* module = nullptr);
/// With a catalog name the pair is written by reference, otherwise inline.
nlohmann::json export_deformation(const Deformation& d, const std::optional<std::string>& catalog_name = {});
nlohmann::json export_cochain(const Cochain& c, const CourantPair& pair);
nlohmann::json export_total_cochain(const TotalCochain& c, const CourantPair& pair);

}  // namespace cpair
