#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "wonderful/cohomology.hpp"

namespace wonderful {

enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_format(const std::string& s);

struct TableView {
  const WonderfulVariety* variety = nullptr;
  const CohomologyTable* table = nullptr;
  std::optional<int> only_degree;
};

nlohmann::ordered_json table_to_json(const TableView& view);
std::string render_table(const TableView& view, OutputFormat fmt);

/// Human-readable summary: group, Sigma_X, pic basis, Q, N, 2 rho_X, lambda_0, checks.
std::string describe(const WonderfulVariety& x);

/// Reads a variety descriptor (JSON). Re-derives N and 2 rho_X, flips pic
/// generators to the (w_i, gamma_i) > 0 orientation, and throws
/// ValidationError if the result does not validate.
WonderfulVariety load_variety(const nlohmann::json& doc);
WonderfulVariety load_variety_file(const std::string& path);
nlohmann::ordered_json variety_to_json(const WonderfulVariety& x);

}  // namespace wonderful
