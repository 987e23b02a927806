#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ff {

/// Addition and multiplication tables over `order` named symbols. Entries are
/// symbol indices, row-major.
struct OperationTables {
  std::size_t order = 0;
  std::vector<std::string> labels;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;

  std::uint32_t sum(std::size_t i, std::size_t j) const { return add[i * order + j]; }
  std::uint32_t product(std::size_t i, std::size_t j) const { return mul[i * order + j]; }

  friend bool operator==(const OperationTables&, const OperationTables&) = default;
};

/// Aligned grid for one operation; `op` is '+' or '*'.
std::string render_table_text(const OperationTables& t, char op);

/// `{"op": "+", "order": q, "elements": [...], "table": [[...]]}`
nlohmann::json table_to_json(const OperationTables& t, char op);

}  // namespace ff
