#include "ff/tables.hpp"

#include <algorithm>
#include <sstream>

namespace ff {

std::string render_table_text(const OperationTables& t, char op) {
  std::size_t width = 1;
  for (const auto& l : t.labels) width = std::max(width, l.size());
  const auto cell = [&](const std::string& s) {
    return " " + s + std::string(width - s.size(), ' ') + " |";
  };
  const auto& entries = op == '+' ? t.add : t.mul;

  std::ostringstream os;
  std::string header = cell(std::string(1, op == '+' ? '+' : '*'));
  for (const auto& l : t.labels) header += cell(l);
  os << header << '\n';
  const std::string rule(header.size(), '-');
  os << rule << '\n';
  for (std::size_t i = 0; i < t.order; ++i) {
    std::string row = cell(t.labels[i]);
    for (std::size_t j = 0; j < t.order; ++j) row += cell(t.labels[entries[i * t.order + j]]);
    os << row << '\n';
  }
  return os.str();
}

nlohmann::json table_to_json(const OperationTables& t, char op) {
  const auto& entries = op == '+' ? t.add : t.mul;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < t.order; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < t.order; ++j) row.push_back(t.labels[entries[i * t.order + j]]);
    table.push_back(std::move(row));
  }
  return {{"op", std::string(1, op)},
          {"order", t.order},
          {"elements", t.labels},
          {"table", std::move(table)}};
}

}  // namespace ff
