#include "lukas/table1.hpp"

#include <array>
#include <sstream>
#include <string>

#include "table1_data.hpp"

namespace lukas {

namespace {

using Row = std::array<std::uint64_t, 10>;

std::array<Row, kRelationCount> load() {
  std::array<Row, kRelationCount> rows{};
  std::array<bool, kRelationCount> seen{};
  std::istringstream in{std::string(kTable1Csv)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    const Relation r = parse_relation(cell);
    Row& row = rows[index_of(r)];
    for (auto& value : row) {
      if (!std::getline(fields, cell, ',')) {
        throw Error(Errc::InvariantViolation, "short Table 1 row for " + std::string(relation_name(r)));
      }
      value = std::stoull(cell);
    }
    seen[index_of(r)] = true;
  }
  for (std::size_t i = 0; i < kRelationCount; ++i) {
    if (!seen[i]) {
      throw Error(Errc::InvariantViolation,
                  "Table 1 fixture lacks " + std::string(relation_name(kAllRelations[i])));
    }
  }
  return rows;
}

}  // namespace

std::optional<std::uint64_t> table1_value(Relation r, int n) {
  static const auto rows = load();
  if (n < 1 || n > 10) return std::nullopt;
  return rows[index_of(r)][static_cast<std::size_t>(n - 1)];
}

}  // namespace lukas
