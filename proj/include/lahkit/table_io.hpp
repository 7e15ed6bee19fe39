#pragma once

#include "lahkit/numbers.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>

namespace lahkit {

// One row per line, entries k = 0..n separated by tabs.
inline void write_tsv(std::ostream& os, const TriangleTable& t) {
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << '\t';
      os << row[k];
    }
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const TriangleTable& t) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(t.kind.name());
  j["s"] = t.level.value();
  if (t.kind.family() == Family::lr_lah) j["r"] = t.kind.r();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline void write_json(std::ostream& os, const TriangleTable& t) { os << to_json(t).dump() << '\n'; }

// OEIS b-file: the triangle read by rows as "index value" lines.
inline void write_bfile(std::ostream& os, const TriangleTable& t, std::size_t offset) {
  std::size_t index = offset;
  for (const auto& row : t.rows) {
    for (const auto& v : row) os << index++ << ' ' << v << '\n';
  }
}

// Right-aligned grid with a header row of k and a leading column of n.
inline void write_pretty(std::ostream& os, const TriangleTable& t) {
  const std::size_t nmax = t.rows.empty() ? 0 : t.rows.size() - 1;
  std::size_t width = std::max<std::size_t>(3, std::to_string(nmax).size());
  for (const auto& row : t.rows) {
    for (const auto& v : row) width = std::max(width, v.str().size());
  }
  auto cell = [&](const std::string& s) {
    os << std::string(width - std::min(width, s.size()) + 1, ' ') << s;
  };
  cell("n\\k");
  for (std::size_t k = 0; k <= nmax; ++k) cell(std::to_string(k));
  os << '\n';
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    cell(std::to_string(n));
    for (std::size_t k = 0; k <= nmax; ++k) cell(t.at(n, k).str());
    os << '\n';
  }
}

}  // namespace lahkit
