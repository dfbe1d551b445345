#ifndef HURWITZ_TABLE_HPP
#define HURWITZ_TABLE_HPP

#include <string>
#include <vector>

namespace hurwitz {

// A rectangular document of string cells. All emitted numbers are formatted
// upstream (rationals as "p/q" in lowest terms), so emission here is purely
// structural and byte-deterministic.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

// Header line plus one line per row. Fields containing commas, quotes or
// newlines are double-quoted with embedded quotes doubled.
std::string to_csv(const Table& table);

// Inverse of to_csv. Throws std::invalid_argument on ragged or malformed
// input.
Table parse_csv(const std::string& text);

// Array of one object per row, keys in column order, all values strings.
std::string to_json(const Table& table);

// Tabular body only: header row, \hline, data rows. No preamble, so the
// output pastes directly into an existing tabular environment.
std::string to_tex(const Table& table);

}  // namespace hurwitz

#endif
