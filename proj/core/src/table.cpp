#include "hurwitz/table.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_field(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(cells[i]);
  }
  out += '\n';
}

std::string tex_escape(const std::string& field) {
  std::string out;
  for (char c : field) {
    if (c == '_' || c == '%' || c == '&' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  append_csv_line(out, table.columns);
  for (const auto& row : table.rows) append_csv_line(out, row);
  return out;
}

Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && !field_started && field.empty()) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (in_quotes) throw std::invalid_argument("parse_csv: unterminated quote");
  if (field_started || !field.empty() || !record.empty()) end_record();

  if (records.empty()) throw std::invalid_argument("parse_csv: empty document");
  Table table;
  table.columns = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.columns.size())
      throw std::invalid_argument("parse_csv: row " + std::to_string(r) + " has " +
                                  std::to_string(records[r].size()) +
                                  " fields, expected " +
                                  std::to_string(table.columns.size()));
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string to_tex(const Table& table) {
  std::string out;
  const auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += " & ";
      out += tex_escape(cells[i]);
    }
    out += " \\\\\n";
  };
  append_row(table.columns);
  out += "\\hline\n";
  for (const auto& row : table.rows) append_row(row);
  return out;
}

}  // namespace hurwitz
