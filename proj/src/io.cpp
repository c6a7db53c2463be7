#include "polygb/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polygb {

Polyomino parse_ascii(const std::string& text, const std::string& name) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.front().empty()) rows.erase(rows.begin());
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) fail(Errc::ParseError, "no rows");

  std::vector<Cell> cells;
  int h = static_cast<int>(rows.size());
  for (int r = 0; r < h; ++r) {
    const std::string& row = rows[r];
    if (row.empty()) fail(Errc::ParseError, "blank line inside the body");
    int y = h - 1 - r;  // top row first
    for (int x = 0; x < static_cast<int>(row.size()); ++x) {
      if (row[x] == '#')
        cells.push_back({x, y});
      else if (row[x] != '.')
        fail(Errc::ParseError, std::string("unexpected character '") + row[x] + "'");
    }
  }
  return Polyomino::validate(std::move(cells), name);
}

std::string to_ascii(const Polyomino& p) {
  std::string out;
  for (int y = p.height() - 1; y >= 0; --y) {
    for (int x = 0; x < p.width(); ++x) out += p.has_cell(x, y) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Polyomino parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    fail(Errc::ParseError, "expected an object with a \"cells\" array");
  std::vector<Cell> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      fail(Errc::ParseError, "cells must be [x, y] integer pairs");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  std::string name = j.value("name", std::string());
  return Polyomino::validate(std::move(cells), name);
}

std::string to_json(const Polyomino& p) {
  nlohmann::ordered_json j;
  if (!p.name().empty()) j["name"] = p.name();
  auto& cells = j["cells"];
  cells = nlohmann::ordered_json::array();
  for (const Cell& c : p.cells()) cells.push_back({c.x, c.y});
  return j.dump();
}

Polyomino parse_any(const std::string& text, const std::string& name) {
  auto first = std::find_if(text.begin(), text.end(),
                            [](unsigned char ch) { return !std::isspace(ch); });
  if (first != text.end() && *first == '{') return parse_json(text);
  return parse_ascii(text, name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << content;
}

Polyomino load_polyomino(const std::string& path) {
  return parse_any(read_file(path), std::filesystem::path(path).stem().string());
}

}  // namespace polygb
