#pragma once

#include <string>

#include "polygb/geometry.hpp"

namespace polygb {

// ASCII picture: one row per line, top row first, '#' for a cell and '.'
// for empty. Blank lines inside the body are a ParseError; surrounding
// blank lines are ignored. Rows may be ragged on the right.
Polyomino parse_ascii(const std::string& text, const std::string& name = "");
std::string to_ascii(const Polyomino& p);

// JSON object {"cells": [[x, y], ...], "name": "..."}; name is optional.
Polyomino parse_json(const std::string& text);
std::string to_json(const Polyomino& p);

// Dispatch on the first non-space character ('{' selects JSON).
Polyomino parse_any(const std::string& text, const std::string& name = "");

// Reads a whole file and parses it; the fallback name is the file stem.
Polyomino load_polyomino(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polygb
