#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gsgp/core.hpp"

// GSGP text format, version 1.
//
//   gsgp 1
//   m 2 g 1
//   elements 0 a
//   gammas g0
//   table g0
//   0 0
//   0 0
//
// `#` starts a comment. The `elements` and `gammas` lines are optional on
// input (defaults e0.., g0..); each `table <tok>` block lists the rows of
// one operator, row index = left operand, entry = element token of a*b.
// Serialization is canonical: names always written, single spaces, one
// row per line, no comments.

namespace gsgp {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + message),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct GsgpDocument {
  int version = 1;
  RawTable table;
  std::vector<std::string> comments;  // full-line comments, in order of appearance
};

GsgpDocument parse(const std::string& text);

std::string serialize(const GsgpDocument& doc);
std::string serialize(const GammaSemigroup& M);

GsgpDocument document_for(const GammaSemigroup& M);

GsgpDocument load_file(const std::string& path);
void save_file(const std::string& path, const GsgpDocument& doc);

}  // namespace gsgp
