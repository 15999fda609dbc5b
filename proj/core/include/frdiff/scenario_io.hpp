#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frdiff/solver.hpp"

// Scenario-file parsing and deterministic table emission for the CLI.
//
// Scenario files are flat key-value text with [model], [grid], [initial]
// and [source] sections; initial data is either a named preset (delta,
// gaussian:sigma, box:w) or an inline sample table. Tables are emitted with
// fixed columns x,value,err_estimate,method and 17-significant-digit
// scientific numbers so identical inputs produce byte-identical output.

namespace frdiff::cli {

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

// Throws domain_error with "line:column: message" on malformed input.
solver::Scenario parse_scenario(std::istream& in);
solver::Scenario parse_scenario_file(const std::string& path);

struct TableRow {
  double x = 0.0;
  double value = 0.0;
  double err = 0.0;
  std::string method;
};

struct Table {
  std::vector<std::pair<std::string, std::string>> header;  // metadata
  std::vector<TableRow> rows;
};

// 17 significant digits, scientific, locale-independent.
std::string format_number(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

Table field_table(const solver::SolutionField& field);

}  // namespace frdiff::cli
