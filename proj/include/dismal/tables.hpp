#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dismal/number.hpp"

namespace dismal {

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Unset sizes (0) fall back to each table's default.
struct TableOptions {
  Base base = kDecimal;
  int max_k = 0;
  int max_n = 0;
  int l = 0;
};

enum class Format { Plain, Csv, BFile };

/// Names accepted by make_table: pi, templates, d-ones, T, M, D, euler-phi,
/// d2-series, divisor-examples.
const std::vector<std::string>& table_names();

/// Throws ParseError for an unknown name.
Table make_table(std::string_view name, const TableOptions& options);

/// Plain output right-aligns columns; CSV writes a header row; BFile needs a
/// table of exactly two columns and writes "index value" lines.
std::string render(const Table& table, Format format);

/// Parses "plain", "csv" or "bfile".
Format parse_format(std::string_view name);

}  // namespace dismal
