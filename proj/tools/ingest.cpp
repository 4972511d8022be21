#include "ingest.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "treeggm/errors.hpp"

namespace treeggm::cli {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_cell(const std::string& cell) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) return std::nullopt;
  while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
  if (*end != '\0') return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

SampleMatrix read_numeric_csv(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  std::size_t width = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_cells(line);
    std::vector<double> row;
    row.reserve(cells.size());
    std::size_t bad_cell = 0;  // 1-based column of the first non-numeric cell
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = parse_cell(cells[c]);
      if (!v) {
        bad_cell = c + 1;
        break;
      }
      row.push_back(*v);
    }
    if (first_content_line) {
      first_content_line = false;
      if (bad_cell == 1 && row.empty()) {
        // Entirely non-numeric first line: an optional header, skipped if the
        // remaining cells are non-numeric too.
        bool any_numeric = false;
        for (const auto& cell : cells) any_numeric |= parse_cell(cell).has_value();
        if (!any_numeric) continue;
      }
    }
    if (bad_cell != 0) {
      throw data_error(name + ": non-numeric cell at row " + std::to_string(lineno) +
                       ", column " + std::to_string(bad_cell));
    }
    if (width == 0) {
      width = row.size();
    } else if (row.size() != width) {
      throw data_error(name + ": inconsistent column count at row " + std::to_string(lineno));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw data_error(name + ": no data rows");
  if (width < 2) throw data_error(name + ": need at least 2 numeric columns");

  SampleMatrix out;
  out.values.resize(static_cast<int>(rows.size()), static_cast<int>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      out.values(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
  }
  return out;
}

SampleMatrix read_numeric_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open data file: " + path);
  return read_numeric_csv(in, path);
}

SampleMatrix select_dimension(const SampleMatrix& data, char dim) {
  int offset = 0;
  switch (dim) {
    case 'x': offset = 0; break;
    case 'y': offset = 1; break;
    case 'z': offset = 2; break;
    default: throw parameter_error("dims selector must be x, y, or z");
  }
  if (data.d() % 3 != 0) {
    throw data_error("dims selector requires a column count divisible by 3, got " +
                     std::to_string(data.d()));
  }
  const int joints = data.d() / 3;
  SampleMatrix out;
  out.values.resize(data.n(), joints);
  for (int j = 0; j < joints; ++j) out.values.col(j) = data.values.col(3 * j + offset);
  return out;
}

void standardize_columns(SampleMatrix& data) {
  const int n = data.n();
  for (int j = 0; j < data.d(); ++j) {
    const double mean = data.values.col(j).mean();
    const double var = data.values.col(j).squaredNorm() / n - mean * mean;
    if (!(var > 0.0)) {
      throw data_error("zero-variance column " + std::to_string(j + 1));
    }
    data.values.col(j) = (data.values.col(j).array() - mean) / std::sqrt(var);
  }
}

}  // namespace treeggm::cli
