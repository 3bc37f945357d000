#include "circfrechet/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "circfrechet/circle.hpp"
#include "circfrechet/errors.hpp"

namespace circfr {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, delim)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != cell.size() || cell.empty()) {
    throw ParseError("non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                     ", column '" + column + "'");
  }
  return v;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // rows[i] is file row i + 2
};

Table read_table(const std::string& path, char delim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("'" + path + "' is empty (no header)");
  t.header = split(line, delim);
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line, delim);
    if (cells.size() != t.header.size()) {
      throw ParseError("row " + std::to_string(t.rows.size() + 2) + " has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::size_t column_index(const Table& t, const std::string& name) {
  const auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) throw ParseError("missing column '" + name + "'");
  return static_cast<std::size_t>(it - t.header.begin());
}

std::vector<std::string> infer_response_columns(const Table& t, const DatasetSchema& schema) {
  if (!schema.response_columns.empty()) return schema.response_columns;
  if (schema.space == SpaceKind::Wasserstein1D) {
    std::vector<std::string> cols;
    for (std::size_t q = 1;; ++q) {
      const std::string name = "q" + std::to_string(q);
      if (std::find(t.header.begin(), t.header.end(), name) == t.header.end()) break;
      cols.push_back(name);
    }
    if (cols.empty()) throw ParseError("missing column 'q1' (Wasserstein quantile columns)");
    return cols;
  }
  std::vector<std::string> cols;
  for (const auto& name : t.header) {
    if (name != schema.predictor_column) cols.push_back(name);
  }
  if (cols.empty()) throw ParseError("no response columns besides '" + schema.predictor_column + "'");
  if (schema.space == SpaceKind::CircleArc && cols.size() != 1) {
    throw ParseError("circle responses need exactly one column, found " +
                     std::to_string(cols.size()));
  }
  return cols;
}

double to_radians(double v, AngleUnit unit) {
  return unit == AngleUnit::Degrees ? v * kPi / 180.0 : v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CircularSample load_angle_dataset(const std::string& path, const DatasetSchema& schema) {
  const Table t = read_table(path, schema.delimiter);
  const std::size_t pc = column_index(t, schema.predictor_column);
  CircularSample s;
  s.angles.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double raw = parse_cell(t.rows[r][pc], r + 2, schema.predictor_column);
    s.angles.push_back(canonical_angle(to_radians(raw, schema.angle_unit)));
  }
  if (s.angles.empty()) throw EmptySampleError("'" + path + "' has no data rows");
  return s;
}

PairedSample load_paired_dataset(const std::string& path, const DatasetSchema& schema) {
  const Table t = read_table(path, schema.delimiter);
  const std::size_t pc = column_index(t, schema.predictor_column);
  const auto resp_cols = infer_response_columns(t, schema);
  std::vector<std::size_t> rc;
  for (const auto& name : resp_cols) rc.push_back(column_index(t, name));

  PairedSample out;
  out.predictors.angles.reserve(t.rows.size());
  out.responses.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::size_t row = r + 2;
    const double raw = parse_cell(t.rows[r][pc], row, schema.predictor_column);
    out.predictors.angles.push_back(canonical_angle(to_radians(raw, schema.angle_unit)));
    std::vector<double> vals;
    vals.reserve(rc.size());
    for (std::size_t c = 0; c < rc.size(); ++c) {
      vals.push_back(parse_cell(t.rows[r][rc[c]], row, resp_cols[c]));
    }
    switch (schema.space) {
      case SpaceKind::EuclideanReal:
        out.responses.push_back(ResponsePoint::euclidean(std::move(vals)));
        break;
      case SpaceKind::CircleArc:
        out.responses.push_back(ResponsePoint::circle_arc(vals[0]));
        break;
      case SpaceKind::Wasserstein1D:
        for (std::size_t c = 1; c < vals.size(); ++c) {
          if (vals[c] < vals[c - 1]) {
            throw ParseError("non-monotone quantiles, row " + std::to_string(row));
          }
        }
        out.responses.push_back(ResponsePoint::wasserstein(std::move(vals)));
        break;
    }
  }
  if (out.responses.empty()) throw EmptySampleError("'" + path + "' has no data rows");
  out.validate();
  return out;
}

void save_paired_dataset(const std::string& path, const PairedSample& sample,
                         const DatasetSchema& schema) {
  sample.validate();
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  const char d = schema.delimiter;

  std::vector<std::string> resp_cols = schema.response_columns;
  if (resp_cols.empty()) {
    const std::size_t width = sample.responses.front().values().size();
    for (std::size_t c = 1; c <= width; ++c) {
      switch (schema.space) {
        case SpaceKind::EuclideanReal: resp_cols.push_back("y" + std::to_string(c)); break;
        case SpaceKind::CircleArc: resp_cols.push_back("response_angle"); break;
        case SpaceKind::Wasserstein1D: resp_cols.push_back("q" + std::to_string(c)); break;
      }
    }
  }

  out << schema.predictor_column;
  for (const auto& name : resp_cols) out << d << name;
  out << '\n';
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out << format_double(sample.predictors.angles[i]);
    for (double v : sample.responses[i].values()) out << d << format_double(v);
    out << '\n';
  }
}

}  // namespace circfr
