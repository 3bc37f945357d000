#pragma once

#include <string>
#include <vector>

#include "circfrechet/frechet_lc.hpp"
#include "circfrechet/metric.hpp"

namespace circfr {

enum class AngleUnit { Radians, Degrees };

// Column layout of a paired-sample CSV. Response columns default by space:
// Euclidean takes every non-predictor column, CircleArc the single remaining
// radians column, Wasserstein the q1..qQ columns in index order.
struct DatasetSchema {
  std::string predictor_column = "angle";
  AngleUnit angle_unit = AngleUnit::Radians;
  SpaceKind space = SpaceKind::EuclideanReal;
  std::vector<std::string> response_columns;  // empty = infer from header
  char delimiter = ',';
};

// Rows are numbered with the header as row 1, so the first data row is row 2
// (matches the row numbers a spreadsheet shows).
PairedSample load_paired_dataset(const std::string& path, const DatasetSchema& schema);

// Predictor column only; same parsing and canonicalization rules.
CircularSample load_angle_dataset(const std::string& path, const DatasetSchema& schema);

// Writes header + one row per pair, all values at 17 significant digits so a
// reload reproduces the sample bit-for-bit (angles are written in radians).
void save_paired_dataset(const std::string& path, const PairedSample& sample,
                         const DatasetSchema& schema);

// 17-significant-digit rendering used for every numeric CSV cell.
std::string format_double(double v);

}  // namespace circfr
