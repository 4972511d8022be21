#ifndef TREEGGM_TOOLS_INGEST_HPP
#define TREEGGM_TOOLS_INGEST_HPP

#include <istream>
#include <optional>
#include <string>

#include "treeggm/sampling.hpp"

namespace treeggm::cli {

/// Reads a strictly numeric CSV into a sample matrix. A first line whose
/// cells are all non-numeric is treated as a header and skipped; any other
/// non-numeric cell is an ingestion error reported with its row and column.
SampleMatrix read_numeric_csv(std::istream& in, const std::string& name);
SampleMatrix read_numeric_csv_file(const std::string& path);

/// Maps a 3-coordinates-per-joint file to one coordinate: keeps columns
/// j*3 + offset with offset 0/1/2 for x/y/z. Requires the column count to be
/// a multiple of 3.
SampleMatrix select_dimension(const SampleMatrix& data, char dim);

/// In-place column standardization: subtract the sample mean, divide by the
/// (population) sample standard deviation. Zero-variance columns are an
/// ingestion error.
void standardize_columns(SampleMatrix& data);

}  // namespace treeggm::cli

#endif
