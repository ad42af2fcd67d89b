#pragma once

#include <filesystem>
#include <string>

#include "matnorm/drivers.hpp"
#include "matnorm/fixedpoint.hpp"

namespace matnorm {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

/// Reads a CSV matrix. Cells are comma-separated; blank lines are skipped; a
/// first line with any non-numeric cell is treated as a header and dropped.
/// Throws EmptyFile, RaggedRows, NonNumericCell, NonFiniteEntry, or IoError.
Matrix read_matrix_csv(const std::filesystem::path& path);

/// Writes a headerless CSV with round-trip-exact decimals.
void write_matrix_csv(const Matrix& m, const std::filesystem::path& path);

enum class TraceFormat { Csv, Json };

/// CSV: one row per iteration with derived log columns. JSON: complete trace
/// under schema "matnorm-trace/1", loadable by read_trace_json.
void write_trace(const Trace& trace, const std::filesystem::path& path,
                 TraceFormat format);

Trace read_trace_json(const std::filesystem::path& path);

/// One row per kept sample: source seed, iterations, the three column
/// entries, and the same entries scaled to unit length.
void write_ring_csv(const RingResult& result, const std::filesystem::path& path);

}  // namespace matnorm
