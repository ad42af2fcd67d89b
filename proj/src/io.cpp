#include "matnorm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

namespace matnorm {

namespace {

constexpr std::string_view kTraceSchema = "matnorm-trace/1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_cell(std::string_view cell) {
  const std::string_view body = trim(cell);
  if (body.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path.string(), "write failure");
}

Order parse_order(const std::string& s, const std::filesystem::path& path) {
  if (s == "column-first") return Order::ColumnFirst;
  if (s == "row-first") return Order::RowFirst;
  throw IoError(path.string(), "unknown order \"" + s + "\"");
}

StopReason parse_stop_reason(const std::string& s, const std::filesystem::path& path) {
  if (s == "tolerance") return StopReason::Tolerance;
  if (s == "max_iterations") return StopReason::MaxIterations;
  if (s == "zero_variance") return StopReason::ZeroVariance;
  if (s == "diverged") return StopReason::Diverged;
  throw IoError(path.string(), "unknown stop_reason \"" + s + "\"");
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::vector<double>(m.data().begin(), m.data().end());
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  return Matrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                j.at("data").get<std::vector<double>>());
}

void write_trace_csv(const Trace& trace, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "iteration,step_sq,log10_step_sq,sum_sq,max_abs_mean,max_std_dev,"
         "log10_step_ratio\n";
  const auto& recs = trace.records;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const IterationRecord& r = recs[k];
    out << r.iteration << ',' << format_double(r.step_sq) << ',';
    if (r.step_sq > 0.0) out << format_double(std::log10(r.step_sq));
    out << ',' << format_double(r.sum_sq) << ',' << format_double(r.max_abs_mean)
        << ',' << format_double(r.max_std_dev) << ',';
    // Per-iteration decay: log10 of the next step over this one.
    if (k + 1 < recs.size() && r.step_sq > 0.0 && recs[k + 1].step_sq > 0.0)
      out << format_double(std::log10(recs[k + 1].step_sq / r.step_sq));
    out << '\n';
  }
  finish_write(out, path);
}

void write_trace_json(const Trace& trace, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["schema"] = kTraceSchema;
  j["config"] = {{"order", to_string(trace.config.order)},
                 {"tolerance", trace.config.tolerance},
                 {"max_iterations", trace.config.max_iterations},
                 {"capture_iterates", trace.config.capture_iterates}};
  j["converged"] = trace.converged;
  j["stop_reason"] = to_string(trace.stop_reason);
  j["initial"] = matrix_to_json(trace.initial);
  j["final"] = matrix_to_json(trace.final);
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const IterationRecord& r : trace.records) {
    recs.push_back({{"iteration", r.iteration},
                    {"step_sq", r.step_sq},
                    {"sum_sq", r.sum_sq},
                    {"max_abs_mean", r.max_abs_mean},
                    {"max_std_dev", r.max_std_dev}});
  }
  j["records"] = std::move(recs);
  if (!trace.iterates.empty()) {
    nlohmann::ordered_json its = nlohmann::ordered_json::array();
    for (const Matrix& m : trace.iterates) its.push_back(matrix_to_json(m));
    j["iterates"] = std::move(its);
  }

  std::ofstream out = open_for_write(path);
  out << j.dump(2) << '\n';
  finish_write(out, path);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("failed to format double");
  return std::string(buf, ptr);
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open for reading");

  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    lines.push_back(split_line(line));
  }
  if (in.bad()) throw IoError(path.string(), "read failure");
  if (lines.empty()) throw EmptyFile(path.string());

  // A first line with any non-numeric cell is a header.
  std::size_t first_data = 0;
  for (const std::string& cell : lines[0]) {
    if (!parse_cell(cell)) {
      first_data = 1;
      break;
    }
  }
  if (first_data >= lines.size()) throw EmptyFile(path.string());

  const std::size_t width = lines[first_data].size();
  std::vector<double> flat;
  flat.reserve((lines.size() - first_data) * width);
  for (std::size_t r = first_data; r < lines.size(); ++r) {
    const std::size_t data_row = r - first_data;
    if (lines[r].size() != width)
      throw RaggedRows(path.string(), data_row, width, lines[r].size());
    for (std::size_t c = 0; c < width; ++c) {
      const std::optional<double> v = parse_cell(lines[r][c]);
      if (!v)
        throw NonNumericCell(path.string(), data_row, c,
                             std::string(trim(lines[r][c])));
      flat.push_back(*v);
    }
  }
  return Matrix(lines.size() - first_data, width, std::move(flat));
}

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  finish_write(out, path);
}

void write_trace(const Trace& trace, const std::filesystem::path& path,
                 TraceFormat format) {
  if (format == TraceFormat::Csv)
    write_trace_csv(trace, path);
  else
    write_trace_json(trace, path);
}

Trace read_trace_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string(), std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kTraceSchema)
    throw IoError(path.string(), "not a matnorm-trace/1 file");

  try {
    Trace trace;
    const nlohmann::json& jc = j.at("config");
    trace.config.order = parse_order(jc.at("order").get<std::string>(), path);
    trace.config.tolerance = jc.at("tolerance").get<double>();
    trace.config.max_iterations = jc.at("max_iterations").get<std::size_t>();
    trace.config.capture_iterates = jc.at("capture_iterates").get<bool>();
    trace.converged = j.at("converged").get<bool>();
    trace.stop_reason = parse_stop_reason(j.at("stop_reason").get<std::string>(), path);
    trace.initial = matrix_from_json(j.at("initial"));
    trace.final = matrix_from_json(j.at("final"));
    for (const nlohmann::json& jr : j.at("records")) {
      IterationRecord r;
      r.iteration = jr.at("iteration").get<std::size_t>();
      r.step_sq = jr.at("step_sq").get<double>();
      r.sum_sq = jr.at("sum_sq").get<double>();
      r.max_abs_mean = jr.at("max_abs_mean").get<double>();
      r.max_std_dev = jr.at("max_std_dev").get<double>();
      trace.records.push_back(r);
    }
    if (j.contains("iterates"))
      for (const nlohmann::json& jm : j.at("iterates"))
        trace.iterates.push_back(matrix_from_json(jm));
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string(), std::string("malformed trace: ") + e.what());
  }
}

void write_ring_csv(const RingResult& result, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "seed,iterations,c1,c2,c3,u1,u2,u3\n";
  for (const RingSample& s : result.samples) {
    const double norm = std::sqrt(s.column[0] * s.column[0] +
                                  s.column[1] * s.column[1] +
                                  s.column[2] * s.column[2]);
    out << s.source_seed << ',' << s.iterations;
    for (const double c : s.column) out << ',' << format_double(c);
    for (const double c : s.column) out << ',' << format_double(c / norm);
    out << '\n';
  }
  finish_write(out, path);
}

}  // namespace matnorm
