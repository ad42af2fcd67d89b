#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "matnorm/diagnostics.hpp"
#include "matnorm/drivers.hpp"
#include "matnorm/fixedpoint.hpp"
#include "matnorm/gaussian.hpp"
#include "matnorm/io.hpp"

namespace {

using namespace matnorm;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitInputError = 3;
constexpr int kExitIoError = 4;

// Generation specs on the command line look like "5x5,2,4,42":
// rows x cols, mean, variance, seed.
GenSpec parse_gen_spec(const std::string& text) {
  const auto fail = [&]() -> GenSpec {
    throw Error("bad --gen spec \"" + text + "\": expected RxC,mean,variance,seed");
  };

  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 4) return fail();

  const std::size_t x = parts[0].find('x');
  if (x == std::string::npos) return fail();

  GenSpec spec;
  const auto read = [&](const std::string& s, auto& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };
  const std::string rows_text = parts[0].substr(0, x);
  const std::string cols_text = parts[0].substr(x + 1);
  if (!read(rows_text, spec.rows) || !read(cols_text, spec.cols)) return fail();
  if (!read(parts[1], spec.mean) || !read(parts[2], spec.variance)) return fail();
  if (!read(parts[3], spec.seed)) return fail();
  if (spec.rows == 0 || spec.cols == 0) return fail();
  return spec;
}

struct Options {
  std::string in_path;
  std::string gen_text;
  std::string out_path;
  std::string trace_path;
  std::string trace_dir;
  std::string order_text = "column-first";
  double tolerance = 1e-8;
  std::size_t max_iterations = 1000;
  bool capture_iterates = false;
  double certify_tol = 1e-4;
  std::size_t ring_count = 1000;
  std::uint64_t ring_seed = 1;
  double ring_tol = 1e-12;
  unsigned jobs = 1;
};

Order parse_order_flag(const std::string& text) {
  if (text == "column-first" || text == "col-first") return Order::ColumnFirst;
  if (text == "row-first") return Order::RowFirst;
  throw Error("bad --order \"" + text + "\": expected column-first or row-first");
}

Matrix load_input(const Options& opt) {
  const bool has_in = !opt.in_path.empty();
  const bool has_gen = !opt.gen_text.empty();
  if (has_in == has_gen)
    throw Error("provide exactly one of --in or --gen");
  if (has_in) return read_matrix_csv(opt.in_path);
  return generate_gaussian(parse_gen_spec(opt.gen_text));
}

TraceFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? TraceFormat::Json : TraceFormat::Csv;
}

std::string rate_text(const Trace& trace) {
  const std::size_t window = std::min<std::size_t>(10, trace.records.size());
  if (window < 2) return "na";
  try {
    const ConvergenceReport rep = estimate_rate(trace, window);
    return format_double(*rep.rate_estimate);
  } catch (const Error&) {
    return "na";
  }
}

void print_run_summary(const Trace& trace) {
  std::cout << "iterations=" << trace.records.size()
            << " stop_reason=" << to_string(trace.stop_reason)
            << " final_step_sq="
            << (trace.records.empty() ? std::string("na")
                                      : format_double(trace.records.back().step_sq))
            << " sum_sq="
            << (trace.records.empty() ? std::string("na")
                                      : format_double(trace.records.back().sum_sq))
            << " rate_estimate=" << rate_text(trace) << '\n';
}

int exit_for(const Trace& trace) {
  switch (trace.stop_reason) {
    case StopReason::Tolerance:
      return kExitOk;
    case StopReason::MaxIterations:
    case StopReason::Diverged:
      return kExitNotConverged;
    case StopReason::ZeroVariance:
      return kExitInputError;
  }
  return kExitInputError;
}

std::string phrase(const Trace& trace) {
  const std::string n = std::to_string(trace.records.size());
  switch (trace.stop_reason) {
    case StopReason::Tolerance:
      return "converged in " + n + " iterations";
    case StopReason::MaxIterations:
      return "no convergence in " + n + " iterations";
    case StopReason::ZeroVariance:
      return "zero variance after " + n + " iterations";
    case StopReason::Diverged:
      return "diverged after " + n + " iterations";
  }
  return "unknown";
}

int cmd_run(const Options& opt, bool simultaneous) {
  NormConfig config;
  config.order = parse_order_flag(opt.order_text);
  config.tolerance = opt.tolerance;
  config.max_iterations = opt.max_iterations;
  config.capture_iterates = opt.capture_iterates;

  const Matrix input = load_input(opt);
  const Trace trace =
      simultaneous ? run_simultaneous(input, config) : run_successive(input, config);

  if (!opt.trace_path.empty())
    write_trace(trace, opt.trace_path, format_for(opt.trace_path));
  if (!opt.out_path.empty()) write_matrix_csv(trace.final, opt.out_path);

  print_run_summary(trace);
  return exit_for(trace);
}

int cmd_compare(const Options& opt) {
  NormConfig config;
  config.order = parse_order_flag(opt.order_text);
  config.tolerance = opt.tolerance;
  config.max_iterations = opt.max_iterations;

  const Matrix input = load_input(opt);
  const Trace successive = run_successive(input, config);
  const Trace simultaneous = run_simultaneous(input, config);

  const std::filesystem::path dir(opt.trace_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
  write_trace(successive, dir / "successive.csv", TraceFormat::Csv);
  write_trace(simultaneous, dir / "simultaneous.csv", TraceFormat::Csv);

  std::cout << "successive: " << phrase(successive)
            << "; simultaneous: " << phrase(simultaneous) << '\n';
  return exit_for(successive);
}

int cmd_ring(const Options& opt) {
  if (opt.ring_count == 0) throw Error("--count must be at least 1");
  NormConfig config;
  config.tolerance = opt.ring_tol;
  config.max_iterations = opt.max_iterations;

  const RingResult result =
      sample_ring(opt.ring_count, opt.ring_seed, config, opt.jobs);
  write_ring_csv(result, opt.out_path);

  double max_abs_sum = 0.0;
  double max_sq_dev = 0.0;
  for (const RingSample& s : result.samples) {
    const double sum = s.column[0] + s.column[1] + s.column[2];
    const double sum_sq = s.column[0] * s.column[0] + s.column[1] * s.column[1] +
                          s.column[2] * s.column[2];
    max_abs_sum = std::max(max_abs_sum, std::abs(sum));
    max_sq_dev = std::max(max_sq_dev, std::abs(sum_sq - 3.0));
  }
  std::cout << "samples=" << result.samples.size()
            << " excluded=" << result.excluded << " max_abs_col_sum="
            << (result.samples.empty() ? std::string("na") : format_double(max_abs_sum))
            << " max_sq_dev="
            << (result.samples.empty() ? std::string("na") : format_double(max_sq_dev))
            << '\n';
  return kExitOk;
}

int cmd_generate(const Options& opt) {
  const GenSpec spec = parse_gen_spec(opt.gen_text);
  const Matrix m = generate_gaussian(spec);
  write_matrix_csv(m, opt.out_path);
  std::cout << "rows=" << spec.rows << " cols=" << spec.cols << " seed=" << spec.seed
            << " out=" << opt.out_path << '\n';
  return kExitOk;
}

int cmd_certify(const Options& opt) {
  const Matrix m = load_input(opt);
  const CertifyReport rep = certify_doubly_standardized(m, opt.certify_tol);
  std::cout << "ok=" << (rep.ok ? "true" : "false")
            << " max_abs_mean=" << format_double(rep.max_abs_mean)
            << " max_std_dev=" << format_double(rep.max_std_dev)
            << " tol=" << format_double(opt.certify_tol) << '\n';
  return rep.ok ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Successive standardization of rectangular matrices"};
  app.require_subcommand(1);

  Options opt;

  const auto add_input_flags = [&](CLI::App* sub) {
    sub->add_option("--in", opt.in_path, "Input matrix CSV");
    sub->add_option("--gen", opt.gen_text,
                    "Generate the input: RxC,mean,variance,seed (e.g. 5x5,2,4,42)");
  };
  const auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tolerance,
                    "Stop once the squared Frobenius step falls below this")
        ->capture_default_str();
    sub->add_option("--max-iter", opt.max_iterations, "Iteration budget")
        ->capture_default_str();
  };

  CLI::App* normalize = app.add_subcommand(
      "normalize", "Alternate row/column standardization until it settles");
  add_input_flags(normalize);
  add_run_flags(normalize);
  normalize->add_option("--order", opt.order_text,
                        "Polish columns or rows first: column-first | row-first")
      ->capture_default_str();
  normalize->add_option("--trace", opt.trace_path,
                        "Write per-iteration diagnostics (.json for full trace, else CSV)");
  normalize->add_option("--out", opt.out_path, "Write the final matrix CSV here");
  normalize->add_flag("--capture-iterates", opt.capture_iterates,
                      "Keep every iterate in a JSON trace");

  CLI::App* simultaneous = app.add_subcommand(
      "simultaneous", "One-shot row+column update applied repeatedly (diverges)");
  add_input_flags(simultaneous);
  add_run_flags(simultaneous);
  simultaneous->add_option("--trace", opt.trace_path,
                           "Write per-iteration diagnostics (.json for full trace, else CSV)");
  simultaneous->add_option("--out", opt.out_path, "Write the final matrix CSV here");
  simultaneous->add_flag("--capture-iterates", opt.capture_iterates,
                         "Keep every iterate in a JSON trace");

  CLI::App* compare = app.add_subcommand(
      "compare", "Run both schemes on the same input and report the contrast");
  add_input_flags(compare);
  add_run_flags(compare);
  compare->add_option("--order", opt.order_text,
                      "Axis order for the successive run")
      ->capture_default_str();
  compare->add_option("--trace-dir", opt.trace_dir,
                      "Directory for successive.csv and simultaneous.csv")
      ->required();

  CLI::App* ring = app.add_subcommand(
      "ring", "Sample converged 3x3 limits from seeded Gaussian starts");
  ring->add_option("--count", opt.ring_count, "Number of seeded starts")
      ->capture_default_str();
  ring->add_option("--seed", opt.ring_seed, "Base seed; sample i uses seed + i")
      ->capture_default_str();
  ring->add_option("--tol", opt.ring_tol, "Convergence tolerance per run")
      ->capture_default_str();
  ring->add_option("--max-iter", opt.max_iterations, "Iteration budget per run")
      ->capture_default_str();
  ring->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
  ring->add_option("--out", opt.out_path, "Output CSV of first columns")->required();

  CLI::App* generate = app.add_subcommand(
      "generate", "Write a seeded Gaussian matrix as CSV");
  generate->add_option("--gen", opt.gen_text,
                       "RxC,mean,variance,seed (e.g. 5x5,2,4,42)")
      ->required();
  generate->add_option("--out", opt.out_path, "Output CSV path")->required();

  CLI::App* certify = app.add_subcommand(
      "certify", "Check row/column means and stds against 0 and 1");
  add_input_flags(certify);
  certify->add_option("--tol", opt.certify_tol, "Certification tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (app.got_subcommand(normalize)) return cmd_run(opt, false);
    if (app.got_subcommand(simultaneous)) return cmd_run(opt, true);
    if (app.got_subcommand(compare)) return cmd_compare(opt);
    if (app.got_subcommand(ring)) return cmd_ring(opt);
    if (app.got_subcommand(generate)) return cmd_generate(opt);
    if (app.got_subcommand(certify)) return cmd_certify(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
