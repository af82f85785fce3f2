#include "wildchar_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wildchar/io.hpp"
#include "wildchar_cli/verify.hpp"

namespace wildchar::cli {

namespace {

struct Config {
  std::string backend = "exact";
  std::uint64_t seed = 42;
  int count = 100;
  std::vector<std::string> suites;
  std::string word;
  std::size_t steps = 10;
  double tol = 1e-9;
  std::string in;
  std::string out;
};

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("WILDCHAR_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

std::string read_input(const std::string& in) {
  if (in.empty()) throw Error(ErrorCode::usage, "--in is required");
  if (in == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(in, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot read " + in);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  const std::filesystem::path path = output_path(cfg.out);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  file << text;
  if (!file) throw Error(ErrorCode::io_error, "failed writing " + path.string());
}

/// Document backend wins; the flag is the fallback for documents without one.
json load_document(const Config& cfg) {
  json j = parse_json(read_input(cfg.in));
  if (j.is_object() && !j.contains("backend")) j["backend"] = cfg.backend;
  return j;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage:
    case ErrorCode::parse_error:
    case ErrorCode::malformed_word:
    case ErrorCode::unknown_suite:
      return kUsage;
    default:
      return kFailure;
  }
}

int print_error(std::ostream& out, std::string_view code, const std::string& message, int exit) {
  json j;
  j["error"] = std::string(code);
  j["message"] = message;
  out << dump_json(j);
  return exit;
}

// --- subcommands ------------------------------------------------------------

int cmd_verify(const Config& cfg, std::ostream& out) {
  SuiteOptions options;
  options.backend = parse_backend(cfg.backend);
  options.seed = cfg.seed;
  options.count = cfg.count;
  options.tol = cfg.tol;
  const VerifyReport report = run_verify(cfg.suites, options);
  write_output(cfg, dump_json(report.to_json(options)), out);
  return report.passed() ? kSuccess : kFailure;
}

template <class F>
json traces_of(const json& j) {
  switch (detect_payload(j)) {
    case PayloadKind::tame_triple: return to_json(tame_traces(tame_triple_from_json<F>(j)));
    case PayloadKind::wild_rep: return to_json(wild_traces(wild_rep_from_json<F>(j)));
    default: break;
  }
  throw Error(ErrorCode::parse_error, "traces expects a tame triple (M1..M3) or a wild rep (M0)");
}

int cmd_traces(const Config& cfg, std::ostream& out) {
  const json j = load_document(cfg);
  const json result =
      json_backend(j) == Backend::exact ? traces_of<GaussRational>(j) : traces_of<Complexd>(j);
  write_output(cfg, dump_json(result), out);
  return kSuccess;
}

template <class F>
json reconstruct_of(const json& j, double tol) {
  switch (detect_payload(j)) {
    case PayloadKind::tame_point: {
      const TamePoint<F> p = tame_point_from_json<F>(j);
      if (j.contains("alpha1")) {
        return to_json(tame_reconstruct(p, scalar_from_json<F>(j.at("alpha1")), tol));
      }
      if constexpr (std::is_same_v<F, Complexd>) {
        return to_json(tame_reconstruct_float(p, tol));
      } else {
        throw Error(ErrorCode::usage,
                    "exact tame reconstruction needs \"alpha1\", a root of X^2 - a1 X + 1");
      }
    }
    case PayloadKind::wild_point: return to_json(wild_reconstruct(wild_point_from_json<F>(j), tol));
    default: break;
  }
  throw Error(ErrorCode::parse_error, "reconstruct expects a tame or wild point");
}

int cmd_reconstruct(const Config& cfg, std::ostream& out) {
  const json j = load_document(cfg);
  const json result = json_backend(j) == Backend::exact ? reconstruct_of<GaussRational>(j, cfg.tol)
                                                        : reconstruct_of<Complexd>(j, cfg.tol);
  write_output(cfg, dump_json(result), out);
  return kSuccess;
}

template <class F>
int orbit_of(const Config& cfg, const Point<F>& start, std::ostream& out) {
  if (cfg.word.empty()) throw Error(ErrorCode::usage, "--word is required");
  const BraidWord word = BraidWord::parse(cfg.word);
  IterateOptions options;
  options.tol = cfg.tol;
  const OrbitRecord<F> record = iterate(start, word, cfg.steps, options);

  if (!cfg.out.empty()) {
    const bool csv = std::filesystem::path(cfg.out).extension() == ".csv";
    write_output(cfg, csv ? orbit_to_csv(record) : dump_json(to_json(record)), out);
  }
  json summary;
  summary["word"] = word.to_string();
  summary["steps"] = cfg.steps;
  summary["period"] = record.period ? json(*record.period) : json(nullptr);
  summary["residual_drift"] = residual_drift(record);
  summary["final"] = to_json(record.visited.back());
  out << dump_json(summary);
  return kSuccess;
}

int cmd_orbit(const Config& cfg, std::ostream& out) {
  const AnyPoint start = point_from_json(load_document(cfg));
  return std::visit([&](const auto& p) { return orbit_of(cfg, p, out); }, start);
}

int cmd_chart_swap(const Config& cfg, std::ostream& out) {
  const json j = load_document(cfg);
  if (detect_payload(j) != PayloadKind::wild_point) {
    throw Error(ErrorCode::parse_error, "chart-swap expects a wild point");
  }
  const json result = json_backend(j) == Backend::exact
                          ? to_json(chart_swap(wild_point_from_json<GaussRational>(j)))
                          : to_json(chart_swap(wild_point_from_json<Complexd>(j)));
  write_output(cfg, dump_json(result), out);
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fricke trace coordinates and braid dynamics on tame and wild SL2 character "
               "varieties"};
  app.name("wildchar");
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--backend", cfg.backend, "Scalar backend: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", cfg.tol, "Float-backend tolerance");
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run property suites");
  common(verify);
  verify->add_option("--suite", cfg.suites, "Suites to run (default: all)")->delimiter(',');
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  verify->add_option("--count", cfg.count, "Samples per suite")->check(CLI::NonNegativeNumber);

  CLI::App* traces = app.add_subcommand("traces", "Trace coordinates of a triple or wild rep");
  common(traces);
  traces->add_option("--in", cfg.in, "Input JSON ('-' for stdin)")->required();

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "Matrices from trace coordinates");
  common(reconstruct);
  reconstruct->add_option("--in", cfg.in, "Input JSON ('-' for stdin)")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "Iterate a braid word on a point");
  common(orbit);
  orbit->add_option("--in", cfg.in, "Start point JSON ('-' for stdin)")->required();
  orbit->add_option("--word", cfg.word, "Word, e.g. \"h1 h2^-1\" or \"full full\"")->required();
  orbit->add_option("--steps", cfg.steps, "Number of word applications");

  CLI::App* swap = app.add_subcommand("chart-swap", "Change of chart lambda -> 1/lambda");
  common(swap);
  swap->add_option("--in", cfg.in, "Wild point JSON ('-' for stdin)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return print_error(out, "usage", e.what(), kUsage);
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (traces->parsed()) return cmd_traces(cfg, out);
    if (reconstruct->parsed()) return cmd_reconstruct(cfg, out);
    if (orbit->parsed()) return cmd_orbit(cfg, out);
    if (swap->parsed()) return cmd_chart_swap(cfg, out);
  } catch (const Error& e) {
    return print_error(out, e.code_name(), e.what(), exit_code_for(e.code()));
  } catch (const json::exception& e) {
    return print_error(out, "parse_error", e.what(), kUsage);
  }
  return print_error(out, "usage", "no subcommand", kUsage);
}

}  // namespace wildchar::cli
