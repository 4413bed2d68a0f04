// Command-line surface: base conversion, verification sweeps, operator
// matrix export, and residue-coefficient dumps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockdigits/fockdigits.hpp"
#include "fockdigits/verify.hpp"

namespace {

using namespace fockdigits;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;  // verification / numeric failure
constexpr int kExitUsage = 2;    // bad flags or out-of-cap requests

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NumericalDrift:
    case ErrorKind::GuardViolation:
    case ErrorKind::AllSummandsVanish:
    case ErrorKind::DimMismatch:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

struct GlobalOptions {
  bool json = false;
  std::string out_path;
  std::uint64_t seed = kSweepSeed;  // reserved, not yet consumed
  Tolerances tol = kTol;
};

void emit(const GlobalOptions& opts, const std::string& human,
          const Json& payload) {
  const std::string rendered = opts.json ? payload.dump(2) : human;
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) {
      throw Error(ErrorKind::OutOfRange,
                  "cannot open output file " + opts.out_path);
    }
    file << rendered << '\n';
  } else {
    std::cout << rendered << '\n';
  }
}

std::string digits_human(const DigitVector& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(d.digits()[i]);
  }
  return out + "]";
}

// --- floor ------------------------------------------------------------

struct FloorArgs {
  Natural n = 0;
  Natural k = 1;
  std::string method = "residues";
};

int run_floor(const GlobalOptions& opts, const FloorArgs& args) {
  Natural value = 0;
  double residual = 0.0;
  double imag_residual = 0.0;
  if (args.method == "division") {
    value = floor_eigenvalue(args.n, args.k, FloorRoute::Division);
  } else if (args.method == "residues") {
    const FloorValue v = floor_residues(args.n, args.k, opts.tol);
    value = v.value;
    residual = v.integer_distance;
    imag_residual = v.imag_residual;
  } else if (args.method == "series-composition") {
    const PureState state = number_action_via_series(args.k, args.n);
    const double amp = state.amplitude(args.n).real();
    value = static_cast<Natural>(std::llround(amp));
    residual = std::abs(amp - std::round(amp));
    if (residual >= opts.tol.integer_distance) {
      throw Error(ErrorKind::NumericalDrift,
                  "series composition off-integer by " + std::to_string(residual));
    }
  } else {
    std::cerr << "unknown method '" << args.method << "'\n";
    return kExitUsage;
  }
  Json payload{{"n", args.n},
               {"k", args.k},
               {"method", args.method},
               {"value", value},
               {"residual", residual},
               {"imag_residual", imag_residual}};
  emit(opts, std::to_string(value), payload);
  return kExitSuccess;
}

// --- digits -----------------------------------------------------------

struct DigitsArgs {
  Natural n = 0;
  Natural base = 10;
  std::string method = "all";
  std::string floor_route = "division";
};

int run_digits(const GlobalOptions& opts, const DigitsArgs& args) {
  const FloorRoute route = args.floor_route == "residues"
                               ? FloorRoute::Residues
                               : FloorRoute::Division;
  Json routes = Json::object();
  std::vector<DigitVector> computed;
  auto record = [&](const std::string& name, const DigitVector& d) {
    routes[name] = d.digits();
    computed.push_back(d);
  };
  if (args.method == "classical" || args.method == "all") {
    record("classical", digits_classical(args.n, args.base));
  }
  if (args.method == "spectral" || args.method == "all") {
    record("spectral", digits_spectral(args.n, args.base, route, opts.tol));
  }
  if (args.method == "quantum" || args.method == "all") {
    record("quantum", digits_quantum(args.n, args.base));
  }
  if (computed.empty()) {
    std::cerr << "unknown method '" << args.method << "'\n";
    return kExitUsage;
  }
  bool agree = true;
  for (const auto& d : computed) {
    agree = agree && d == computed.front() && decode_digits(d) == args.n;
  }
  Json payload{{"n", args.n},
               {"base", args.base},
               {"digits", computed.front().digits()},
               {"routes", routes},
               {"agree", agree}};
  std::string human = digits_human(computed.front());
  if (args.method == "all") {
    human += agree ? "  agree=true" : "  agree=false";
  }
  emit(opts, human, payload);
  return agree ? kExitSuccess : kExitFailure;
}

// --- matrix -----------------------------------------------------------

struct MatrixArgs {
  std::string op;
  Natural base = 2;
  std::size_t slots = 1;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> m;
  std::optional<Natural> k;
  std::string format = "json";
  std::string floor_route = "division";
};

int run_matrix(const GlobalOptions& opts, const MatrixArgs& args) {
  const RegisterSpec spec = RegisterSpec::finite(args.base, args.slots);
  const FloorRoute route = args.floor_route == "residues"
                               ? FloorRoute::Residues
                               : FloorRoute::Division;
  auto need = [](const auto& value, const char* flag) {
    if (!value) {
      throw Error(ErrorKind::OutOfRange,
                  std::string("operator requires ") + flag);
    }
    return *value;
  };
  std::optional<LinearOperator> op;
  if (args.op == "t") {
    op = t_operator(need(args.ell, "--ell"), spec);
  } else if (args.op == "tdag") {
    op = t_operator_adjoint(need(args.ell, "--ell"), spec);
  } else if (args.op == "T") {
    op = T_operator(need(args.m, "--m"), spec);
  } else if (args.op == "Tdag") {
    op = T_operator_adjoint(need(args.m, "--m"), spec);
  } else if (args.op == "Nk") {
    op = number_operator(need(args.k, "--k"), spec, route, opts.tol);
  } else if (args.op == "Dk") {
    op = remainder_operator(need(args.k, "--k"), spec, route, opts.tol);
  } else if (args.op == "digit") {
    op = digit_operator(args.base, need(args.ell, "--ell"), spec, route,
                        opts.tol);
  } else {
    std::cerr << "unknown operator '" << args.op << "'\n";
    return kExitUsage;
  }
  const DenseMatrix& matrix = op->materialize();
  if (args.format == "csv") {
    const std::string csv = to_csv(matrix, opts.tol.export_drop);
    if (!opts.out_path.empty()) {
      std::ofstream file(opts.out_path);
      file << csv;
    } else {
      std::cout << csv;
    }
    return kExitSuccess;
  }
  const Json payload = to_json(matrix, opts.tol.export_drop);
  emit(opts, payload.dump(2), payload);
  return kExitSuccess;
}

// --- verify -----------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<Natural> max_n;
  std::optional<Natural> max_k;
  std::vector<Natural> bases;
  std::vector<std::size_t> slots;
  std::size_t samples = 0;  // 0 = suite default
};

std::vector<std::pair<Natural, std::size_t>> shape_list(const VerifyArgs& args) {
  const std::vector<std::pair<Natural, std::size_t>> defaults = {
      {2, 3}, {2, 4}, {3, 3}, {5, 2}, {10, 2}};
  if (args.bases.empty() && args.slots.empty()) {
    return defaults;
  }
  std::vector<Natural> bases = args.bases;
  if (bases.empty()) {
    bases = {2, 3, 5, 10};
  }
  std::vector<std::size_t> slots = args.slots;
  if (slots.empty()) {
    slots = {2, 3};
  }
  std::vector<std::pair<Natural, std::size_t>> shapes;
  for (Natural b : bases) {
    for (std::size_t q : slots) {
      shapes.emplace_back(b, q);
    }
  }
  return shapes;
}

int run_verify(const GlobalOptions& opts, const VerifyArgs& args) {
  std::vector<VerificationReport> reports;
  const auto shapes = shape_list(args);
  const bool all = args.suite == "all";
  if (all || args.suite == "floor") {
    reports.push_back(verify_floor(args.max_n.value_or(5000),
                                   args.max_k.value_or(64), opts.tol));
    reports.push_back(verify_remainder(args.max_n.value_or(5000),
                                       args.max_k.value_or(64), opts.tol));
  }
  if (all || args.suite == "multiboson") {
    reports.push_back(verify_multiboson(args.max_k.value_or(8),
                                        std::min<Natural>(args.max_n.value_or(30), 40),
                                        opts.tol));
  }
  if (all || args.suite == "slots") {
    Natural min_b = 2;
    Natural max_b = 16;
    if (!args.bases.empty()) {
      min_b = *std::min_element(args.bases.begin(), args.bases.end());
      max_b = *std::max_element(args.bases.begin(), args.bases.end());
    }
    reports.push_back(verify_slots(min_b, max_b, opts.tol));
  }
  if (all || args.suite == "translation") {
    reports.push_back(verify_translation(shapes));
    reports.push_back(
        verify_shifts(shapes, args.samples ? args.samples : 200, kSweepSeed));
    reports.push_back(
        verify_infinite(args.samples ? args.samples : 500, kSweepSeed));
  }
  if (all || args.suite == "unitarity") {
    reports.push_back(verify_unitarity(shapes));
  }
  if (all || args.suite == "digits") {
    Natural min_b = 2;
    Natural max_b = 10;
    if (!args.bases.empty()) {
      min_b = *std::min_element(args.bases.begin(), args.bases.end());
      max_b = *std::max_element(args.bases.begin(), args.bases.end());
    }
    reports.push_back(
        verify_digits(args.max_n.value_or(10000), min_b, max_b, opts.tol));
  }
  if (reports.empty()) {
    std::cerr << "unknown suite '" << args.suite << "'\n";
    return kExitUsage;
  }

  bool ok = true;
  std::string human;
  Json payload = Json::array();
  for (const auto& report : reports) {
    ok = ok && report.passed();
    human += report.suite + ": " + (report.passed() ? "PASS" : "FAIL") +
             " (cases=" + std::to_string(report.cases) +
             " failures=" + std::to_string(report.failure_count) +
             " max_residual=" + std::to_string(report.max_residual) +
             " wall=" + std::to_string(report.wall_time_s) + "s)\n";
    for (std::size_t i = 0; i < report.failures.size() && i < 5; ++i) {
      const auto& f = report.failures[i];
      human += "  " + f.input + ": expected " + f.expected + ", got " +
               f.actual + "\n";
    }
    payload.push_back(report.to_json());
  }
  if (!human.empty()) {
    human.pop_back();
  }
  emit(opts, human, payload);
  return ok ? kExitSuccess : kExitFailure;
}

// --- coefficients -------------------------------------------------------

int run_coefficients(const GlobalOptions& opts, Natural k) {
  const Json payload = to_json(ResidueCoefficients::lookup(k));
  emit(opts, payload.dump(2), payload);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-register digit operators: floors, translators, and "
               "base conversion with cross-checked routes"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "emit JSON instead of human output");
  app.add_option("--out", opts.out_path, "write output to a file");
  app.add_option("--seed", opts.seed, "sweep RNG seed (reserved)");
  app.add_option("--tol-integer", opts.tol.integer_distance,
                 "override the integer-distance tolerance");
  app.add_option("--tol-imag", opts.tol.imag_residual,
                 "override the imaginary-residual tolerance");

  FloorArgs floor_args;
  CLI::App* floor_cmd =
      app.add_subcommand("floor", "evaluate floor(n/k) by a chosen route");
  floor_cmd->add_option("--n", floor_args.n, "numerator")->required();
  floor_cmd->add_option("--k", floor_args.k, "divisor")->required();
  floor_cmd->add_option("--method", floor_args.method,
                        "residues | division | series-composition");

  DigitsArgs digits_args;
  CLI::App* digits_cmd =
      app.add_subcommand("digits", "base-b digits of n, one or all routes");
  digits_cmd->add_option("--n", digits_args.n, "number")->required();
  digits_cmd->add_option("--base", digits_args.base, "target base")->required();
  digits_cmd->add_option("--method", digits_args.method,
                         "classical | spectral | quantum | all");
  digits_cmd->add_option("--floor-route", digits_args.floor_route,
                         "division | residues (spectral route)");

  MatrixArgs matrix_args;
  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "export an operator matrix");
  matrix_cmd->add_option("--op", matrix_args.op,
                         "t | tdag | T | Tdag | Nk | Dk | digit")
      ->required();
  matrix_cmd->add_option("--base", matrix_args.base, "register base")->required();
  matrix_cmd->add_option("--slots", matrix_args.slots, "register slots")
      ->required();
  matrix_cmd->add_option("--ell", matrix_args.ell, "slot index for t/tdag/digit");
  matrix_cmd->add_option("--m", matrix_args.m, "slot index for T/Tdag");
  matrix_cmd->add_option("--k", matrix_args.k, "order for Nk/Dk");
  matrix_cmd->add_option("--format", matrix_args.format, "json | csv");
  matrix_cmd->add_option("--floor-route", matrix_args.floor_route,
                         "division | residues (diagonal operators)");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a named verification sweep");
  verify_cmd->add_option("--suite", verify_args.suite,
                         "floor | multiboson | slots | translation | "
                         "unitarity | digits | all")
      ->required();
  verify_cmd->add_option("--max-n", verify_args.max_n, "sweep upper bound for n");
  verify_cmd->add_option("--max-k", verify_args.max_k, "sweep upper bound for k");
  verify_cmd->add_option("--bases", verify_args.bases, "bases to sweep");
  verify_cmd->add_option("--slots", verify_args.slots, "slot counts to sweep");
  verify_cmd->add_option("--samples", verify_args.samples,
                         "sample count for randomized sweeps");

  Natural coefficients_k = 0;
  CLI::App* coefficients_cmd =
      app.add_subcommand("coefficients", "dump residue coefficients for k");
  coefficients_cmd->add_option("--k", coefficients_k, "root order (>= 2)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (floor_cmd->parsed()) {
      return run_floor(opts, floor_args);
    }
    if (digits_cmd->parsed()) {
      return run_digits(opts, digits_args);
    }
    if (matrix_cmd->parsed()) {
      return run_matrix(opts, matrix_args);
    }
    if (verify_cmd->parsed()) {
      return run_verify(opts, verify_args);
    }
    if (coefficients_cmd->parsed()) {
      return run_coefficients(opts, coefficients_k);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
