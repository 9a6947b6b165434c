#include "balfam/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"

#include "balfam/balancer.hpp"
#include "balfam/error.hpp"
#include "balfam/family.hpp"
#include "balfam/oracle.hpp"
#include "balfam/scan.hpp"

namespace balfam::cli {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;

// BALFAM_MAX_N may lower the n <= 64 cap (for CI); it can never raise it.
int effective_max_n() {
  int cap = kMaxGroundSetSize;
  if (const char* raw = std::getenv("BALFAM_MAX_N")) {
    try {
      const int value = std::stoi(raw);
      if (value >= 1 && value < cap) cap = value;
    } catch (...) {
      // unusable values leave the cap alone
    }
  }
  return cap;
}

void enforce_ground_set_cap(int n) {
  const int cap = effective_max_n();
  if (n > cap) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "n = " + std::to_string(n) +
                    " exceeds the configured cap of " + std::to_string(cap));
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

FamilyFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? FamilyFormat::Json : FamilyFormat::Text;
  }
  return FamilyFormat::Text;
}

SetFamily load_family(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  SetFamily family = parse_family(text, detect_format(text));
  enforce_ground_set_cap(family.n());
  return family;
}

struct FindCommand {
  std::string mode;
  std::string input = "-";
};

struct VerifyCommand {
  std::string family;
  std::string cert = "-";
};

struct BruteCommand {
  std::string mode;
  std::string input = "-";
  bool minimal = false;
};

struct ScanCommand {
  std::string kind;
  int n = 0;
  std::optional<int> k;
  unsigned threads = 1;
  bool no_timing = false;
  bool progress = false;
};

struct GenCommand {
  std::string kind;
  int n = 0;
  std::string format = "text";
};

int run_find(const FindCommand& cmd, std::istream& in, std::ostream& out) {
  const SetFamily family = load_family(cmd.input, in);
  BalanceCertificate cert;
  if (cmd.mode == "uniform") {
    cert = find_balanced_uniform(family);
  } else if (cmd.mode == "general") {
    cert = find_balanced_general(family);
  } else {
    cert = find_union_balanced(family);
  }
  out << certificate_to_json(cert) << '\n';
  return kExitSuccess;
}

int run_verify(const VerifyCommand& cmd, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (cmd.family == "-" && cmd.cert == "-") {
    throw Error(ErrorKind::MalformedInput,
                "--family and --cert cannot both read stdin");
  }
  const SetFamily family = load_family(cmd.family, in);
  const std::string cert_text = read_source(cmd.cert, in);
  const auto cert = certificate_from_json(cert_text);
  if (!cert) {
    err << "certificate does not match the documented JSON shape\n";
    out << "{\"valid\":false}\n";
    return kExitNotFound;
  }
  const bool valid = verify_certificate(family, *cert);
  out << (valid ? "{\"valid\":true}" : "{\"valid\":false}") << '\n';
  return valid ? kExitSuccess : kExitNotFound;
}

int run_brute(const BruteCommand& cmd, std::istream& in, std::ostream& out) {
  const SetFamily family = load_family(cmd.input, in);
  const CertificateMode mode = cmd.mode == "balanced" ? CertificateMode::Balanced
                                                      : CertificateMode::Union;
  const OracleResult result = brute_force_find(family, mode, cmd.minimal);
  out << oracle_result_to_json(result) << '\n';
  return result.found ? kExitSuccess : kExitNotFound;
}

int run_scan(const ScanCommand& cmd, std::ostream& out, std::ostream& err) {
  enforce_ground_set_cap(cmd.n);
  const auto kind = scan_kind_from_string(cmd.kind);
  if (!kind) {
    throw Error(ErrorKind::MalformedInput, "unknown scan kind '" + cmd.kind + "'");
  }
  ScanOptions options;
  options.threads = cmd.threads == 0 ? 1 : cmd.threads;
  if (cmd.progress) {
    options.progress = [&err](std::uint64_t checked) {
      err << "families checked: " << checked << '\n';
    };
  }
  const ScanReport report = *kind == ScanKind::Conjecture
                                ? scan_conjecture(cmd.n, options)
                                : scan_theorem(*kind, cmd.n, cmd.k, options);
  out << scan_report_to_json(report, !cmd.no_timing) << '\n';
  if (!report.counterexamples.empty()) {
    err << "warning: " << report.counterexamples.size()
        << " counterexample(s) recorded\n";
  }
  return report.counterexamples.empty() ? kExitSuccess : kExitNotFound;
}

int run_gen(const GenCommand& cmd, std::ostream& out) {
  enforce_ground_set_cap(cmd.n);
  const SetFamily family = cmd.kind == "uniform-sharp"
                               ? gen_uniform_sharp(cmd.n)
                               : gen_nonuniform_sharp(cmd.n);
  const FamilyFormat format =
      cmd.format == "json" ? FamilyFormat::Json : FamilyFormat::Text;
  out << format_family(family, format);
  if (format == FamilyFormat::Json) out << '\n';
  return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"balanced splittings of set families", "balfam"};
  app.require_subcommand(1);

  FindCommand find_cmd;
  auto* find = app.add_subcommand(
      "find", "find a balanced or union-balanced splitting of a family");
  find->add_option("--mode", find_cmd.mode, "finder to run")
      ->required()
      ->check(CLI::IsMember({"uniform", "general", "union"}));
  find->add_option("--input", find_cmd.input,
                   "family file, '-' for stdin (default)");

  VerifyCommand verify_cmd;
  auto* verify = app.add_subcommand(
      "verify", "check a certificate against a family");
  verify->add_option("--family", verify_cmd.family, "family file, '-' for stdin")
      ->required();
  verify->add_option("--cert", verify_cmd.cert,
                     "certificate JSON file, '-' for stdin (default)");

  BruteCommand brute_cmd;
  auto* brute = app.add_subcommand(
      "brute", "exhaustive search over all disjoint index-set pairs");
  brute->add_option("--mode", brute_cmd.mode, "equalities to require")
      ->required()
      ->check(CLI::IsMember({"balanced", "union"}));
  brute->add_option("--input", brute_cmd.input,
                    "family file, '-' for stdin (default)");
  brute->add_flag("--minimal", brute_cmd.minimal,
                  "minimize |I1|+|I2| instead of stopping at the first hit");

  ScanCommand scan_cmd;
  int scan_k = -1;
  auto* scan = app.add_subcommand(
      "scan", "exhaustively sweep families at a theorem or conjecture threshold");
  scan->add_option("--kind", scan_cmd.kind, "what to sweep")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "conjecture"}));
  scan->add_option("--n", scan_cmd.n, "ground set size")->required();
  scan->add_option("--k", scan_k, "uniformity (theorem3 only)");
  scan->add_option("--threads", scan_cmd.threads,
                   "process enumeration chunks concurrently");
  scan->add_flag("--no-timing", scan_cmd.no_timing,
                 "report elapsed_ms as 0 for byte-stable output");
  scan->add_flag("--progress", scan_cmd.progress,
                 "print a families-checked count to stderr per chunk");

  GenCommand gen_cmd;
  auto* gen = app.add_subcommand("gen", "emit a builtin witness family");
  gen->add_option("--kind", gen_cmd.kind, "which construction")
      ->required()
      ->check(CLI::IsMember({"uniform-sharp", "nonuniform-sharp"}));
  gen->add_option("--n", gen_cmd.n, "ground set size")->required();
  gen->add_option("--format", gen_cmd.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << app.help();
    return kExitUsage;
  }

  if (scan->parsed() && scan->count("--k") > 0) scan_cmd.k = scan_k;

  try {
    if (find->parsed()) return run_find(find_cmd, in, out);
    if (verify->parsed()) return run_verify(verify_cmd, in, out, err);
    if (brute->parsed()) return run_brute(brute_cmd, in, out);
    if (scan->parsed()) return run_scan(scan_cmd, out, err);
    if (gen->parsed()) return run_gen(gen_cmd, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace balfam::cli
