// Command-line front end; talks to the core exclusively through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matwalk/matwalk.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIdentityViolated = 1;
constexpr int kExitHypothesisMissing = 2;
constexpr int kExitInputError = 3;

struct CommonArgs {
  std::string file;
  bool plain = false;
  std::vector<std::string> instances;
  int random_count = 0;
  uint64_t seed = 0;
  bool oracle = false;
  bool require_hypothesis = false;
  std::string json_out;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json instance_json_from_text(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::runtime_error("instance syntax is 'm1,m2,...;i1,i2,...'");
  }
  const auto parse_list = [](const std::string& part) {
    std::vector<int> out;
    std::istringstream is(part);
    std::string token;
    while (std::getline(is, token, ',')) out.push_back(std::stoi(token));
    return out;
  };
  return json{{"exponents", parse_list(text.substr(0, semi))},
              {"indices", parse_list(text.substr(semi + 1))}};
}

std::string build_options(const CommonArgs& args) {
  json opts;
  json instances = json::array();
  for (const std::string& text : args.instances) {
    instances.push_back(instance_json_from_text(text));
  }
  opts["instances"] = std::move(instances);
  opts["random"] = args.random_count;
  opts["seed"] = args.seed;
  opts["oracle"] = args.oracle;
  return opts.dump();
}

struct MatrixHandle {
  mw_matrix* m = nullptr;
  ~MatrixHandle() { mw_matrix_free(m); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { mw_string_free(s); }
};

int load_matrix(const CommonArgs& args, MatrixHandle& handle) {
  std::string text;
  try {
    text = read_input(args.file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const mw_status st = args.plain ? mw_matrix_from_plain(text.c_str(), &handle.m)
                                  : mw_matrix_from_json(text.c_str(), &handle.m);
  if (st != MW_OK) {
    std::cerr << "error: " << mw_last_error() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

void write_report(const json& report, const std::string& json_out) {
  if (json_out.empty()) return;
  std::ofstream out(json_out);
  out << report.dump(2) << "\n";
}

std::string abbreviate(const std::string& value) {
  if (value.size() <= 120) return value;
  // FNV-1a digest of the full value.
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : value) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << value.substr(0, 60) << "... <" << value.size() << " chars, fnv1a64:" << std::hex << h
     << ">";
  return os.str();
}

void print_verifications(const json& report) {
  for (const auto& v : report.value("verifications", json::array())) {
    std::cout << "  instance m=" << v["exponents"].dump() << " i=" << v["indices"].dump()
              << (v["equal"].get<bool>() ? "  EQUAL" : "  DIFFER") << "\n";
    std::cout << "    lhs = " << abbreviate(v["lhs"].get<std::string>()) << "\n";
    std::cout << "    rhs = " << abbreviate(v["rhs"].get<std::string>()) << "\n";
  }
}

void print_hypotheses(const json& report) {
  if (!report.contains("hypotheses")) return;
  const auto& hyp = report["hypotheses"];
  std::cout << "hypotheses:\n";
  std::cout << "  acyclic:     " << hyp["acyclic"]["status"].get<std::string>() << "\n";
  if (hyp["acyclic"].contains("witness_cycle")) {
    std::cout << "    witness cycle: " << hyp["acyclic"]["witness_cycle"].dump() << "\n";
  }
  std::cout << "  triangle:    " << hyp["triangle"]["status"].get<std::string>() << "\n";
  if (hyp["triangle"].contains("violating_pair")) {
    std::cout << "    violating pair: " << hyp["triangle"]["violating_pair"].dump() << "\n";
  }
  if (hyp["triangle"].contains("zero_entry")) {
    std::cout << "    zero entry: " << hyp["triangle"]["zero_entry"].dump() << "\n";
  }
  std::cout << "  certificate: " << hyp["certificate"]["status"].get<std::string>() << "\n";
  if (hyp["certificate"].contains("cycles")) {
    std::cout << "    cycles: " << hyp["certificate"]["cycles"].dump() << "\n";
  }
}

int finish_verification_command(const CommonArgs& args, const char* report_text) {
  const json report = json::parse(report_text);
  print_hypotheses(report);
  print_verifications(report);
  if (report.contains("oracle") && report["oracle"].value("checked", false)) {
    std::cout << "oracle: " << report["oracle"]["agreements"] << " agreements, "
              << report["oracle"]["mismatches"] << " mismatches\n";
  }
  write_report(report, args.json_out);
  if (!report.value("all_equal", true)) {
    std::cout << "RESULT: identity violated\n";
    return kExitIdentityViolated;
  }
  if (args.require_hypothesis && !report.value("any_hypothesis_holds", false)) {
    std::cout << "RESULT: no hypothesis satisfied\n";
    return kExitHypothesisMissing;
  }
  if (report.contains("oracle") && report["oracle"].value("checked", false) &&
      report["oracle"]["mismatches"].get<int>() != 0) {
    std::cout << "RESULT: oracle mismatch\n";
    return kExitIdentityViolated;
  }
  std::cout << "RESULT: ok\n";
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_instances) {
  cmd->add_option("file", args.file, "matrix file (JSON; '-' for stdin)")->required();
  cmd->add_flag("--plain", args.plain, "input is the plain n-lines format");
  if (with_instances) {
    cmd->add_option("--instance", args.instances, "instance 'm1,m2,...;i1,i2,...' (repeatable)");
    cmd->add_option("--random", args.random_count, "number of random instances");
    cmd->add_option("--seed", args.seed, "64-bit seed for random instances");
  }
  cmd->add_option("--json", args.json_out, "write the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for cyclic matrix-power identities"};
  app.require_subcommand(1);

  CommonArgs check_args;
  CLI::App* check = app.add_subcommand("check", "run hypothesis checkers and verify instances");
  add_common(check, check_args, true);
  check->add_flag("--oracle", check_args.oracle, "cross-check powers against walk sums");
  check->add_flag("--require-hypothesis", check_args.require_hypothesis,
                  "exit 2 when no hypothesis holds");

  CommonArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "verify identity instances only");
  add_common(verify, verify_args, true);

  CommonArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "compare matrix powers with walk sums");
  add_common(oracle, oracle_args, false);

  CommonArgs cert_args;
  CLI::App* cert = app.add_subcommand("certificate", "search for a cycle-basis certificate");
  add_common(cert, cert_args, false);

  std::string gen_family = "acyclic", gen_domain = "integer", gen_json_out;
  int gen_order = 4;
  uint64_t gen_seed = 0;
  double gen_density = 0.5;
  CLI::App* generate = app.add_subcommand("generate", "emit a matrix from a named family");
  generate->add_option("--family", gen_family,
                       "tridiagonal|family-one|family-two|rank-one|acyclic|symmetric")
      ->required();
  generate->add_option("--order", gen_order, "matrix order n")->required();
  generate->add_option("--seed", gen_seed, "64-bit generator seed");
  generate->add_option("--density", gen_density, "edge density (acyclic family)");
  generate->add_option("--domain", gen_domain, "integer|rational|symbolic");
  generate->add_option("--json", gen_json_out, "write the matrix to this file");

  std::string fuzz_class = "acyclic", fuzz_json_out;
  int fuzz_count = 100;
  uint64_t fuzz_seed = 0;
  CLI::App* fuzz = app.add_subcommand("fuzz", "run randomized conformance classes");
  fuzz->add_option("--family", fuzz_class, "acyclic|triangle|certificate|adversarial");
  fuzz->add_option("--random", fuzz_count, "number of generated cases");
  fuzz->add_option("--seed", fuzz_seed, "64-bit seed");
  fuzz->add_option("--json", fuzz_json_out, "write the JSON report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed() || verify->parsed()) {
      CommonArgs& args = check->parsed() ? check_args : verify_args;
      MatrixHandle m;
      if (int rc = load_matrix(args, m); rc != kExitOk) return rc;
      StringHandle report;
      const std::string options = build_options(args);
      const mw_status st = check->parsed() ? mw_run_check(m.m, options.c_str(), &report.s)
                                           : mw_run_verify(m.m, options.c_str(), &report.s);
      if (st != MW_OK) {
        std::cerr << "error: " << mw_last_error() << "\n";
        return kExitInputError;
      }
      return finish_verification_command(args, report.s);
    }

    if (oracle->parsed()) {
      MatrixHandle m;
      if (int rc = load_matrix(oracle_args, m); rc != kExitOk) return rc;
      StringHandle report;
      if (mw_run_oracle(m.m, "", &report.s) != MW_OK) {
        std::cerr << "error: " << mw_last_error() << "\n";
        return kExitInputError;
      }
      const json doc = json::parse(report.s);
      write_report(doc, oracle_args.json_out);
      if (!doc["oracle"].value("checked", false)) {
        std::cout << "oracle: skipped (" << doc["oracle"].value("reason", std::string{}) << ")\n";
        return kExitOk;
      }
      std::cout << "oracle: " << doc["oracle"]["agreements"] << " agreements, "
                << doc["oracle"]["mismatches"] << " mismatches\n";
      return doc["oracle"]["mismatches"].get<int>() == 0 ? kExitOk : kExitIdentityViolated;
    }

    if (cert->parsed()) {
      MatrixHandle m;
      if (int rc = load_matrix(cert_args, m); rc != kExitOk) return rc;
      StringHandle report;
      if (mw_run_certificate(m.m, &report.s) != MW_OK) {
        std::cerr << "error: " << mw_last_error() << "\n";
        return kExitInputError;
      }
      const json doc = json::parse(report.s);
      write_report(doc, cert_args.json_out);
      if (doc["found"].get<bool>()) {
        std::cout << "certificate found:\n";
        for (const auto& cycle : doc["cycles"]) {
          std::cout << "  cycle";
          for (const auto& v : cycle) std::cout << " " << v;
          std::cout << "\n";
        }
        return kExitOk;
      }
      if (!doc["pattern_symmetric"].get<bool>()) {
        std::cout << "no certificate: zero pattern is asymmetric\n";
      } else {
        std::cout << "no certificate: failing cycle " << doc["failing_cycle"].dump() << "\n";
      }
      return kExitHypothesisMissing;
    }

    if (generate->parsed()) {
      mw_matrix* m = nullptr;
      if (mw_matrix_generate(gen_family.c_str(), gen_order, gen_seed, gen_density,
                             gen_domain.c_str(), &m) != MW_OK) {
        std::cerr << "error: " << mw_last_error() << "\n";
        return kExitInputError;
      }
      MatrixHandle handle;
      handle.m = m;
      StringHandle text;
      mw_matrix_to_json(m, &text.s);
      if (gen_json_out.empty()) {
        std::cout << text.s << "\n";
      } else {
        std::ofstream out(gen_json_out);
        out << text.s << "\n";
      }
      return kExitOk;
    }

    if (fuzz->parsed()) {
      json opts{{"class", fuzz_class}, {"count", fuzz_count}, {"seed", fuzz_seed}};
      StringHandle report;
      if (mw_run_fuzz(opts.dump().c_str(), &report.s) != MW_OK) {
        std::cerr << "error: " << mw_last_error() << "\n";
        return kExitInputError;
      }
      const json doc = json::parse(report.s);
      write_report(doc, fuzz_json_out);
      std::cout << "fuzz class " << fuzz_class << ": " << doc["violations"]
                << " identity violations in " << fuzz_count << " cases\n";
      if (doc["status"].get<std::string>() == "theorem-violation") {
        std::cout << "RESULT: theorem violation (implementation bug)\n";
        return kExitIdentityViolated;
      }
      std::cout << "RESULT: ok\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
