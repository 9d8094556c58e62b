#include <ucz/errors.hpp>
#include <ucz/suites.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr std::uint64_t kDefaultSeed = 42;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be an unsigned 64-bit integer, got '" + text + "'");
  }
}

std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("UCZ_SEED"); env && *env) return parse_seed(env, "UCZ_SEED");
  return kDefaultSeed;
}

ucz::LieAlgebra build_algebra(const std::string& descriptor) {
  try {
    return ucz::LieAlgebra::build(descriptor);
  } catch (const ucz::UnsupportedError& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> resolve_suites(const std::string& selector) {
  auto suites = ucz::expand_suite(selector);
  if (!suites) {
    std::string valid;
    for (const auto& n : ucz::suite_names()) valid += n + ", ";
    throw UsageError("unknown suite '" + selector + "'; valid suites: " + valid + "all");
  }
  return *suites;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the universal centralizer constructions"};
  app.require_subcommand(1);

  std::string algebra, suite = "all", format = "text", output;
  std::optional<std::string> seed_flag;
  int samples = 100;

  auto* describe = app.add_subcommand("describe", "Dimensions, principal triple, slice degrees, orbit table");
  describe->add_option("algebra", algebra, "Algebra descriptor such as A2 or G2")->required();
  describe->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("algebra", algebra, "Algebra descriptor such as A2 or G2")->required();
    cmd->add_option("--suite", suite, "kostant, moment, wonderful, logsympl, reduction or all");
    cmd->add_option("--seed", seed_flag, "Random seed (falls back to UCZ_SEED, then 42)");
    cmd->add_option("--samples", samples, "Samples per sampled check")->check(CLI::Range(1, 100000));
  };
  auto* verify = app.add_subcommand("verify", "Run property suites and print the report");
  add_run_options(verify);
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* report = app.add_subcommand("report", "Run property suites and write the JSON report");
  add_run_options(report);
  report->add_option("-o,--output", output, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const ucz::LieAlgebra L = build_algebra(algebra);
    if (describe->parsed()) {
      if (format == "json")
        std::cout << ucz::describe_json(L).dump(2) << "\n";
      else
        std::cout << ucz::describe_text(L);
      return kExitPass;
    }

    const auto suites = resolve_suites(suite);
    const std::uint64_t seed = resolve_seed(seed_flag);
    const ucz::Report r = ucz::run_verify(L, suites, seed, samples);
    const int status = r.all_passed() ? kExitPass : kExitFail;
    if (verify->parsed()) {
      if (format == "json")
        std::cout << ucz::report_json(r).dump(2) << "\n";
      else
        std::cout << ucz::report_text(r);
      return status;
    }

    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << output << "' for writing\n";
      return kExitIo;
    }
    out << ucz::report_json(r).dump(2) << "\n";
    out.close();
    if (!out) {
      std::cerr << "error: failed writing '" << output << "'\n";
      return kExitIo;
    }
    std::cout << r.algebra << ": " << (status == kExitPass ? "all checks passed" : "some checks FAILED")
              << ", report written to " << output << "\n";
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
