// finframe command-line front end: analyze, generate, dilate, project, verify.
//
// Exit codes: 0 success (verify: all checks passed), 1 mathematical failure
// (construction precondition or failed verification), 2 input/usage error.

#include <CLI11.hpp>

#include "finframe/dilation.hpp"
#include "finframe/frames.hpp"
#include "finframe/gen.hpp"
#include "finframe/io.hpp"
#include "finframe/verify.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace finframe;

// Entrywise tolerance for the projection rows of dilation files; files store
// 17 significant digits, so round-trips of our own constructions stay exact.
constexpr double kInterchangeProjectionTol = 1e-12;

void emit(const std::optional<std::string>& out_path, const SystemFile& file) {
  if (out_path) {
    write_system_file(*out_path, file);
  } else {
    std::cout << format_system_file(file);
  }
}

struct ToleranceFlags {
  double rank_rel = Tolerances{}.rank_rel;
  double eq_rel = Tolerances{}.eq_rel;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol-rank", rank_rel, "relative rank threshold")
        ->capture_default_str();
    cmd->add_option("--tol-eq", eq_rel, "relative equality threshold")
        ->capture_default_str();
  }

  Tolerances make() const { return Tolerances{rank_rel, eq_rel}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite frame analysis and dilation toolkit"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "classify a vector system");
  std::string analyze_input;
  analyze->add_option("input", analyze_input, "system file (JSON)")->required();
  ToleranceFlags analyze_tol;
  analyze_tol.attach(analyze);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "emit a seeded test system");
  std::string kind_name;
  gen_cmd->add_option("--kind", kind_name,
                      "random|random-tight|harmonic|mercedes|rank-deficient|"
                      "riesz-basis|with-zeros")
      ->required();
  std::int64_t gen_dim = 2;
  std::int64_t gen_count = 3;
  std::uint64_t gen_seed = 0;
  std::int64_t gen_rank = 0;
  double gen_a = 0.0;
  double gen_b = 0.0;
  gen_cmd->add_option("--dim", gen_dim, "ambient dimension")->capture_default_str();
  gen_cmd->add_option("--count", gen_count, "number of vectors")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  auto* rank_opt = gen_cmd->add_option("--rank", gen_rank, "target rank (rank-deficient)");
  auto* a_opt = gen_cmd->add_option("--a", gen_a, "lower bound target");
  auto* b_opt = gen_cmd->add_option("--b", gen_b, "upper bound target");
  std::optional<std::string> gen_out;
  gen_cmd->add_option("-o,--output", gen_out, "output path (default: stdout)");

  // dilate
  auto* dilate = app.add_subcommand("dilate", "construct an ambient dilation");
  std::string dilate_input;
  std::string mode_name;
  dilate->add_option("input", dilate_input, "system file (JSON)")->required();
  dilate->add_option("--mode", mode_name, "tight|frame|complete-bessel|bessel")
      ->required();
  std::optional<std::string> dilate_out;
  dilate->add_option("-o,--output", dilate_out, "output path (default: stdout)");
  ToleranceFlags dilate_tol;
  dilate_tol.attach(dilate);

  // project
  auto* project_cmd = app.add_subcommand("project", "recover the original system");
  std::string project_input;
  project_cmd->add_option("input", project_input, "dilation file (JSON)")->required();
  std::optional<std::string> project_out;
  project_cmd->add_option("-o,--output", project_out, "output path (default: stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a (system, dilation) pair");
  std::string verify_original;
  std::string verify_dilation_path;
  verify_cmd->add_option("original", verify_original, "original system file")->required();
  verify_cmd->add_option("dilation", verify_dilation_path, "dilation file")->required();
  ToleranceFlags verify_tol;
  verify_tol.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const SystemFile file = read_system_file(analyze_input);
      std::cout << analysis_to_json(classify(file.system, analyze_tol.make()));
      return 0;
    }

    if (gen_cmd->parsed()) {
      const auto kind = kind_from_string(kind_name);
      if (!kind) throw ConfigError("unknown kind: " + kind_name);
      GenSpec spec;
      spec.kind = *kind;
      spec.dim = gen_dim;
      spec.count = gen_count;
      spec.seed = gen_seed;
      if (rank_opt->count() > 0) spec.rank = gen_rank;
      if (a_opt->count() > 0) spec.scale_a = gen_a;
      if (b_opt->count() > 0) spec.scale_b = gen_b;
      emit(gen_out, SystemFile{generate(spec), std::nullopt});
      return 0;
    }

    if (dilate->parsed()) {
      const auto mode = mode_from_string(mode_name);
      if (!mode) throw ConfigError("unknown mode: " + mode_name);
      const SystemFile file = read_system_file(dilate_input);
      const Tolerances tol = dilate_tol.make();
      Dilation dil = [&] {
        switch (*mode) {
          case DilationMode::Tight: return dilate_tight(file.system, tol);
          case DilationMode::Frame: return dilate_frame(file.system, tol);
          case DilationMode::CompleteBessel:
            return dilate_complete_bessel(file.system, tol);
          case DilationMode::Bessel: return dilate_bessel(file.system, tol);
        }
        throw ConfigError("unknown mode");
      }();
      emit(dilate_out, from_dilation(dil));
      return 0;
    }

    if (project_cmd->parsed()) {
      const SystemFile file = read_system_file(project_input);
      const Dilation dil = to_dilation(file);
      emit(project_out, SystemFile{project(dil), std::nullopt});
      return 0;
    }

    if (verify_cmd->parsed()) {
      const SystemFile original = read_system_file(verify_original);
      const SystemFile dilation_file = read_system_file(verify_dilation_path);
      const Dilation dil = to_dilation(dilation_file);
      const VerificationReport report = verify_dilation(
          original.system, dil, verify_tol.make(), kInterchangeProjectionTol);
      std::cout << report_to_json(report);
      return report.overall ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
