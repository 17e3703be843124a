// hopf-fusion: validate a Hopf algebra presentation, run the verification
// pipeline, or export fusion tables.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopf_fusion/builtins.hpp"
#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/pipeline.hpp"
#include "hopf_fusion/presentation.hpp"

namespace hf = hopf_fusion;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kInvalidInput = 2, kHypothesis = 3, kInternal = 4 };

struct Source {
  std::string input;
  std::string builtin;
  std::uint64_t seed = 1;

  std::string name() const { return builtin.empty() ? input : builtin; }

  hf::HopfAlgebra load() const {
    if (!builtin.empty()) {
      hf::BuiltinSpec spec = hf::parse_builtin_spec(builtin);
      return hf::make_builtin(spec.name, spec.p);
    }
    return hf::load_presentation(input);
  }
};

void add_source_options(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "presentation file (hopf-sc v1)");
  auto* b = cmd->add_option("--builtin", src.builtin, "builtin algebra, e.g. kS3@p=7");
  in->excludes(b);
  b->excludes(in);
  cmd->add_option("--seed", src.seed, "seed for randomized splitting")->default_val(1);
}

int require_source(const Source& src) {
  if (src.input.empty() && src.builtin.empty()) {
    std::cerr << "error: one of --input or --builtin is required\n";
    return kInvalidInput;
  }
  return kPass;
}

int cmd_validate(const Source& src) {
  hf::HopfAlgebra h = src.load();
  hf::ValidationReport v = hf::validate_hopf(h);
  std::cout << hf::render_validation(v, src.name());
  return v.all_passed() ? kPass : kFail;
}

int cmd_pipeline(const Source& src, const std::string& through) {
  hf::PipelineOptions opt;
  opt.through = hf::parse_stage(through);
  opt.seed = src.seed;
  opt.input_name = src.name();
  hf::PipelineResult r = hf::run_pipeline(src.load(), opt);
  std::cout << hf::render_report(r);
  return r.all_passed() ? kPass : kFail;
}

int cmd_export(const Source& src, const std::string& table) {
  hf::PipelineOptions opt;
  opt.through = table == "C" ? hf::Stage::Theorem : hf::Stage::Fusion;
  opt.seed = src.seed;
  opt.input_name = src.name();
  hf::PipelineResult r = hf::run_pipeline(src.load(), opt);
  const std::optional<hf::FusionTable>* t = table == "N"       ? &r.n_table
                                            : table == "L"     ? &r.l_table
                                            : table == "smash" ? &r.smash_table
                                                               : &r.c_table;
  if (!r.reached || *r.reached < opt.through || !*t) {
    std::cerr << "error: stage " << hf::to_string(opt.through) << " not reached\n" << hf::render_report(r);
    return kFail;
  }
  std::cout << hf::dump(**t);
  return kPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for semisimple Hopf algebras, smash products and fusion tables"};
  app.require_subcommand(1);

  Source src;
  std::string through = "qdims";
  std::string table;

  auto* validate = app.add_subcommand("validate", "check the Hopf axioms");
  add_source_options(validate, src);

  auto* pipeline = app.add_subcommand("pipeline", "run the verification stages and print the report");
  add_source_options(pipeline, src);
  pipeline->add_option("--through", through, "last stage to run")
      ->check(CLI::IsMember({"validate", "integrals", "blocks", "uv", "smash", "simples", "fusion", "theorem", "qdims"}))
      ->default_val("qdims");

  auto* exporter = app.add_subcommand("export", "dump a fusion table");
  add_source_options(exporter, src);
  exporter->add_option("--table", table, "table to dump")->required()->check(CLI::IsMember({"N", "L", "smash", "C"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalidInput;
  }

  if (int rc = require_source(src))
    return rc;
  try {
    if (validate->parsed())
      return cmd_validate(src);
    if (pipeline->parsed())
      return cmd_pipeline(src, through);
    return cmd_export(src, table);
  } catch (const hf::HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << '\n';
    return kHypothesis;
  } catch (const hf::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const hf::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
