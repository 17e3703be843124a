#include "hopf_fusion/pipeline.hpp"

#include <numeric>
#include <sstream>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/rep.hpp"
#include "hopf_fusion/semisimple.hpp"
#include "hopf_fusion/smash.hpp"

namespace hopf_fusion {

namespace {

constexpr std::pair<Stage, const char*> kStageNames[] = {
    {Stage::Validate, "validate"}, {Stage::Integrals, "integrals"}, {Stage::Blocks, "blocks"},
    {Stage::UV, "uv"},             {Stage::Smash, "smash"},         {Stage::Simples, "simples"},
    {Stage::Fusion, "fusion"},     {Stage::Theorem, "theorem"},     {Stage::QDims, "qdims"},
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts)
    out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string elements(const std::vector<FieldElement>& xs) {
  std::vector<std::string> parts;
  for (auto x : xs)
    parts.push_back(x.to_string());
  return join(parts);
}

template <class T>
std::string numbers(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (auto x : xs)
    parts.push_back(std::to_string(x));
  return join(parts);
}

std::uint64_t field_order(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      return q;
  }
  return q;
}

// One attempt at a fixed working field; extension signals escape.
class Run {
public:
  Run(const HopfAlgebra& h, const PipelineOptions& opt, PipelineResult& out) : h_(h), opt_(opt), out_(out) {}

  void execute() {
    const int n = 2 * h_.dim();
    add("dim", std::to_string(h_.dim()));
    add("n", std::to_string(n));

    if (!stage(Stage::Integrals, [&] {
          integrals_ = compute_integrals(h_, IntegralConvention::Right);
          add("eps_lambda", integrals_.counit.to_string());
        }))
      return;

    if (!stage(Stage::Blocks, [&] {
          blocks_ = block_decomposition(h_, opt_.seed);
          u_ = compute_u(h_, integrals_);
          if (!integral_convention_consistent(h_, integrals_, blocks_, u_)) {
            integrals_ = compute_integrals(h_, IntegralConvention::Left);
            u_ = compute_u(h_, integrals_);
          }
          add("integral_convention", to_string(integrals_.convention));
          add("lambda", to_string(integrals_.right));
          add("Lambda", to_string(integrals_.left));
          add("blocks", std::to_string(blocks_.size()));
          add("block_dims", numbers(blocks_.d));
          add("duals", numbers(blocks_.dual));
          out_.checks.append(check_block_invariants(h_, integrals_, blocks_));
        }))
      return;

    if (!stage(Stage::UV, [&] {
          add("u", to_string(u_));
          out_.checks.append(check_u_properties(h_, integrals_, blocks_, u_));
          v_ = compute_v(h_, integrals_, blocks_, u_);
          add("branch", v_.branch_policy);
          add("s_lambda", v_.s_lambda.to_string());
          add("s", elements(v_.s));
          add("v", to_string(v_.v));
          out_.checks.append(check_v_properties(h_, v_, n));
        }))
      return;

    std::optional<SmashAlgebra> sm;
    IntegralPair closed;
    Vector us;
    if (!stage(Stage::Smash, [&] {
          sm.emplace(build_smash(h_));
          out_.checks.append(check_smash(*sm));
          closed = smash_integral(*sm, integrals_);
          out_.checks.append(check_smash_integral(*sm, integrals_, closed));
          us = smash_u(*sm, closed);
          out_.checks.append(check_smash_u(*sm, u_, us));
          add("smash_dim", std::to_string(sm->dim()));
        }))
      return;

    FieldElement psi = primitive_root_of_unity(*h_.field(), std::uint64_t(n));
    std::vector<SmashCharacter> chars;
    if (!stage(Stage::Simples, [&] {
          add("psi", psi.to_string());
          chars = enumerate_simples(*sm, blocks_, v_, psi);
          add("simples", std::to_string(chars.size()));
          out_.checks.append(verify_module_actions(*sm, blocks_, v_, psi, chars, opt_.seed));
          out_.checks.append(verify_completeness(*sm, blocks_, integrals_, u_, closed, us, chars));
          out_.checks.append(verify_duals(*sm, blocks_, chars));
        }))
      return;

    const int m = blocks_.size();
    if (!stage(Stage::Fusion, [&] {
          try {
            out_.n_table = star_product_coeffs(h_, blocks_);
            out_.l_table = newstar_product_coeffs(h_, blocks_, v_);
            out_.smash_table = smash_fusion_table(*sm, chars, m);
          } catch (const NonIntegralCoefficient& e) {
            out_.checks.add("Fusion.tables", false, e.what());
            throw Halt{};
          }
          out_.checks.append(check_fusion_tables(h_, blocks_, v_, *out_.n_table, *out_.l_table, *out_.smash_table));
          out_.checks.append(check_smash_products(*out_.n_table, *out_.l_table, *out_.smash_table, m, n));
        }))
      return;

    if (!stage(Stage::Theorem, [&] {
          auto theta = theta_idempotents(m, n, psi);
          out_.checks.append(check_theta(*out_.smash_table, theta, psi, m, n));
          out_.checks.append(verify_theorem_decomposition(*out_.n_table, *out_.l_table, *out_.smash_table, theta, m, n));
          SubcategoryResult c = subcategory_C(*out_.n_table, *out_.l_table, *out_.smash_table, theta, blocks_, n);
          out_.c_table = c.table;
          out_.checks.append(c.report);
        }))
      return;

    stage(Stage::QDims, [&] {
      QuantumDimensions q = quantum_dimensions(h_, blocks_, v_, psi, n);
      add("qdims", elements(q.dims));
      std::vector<std::string> sph;
      for (bool b : q.spherical)
        sph.push_back(b ? "1" : "0");
      add("dual_dims_agree", join(sph));
      out_.checks.append(q.report);
    });
  }

private:
  struct Halt {};

  void add(const std::string& key, const std::string& value) { out_.artifacts.emplace_back(key, value); }

  template <class F>
  bool stage(Stage s, F&& body) {
    if (s > opt_.through)
      return false;
    try {
      body();
    } catch (const Halt&) {
      return false;
    }
    out_.reached = s;
    return true;
  }

  const HopfAlgebra& h_;
  const PipelineOptions& opt_;
  PipelineResult& out_;
  IntegralPair integrals_;
  BlockData blocks_;
  Vector u_;
  VElement v_;
};

} // namespace

const char* to_string(Stage s) {
  for (const auto& [stage, name] : kStageNames)
    if (stage == s)
      return name;
  return "?";
}

Stage parse_stage(const std::string& name) {
  for (const auto& [stage, text] : kStageNames)
    if (name == text)
      return stage;
  throw InvalidInput("unknown stage '" + name + "'");
}

const std::vector<std::pair<std::string, Stage>>& report_manifest() {
  static const std::vector<std::pair<std::string, Stage>> manifest{
      {"Hopf.axioms", Stage::Validate},
      {"Blocks.invariants", Stage::Blocks},
      {"Prop3.20.1", Stage::UV},
      {"Prop3.20.2", Stage::UV},
      {"Prop3.20.3", Stage::UV},
      {"Prop3.20.4", Stage::UV},
      {"Prop3.20.5", Stage::UV},
      {"Prop2.1", Stage::UV},
      {"Prop2.2", Stage::UV},
      {"Prop2.3", Stage::UV},
      {"Prop2.4", Stage::UV},
      {"Prop2.5", Stage::UV},
      {"Prop2.6", Stage::UV},
      {"Smash.axioms", Stage::Smash},
      {"Smash.antipode_square", Stage::Smash},
      {"Smash.integral", Stage::Smash},
      {"Smash.u", Stage::Smash},
      {"Lemma3.module", Stage::Simples},
      {"Thm3.simples", Stage::Simples},
      {"Rem3.trivial", Stage::Simples},
      {"Prop3.duals", Stage::Simples},
      {"Fusion.tables", Stage::Fusion},
      {"Prop4.star_associative", Stage::Fusion},
      {"Rem6.involutory", Stage::Fusion},
      {"Rem9", Stage::Fusion},
      {"Prop1.1", Stage::Fusion},
      {"Prop1.2", Stage::Fusion},
      {"Prop1.3", Stage::Fusion},
      {"Theta.relations", Stage::Theorem},
      {"Thm4.1", Stage::Theorem},
      {"Thm4.2", Stage::Theorem},
      {"Thm4.3", Stage::Theorem},
      {"C.closure", Stage::Theorem},
      {"PropP1", Stage::Theorem},
      {"Cor4", Stage::Theorem},
      {"QDim", Stage::QDims},
  };
  return manifest;
}

void check_hypotheses(std::uint32_t p, int dim) {
  if (std::uint64_t(p) * p <= std::uint64_t(dim))
    throw HypothesisViolation("p=" + std::to_string(p) + " does not exceed sqrt(dim H) for dim H=" +
                              std::to_string(dim));
  if ((2 * std::uint64_t(dim)) % p == 0)
    throw HypothesisViolation("p=" + std::to_string(p) + " divides 2 dim H=" + std::to_string(2 * dim));
}

PipelineResult run_pipeline(const HopfAlgebra& h, const PipelineOptions& options) {
  const Field& base = *h.field();
  check_hypotheses(base.characteristic(), h.dim());

  PipelineResult out;
  out.input_name = options.input_name;
  out.seed = options.seed;
  out.through = options.through;

  ValidationReport vr = validate_hopf(h);
  out.checks.add("Hopf.axioms", vr.all_passed(), vr.first_failure());
  if (!vr.all_passed())
    return out;
  out.reached = Stage::Validate;
  if (options.through == Stage::Validate)
    return out;

  const std::uint32_t p = base.characteristic();
  const unsigned k0 = base.degree();
  const unsigned ord = root_of_unity_degree(p, 2 * std::uint64_t(h.dim()));
  unsigned factor = std::lcm(k0, ord) / k0;
  while (true) {
    if (field_order(p, k0 * factor) > kMaxFieldOrder)
      throw InternalInconsistency("required field GF(" + std::to_string(p) + "^" + std::to_string(k0 * factor) +
                                  ") exceeds the supported size");
    std::optional<HopfAlgebra> hk;
    if (factor == 1) {
      hk = h;
    } else {
      auto [field, embedding] = extend_field(h.field(), factor);
      hk = h.change_field(embedding);
    }
    out.field_history.push_back(hk->field()->describe());
    PipelineResult attempt = out;
    try {
      Run(*hk, options, attempt).execute();
      return attempt;
    } catch (const SplittingFieldTooSmall& e) {
      out.field_history.back() += " (" + std::string(e.what()) + ")";
      factor *= std::max(2u, e.degree);
    } catch (const NonResidue& e) {
      out.field_history.back() += " (" + std::string(e.what()) + ")";
      factor *= std::max(2u, e.extension);
    }
  }
}

std::string render_report(const PipelineResult& r) {
  std::ostringstream out;
  out << "hopf-fusion report v1\n";
  out << "input: " << r.input_name << '\n';
  out << "seed: " << r.seed << '\n';
  out << "through: " << to_string(r.through) << '\n';
  out << "reached: " << (r.reached ? to_string(*r.reached) : "none") << '\n';
  for (std::size_t i = 0; i < r.field_history.size(); ++i)
    out << (i + 1 == r.field_history.size() ? "field: " : "field_tried: ") << r.field_history[i] << '\n';
  for (const auto& [key, value] : r.artifacts)
    out << key << ": " << value << '\n';

  int pass = 0, fail = 0, skipped = 0;
  for (const auto& [id, stage] : report_manifest()) {
    const CheckResult* c = r.checks.find(id);
    if (!c) {
      ++skipped;
      out << "check " << id << " skipped\n";
    } else if (c->passed) {
      ++pass;
      out << "check " << id << " pass\n";
    } else {
      ++fail;
      out << "check " << id << " fail " << c->witness << '\n';
    }
  }
  out << "summary: pass=" << pass << " fail=" << fail << " skipped=" << skipped << '\n';
  for (const auto& [name, table] : {std::pair{"N", &r.n_table}, std::pair{"L", &r.l_table}})
    if (*table)
      out << "table " << name << '\n' << dump(**table) << "end table\n";
  return out.str();
}

std::string render_validation(const ValidationReport& v, const std::string& input_name) {
  std::ostringstream out;
  out << "hopf-fusion validate v1\n";
  out << "input: " << input_name << '\n';
  for (const auto& c : v.checks) {
    out << "axiom " << c.name << ' ' << (c.passed ? "pass" : "fail");
    if (!c.passed)
      out << ' ' << c.witness;
    out << '\n';
  }
  out << "result: " << (v.all_passed() ? "pass" : "fail") << '\n';
  return out.str();
}

} // namespace hopf_fusion
