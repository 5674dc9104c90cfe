#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "pentagon/catalog.hpp"
#include "pentagon/drinfeld.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/fock.hpp"
#include "pentagon/formal_algebra.hpp"
#include "pentagon/io.hpp"
#include "pentagon/reconstruction.hpp"
#include "pentagon/relations.hpp"

namespace pentagon::cli {

namespace {

// S3 YBE acts on a 46656-dimensional space.
constexpr std::size_t kLargeYbeSpace = 30000;

struct Source {
  std::string example;
  std::string input;

  bool from_example() const { return !example.empty(); }

  Operator canonical_operator() const {
    if (from_example()) return canonical_element(example_constants(example));
    return parse_operator_file(read_text(input)).op;
  }

  StructureConstants constants() const {
    if (from_example()) return example_constants(example);
    StructureConstants sc = parse_structure_constants(read_text(input));
    sc.validate();
    return sc;
  }
};

struct Output {
  bool json = false;
  std::ostream* out = nullptr;

  int emit(const std::vector<VerificationReport>& reports) const {
    if (json) {
      *out << format_reports_json(reports);
    } else {
      for (const auto& r : reports) *out << format_report(r) << '\n';
    }
    return all_hold(reports) ? kOk : kRelationFailed;
  }
};

void add_source(CLI::App* cmd, Source& src) {
  auto* ex = cmd->add_option("--example", src.example, "built-in example: trivial, zn:<n>, s3, dual:<name>");
  auto* in = cmd->add_option("--input", src.input, "input JSON file")->check(CLI::ExistingFile);
  ex->excludes(in);
  in->excludes(ex);
}

void require_source(const Source& src) {
  if (src.example.empty() && src.input.empty()) throw SchemaError("exactly one of --example or --input is required");
}

EvalOptions eval_options(unsigned threads) {
  EvalOptions o;
  o.threads = threads;
  return o;
}

std::vector<VerificationReport> verify(const std::string& relation, const Source& src, const EvalOptions& opts,
                                       bool allow_large) {
  std::vector<VerificationReport> out;
  if (relation == "pentagon") {
    out.push_back(check_pentagon(src.canonical_operator(), opts));
  } else if (relation == "reversed") {
    if (src.from_example()) {
      const StructureConstants sc = example_constants(src.example);
      const Representation rep = adjoint_rep(sc);
      out.push_back(check_reversed_pentagon(s_primes_from_reps(sc, rep, tilde_rep(sc, rep)).s_tilde, opts));
    } else {
      out.push_back(check_reversed_pentagon(src.canonical_operator(), opts));
    }
  } else if (relation == "mixed") {
    const SMatrixFamily fam = s_family(src.canonical_operator());
    out = check_mixed_pentagons(fam.s, fam.s_prime, fam.s_double_prime, fam.s_tilde, opts);
  } else if (relation == "ybe") {
    OperatorFile r;
    if (src.from_example()) {
      const RMatrix rm = r_matrix(s_family(src.canonical_operator()));
      r = {rm.op, rm.legs_per_site};
    } else {
      r = parse_operator_file(read_text(src.input));
    }
    const std::size_t site = r.legs_per_site.value_or(r.op.legs() / 2);
    std::size_t site_dim = 1;
    for (std::size_t i = 0; i < site && i < r.op.legs(); ++i) site_dim *= r.op.row_dims()[i];
    if (site_dim * site_dim * site_dim > kLargeYbeSpace && !allow_large) {
      throw SchemaError("the YBE space has dimension " + std::to_string(site_dim * site_dim * site_dim) +
                        "; pass --allow-large to run it");
    }
    out.push_back(check_yang_baxter(r.op, site, opts));
  } else if (relation == "heisenberg") {
    const StructureConstants sc = src.constants();
    out.push_back(check_heisenberg_relations(sc, adjoint_rep(sc)));
  } else if (relation == "drinfeld") {
    const StructureConstants sc = src.constants();
    out = check_double_consistency(sc, opts);
    const Representation rep = adjoint_rep(sc);
    const DoubleGenerators gens = drinfeld_generators(sc, rep, tilde_rep(sc, rep));
    out.push_back(check_drinfeld_relations(sc, gens.e, gens.e_dual));
    out.push_back(check_equal(r_matrix(s_family(canonical_element(rep))).op, canonical_r_matrix(gens).op,
                              "factorized R = sum E_a (x) E^a"));
  } else if (relation == "fg") {
    out.push_back(check_fg_relations(src.canonical_operator(), opts));
  } else if (relation == "mixed-permutation") {
    out.push_back(check_mixed_permutation(src.canonical_operator(), opts));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of pentagon, Yang-Baxter and quantum dilogarithm identities", "pentagon"};
  app.require_subcommand(1);

  Output output{false, &out};
  unsigned threads = 0;
  Source src;

  // verify
  std::string relation;
  bool allow_large = false;
  auto* verify_cmd = app.add_subcommand("verify", "check one relation family");
  verify_cmd->add_option("relation", relation, "relation family")
      ->required()
      ->check(CLI::IsMember({"pentagon", "reversed", "mixed", "ybe", "heisenberg", "drinfeld", "fg",
                             "mixed-permutation"}));
  add_source(verify_cmd, src);
  verify_cmd->add_flag("--allow-large", allow_large, "allow YBE checks on spaces above 30000 dimensions");

  // reconstruct
  std::string output_path;
  std::string diagnostics_path;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild the bialgebra pair from S");
  add_source(reconstruct_cmd, src);
  reconstruct_cmd->add_option("--output", output_path, "bialgebra JSON to write");
  reconstruct_cmd->add_option("--diagnostics", diagnostics_path, "diagnostic reports JSON to write");

  // rmatrix
  std::vector<std::string> checks;
  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "assemble the R-matrix from S");
  add_source(rmatrix_cmd, src);
  rmatrix_cmd->add_option("--check", checks, "ybe and/or mixed")->check(CLI::IsMember({"ybe", "mixed"}));
  rmatrix_cmd->add_option("--output", output_path, "R JSON to write");
  rmatrix_cmd->add_flag("--allow-large", allow_large, "allow YBE checks on spaces above 30000 dimensions");

  // dilog
  unsigned degree = 0;
  bool set_w_zero = false;
  std::string numeric_q;
  auto* dilog_cmd = app.add_subcommand("dilog", "quantum dilogarithm identity up to a total degree");
  dilog_cmd->add_option("--degree", degree, "truncation degree D >= 2")->required()->check(CLI::Range(2u, 64u));
  dilog_cmd->add_flag("--set-w-zero", set_w_zero, "work in the quotient W = 0");
  dilog_cmd->add_option("--numeric-q", numeric_q, "substitute q by a rational p/q");

  // weyl
  unsigned max_occupation = 0;
  auto* weyl_cmd = app.add_subcommand("weyl", "exponential pentagon on the Fock space");
  weyl_cmd->add_option("--max-occupation", max_occupation, "largest occupation number")
      ->required()
      ->check(CLI::Range(1u, 64u));

  // canonical / constants
  auto* canonical_cmd = app.add_subcommand("canonical", "write the canonical element S of a built-in example");
  canonical_cmd->add_option("--example", src.example, "built-in example")->required();
  canonical_cmd->add_option("--output", output_path, "file to write (default: stdout)");
  auto* constants_cmd = app.add_subcommand("constants", "write the structure constants of a built-in example");
  constants_cmd->add_option("--example", src.example, "built-in example")->required();
  constants_cmd->add_option("--output", output_path, "file to write (default: stdout)");

  for (auto* cmd : {verify_cmd, reconstruct_cmd, rmatrix_cmd, dilog_cmd, weyl_cmd}) {
    cmd->add_flag("--json", output.json, "print reports as JSON");
  }
  for (auto* cmd : {verify_cmd, reconstruct_cmd, rmatrix_cmd}) {
    cmd->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const EvalOptions opts = eval_options(threads);
  try {
    if (verify_cmd->parsed()) {
      require_source(src);
      return output.emit(verify(relation, src, opts, allow_large));
    }

    if (reconstruct_cmd->parsed()) {
      require_source(src);
      const Operator s = src.canonical_operator();
      ReconstructionResult result;
      try {
        result = reconstruct(s);
      } catch (const ClosureViolation& e) {
        err << "reconstruction failed: " << e.what() << '\n';
        return kRelationFailed;
      }
      if (!output_path.empty()) write_text(output_path, format_reconstruction(result));
      if (!diagnostics_path.empty()) write_text(diagnostics_path, format_reports_json(result.diagnostics));
      if (!output.json) out << "reconstructed dimension " << result.dim << '\n';
      return output.emit(result.diagnostics);
    }

    if (rmatrix_cmd->parsed()) {
      require_source(src);
      const bool want_ybe = std::ranges::find(checks, "ybe") != checks.end();
      const bool want_mixed = std::ranges::find(checks, "mixed") != checks.end();
      std::vector<VerificationReport> reports;
      const SMatrixFamily fam = s_family(src.canonical_operator());
      const RMatrix r = r_matrix(fam);
      if (src.from_example()) {
        const StructureConstants sc = example_constants(src.example);
        const Representation rep = adjoint_rep(sc);
        reports.push_back(check_equal(r.op, canonical_r_matrix(drinfeld_generators(sc, rep, tilde_rep(sc, rep))).op,
                                      "factorized R = sum E_a (x) E^a"));
      }
      if (want_ybe) {
        const std::size_t d = fam.s.row_dims()[0];
        const std::size_t space = d * d * d * d * d * d;
        if (space > kLargeYbeSpace && !allow_large) {
          throw SchemaError("the YBE space has dimension " + std::to_string(space) + "; pass --allow-large to run it");
        }
        reports.push_back(check_yang_baxter(r, opts));
      }
      if (want_mixed) {
        for (auto& rep : check_mixed_pentagons(fam.s, fam.s_prime, fam.s_double_prime, fam.s_tilde, opts)) {
          reports.push_back(std::move(rep));
        }
        reports.push_back(check_reversed_pentagon(fam.s_tilde, opts));
      }
      if (!output_path.empty()) write_text(output_path, format_operator_file({r.op, r.legs_per_site}));
      if (reports.empty()) {
        if (output_path.empty()) out << format_operator_file({r.op, r.legs_per_site});
        return kOk;
      }
      return output.emit(reports);
    }

    if (dilog_cmd->parsed()) {
      std::optional<Rational> q0;
      if (!numeric_q.empty()) q0 = Rational::from_string(numeric_q);
      return output.emit({verify_dilog_identity(degree, set_w_zero, q0)});
    }

    if (weyl_cmd->parsed()) return output.emit({weyl_pentagon_check(max_occupation)});

    if (canonical_cmd->parsed() || constants_cmd->parsed()) {
      const StructureConstants sc = example_constants(src.example);
      const std::string text =
          canonical_cmd->parsed() ? format_operator(canonical_element(sc)) : format_structure_constants(sc);
      if (output_path.empty()) {
        out << text;
      } else {
        write_text(output_path, text);
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace pentagon::cli
