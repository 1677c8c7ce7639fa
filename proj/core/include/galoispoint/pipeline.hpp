#pragma once

// Input blocks, the build / analyze / extend pipeline and its reports.
//
// Input format: key = value pairs, one per line or separated by ';'. A blank
// line ends a block. '#' starts a comment. Recognised keys:
//   id, curve, point, kummer, q, c, zeta, fiber, field, command, expect.*

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galoispoint/dejonquieres.hpp"
#include "galoispoint/galois_kummer.hpp"

namespace gp {

struct InputBlock {
  std::string id;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* get(std::string_view key) const;
};

/// Throws ParseError on a line that is neither a pair nor a continuation.
std::vector<InputBlock> parse_blocks(std::string_view text);

enum class Command { build, analyze, extend };

const char* command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name);

struct RunOptions {
  std::optional<int> field_order;  // overrides the block's field key
};

struct Analysis {
  std::string id;
  std::string status = "ok";
  FieldPtr field;

  std::optional<PlaneCurve> curve;
  std::optional<PointedCurve> pointed;
  std::optional<FiberPolynomial> fiber;

  std::optional<bool> is_galois;
  std::optional<int> group_order;
  std::optional<AutomorphismRep> sigma;
  std::optional<Moebius> moebius;
  int moebius_solution_dim = 0;
  std::optional<GeometricMoebius> closed_form;
  std::optional<KummerPresentation> kummer;

  std::optional<DeJonquieresMap> lift;
  std::optional<bool> birational;
  std::optional<int> lift_order;
  std::optional<bool> preserves_curve;
  std::optional<bool> rho_trivial;

  std::vector<std::string> diagnostics;
};

/// Never throws for bad input: failures become status "error" plus a diagnostic.
Analysis run(Command cmd, const InputBlock& block, const RunOptions& opts = {});

/// Keys in fixed order: id, status, degree, multiplicity, projection_degree,
/// is_galois, group_order, sigma_rep, moebius, dejonquieres, diagnostics,
/// curve, fiber, irreducibility.
std::string report_json(const Analysis& a, int indent = 2);
std::string report_text(const Analysis& a);

/// "[[a, b], [c, d]]" with entries in t and z.
Moebius parse_moebius(std::string_view text, const FieldPtr& field);

struct CorpusResult {
  std::string id;
  bool pass = true;
  std::vector<std::string> failures;
};

/// Runs every block (or only `entry`) and checks its expect.* keys exactly.
std::vector<CorpusResult> run_corpus(std::string_view text, const std::optional<std::string>& entry,
                                     const RunOptions& opts = {});

/// The bundled example corpus.
std::string_view bundled_corpus();

}  // namespace gp
