#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/fock.hpp"
#include "workbench/rep.hpp"

namespace workbench {

/// Polynomial-layer inputs: the space with its conjugation, one polynomial,
/// and the evaluation point / norm radius the fock task may use.
struct FockSection {
  FSpace space;
  SymPolynomial poly = SymPolynomial::zero(1);
  std::vector<Scalar> xi;
  std::optional<Rational> radius;
};

/// One requested computation.
struct TaskRequest {
  std::string kind;               // series | gns | positivity | radius | fock | props
  long order = -1;                // -1 when not given
  std::vector<Rational> direction; // radius restriction direction
  std::string mode;               // fock: eval | norm
  std::string suite;              // props: suite name
};

/// A parsed and validated problem file with its constructed objects.
struct Problem {
  AlgebraPtr algebra;                       // null when only the fock section is present
  std::optional<CyclicData> cyclic;         // from the representation section
  std::vector<std::vector<Scalar>> xi_list; // extra directions for the series task
  std::optional<std::vector<Rational>> moments;
  std::optional<FockSection> fock;
  std::vector<TaskRequest> tasks;
};

/// Parses the JSON problem text.  Syntax errors carry 1-based line/column;
/// schema violations throw ValidationError naming the offending field.
Problem parse_problem(const std::string &text);

/// parse_problem on the contents of a file.
Problem load_problem(const std::string &path);

/// Canonical JSON rendering: sorted keys, two-space indent, rationals in
/// lowest terms.  serialize(parse(t)) is a fixed point of parse/serialize.
std::string serialize_problem(const Problem &p);

} // namespace workbench
