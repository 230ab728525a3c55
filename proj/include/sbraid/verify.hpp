#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sbraid/rewriting.hpp"
#include "sbraid/sp3.hpp"

namespace sbraid {

enum class CheckGroup {
  RewrittenRelators,     // 30 relators tau(lambda r lambda^-1)
  PresentationRelators,  // 8 defining relators of SP_3
  ConjugationRules,      // 24 formulas g^-1 x g
  GeneratorExpressions   // 19 nontrivial rows of the expression table
};

std::string_view group_name(CheckGroup g);

struct CheckResult {
  CheckGroup  group;
  std::string label;
  bool        passed = false;
  std::string witness;  // filled on failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool        all_passed() const;
  std::size_t total(CheckGroup g) const;
  std::size_t passed(CheckGroup g) const;
};

struct VerifyOptions {
  bool rewritten_relators    = true;
  bool presentation_relators = true;
  bool conjugation_rules     = true;
  bool generator_expressions = true;
};

//! Machine-checks the SP_3 presentation. All equalities are decided with
//! equal_sp3, never letterwise.
//!
//! The generator-expression group compares each table row against an
//! expression derived only from the rewritten relators (Tietze elimination
//! onto a12..b23), so a wrong row fails exactly its own check there.
VerificationReport verify_presentation(
    const VerifyOptions&   options = {},
    const ExpressionTable& table   = expression_table(),
    const ActionTable&     actions = action_table());

//! Eliminates the 13 non-defining Schreier generators of SP_3 using the 30
//! rewritten relators, each step solving a relator in which a generator
//! occurs exactly once. Returns an SP word for every nontrivial generator;
//! a generator that cannot be eliminated is absent.
std::map<SchreierGenerator, SPWord> derived_generator_expressions();

}  // namespace sbraid
