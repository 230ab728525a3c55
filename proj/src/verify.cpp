#include "sbraid/verify.hpp"

#include <algorithm>
#include <optional>

#include "sbraid/errors.hpp"
#include "sbraid/normal_form.hpp"

namespace sbraid {

namespace {

// Unit word over the 24 Schreier generators, indexed by expression_index.
struct Unit {
  std::size_t id;
  int         sign;

  friend bool operator==(const Unit&, const Unit&) = default;
};
using UnitWord = std::vector<Unit>;

UnitWord reduce(const UnitWord& w) {
  UnitWord out;
  for (const auto& u : w) {
    if (!out.empty() && out.back().id == u.id && out.back().sign == -u.sign) {
      out.pop_back();
    } else {
      out.push_back(u);
    }
  }
  return out;
}

UnitWord inverse(const UnitWord& w) {
  UnitWord out(w.rbegin(), w.rend());
  for (auto& u : out) {
    u.sign = -u.sign;
  }
  return out;
}

UnitWord substitute(const UnitWord& w, std::size_t id, const UnitWord& image) {
  UnitWord out;
  for (const auto& u : w) {
    if (u.id != id) {
      out.push_back(u);
      continue;
    }
    const auto piece = u.sign > 0 ? image : inverse(image);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce(out);
}

// The six Schreier generators kept as a12, a13, a23, b12, b13, b23.
const std::array<SchreierGenerator, 6>& defining_generators() {
  static const std::array<SchreierGenerator, 6> gens = [] {
    const auto& t = transversal3();
    auto        s = [&t](const char* rep, Generator a) {
      return schreier_generator(t, parse_braid_word(rep, 3), a);
    };
    return std::array<SchreierGenerator, 6>{
        s("s1", sigma(1)),    s("s2 s1", sigma(1)), s("s2", sigma(2)),
        s("s1", tau(1)),      s("s2 s1", tau(1)),   s("s2", tau(2))};
  }();
  return gens;
}

std::optional<SPName> defining_name(std::size_t id) {
  const auto& gens = defining_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (expression_index(gens[i]) == id) {
      return kSPNames[i];
    }
  }
  return std::nullopt;
}

std::string relator_label(const RelatorRewrite& r) {
  return "r" + std::to_string(r.relator) + " @ "
         + to_string(transversal3().rep(r.rep_index));
}

std::string conjugation_label(SPName x, Generator g, const SPWord& image) {
  return std::string(name_of(x)) + "^" + to_string(g) + " = "
         + to_string(image);
}

}  // namespace

std::string_view group_name(CheckGroup g) {
  switch (g) {
    case CheckGroup::RewrittenRelators:
      return "rewritten-relators";
    case CheckGroup::PresentationRelators:
      return "presentation-relators";
    case CheckGroup::ConjugationRules:
      return "conjugation-rules";
    case CheckGroup::GeneratorExpressions:
      return "generator-expressions";
  }
  return "unknown";
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::total(CheckGroup g) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [g](const CheckResult& c) { return c.group == g; }));
}

std::size_t VerificationReport::passed(CheckGroup g) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [g](const CheckResult& c) { return c.group == g && c.passed; }));
}

std::map<SchreierGenerator, SPWord> derived_generator_expressions() {
  const auto& t       = transversal3();
  const auto  entries = enumerate_generators(t);

  std::vector<UnitWord> relators;
  for (const auto& r : relator_rewrites()) {
    UnitWord w;
    for (const auto& f : r.rewritten.factors()) {
      w.push_back({expression_index(f.generator), f.sign});
    }
    relators.push_back(reduce(w));
  }

  std::vector<bool> removable(entries.size(), false);
  for (const auto& e : entries) {
    auto id       = expression_index(e.generator);
    removable[id] = !e.trivial && !defining_name(id);
  }

  std::map<std::size_t, UnitWord> solved;
  bool                            progress = true;
  while (progress) {
    progress = false;
    for (const auto& rel : relators) {
      std::vector<int> count(entries.size(), 0);
      for (const auto& u : rel) {
        ++count[u.id];
      }
      auto it = std::find_if(rel.begin(), rel.end(), [&](const Unit& u) {
        return removable[u.id] && count[u.id] == 1;
      });
      if (it == rel.end()) {
        continue;
      }
      // rel = U x^e V = 1  gives  x = U^-1 V^-1 (e = 1) or V U (e = -1).
      const UnitWord before(rel.begin(), it);
      const UnitWord after(it + 1, rel.end());
      UnitWord       image;
      if (it->sign > 0) {
        image = inverse(before);
        auto tail = inverse(after);
        image.insert(image.end(), tail.begin(), tail.end());
      } else {
        image = after;
        image.insert(image.end(), before.begin(), before.end());
      }
      image         = reduce(image);
      const auto id = it->id;
      removable[id] = false;
      for (auto& [other, expr] : solved) {
        expr = substitute(expr, id, image);
      }
      for (auto& r : relators) {
        r = substitute(r, id, image);
      }
      solved[id] = image;
      progress   = true;
      break;
    }
  }

  std::map<SchreierGenerator, SPWord> out;
  for (const auto& e : entries) {
    if (e.trivial) {
      continue;
    }
    const auto id = expression_index(e.generator);
    if (auto name = defining_name(id)) {
      out.emplace(e.generator, sp_word(*name));
      continue;
    }
    auto found = solved.find(id);
    if (found == solved.end()) {
      continue;
    }
    std::vector<SPLetter> letters;
    bool                  complete = true;
    for (const auto& u : found->second) {
      auto name = defining_name(u.id);
      if (!name) {
        complete = false;
        break;
      }
      letters.push_back({*name, u.sign});
    }
    if (complete) {
      out.emplace(e.generator, SPWord(letters));
    }
  }
  return out;
}

VerificationReport verify_presentation(const VerifyOptions&   options,
                                       const ExpressionTable& table,
                                       const ActionTable&     actions) {
  VerificationReport report;
  const auto&        t = transversal3();

  if (options.rewritten_relators) {
    for (const auto& r : relator_rewrites()) {
      std::vector<SPLetter> letters;
      for (const auto& f : r.rewritten.factors()) {
        auto image = express_schreier_gen(f.generator, table);
        if (f.sign < 0) {
          image = invert(image);
        }
        letters.insert(letters.end(), image.letters().begin(),
                       image.letters().end());
      }
      SPWord      word(letters);
      CheckResult c{CheckGroup::RewrittenRelators, relator_label(r),
                    is_trivial_sp3(word), {}};
      if (!c.passed) {
        c.witness = to_string(r.rewritten, t) + " -> " + to_string(word)
                    + " has form " + to_string(center_split(word));
      }
      report.checks.push_back(std::move(c));
    }
  }

  if (options.presentation_relators) {
    const auto& relators  = theorem1_relators();
    const auto& relations = theorem1_relations();
    for (std::size_t i = 0; i < relators.size(); ++i) {
      CheckResult c{CheckGroup::PresentationRelators,
                    relations[i].lhs + " = " + relations[i].rhs,
                    is_trivial_sp3(relators[i]), {}};
      if (!c.passed) {
        c.witness = "form " + to_string(center_split(relators[i]));
      }
      report.checks.push_back(std::move(c));
    }
  }

  if (options.conjugation_rules) {
    for (const auto& action : actions) {
      if (action.sign != 1) {
        continue;
      }
      BraidWord g(3, {letter(action.generator)});
      for (std::size_t x = 0; x < kSPNames.size(); ++x) {
        const auto conj
            = concat(concat(invert(g), sp3_to_sg3(sp_word(kSPNames[x]))), g);
        const auto  rewritten = rewrite_to_sp3(conj, table);
        const auto& claimed   = action.images[x];
        CheckResult c{CheckGroup::ConjugationRules,
                      conjugation_label(kSPNames[x], action.generator, claimed),
                      equal_sp3(rewritten, claimed), {}};
        if (!c.passed) {
          c.witness = "rewrites to " + to_string(rewritten);
        }
        report.checks.push_back(std::move(c));
      }
    }
  }

  if (options.generator_expressions) {
    const auto derived = derived_generator_expressions();
    for (const auto& e : enumerate_generators(t)) {
      if (e.trivial) {
        continue;
      }
      const auto& row = express_schreier_gen(e.generator, table);
      auto        it  = derived.find(e.generator);
      CheckResult c{CheckGroup::GeneratorExpressions,
                    to_string(e.generator, t) + " = " + to_string(row), false,
                    {}};
      if (it == derived.end()) {
        c.witness = "no expression derivable from the rewritten relators";
      } else {
        c.passed = equal_sp3(row, it->second);
        if (!c.passed) {
          c.witness = "relators give " + to_string(it->second);
        }
      }
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace sbraid
