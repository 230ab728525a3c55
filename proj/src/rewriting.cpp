#include "sbraid/rewriting.hpp"

#include <cstdlib>

#include "sbraid/errors.hpp"

namespace sbraid {

namespace {

void push_factor(std::vector<SchreierFactor>& out, SchreierFactor f) {
  if (!out.empty() && out.back().generator == f.generator
      && out.back().sign == -f.sign) {
    out.pop_back();
  } else {
    out.push_back(f);
  }
}

bool ambient_is_trivial(const SchreierGenerator& g, const Transversal& t) {
  // lambda a is itself a representative exactly when S_{lambda,a} = 1 freely.
  const auto& rep = t.rep(g.rep_index);
  return t.find(concat(rep, BraidWord(t.strands(), {letter(g.letter)})))
      .has_value();
}

}  // namespace

SchreierWord::SchreierWord(const std::vector<SchreierFactor>& factors) {
  factors_.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) {
      throw DomainError("Schreier factor sign must be +1 or -1");
    }
    push_factor(factors_, f);
  }
}

SchreierWord concat(const SchreierWord& lhs, const SchreierWord& rhs) {
  auto factors = lhs.factors();
  factors.insert(factors.end(), rhs.factors().begin(), rhs.factors().end());
  return SchreierWord(factors);
}

SchreierWord invert(const SchreierWord& w) {
  std::vector<SchreierFactor> factors(w.factors().rbegin(),
                                      w.factors().rend());
  for (auto& f : factors) {
    f.sign = -f.sign;
  }
  return SchreierWord(factors);
}

std::string to_string(const SchreierGenerator& g, const Transversal& t) {
  return "S(" + to_string(t.rep(g.rep_index)) + "," + to_string(g.letter)
         + ")";
}

std::string to_string(const SchreierWord& w, const Transversal& t) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& f : w.factors()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(f.generator, t);
    if (f.sign < 0) {
      out += "^-1";
    }
  }
  return out;
}

SchreierGenerator schreier_generator(const Transversal& t, const BraidWord& rep,
                                     Generator a) {
  auto index = t.find(rep);
  if (!index) {
    throw DomainError("'" + to_string(rep) + "' is not a transversal element");
  }
  if (a.index < 1 || a.index > t.strands() - 1) {
    throw DomainError("generator " + to_string(a) + " out of range");
  }
  return {*index, a};
}

BraidWord s_generator_word(const SchreierGenerator& g, const Transversal& t) {
  const auto& rep = t.rep(g.rep_index);
  auto lambda_a   = concat(rep, BraidWord(t.strands(), {letter(g.letter)}));
  return concat(lambda_a, invert(coset_rep(lambda_a, t)));
}

std::vector<GeneratorEntry> enumerate_generators(const Transversal& t) {
  std::vector<GeneratorEntry> table;
  table.reserve(t.size() * 2 * static_cast<std::size_t>(t.strands() - 1));
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (Kind kind : {Kind::Sigma, Kind::Tau}) {
      for (int i = 1; i < t.strands(); ++i) {
        SchreierGenerator g{r, {kind, i}};
        auto              ambient = s_generator_word(g, t);
        bool              trivial = ambient.empty();
        table.push_back({g, std::move(ambient), trivial});
      }
    }
  }
  return table;
}

std::vector<GeneratorEntry> enumerate_generators(int n) {
  return enumerate_generators(schreier_transversal(n));
}

SchreierWord rewrite_tau(const BraidWord& u, const Transversal& t) {
  if (u.strands() != t.strands()) {
    throw DomainError("strand count mismatch between word and transversal");
  }
  const int n = t.strands();
  // Images of the current prefix under pi, updated one unit letter at a time.
  auto                        prefix = Permutation::identity(n);
  std::vector<SchreierFactor> factors;
  for (const auto& l : u.letters()) {
    auto       swap  = Permutation::adjacent_transposition(n, l.index);
    const int  sign  = l.exponent > 0 ? 1 : -1;
    const auto count = std::llabs(l.exponent);
    for (std::int64_t k = 0; k < count; ++k) {
      if (sign < 0) {
        prefix = prefix * swap;
      }
      SchreierGenerator g{t.index_of(prefix), l.key()};
      if (!ambient_is_trivial(g, t)) {
        push_factor(factors, {g, sign});
      }
      if (sign > 0) {
        prefix = prefix * swap;
      }
    }
  }
  if (!prefix.is_identity()) {
    throw DomainError("word '" + to_string(u)
                      + "' does not lie in the pure subgroup");
  }
  return SchreierWord(factors);
}

BraidWord substitute(const SchreierWord& w, const Transversal& t) {
  std::vector<GeneratorLetter> letters;
  for (const auto& f : w.factors()) {
    auto piece = s_generator_word(f.generator, t);
    if (f.sign < 0) {
      piece = invert(piece);
    }
    letters.insert(letters.end(), piece.letters().begin(),
                   piece.letters().end());
  }
  return BraidWord(t.strands(), letters);
}

const std::vector<RelatorRewrite>& relator_rewrites() {
  static const std::vector<RelatorRewrite> rewrites = [] {
    const auto&                 t = transversal3();
    std::vector<RelatorRewrite> out;
    const auto&                 relators = sg3_relators();
    for (std::size_t mu = 0; mu < relators.size(); ++mu) {
      for (std::size_t r = 0; r < t.size(); ++r) {
        const auto& lambda = t.rep(r);
        auto conj = concat(concat(lambda, relators[mu]), invert(lambda));
        out.push_back({static_cast<int>(mu + 1), r, conj, rewrite_tau(conj, t)});
      }
    }
    return out;
  }();
  return rewrites;
}

}  // namespace sbraid
