#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "sbraid/braid_word.hpp"
#include "sbraid/permutation.hpp"

namespace sbraid {

//! The Schreier generator S_{lambda,a} = lambda a (rep(lambda a))^-1.
//!
//! `rep_index` indexes the representative lambda inside a Transversal, so a
//! SchreierGenerator only has meaning together with the transversal it was
//! made from. The ordering (representative, then sigma before tau, then
//! index) is the fixed alphabet order used for printing.
struct SchreierGenerator {
  std::size_t rep_index = 0;
  Generator   letter;

  friend auto operator<=>(const SchreierGenerator&,
                          const SchreierGenerator&) = default;
};

struct SchreierFactor {
  SchreierGenerator generator;
  int               sign = 1;  // +1 or -1

  friend bool operator==(const SchreierFactor&, const SchreierFactor&) = default;
};

//! A freely reduced word over the Schreier generators, one unit factor per
//! entry.
class SchreierWord {
 public:
  SchreierWord() = default;
  explicit SchreierWord(const std::vector<SchreierFactor>& factors);

  const std::vector<SchreierFactor>& factors() const noexcept {
    return factors_;
  }

  bool empty() const noexcept { return factors_.empty(); }

  friend bool operator==(const SchreierWord&, const SchreierWord&) = default;

 private:
  std::vector<SchreierFactor> factors_;
};

SchreierWord concat(const SchreierWord& lhs, const SchreierWord& rhs);
SchreierWord invert(const SchreierWord& w);

//! Renders e.g. `S(s2 s1,t1) S(s2 s1,s1)^-1`; the empty word is `1`.
std::string to_string(const SchreierGenerator& g, const Transversal& t);
std::string to_string(const SchreierWord& w, const Transversal& t);

//! Looks up S_{lambda,a} by its representative word.
//!
//! \throws DomainError if `rep` is not in `t` or `a` is out of range.
SchreierGenerator schreier_generator(const Transversal& t, const BraidWord& rep,
                                     Generator a);

//! The ambient word lambda a (rep(lambda a))^-1, freely reduced.
BraidWord s_generator_word(const SchreierGenerator& g, const Transversal& t);

struct GeneratorEntry {
  SchreierGenerator generator;
  BraidWord         ambient;
  bool              trivial = false;
};

//! All |Lambda_n| * 2(n-1) Schreier generators in alphabet order.
//!
//! \throws DomainError unless 2 <= n <= 6.
std::vector<GeneratorEntry> enumerate_generators(int n);
std::vector<GeneratorEntry> enumerate_generators(const Transversal& t);

//! The rewriting process tau: reads the unit letters of `u`, taking the
//! representative of the preceding prefix for a positive letter and of the
//! prefix including the letter for a negative one. Generators whose ambient
//! word is freely trivial are dropped.
//!
//! \throws DomainError if pi(u) is not the identity.
SchreierWord rewrite_tau(const BraidWord& u, const Transversal& t);

//! Replaces every factor by its ambient word and freely reduces.
BraidWord substitute(const SchreierWord& w, const Transversal& t);

struct RelatorRewrite {
  int          relator    = 1;  // 1-based position in sg3_relators()
  std::size_t  rep_index  = 0;  // lambda, index into transversal3()
  BraidWord    conjugated;      // lambda r lambda^-1
  SchreierWord rewritten;       // tau(lambda r lambda^-1)
};

//! The 30 rewritten relators tau(lambda r lambda^-1) of SP_3, ordered by
//! relator then by lambda.
const std::vector<RelatorRewrite>& relator_rewrites();

}  // namespace sbraid
