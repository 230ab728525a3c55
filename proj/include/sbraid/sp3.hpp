#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbraid/braid_word.hpp"
#include "sbraid/rewriting.hpp"

namespace sbraid {

//! The six generators of SP_3:
//!   a12 = s1^2,  a13 = s2 s1^2 s2^-1,  a23 = s2^2,
//!   b12 = s1 t1, b13 = s2 s1 t1 s2^-1, b23 = s2 t2.
enum class SPName : std::uint8_t { A12, A13, A23, B12, B13, B23 };

inline constexpr std::array<SPName, 6> kSPNames{
    SPName::A12, SPName::A13, SPName::A23,
    SPName::B12, SPName::B13, SPName::B23};

std::string_view name_of(SPName name);

struct SPLetter {
  SPName       name     = SPName::A12;
  std::int64_t exponent = 1;

  SPName key() const { return name; }

  friend bool operator==(const SPLetter&, const SPLetter&) = default;
};

//! A freely reduced word over {a12, a13, a23, b12, b13, b23}.
class SPWord {
 public:
  SPWord() = default;
  //! \throws DomainError on a zero exponent.
  explicit SPWord(const std::vector<SPLetter>& letters);

  std::span<const SPLetter> letters() const noexcept { return letters_; }

  bool empty() const noexcept { return letters_.empty(); }

  std::size_t size() const noexcept { return letters_.size(); }

  //! Sum of |exponent|.
  std::size_t length() const noexcept;

  friend bool operator==(const SPWord&, const SPWord&) = default;

 private:
  std::vector<SPLetter> letters_;
};

SPWord concat(const SPWord& lhs, const SPWord& rhs);
SPWord invert(const SPWord& w);
SPWord power(const SPWord& w, std::int64_t k);

inline SPWord operator*(const SPWord& lhs, const SPWord& rhs) {
  return concat(lhs, rhs);
}

inline SPWord sp_word(SPName name, std::int64_t exponent = 1) {
  return SPWord({{name, exponent}});
}

//! Grammar: whitespace separated `a12 a13 a23 b12 b13 b23` tokens with an
//! optional `^<k>`; `1` is the identity.
//!
//! \throws ParseError naming the offending token.
SPWord parse_sp_word(std::string_view text);

std::string to_string(const SPWord& w);

//! Images of the 24 Schreier generators of SP_3 as SP words, indexed by
//! `expression_index`.
using ExpressionTable = std::array<SPWord, 24>;

//! Position of S_{lambda,a} (lambda in transversal3()) inside an
//! ExpressionTable: 4 * lambda + {s1, s2, t1, t2}.
std::size_t expression_index(const SchreierGenerator& g);

//! The expression table for SP_3 (trivial generators map to the empty word).
const ExpressionTable& expression_table();

//! \throws DomainError if `g` is not one of the 24 generators for n = 3.
const SPWord& express_schreier_gen(const SchreierGenerator& g,
                                   const ExpressionTable& table
                                   = expression_table());

//! tau-rewriting followed by the expression table.
//!
//! \throws DomainError unless `w` has 3 strands and pi(w) is the identity.
SPWord rewrite_to_sp3(const BraidWord& w,
                      const ExpressionTable& table = expression_table());

//! Substitutes the defining SG_3 word for every SP_3 letter.
BraidWord sp3_to_sg3(const SPWord& w);

//! The eight defining relators of SP_3 (as lhs * rhs^-1), ordered: the two
//! pure braid relations, [a12,b12], [a13,b13], [a23,b23],
//! [b12, a13 a23], and the two a12-conjugation relations for b13, b23.
const std::vector<SPWord>& theorem1_relators();

struct RelationLabel {
  std::string lhs;
  std::string rhs;
};

//! Human-readable `lhs = rhs` forms of theorem1_relators(), same order.
const std::vector<RelationLabel>& theorem1_relations();

//! Action of one SG_3 generator on the six SP_3 letters. `images[x]` is
//! g^-1 x g for the generator g.
struct GeneratorAction {
  Generator             generator;
  int                   sign = 1;
  std::array<SPWord, 6> images;
};

//! Actions of s1, s2, t1, t2 (sign +1) followed by their inverses.
using ActionTable = std::array<GeneratorAction, 8>;

const ActionTable& action_table();

//! x^g = g^-1 x g for a letter g = s_i^k or t_i^k (i in {1,2}), applied
//! letterwise and |k| times.
//!
//! \throws DomainError if `g` is not a 3-strand generator letter.
SPWord conjugate_by_sg3_generator(const SPWord& x, const GeneratorLetter& g,
                                  const ActionTable& table = action_table());

//! Exponent pair of an element of SP_2 = <a12, b12> (free abelian).
struct SP2Form {
  std::int64_t a_exp = 0;
  std::int64_t b_exp = 0;

  bool is_trivial() const noexcept { return a_exp == 0 && b_exp == 0; }

  friend bool operator==(const SP2Form&, const SP2Form&) = default;
};

//! \throws DomainError if `w` uses a letter other than a12, b12.
SP2Form sp2_normal_form(const SPWord& w);

}  // namespace sbraid
