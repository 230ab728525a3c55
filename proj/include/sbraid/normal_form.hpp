#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbraid/braid_word.hpp"
#include "sbraid/sp3.hpp"

namespace sbraid {

// Decision procedures for SP_3 and SG_3.
//
// SP_3 splits as <delta> x V~, delta = a12 a13 a23 central. V~ is an HNN
// extension of V = <a13,b13> * <a23,b23> (two free abelian factors of rank
// 2) with stable letter b12 commuting with c = a13 a23. Triviality is decided
// by extracting delta, collecting free product syllables, and cancelling
// pinches b12^-e c^k b12^e until the form is Britton-reduced.

enum class Factor : std::uint8_t { F13, F23 };

//! a13^a b13^b (F13) or a23^a b23^b (F23); never both exponents zero.
struct FactorSyllable {
  Factor       factor = Factor::F13;
  std::int64_t a_exp  = 0;
  std::int64_t b_exp  = 0;

  friend bool operator==(const FactorSyllable&, const FactorSyllable&) = default;
};

//! Normal form in Z^2 * Z^2: nonzero syllables with alternating factors.
class FreeProductWord {
 public:
  FreeProductWord() = default;
  //! Collects raw syllables, dropping zeros and merging neighbours.
  explicit FreeProductWord(const std::vector<FactorSyllable>& syllables);

  std::span<const FactorSyllable> syllables() const noexcept {
    return syllables_;
  }

  bool empty() const noexcept { return syllables_.empty(); }

  std::size_t size() const noexcept { return syllables_.size(); }

  //! Multiplies on the right, re-merging across the boundary.
  void append(const FactorSyllable& s);
  void append(const FreeProductWord& w);

  FreeProductWord inverse() const;

  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  std::vector<FactorSyllable> syllables_;
};

FreeProductWord operator*(FreeProductWord lhs, const FreeProductWord& rhs);

//! c^k with c = a13 a23.
FreeProductWord power_of_c(std::int64_t k);

//! Britton-reduced element of V~: bases[0] b12^e[0] bases[1] ... bases[m].
struct HNNForm {
  std::vector<FreeProductWord> bases{FreeProductWord{}};
  std::vector<std::int64_t>    stable_exps;

  std::size_t stable_count() const noexcept { return stable_exps.size(); }

  bool is_trivial() const noexcept {
    return stable_exps.empty() && bases.front().empty();
  }

  friend bool operator==(const HNNForm&, const HNNForm&) = default;
};

struct CenterSplitForm {
  std::int64_t delta_exp = 0;
  HNNForm      v;

  bool is_trivial() const noexcept { return delta_exp == 0 && v.is_trivial(); }

  friend bool operator==(const CenterSplitForm&, const CenterSplitForm&) = default;
};

struct DeltaSplit {
  std::int64_t delta_exp = 0;
  SPWord       residual;  // no a12 letters
};

//! Replaces a12^{+-1} by (delta a23^-1 a13^-1)^{+-1} and collects delta.
DeltaSplit eliminate_a12(const SPWord& w);

//! \throws DomainError if `w` contains a12 or b12.
FreeProductWord free_product_nf(const SPWord& w);

//! Some(k) iff `w` is c^k.
std::optional<std::int64_t> cyclic_power_of_c(const FreeProductWord& w);

struct BrittonTrace {
  std::size_t pinches = 0;             // unit pinches b12^-e c^k b12^e removed
  std::size_t stable_letters_in = 0;   // sum |e| over the b12 letters of input
};

//! \throws DomainError if `w` contains a12.
HNNForm britton_reduce(const SPWord& w, BrittonTrace* trace = nullptr);

//! Full decision form: delta exponent and the Britton-reduced V~ part.
CenterSplitForm center_split(const SPWord& w);

bool is_trivial_sp3(const SPWord& w);
bool equal_sp3(const SPWord& lhs, const SPWord& rhs);

//! \throws DomainError unless `w` has 3 strands.
bool is_trivial_sg3(const BraidWord& w);

//! delta = a12 a13 a23, the generator of the centre of SP_3 and SG_3.
SPWord center_generator();

//! Reassembles an SP word (over a13 a23 b12 b13 b23 and delta written as
//! a12 a13 a23) equal to the form.
SPWord to_sp_word(const CenterSplitForm& f);
SPWord to_sp_word(const FreeProductWord& w);

//! `d^<k> | <base0> [b12^<e1> <base1> ...]`, or `1` for the identity.
std::string to_string(const CenterSplitForm& f);
std::string to_string(const FreeProductWord& w);

//! Display-only variant of to_string: each base after a stable letter is
//! shifted by the power of c that gives it the fewest syllables (ties: the
//! smallest |k|, then k > 0), pushing c^k leftwards through the commuting
//! stable letter. Not a contractual normal form.
std::string to_canonical_string(const CenterSplitForm& f);

}  // namespace sbraid
