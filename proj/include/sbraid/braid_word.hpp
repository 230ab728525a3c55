#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sbraid {

enum class Kind : std::uint8_t { Sigma, Tau };

//! A generator symbol of the singular braid group: sigma_i or tau_i.
struct Generator {
  Kind kind  = Kind::Sigma;
  int  index = 1;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline constexpr Generator sigma(int i) { return {Kind::Sigma, i}; }
inline constexpr Generator tau(int i) { return {Kind::Tau, i}; }

//! A generator raised to a nonzero integer power.
struct GeneratorLetter {
  Kind         kind     = Kind::Sigma;
  int          index    = 1;
  std::int64_t exponent = 1;

  Generator key() const { return {kind, index}; }

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

inline GeneratorLetter letter(Generator g, std::int64_t exponent = 1) {
  return {g.kind, g.index, exponent};
}

//! A word in the generators of SG_n, stored freely reduced with run-length
//! exponents. The strand count belongs to the word.
//!
//! Values never change after construction; all operations return new words.
class BraidWord {
 public:
  explicit BraidWord(int strands);

  //! Validates indices against `strands` and freely reduces.
  //!
  //! \throws DomainError if strands < 2, an index is outside 1..strands-1, or
  //! a letter has exponent zero.
  BraidWord(int strands, const std::vector<GeneratorLetter>& letters);

  int strands() const noexcept { return strands_; }

  std::span<const GeneratorLetter> letters() const noexcept { return letters_; }

  bool empty() const noexcept { return letters_.empty(); }

  //! Number of stored (run-length) letters.
  std::size_t size() const noexcept { return letters_.size(); }

  //! Sum of |exponent| over all letters, i.e. the unit-letter length.
  std::size_t length() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int                          strands_;
  std::vector<GeneratorLetter> letters_;
};

//! Parses the ASCII word grammar: whitespace separated `s<i>` / `t<i>` tokens
//! with optional `^<k>`; the token `1` denotes the identity.
//!
//! \throws ParseError on a malformed token, DomainError on a bad index.
BraidWord parse_braid_word(std::string_view text, int strands);

std::string to_string(const BraidWord& w);
std::string to_string(const GeneratorLetter& l);
std::string to_string(Generator g);

//! \throws DomainError when strand counts differ.
BraidWord concat(const BraidWord& lhs, const BraidWord& rhs);
BraidWord invert(const BraidWord& w);
BraidWord power(const BraidWord& w, std::int64_t k);

inline BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  return concat(lhs, rhs);
}

//! The five defining relators of SG_3, in the order
//! [sigma1,tau1], braid relation, [sigma2,tau2], and the two mixed relations.
const std::vector<BraidWord>& sg3_relators();

struct ExponentSums {
  std::int64_t sigma = 0;
  std::int64_t tau   = 0;

  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

//! Total sigma and tau exponents. Both are invariants of SG_n elements.
ExponentSums exponent_sums(const BraidWord& w);

}  // namespace sbraid
