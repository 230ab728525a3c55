#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbraid/braid_word.hpp"

namespace sbraid {

//! A permutation of {1, ..., n} in one-line notation: images()[i-1] is the
//! image of point i.
//!
//! Products compose left to right: (p * q)(i) = q(p(i)), matching the way a
//! braid word is read.
class Permutation {
 public:
  static Permutation identity(int n);

  //! The transposition swapping i and i+1.
  static Permutation adjacent_transposition(int n, int i);

  //! \throws DomainError if `images` is not a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  int operator()(int point) const { return images_.at(point - 1); }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  Permutation inverse() const;

  //! Packs the images into an integer; distinct permutations of the same
  //! degree get distinct codes.
  std::uint64_t code() const noexcept;

  friend Permutation operator*(const Permutation& first,
                               const Permutation& second);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

//! Cycle notation including fixed points, e.g. `(1 2)(3)`.
std::string to_cycle_string(const Permutation& p);
//! One-line notation, e.g. `[2,1,3]`.
std::string to_one_line_string(const Permutation& p);

//! The projection onto S_n sending sigma_i and tau_i to (i, i+1).
Permutation pi(const BraidWord& w);

//! A Schreier transversal for SP_n in SG_n: one positive sigma-word per
//! permutation, closed under prefixes. Representatives are kept in shortlex
//! order (length, then generator indices), which for n = 3 is
//! 1, s1, s2, s1 s2, s2 s1, s1 s2 s1.
class Transversal {
 public:
  Transversal(int strands, std::vector<BraidWord> reps);

  int strands() const noexcept { return strands_; }

  std::size_t size() const noexcept { return reps_.size(); }

  std::span<const BraidWord> reps() const noexcept { return reps_; }

  const BraidWord& rep(std::size_t index) const { return reps_.at(index); }

  //! Index of the representative whose image under pi is `p`.
  std::size_t index_of(const Permutation& p) const;

  //! Index of `w` if it is literally one of the representatives.
  std::optional<std::size_t> find(const BraidWord& w) const;

  const BraidWord& rep_for(const Permutation& p) const {
    return reps_[index_of(p)];
  }

 private:
  int                                          strands_;
  std::vector<BraidWord>                       reps_;
  std::unordered_map<std::uint64_t, std::size_t> by_code_;
};

inline constexpr int kMaxTransversalStrands = 6;

//! Builds the transversal from products m_{2,j_2} m_{3,j_3} ... m_{n,j_n}
//! with m_{k,l} = s_{k-1} s_{k-2} ... s_l (and 1 when l = k).
//!
//! \throws DomainError unless 2 <= n <= 6.
Transversal schreier_transversal(int n);

//! Shared, lazily built transversal for n = 3.
const Transversal& transversal3();

//! The representative of the coset SP_n * w.
//!
//! \throws DomainError when the strand counts differ.
const BraidWord& coset_rep(const BraidWord& w, const Transversal& t);

}  // namespace sbraid
