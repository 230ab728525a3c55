#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sbraid/braid_word.hpp"

namespace sbraid {

// Necessary conditions for triviality in SG_3, independent of the normal
// form engine. B_3 maps onto SL(2,Z) via
//   s1 -> [[1,1],[0,1]],  s2 -> [[1,0],[-1,1]],
// with kernel generated by the fourth power of the half twist, so a B_3 word
// is trivial iff its matrix is the identity and its exponent sum is zero.

//! Row-major 2x2 integer matrix. Products throw on 64-bit overflow.
struct IntMatrix2 {
  std::array<std::int64_t, 4> e{1, 0, 0, 1};

  static IntMatrix2 identity() { return {}; }

  std::int64_t determinant() const;

  bool is_identity() const noexcept { return e == identity().e; }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

//! \throws InvariantError on overflow.
IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs);

std::string to_string(const IntMatrix2& m);

enum class TauRule { TauToSigma, TauToSigmaInverse };

//! SG_3 -> B_3, t_i -> s_i or t_i -> s_i^-1.
//!
//! \throws DomainError unless `w` has 3 strands.
BraidWord quotient_to_b3(const BraidWord& w, TauRule rule);

//! \throws DomainError if `w` contains tau letters or has != 3 strands.
IntMatrix2 b3_matrix_image(const BraidWord& w);

bool b3_is_trivial(const BraidWord& w);

struct OracleReport {
  bool         pi_trivial = false;
  std::int64_t sigma_sum  = 0;
  std::int64_t tau_sum    = 0;
  bool         b3_tau_to_sigma         = false;
  bool         b3_tau_to_sigma_inverse = false;

  //! Conjunction of every invariant.
  bool necessary_trivial() const noexcept {
    return pi_trivial && sigma_sum == 0 && tau_sum == 0 && b3_tau_to_sigma
           && b3_tau_to_sigma_inverse;
  }
};

OracleReport oracle_report(const BraidWord& w);

bool sg3_necessary_trivial(const BraidWord& w);

//! Checks that both quotient maps kill all five SG_3 relators.
//!
//! \throws InvariantError if one does not.
void audit_quotient_homomorphisms();

}  // namespace sbraid
