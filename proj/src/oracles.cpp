#include "sbraid/oracles.hpp"

#include <cstdlib>

#include "sbraid/errors.hpp"
#include "sbraid/permutation.hpp"

namespace sbraid {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InvariantError("integer overflow in 2x2 matrix product");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InvariantError("integer overflow in 2x2 matrix product");
  }
  return r;
}

const IntMatrix2 kSigma1{{1, 1, 0, 1}};
const IntMatrix2 kSigma1Inv{{1, -1, 0, 1}};
const IntMatrix2 kSigma2{{1, 0, -1, 1}};
const IntMatrix2 kSigma2Inv{{1, 0, 1, 1}};

void require_three_strands(const BraidWord& w) {
  if (w.strands() != 3) {
    throw DomainError("B_3 oracles need a 3-strand word");
  }
}

}  // namespace

std::int64_t IntMatrix2::determinant() const {
  return checked_add(checked_mul(e[0], e[3]), -checked_mul(e[1], e[2]));
}

IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs) {
  const auto& a = lhs.e;
  const auto& b = rhs.e;
  return {{checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[2])),
           checked_add(checked_mul(a[0], b[1]), checked_mul(a[1], b[3])),
           checked_add(checked_mul(a[2], b[0]), checked_mul(a[3], b[2])),
           checked_add(checked_mul(a[2], b[1]), checked_mul(a[3], b[3]))}};
}

std::string to_string(const IntMatrix2& m) {
  return "[[" + std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "],["
         + std::to_string(m.e[2]) + "," + std::to_string(m.e[3]) + "]]";
}

BraidWord quotient_to_b3(const BraidWord& w, TauRule rule) {
  require_three_strands(w);
  std::vector<GeneratorLetter> letters;
  for (auto l : w.letters()) {
    if (l.kind == Kind::Tau) {
      l.kind = Kind::Sigma;
      if (rule == TauRule::TauToSigmaInverse) {
        l.exponent = -l.exponent;
      }
    }
    letters.push_back(l);
  }
  return BraidWord(3, letters);
}

IntMatrix2 b3_matrix_image(const BraidWord& w) {
  require_three_strands(w);
  auto m = IntMatrix2::identity();
  for (const auto& l : w.letters()) {
    if (l.kind != Kind::Sigma) {
      throw DomainError("B_3 matrix image needs a word without tau letters");
    }
    const auto& step = l.index == 1 ? (l.exponent > 0 ? kSigma1 : kSigma1Inv)
                                    : (l.exponent > 0 ? kSigma2 : kSigma2Inv);
    for (std::int64_t k = 0; k < std::llabs(l.exponent); ++k) {
      m = m * step;
    }
  }
  return m;
}

bool b3_is_trivial(const BraidWord& w) {
  return exponent_sums(w).sigma == 0 && b3_matrix_image(w).is_identity();
}

OracleReport oracle_report(const BraidWord& w) {
  require_three_strands(w);
  OracleReport r;
  r.pi_trivial = pi(w).is_identity();
  auto sums    = exponent_sums(w);
  r.sigma_sum  = sums.sigma;
  r.tau_sum    = sums.tau;
  r.b3_tau_to_sigma = b3_is_trivial(quotient_to_b3(w, TauRule::TauToSigma));
  r.b3_tau_to_sigma_inverse
      = b3_is_trivial(quotient_to_b3(w, TauRule::TauToSigmaInverse));
  return r;
}

bool sg3_necessary_trivial(const BraidWord& w) {
  return oracle_report(w).necessary_trivial();
}

void audit_quotient_homomorphisms() {
  for (const auto& r : sg3_relators()) {
    for (auto rule : {TauRule::TauToSigma, TauRule::TauToSigmaInverse}) {
      if (!b3_is_trivial(quotient_to_b3(r, rule))) {
        throw InvariantError("quotient to B_3 does not kill relator "
                             + to_string(r));
      }
    }
  }
}

}  // namespace sbraid
