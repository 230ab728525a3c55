#pragma once

// Random word generators and brute-force reference computations shared by the
// unit tests and the acceptance binary. Nothing here calls into the library's
// reduction code, so the helpers can serve as independent oracles.

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sbraid/braid_word.hpp"
#include "sbraid/sp3.hpp"

namespace sbraid::testing {

using Rng = std::mt19937_64;

// A unit letter: generator plus sign.
struct Unit {
  Generator gen;
  int       sign = 1;
  friend bool operator==(const Unit&, const Unit&) = default;
};

inline std::vector<Unit> expand(const BraidWord& w) {
  std::vector<Unit> out;
  for (const auto& l : w.letters()) {
    int s = l.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (l.exponent > 0 ? l.exponent : -l.exponent);
         ++k) {
      out.push_back({l.key(), s});
    }
  }
  return out;
}

// Stack-based free reduction on unit letters.
inline std::vector<Unit> free_reduce_units(const std::vector<Unit>& in) {
  std::vector<Unit> st;
  for (const auto& u : in) {
    if (!st.empty() && st.back().gen == u.gen && st.back().sign == -u.sign) {
      st.pop_back();
    } else {
      st.push_back(u);
    }
  }
  return st;
}

inline BraidWord from_units(int strands, const std::vector<Unit>& units) {
  std::vector<GeneratorLetter> ls;
  for (const auto& u : units) {
    ls.push_back(letter(u.gen, u.sign));
  }
  return BraidWord(strands, ls);
}

inline Unit random_unit(Rng& rng, int strands, bool allow_tau = true) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::bernoulli_distribution        coin(0.5);
  Kind k = (allow_tau && coin(rng)) ? Kind::Tau : Kind::Sigma;
  return {{k, idx(rng)}, coin(rng) ? 1 : -1};
}

inline std::vector<Unit> random_units(Rng& rng, int strands, std::size_t len,
                                      bool allow_tau = true) {
  std::vector<Unit> out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(random_unit(rng, strands, allow_tau));
  }
  return out;
}

inline BraidWord random_word(Rng& rng, int strands, std::size_t max_len,
                             bool allow_tau = true) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return from_units(strands, random_units(rng, strands, len(rng), allow_tau));
}

// Point images of a unit-letter word acting left to right, computed by
// swapping entries of an explicit array.
inline std::vector<int> brute_images(int strands, const std::vector<Unit>& w) {
  std::vector<int> where(strands);  // where[p-1] = current position of p
  for (int p = 0; p < strands; ++p) {
    where[p] = p + 1;
  }
  for (const auto& u : w) {
    int i = u.gen.index;
    for (auto& pos : where) {
      if (pos == i) {
        pos = i + 1;
      } else if (pos == i + 1) {
        pos = i;
      }
    }
  }
  return where;
}

// Appends a word whose projection undoes that of `w`: sigma_i^2 style fixes
// make the result pure. Built by bubble sorting the current images back.
inline void close_to_pure(int strands, std::vector<Unit>& w, Rng& rng) {
  auto img = brute_images(strands, w);
  // inverse permutation as an array of values, sorted by adjacent swaps
  std::vector<int> at(strands);
  for (int p = 0; p < strands; ++p) {
    at[img[p] - 1] = p + 1;
  }
  std::bernoulli_distribution coin(0.5);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < strands; ++i) {
      if (at[i] > at[i + 1]) {
        std::swap(at[i], at[i + 1]);
        Kind k = coin(rng) ? Kind::Tau : Kind::Sigma;
        w.push_back({{k, i + 1}, coin(rng) ? 1 : -1});
        swapped = true;
      }
    }
  }
}

inline BraidWord random_pure_word(Rng& rng, int strands, std::size_t max_len) {
  // Leave room for the closing swaps (at most n(n-1)/2).
  std::size_t closing = static_cast<std::size_t>(strands * (strands - 1) / 2);
  std::uniform_int_distribution<std::size_t> len(0, max_len - closing);
  auto units = random_units(rng, strands, len(rng));
  close_to_pure(strands, units, rng);
  return from_units(strands, units);
}

inline SPWord random_sp_word(Rng& rng, std::size_t max_len,
                             const std::vector<SPName>& alphabet
                             = {kSPNames.begin(), kSPNames.end()}) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::bernoulli_distribution                coin(0.5);
  std::vector<SPLetter>                      ls;
  std::size_t                                n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    ls.push_back({alphabet[pick(rng)], coin(rng) ? 1 : -1});
  }
  return SPWord(ls);
}

// Product of `count` random conjugates w r^{+-1} w^-1 of the given relators.
inline BraidWord random_relator_product(Rng& rng,
                                        const std::vector<BraidWord>& relators,
                                        std::size_t count,
                                        std::size_t conj_len) {
  int strands = relators.front().strands();
  BraidWord out(strands);
  std::uniform_int_distribution<std::size_t> pick(0, relators.size() - 1);
  std::bernoulli_distribution                coin(0.5);
  for (std::size_t i = 0; i < count; ++i) {
    BraidWord c = random_word(rng, strands, conj_len);
    BraidWord r = relators[pick(rng)];
    if (coin(rng)) {
      r = invert(r);
    }
    out = out * c * r * invert(c);
  }
  return out;
}

// Plain 2x2 matrix product with no overflow handling, for small words.
using Mat = std::array<std::int64_t, 4>;
inline Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace sbraid::testing
