#pragma once

#include <vector>

namespace sbraid::detail {

// Appends `letter` to a run-length encoded, freely reduced letter sequence.
// Letter types expose `key()` (equality-comparable symbol) and `exponent`.
template <typename Letter>
void push_reduced(std::vector<Letter>& letters, Letter letter) {
  if (letter.exponent == 0) {
    return;
  }
  if (!letters.empty() && letters.back().key() == letter.key()) {
    letters.back().exponent += letter.exponent;
    if (letters.back().exponent == 0) {
      letters.pop_back();
    }
    return;
  }
  letters.push_back(letter);
}

template <typename Letter>
std::vector<Letter> reduced(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const auto& l : raw) {
    push_reduced(out, l);
  }
  return out;
}

template <typename Letter>
std::vector<Letter> inverted(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (auto& l : out) {
    l.exponent = -l.exponent;
  }
  return out;
}

}  // namespace sbraid::detail
