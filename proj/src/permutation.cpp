#include "sbraid/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "sbraid/errors.hpp"

namespace sbraid {

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  auto p = identity(n);
  std::swap(p.images_.at(i - 1), p.images_.at(i));
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[x - 1]) {
      throw DomainError("not a permutation in one-line notation");
    }
    seen[x - 1] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) {
    inv[images_[i] - 1] = i + 1;
  }
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::code() const noexcept {
  std::uint64_t c = 0;
  for (int x : images_) {
    c = c * 16 + static_cast<std::uint64_t>(x);
  }
  return c;
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) {
    throw DomainError("permutation degree mismatch");
  }
  std::vector<int> images(first.images_.size());
  for (int i = 0; i < first.degree(); ++i) {
    images[i] = second(first.images_[i]);
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  std::string       out;
  std::vector<bool> done(static_cast<std::size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (done[start - 1]) {
      continue;
    }
    out += '(';
    int x = start;
    do {
      if (x != start) {
        out += ' ';
      }
      out += std::to_string(x);
      done[x - 1] = true;
      x           = p(x);
    } while (x != start);
    out += ')';
  }
  return out;
}

std::string to_one_line_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) {
      out += ',';
    }
    out += std::to_string(p(i));
  }
  return out + "]";
}

Permutation pi(const BraidWord& w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  // Apply each odd-power letter's transposition to the current images.
  for (const auto& l : w.letters()) {
    if (l.exponent % 2 == 0) {
      continue;
    }
    for (int& x : images) {
      if (x == l.index) {
        x = l.index + 1;
      } else if (x == l.index + 1) {
        x = l.index;
      }
    }
  }
  return Permutation(std::move(images));
}

Transversal::Transversal(int strands, std::vector<BraidWord> reps)
    : strands_(strands), reps_(std::move(reps)) {
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (reps_[i].strands() != strands_) {
      throw DomainError("transversal representative has wrong strand count");
    }
    auto [it, inserted] = by_code_.emplace(pi(reps_[i]).code(), i);
    if (!inserted) {
      throw InvariantError("two transversal representatives share a coset");
    }
  }
}

std::size_t Transversal::index_of(const Permutation& p) const {
  auto it = by_code_.find(p.code());
  if (p.degree() != strands_ || it == by_code_.end()) {
    throw DomainError("permutation " + to_one_line_string(p)
                      + " has no representative");
  }
  return it->second;
}

std::optional<std::size_t> Transversal::find(const BraidWord& w) const {
  if (w.strands() != strands_) {
    return std::nullopt;
  }
  auto i = index_of(pi(w));
  if (reps_[i] == w) {
    return i;
  }
  return std::nullopt;
}

Transversal schreier_transversal(int n) {
  if (n < 2 || n > kMaxTransversalStrands) {
    throw DomainError("transversal supports 2 <= n <= "
                      + std::to_string(kMaxTransversalStrands) + ", got "
                      + std::to_string(n));
  }
  // Unit sigma-letter index sequences, built factor by factor.
  std::vector<std::vector<int>> words{{}};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : words) {
      for (int l = 1; l <= k; ++l) {
        auto w = prefix;
        for (int i = k - 1; i >= l; --i) {
          w.push_back(i);
        }
        next.push_back(std::move(w));
      }
    }
    words = std::move(next);
  }
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  });
  std::vector<BraidWord> reps;
  reps.reserve(words.size());
  for (const auto& w : words) {
    std::vector<GeneratorLetter> letters;
    for (int i : w) {
      letters.push_back({Kind::Sigma, i, 1});
    }
    reps.emplace_back(n, letters);
  }
  return Transversal(n, std::move(reps));
}

const Transversal& transversal3() {
  static const Transversal t = schreier_transversal(3);
  return t;
}

const BraidWord& coset_rep(const BraidWord& w, const Transversal& t) {
  if (w.strands() != t.strands()) {
    throw DomainError("strand count mismatch between word and transversal");
  }
  return t.rep_for(pi(w));
}

}  // namespace sbraid
