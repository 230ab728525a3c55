#include "sbraid/braid_word.hpp"

#include <cstdlib>
#include <sstream>

#include "sbraid/detail/free_reduce.hpp"
#include "sbraid/detail/parse_int.hpp"
#include "sbraid/errors.hpp"

namespace sbraid {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw DomainError("strand count must be at least 2, got "
                      + std::to_string(strands));
  }
}

void check_letter(const GeneratorLetter& l, int strands) {
  if (l.index < 1 || l.index > strands - 1) {
    throw DomainError("generator index " + std::to_string(l.index)
                      + " out of range for " + std::to_string(strands)
                      + " strands");
  }
  if (l.exponent == 0) {
    throw DomainError("zero exponent in generator letter");
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  check_strands(strands);
}

BraidWord::BraidWord(int strands, const std::vector<GeneratorLetter>& letters)
    : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    check_letter(l, strands);
    detail::push_reduced(letters_, l);
  }
}

std::size_t BraidWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) {
    n += static_cast<std::size_t>(std::llabs(l.exponent));
  }
  return n;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<GeneratorLetter> letters;
  std::istringstream           in{std::string(text)};
  std::string                  token;
  while (in >> token) {
    if (token == "1") {
      continue;
    }
    std::string_view tok = token;
    GeneratorLetter  l;
    if (tok.front() == 's') {
      l.kind = Kind::Sigma;
    } else if (tok.front() == 't') {
      l.kind = Kind::Tau;
    } else {
      throw ParseError("unknown generator in token '" + token + "'", token);
    }
    tok.remove_prefix(1);
    auto             caret = tok.find('^');
    std::string_view index_part = tok.substr(0, caret);
    std::int64_t     index      = 0;
    if (index_part.empty() || index_part.front() == '+'
        || index_part.front() == '-' || !detail::parse_int(index_part, index)) {
      throw ParseError("bad generator index in token '" + token + "'", token);
    }
    if (caret != std::string_view::npos) {
      if (!detail::parse_int(tok.substr(caret + 1), l.exponent)) {
        throw ParseError("bad exponent in token '" + token + "'", token);
      }
      if (l.exponent == 0) {
        throw ParseError("zero exponent in token '" + token + "'", token);
      }
    }
    if (index < 1 || index > strands - 1) {
      throw DomainError("generator index in token '" + token
                        + "' out of range for " + std::to_string(strands)
                        + " strands");
    }
    l.index = static_cast<int>(index);
    letters.push_back(l);
  }
  return BraidWord(strands, letters);
}

std::string to_string(Generator g) {
  return (g.kind == Kind::Sigma ? "s" : "t") + std::to_string(g.index);
}

std::string to_string(const GeneratorLetter& l) {
  auto s = to_string(l.key());
  if (l.exponent != 1) {
    s += "^" + std::to_string(l.exponent);
  }
  return s;
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(l);
  }
  return out;
}

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands()) {
    throw DomainError("strand count mismatch: "
                      + std::to_string(lhs.strands()) + " vs "
                      + std::to_string(rhs.strands()));
  }
  std::vector<GeneratorLetter> letters(lhs.letters().begin(),
                                       lhs.letters().end());
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return BraidWord(lhs.strands(), letters);
}

BraidWord invert(const BraidWord& w) {
  std::vector<GeneratorLetter> letters(w.letters().begin(), w.letters().end());
  return BraidWord(w.strands(), detail::inverted(letters));
}

BraidWord power(const BraidWord& w, std::int64_t k) {
  BraidWord base = k < 0 ? invert(w) : w;
  BraidWord out(w.strands());
  for (std::int64_t i = 0; i < std::llabs(k); ++i) {
    out = concat(out, base);
  }
  return out;
}

const std::vector<BraidWord>& sg3_relators() {
  static const std::vector<BraidWord> relators = [] {
    std::vector<BraidWord> r;
    for (auto text : {"s1 t1 s1^-1 t1^-1",
                      "s1 s2 s1 s2^-1 s1^-1 s2^-1",
                      "s2 t2 s2^-1 t2^-1",
                      "s1 s2 t1 s2^-1 s1^-1 t2^-1",
                      "s2 s1 t2 s1^-1 s2^-1 t1^-1"}) {
      r.push_back(parse_braid_word(text, 3));
    }
    return r;
  }();
  return relators;
}

ExponentSums exponent_sums(const BraidWord& w) {
  ExponentSums sums;
  for (const auto& l : w.letters()) {
    (l.kind == Kind::Sigma ? sums.sigma : sums.tau) += l.exponent;
  }
  return sums;
}

}  // namespace sbraid
