#include "sbraid/normal_form.hpp"

#include <algorithm>
#include <cstdlib>

#include "sbraid/errors.hpp"
#include "sbraid/permutation.hpp"

namespace sbraid {

namespace {

int sign_of(std::int64_t x) { return x > 0 ? 1 : -1; }

FactorSyllable to_syllable(const SPLetter& l) {
  switch (l.name) {
    case SPName::A13:
      return {Factor::F13, l.exponent, 0};
    case SPName::B13:
      return {Factor::F13, 0, l.exponent};
    case SPName::A23:
      return {Factor::F23, l.exponent, 0};
    case SPName::B23:
      return {Factor::F23, 0, l.exponent};
    default:
      throw DomainError("letter " + std::string(name_of(l.name))
                        + " is not in the free product base group");
  }
}

// Appends b12^e to a Britton-reduced form, cancelling pinches against the
// last stable letter until none is left.
void push_stable(HNNForm& f, std::int64_t e, BrittonTrace* trace) {
  while (true) {
    if (f.stable_exps.empty()) {
      break;
    }
    const auto& g  = f.bases.back();
    const auto  e1 = f.stable_exps.back();
    const auto  k  = cyclic_power_of_c(g);
    if (!k || (!g.empty() && sign_of(e1) == sign_of(e))) {
      break;
    }
    if (sign_of(e1) != sign_of(e) && trace != nullptr) {
      trace->pinches += static_cast<std::size_t>(
          std::min(std::llabs(e1), std::llabs(e)));
    }
    if (!g.empty() && std::llabs(e1) > std::llabs(e)) {
      // b12^e1 c^k b12^e = b12^(e1+e) c^k; the base keeps c^k.
      f.stable_exps.back() = e1 + e;
      return;
    }
    auto carried = g;
    f.bases.pop_back();
    f.stable_exps.pop_back();
    f.bases.back().append(carried);
    e += e1;
    if (e == 0) {
      return;
    }
  }
  f.stable_exps.push_back(e);
  f.bases.emplace_back();
}

}  // namespace

FreeProductWord::FreeProductWord(const std::vector<FactorSyllable>& syllables) {
  for (const auto& s : syllables) {
    append(s);
  }
}

void FreeProductWord::append(const FactorSyllable& s) {
  if (s.a_exp == 0 && s.b_exp == 0) {
    return;
  }
  if (!syllables_.empty() && syllables_.back().factor == s.factor) {
    auto& last = syllables_.back();
    last.a_exp += s.a_exp;
    last.b_exp += s.b_exp;
    if (last.a_exp == 0 && last.b_exp == 0) {
      // The new last syllable belongs to the other factor, so nothing more
      // can merge here.
      syllables_.pop_back();
    }
    return;
  }
  syllables_.push_back(s);
}

void FreeProductWord::append(const FreeProductWord& w) {
  for (const auto& s : w.syllables_) {
    append(s);
  }
}

FreeProductWord FreeProductWord::inverse() const {
  FreeProductWord out;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.append({it->factor, -it->a_exp, -it->b_exp});
  }
  return out;
}

FreeProductWord operator*(FreeProductWord lhs, const FreeProductWord& rhs) {
  lhs.append(rhs);
  return lhs;
}

FreeProductWord power_of_c(std::int64_t k) {
  FreeProductWord out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) {
    if (k > 0) {
      out.append({Factor::F13, 1, 0});
      out.append({Factor::F23, 1, 0});
    } else {
      out.append({Factor::F23, -1, 0});
      out.append({Factor::F13, -1, 0});
    }
  }
  return out;
}

DeltaSplit eliminate_a12(const SPWord& w) {
  DeltaSplit            out;
  std::vector<SPLetter> letters;
  for (const auto& l : w.letters()) {
    if (l.name != SPName::A12) {
      letters.push_back(l);
      continue;
    }
    out.delta_exp += l.exponent;
    for (std::int64_t i = 0; i < std::llabs(l.exponent); ++i) {
      if (l.exponent > 0) {
        letters.push_back({SPName::A23, -1});
        letters.push_back({SPName::A13, -1});
      } else {
        letters.push_back({SPName::A13, 1});
        letters.push_back({SPName::A23, 1});
      }
    }
  }
  out.residual = SPWord(letters);
  return out;
}

FreeProductWord free_product_nf(const SPWord& w) {
  FreeProductWord out;
  for (const auto& l : w.letters()) {
    out.append(to_syllable(l));
  }
  return out;
}

std::optional<std::int64_t> cyclic_power_of_c(const FreeProductWord& w) {
  const auto s = w.syllables();
  if (s.empty()) {
    return 0;
  }
  if (s.size() % 2 != 0) {
    return std::nullopt;
  }
  const bool positive = s.front().factor == Factor::F13;
  const auto unit     = positive ? 1 : -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].a_exp != unit || s[i].b_exp != 0) {
      return std::nullopt;
    }
  }
  // Alternation is guaranteed by the normal form, so the first factor fixes
  // the pattern.
  return static_cast<std::int64_t>(s.size() / 2) * unit;
}

HNNForm britton_reduce(const SPWord& w, BrittonTrace* trace) {
  HNNForm f;
  for (const auto& l : w.letters()) {
    if (l.name == SPName::A12) {
      throw DomainError("a12 must be eliminated before Britton reduction");
    }
    if (l.name == SPName::B12) {
      if (trace != nullptr) {
        trace->stable_letters_in += static_cast<std::size_t>(std::llabs(l.exponent));
      }
      push_stable(f, l.exponent, trace);
    } else {
      f.bases.back().append(to_syllable(l));
    }
  }
  return f;
}

CenterSplitForm center_split(const SPWord& w) {
  auto split = eliminate_a12(w);
  return {split.delta_exp, britton_reduce(split.residual)};
}

bool is_trivial_sp3(const SPWord& w) { return center_split(w).is_trivial(); }

bool equal_sp3(const SPWord& lhs, const SPWord& rhs) {
  return is_trivial_sp3(concat(lhs, invert(rhs)));
}

bool is_trivial_sg3(const BraidWord& w) {
  if (w.strands() != 3) {
    throw DomainError("SG_3 decision needs a 3-strand word");
  }
  if (!pi(w).is_identity()) {
    return false;
  }
  return is_trivial_sp3(rewrite_to_sp3(w));
}

SPWord center_generator() { return parse_sp_word("a12 a13 a23"); }

SPWord to_sp_word(const FreeProductWord& w) {
  std::vector<SPLetter> letters;
  for (const auto& s : w.syllables()) {
    const bool f13 = s.factor == Factor::F13;
    if (s.a_exp != 0) {
      letters.push_back({f13 ? SPName::A13 : SPName::A23, s.a_exp});
    }
    if (s.b_exp != 0) {
      letters.push_back({f13 ? SPName::B13 : SPName::B23, s.b_exp});
    }
  }
  return SPWord(letters);
}

SPWord to_sp_word(const CenterSplitForm& f) {
  auto out = power(center_generator(), f.delta_exp);
  out      = concat(out, to_sp_word(f.v.bases[0]));
  for (std::size_t i = 0; i < f.v.stable_exps.size(); ++i) {
    out = concat(out, sp_word(SPName::B12, f.v.stable_exps[i]));
    out = concat(out, to_sp_word(f.v.bases[i + 1]));
  }
  return out;
}

std::string to_string(const FreeProductWord& w) {
  return to_string(to_sp_word(w));
}

namespace {

std::string render(std::int64_t delta_exp, const HNNForm& v) {
  std::string body;
  auto        add = [&body](const std::string& piece) {
    if (!body.empty()) {
      body += ' ';
    }
    body += piece;
  };
  if (!v.bases[0].empty()) {
    add(to_string(v.bases[0]));
  }
  for (std::size_t i = 0; i < v.stable_exps.size(); ++i) {
    add("b12^" + std::to_string(v.stable_exps[i]));
    if (!v.bases[i + 1].empty()) {
      add(to_string(v.bases[i + 1]));
    }
  }
  if (body.empty()) {
    if (delta_exp == 0) {
      return "1";
    }
    body = "1";
  }
  return "d^" + std::to_string(delta_exp) + " | " + body;
}

}  // namespace

std::string to_string(const CenterSplitForm& f) {
  return render(f.delta_exp, f.v);
}

std::string to_canonical_string(const CenterSplitForm& f) {
  HNNForm v = f.v;
  for (std::size_t i = v.stable_exps.size(); i >= 1; --i) {
    const auto& base   = v.bases[i];
    const auto  window = static_cast<std::int64_t>(base.size() / 2 + 1);
    std::int64_t    best_k = 0;
    FreeProductWord best   = base;
    for (std::int64_t mag = 1; mag <= window; ++mag) {
      for (std::int64_t k : {mag, -mag}) {
        auto candidate = power_of_c(-k) * base;
        if (candidate.size() < best.size()) {
          best   = std::move(candidate);
          best_k = k;
        }
      }
    }
    v.bases[i] = std::move(best);
    v.bases[i - 1].append(power_of_c(best_k));
  }
  // Shifting can empty a base between two equal-signed stable letters.
  HNNForm merged;
  merged.bases[0] = v.bases[0];
  for (std::size_t i = 0; i < v.stable_exps.size(); ++i) {
    if (!merged.stable_exps.empty() && merged.bases.back().empty()) {
      merged.stable_exps.back() += v.stable_exps[i];
      merged.bases.back() = v.bases[i + 1];
      if (merged.stable_exps.back() == 0) {
        merged.stable_exps.pop_back();
        auto tail = merged.bases.back();
        merged.bases.pop_back();
        merged.bases.back().append(tail);
      }
    } else {
      merged.stable_exps.push_back(v.stable_exps[i]);
      merged.bases.push_back(v.bases[i + 1]);
    }
  }
  return render(f.delta_exp, merged);
}

}  // namespace sbraid
