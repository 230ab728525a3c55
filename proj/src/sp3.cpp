#include "sbraid/sp3.hpp"

#include <cstdlib>
#include <sstream>

#include "sbraid/detail/free_reduce.hpp"
#include "sbraid/detail/parse_int.hpp"
#include "sbraid/errors.hpp"

namespace sbraid {

namespace {

constexpr std::array<std::string_view, 6> kNames{"a12", "a13", "a23",
                                                 "b12", "b13", "b23"};

std::size_t slot(SPName name) { return static_cast<std::size_t>(name); }

// Defining words in SG_3, indexed by SPName.
const std::array<BraidWord, 6>& defining_words() {
  static const std::array<BraidWord, 6> words{
      parse_braid_word("s1^2", 3),
      parse_braid_word("s2 s1^2 s2^-1", 3),
      parse_braid_word("s2^2", 3),
      parse_braid_word("s1 t1", 3),
      parse_braid_word("s2 s1 t1 s2^-1", 3),
      parse_braid_word("s2 t2", 3)};
  return words;
}

std::size_t generator_slot(Generator g) {
  return (g.kind == Kind::Sigma ? 0 : 2) + static_cast<std::size_t>(g.index - 1);
}

}  // namespace

std::string_view name_of(SPName name) { return kNames[slot(name)]; }

SPWord::SPWord(const std::vector<SPLetter>& letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exponent == 0) {
      throw DomainError("zero exponent in SP letter");
    }
    detail::push_reduced(letters_, l);
  }
}

std::size_t SPWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) {
    n += static_cast<std::size_t>(std::llabs(l.exponent));
  }
  return n;
}

SPWord concat(const SPWord& lhs, const SPWord& rhs) {
  std::vector<SPLetter> letters(lhs.letters().begin(), lhs.letters().end());
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return SPWord(letters);
}

SPWord invert(const SPWord& w) {
  std::vector<SPLetter> letters(w.letters().begin(), w.letters().end());
  return SPWord(detail::inverted(letters));
}

SPWord power(const SPWord& w, std::int64_t k) {
  SPWord base = k < 0 ? invert(w) : w;
  SPWord out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) {
    out = concat(out, base);
  }
  return out;
}

SPWord parse_sp_word(std::string_view text) {
  std::vector<SPLetter> letters;
  std::istringstream    in{std::string(text)};
  std::string           token;
  while (in >> token) {
    if (token == "1") {
      continue;
    }
    std::string_view tok   = token;
    auto             caret = tok.find('^');
    auto             head  = tok.substr(0, caret);
    SPLetter         l;
    bool             found = false;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (head == kNames[i]) {
        l.name = static_cast<SPName>(i);
        found  = true;
      }
    }
    if (!found) {
      throw ParseError("unknown SP_3 generator in token '" + token + "'",
                       token);
    }
    if (caret != std::string_view::npos) {
      if (!detail::parse_int(tok.substr(caret + 1), l.exponent)) {
        throw ParseError("bad exponent in token '" + token + "'", token);
      }
      if (l.exponent == 0) {
        throw ParseError("zero exponent in token '" + token + "'", token);
      }
    }
    letters.push_back(l);
  }
  return SPWord(letters);
}

std::string to_string(const SPWord& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += name_of(l.name);
    if (l.exponent != 1) {
      out += "^" + std::to_string(l.exponent);
    }
  }
  return out;
}

std::size_t expression_index(const SchreierGenerator& g) {
  if (g.rep_index >= 6 || g.letter.index < 1 || g.letter.index > 2) {
    throw DomainError("not a Schreier generator of SP_3");
  }
  return 4 * g.rep_index + generator_slot(g.letter);
}

const ExpressionTable& expression_table() {
  // Rows follow transversal3(): 1, s1, s2, s1 s2, s2 s1, s1 s2 s1; within a
  // row the letters are s1, s2, t1, t2.
  static const ExpressionTable table = [] {
    constexpr std::array<const char*, 24> rows{
        "1",   "1",                  "b12 a12^-1",     "b23 a23^-1",
        "a12", "1",                  "b12",            "a23^-1 b13 a13^-1 a23",
        "1",   "a23",                "b13 a13^-1",     "b23",
        "1",   "a23^-1 a13 a23",     "b23 a23^-1",     "a23^-1 b13 a23",
        "a13", "1",                  "b13",            "b12 a12^-1",
        "a23", "a12",                "b23",            "b12"};
    ExpressionTable t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      t[i] = parse_sp_word(rows[i]);
    }
    return t;
  }();
  return table;
}

const SPWord& express_schreier_gen(const SchreierGenerator& g,
                                   const ExpressionTable& table) {
  return table[expression_index(g)];
}

SPWord rewrite_to_sp3(const BraidWord& w, const ExpressionTable& table) {
  if (w.strands() != 3) {
    throw DomainError("SP_3 rewriting needs a 3-strand word");
  }
  auto                  tau_word = rewrite_tau(w, transversal3());
  std::vector<SPLetter> letters;
  for (const auto& f : tau_word.factors()) {
    const auto& image = express_schreier_gen(f.generator, table);
    if (f.sign > 0) {
      letters.insert(letters.end(), image.letters().begin(),
                     image.letters().end());
    } else {
      auto inv = invert(image);
      letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return SPWord(letters);
}

BraidWord sp3_to_sg3(const SPWord& w) {
  std::vector<GeneratorLetter> letters;
  for (const auto& l : w.letters()) {
    auto piece = power(defining_words()[slot(l.name)], l.exponent);
    letters.insert(letters.end(), piece.letters().begin(),
                   piece.letters().end());
  }
  return BraidWord(3, letters);
}

const std::vector<RelationLabel>& theorem1_relations() {
  static const std::vector<RelationLabel> relations{
      {"a12 a13 a12^-1", "a23^-1 a13 a23"},
      {"a12 a23 a12^-1", "a23^-1 a13^-1 a23 a13 a23"},
      {"a12 b12", "b12 a12"},
      {"a13 b13", "b13 a13"},
      {"a23 b23", "b23 a23"},
      {"b12 a13 a23 b12^-1", "a13 a23"},
      {"a12 b13 a12^-1", "a23^-1 b13 a23"},
      {"a12 b23 a12^-1", "a23^-1 a13^-1 b23 a13 a23"}};
  return relations;
}

const std::vector<SPWord>& theorem1_relators() {
  static const std::vector<SPWord> relators = [] {
    std::vector<SPWord> out;
    for (const auto& r : theorem1_relations()) {
      out.push_back(concat(parse_sp_word(r.lhs), invert(parse_sp_word(r.rhs))));
    }
    return out;
  }();
  return relators;
}

const ActionTable& action_table() {
  // Images g^-1 x g for x = a12, a13, a23, b12, b13, b23. The inverse
  // generators' rows are the inverse automorphisms of the first four.
  struct Row {
    Generator                  g;
    int                        sign;
    std::array<const char*, 6> images;
  };
  static const ActionTable table = [] {
    const std::array<Row, 8> rows{{
        {sigma(1), 1,
         {"a12", "a13 a23 a13^-1", "a13", "b12", "a13 b23 a13^-1", "b13"}},
        {sigma(2), 1,
         {"a23^-1 a13 a23", "a12", "a23", "a23^-1 b13 a23", "b12", "b23"}},
        {tau(1), 1,
         {"a12", "b12^-1 a23 b12", "b12^-1 a23^-1 a13 a23 b12", "b12",
          "b12^-1 b23 b12", "b12^-1 a12 b13 a12^-1 b12"}},
        {tau(2), 1,
         {"b23^-1 a13 b23", "b23^-1 a23 a12 a23^-1 b23", "a23",
          "b23^-1 b13 b23", "b23^-1 a23 b12 a23^-1 b23", "b23"}},
        {sigma(1), -1,
         {"a12", "a23", "a23^-1 a13 a23", "b12", "b23", "a23^-1 b13 a23"}},
        {sigma(2), -1,
         {"a13", "a23 a12 a23^-1", "a23", "b13", "a23 b12 a23^-1", "b23"}},
        {tau(1), -1,
         {"a12", "b12 a13 a23 a13^-1 b12^-1", "b12 a13 b12^-1", "b12",
          "a12^-1 b12 b23 b12^-1 a12", "b12 b13 b12^-1"}},
        {tau(2), -1,
         {"a23^-1 b23 a13 b23^-1 a23", "b23 a12 b23^-1", "a23",
          "a23^-1 b23 b13 b23^-1 a23", "b23 b12 b23^-1", "b23"}},
    }};
    ActionTable t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      t[i].generator = rows[i].g;
      t[i].sign      = rows[i].sign;
      for (std::size_t x = 0; x < 6; ++x) {
        t[i].images[x] = parse_sp_word(rows[i].images[x]);
      }
    }
    return t;
  }();
  return table;
}

SPWord conjugate_by_sg3_generator(const SPWord& x, const GeneratorLetter& g,
                                  const ActionTable& table) {
  if (g.index < 1 || g.index > 2 || g.exponent == 0) {
    throw DomainError("conjugating letter must be s1, s2, t1 or t2 with a "
                      "nonzero exponent");
  }
  const int               sign = g.exponent > 0 ? 1 : -1;
  const GeneratorAction*  action = nullptr;
  for (const auto& a : table) {
    if (a.generator == g.key() && a.sign == sign) {
      action = &a;
    }
  }
  if (action == nullptr) {
    throw InvariantError("action table lacks generator " + to_string(g));
  }
  SPWord out = x;
  for (std::int64_t k = 0; k < std::llabs(g.exponent); ++k) {
    std::vector<SPLetter> letters;
    for (const auto& l : out.letters()) {
      auto image = power(action->images[slot(l.name)], l.exponent);
      letters.insert(letters.end(), image.letters().begin(),
                     image.letters().end());
    }
    out = SPWord(letters);
  }
  return out;
}

SP2Form sp2_normal_form(const SPWord& w) {
  SP2Form form;
  for (const auto& l : w.letters()) {
    if (l.name == SPName::A12) {
      form.a_exp += l.exponent;
    } else if (l.name == SPName::B12) {
      form.b_exp += l.exponent;
    } else {
      throw DomainError("letter " + std::string(name_of(l.name))
                        + " is not in SP_2 = <a12, b12>");
    }
  }
  return form;
}

}  // namespace sbraid
