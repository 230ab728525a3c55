#include <doctest.h>

#include <string>

#include "sbraid/errors.hpp"
#include "sbraid/normal_form.hpp"
#include "sbraid/sp3.hpp"
#include "sbraid/verify.hpp"
#include "support.hpp"

using namespace sbraid;
using sbraid::testing::Rng;

namespace {

SPWord sp(const char* text) { return parse_sp_word(text); }
BraidWord w3(const char* text) { return parse_braid_word(text, 3); }

SchreierGenerator gen3(const char* rep, Generator a) {
  return schreier_generator(transversal3(), w3(rep), a);
}

// Conjugates by an SG_3 word letter by letter, left to right.
SPWord conjugate_along(SPWord x, const BraidWord& g) {
  for (const auto& l : g.letters()) {
    x = conjugate_by_sg3_generator(x, l);
  }
  return x;
}

// g^-1 x g computed in SG_3 and pulled back through the rewriting process.
SPWord conjugate_in_sg3(const SPWord& x, const BraidWord& g) {
  return rewrite_to_sp3(invert(g) * sp3_to_sg3(x) * g);
}

}  // namespace

TEST_SUITE("sp3_algebra") {

TEST_CASE("SP word grammar") {
  auto w = sp("a12 b13^-2 1 a12^3");
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[1] == SPLetter{SPName::B13, -2});
  CHECK(w.length() == 6);
  CHECK(to_string(w) == "a12 b13^-2 a12^3");
  CHECK(sp("a13 a13^-1").empty());
  CHECK(to_string(SPWord()) == "1");
  for (const char* bad : {"a14", "c12", "a12^0", "s1", "t1", "a12^", "a1"}) {
    CAPTURE(bad);
    try {
      parse_sp_word(bad);
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.token() == bad);
    }
  }
  CHECK_THROWS_AS(SPWord({{SPName::A12, 0}}), DomainError);
}

TEST_CASE("SP words round trip through text") {
  Rng rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    auto w = testing::random_sp_word(rng, 20);
    CHECK(parse_sp_word(to_string(w)) == w);
    CHECK((w * invert(w)).empty());
    CHECK(power(w, 2) == w * w);
  }
}

TEST_CASE("embedding into SG_3") {
  CHECK(sp3_to_sg3(sp("a13")) == w3("s2 s1^2 s2^-1"));
  CHECK(sp3_to_sg3(sp("b23^-1")) == w3("t2^-1 s2^-1"));
  CHECK(sp3_to_sg3(sp("a12^2 b12")) == w3("s1^5 t1"));
  CHECK(sp3_to_sg3(SPWord()).empty());
}

TEST_CASE("embedded words are pure") {
  Rng rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    CHECK(pi(sp3_to_sg3(testing::random_sp_word(rng, 25))).is_identity());
  }
}

TEST_CASE("expression table") {
  CHECK(to_string(express_schreier_gen(gen3("s2", tau(1)))) == "b13 a13^-1");
  CHECK(to_string(express_schreier_gen(gen3("s1", tau(2))))
        == "a23^-1 b13 a13^-1 a23");
  CHECK(to_string(express_schreier_gen(gen3("s1 s2 s1", tau(2)))) == "b12");
  CHECK(express_schreier_gen(gen3("1", sigma(1))).empty());
  CHECK(express_schreier_gen(gen3("s2 s1", sigma(2))).empty());
  CHECK_THROWS_AS(
      express_schreier_gen(SchreierGenerator{6, sigma(1)}), DomainError);
  CHECK_THROWS_AS(
      express_schreier_gen(SchreierGenerator{0, sigma(3)}), DomainError);
}

TEST_CASE("defining generators map to their own letters") {
  struct Row {
    const char* rep;
    Generator   a;
    const char* letter;
  };
  for (const auto& r : {Row{"s1", sigma(1), "a12"}, Row{"s2 s1", sigma(1), "a13"},
                        Row{"s2", sigma(2), "a23"}, Row{"s1", tau(1), "b12"},
                        Row{"s2 s1", tau(1), "b13"}, Row{"s2", tau(2), "b23"}}) {
    auto g = gen3(r.rep, r.a);
    CHECK(to_string(express_schreier_gen(g)) == r.letter);
    CHECK(sp3_to_sg3(sp(r.letter)) == s_generator_word(g, transversal3()));
  }
}

TEST_CASE("every table row agrees with its ambient word in SG_3") {
  // The ambient word of S and the embedded table row must be the same
  // element of SG_3; both are pure, so compare their rewrites in SP_3.
  for (const auto& e : enumerate_generators(transversal3())) {
    const auto& row = express_schreier_gen(e.generator);
    CHECK(pi(sp3_to_sg3(row)).is_identity());
    CHECK(equal_sp3(rewrite_to_sp3(sp3_to_sg3(row)), rewrite_to_sp3(e.ambient)));
  }
}

TEST_CASE("rewriting into SP_3") {
  CHECK(to_string(rewrite_to_sp3(w3("s1^2"))) == "a12");
  CHECK(to_string(rewrite_to_sp3(w3("t1 s1^-1"))) == "b12 a12^-1");
  CHECK(equal_sp3(rewrite_to_sp3(w3("s1 s2 s1 s1 s2 s1")), sp("a12 a13 a23")));
  CHECK(equal_sp3(rewrite_to_sp3(w3("s1 s2 s1 s2 s1 s2")), sp("a12 a13 a23")));
  CHECK_THROWS_AS(rewrite_to_sp3(w3("s1")), DomainError);
  CHECK_THROWS_AS(rewrite_to_sp3(parse_braid_word("s1^2", 2)), DomainError);
}

TEST_CASE("rewriting inverts the embedding") {
  Rng rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    auto x = testing::random_sp_word(rng, 15);
    CHECK(equal_sp3(rewrite_to_sp3(sp3_to_sg3(x)), x));
  }
}

TEST_CASE("presentation relators") {
  const auto& rel = theorem1_relators();
  const auto& labels = theorem1_relations();
  REQUIRE(rel.size() == 8);
  REQUIRE(labels.size() == 8);
  CHECK(rel[4] == sp("a23 b23 a23^-1 b23^-1"));
  CHECK(labels[6].lhs == "a12 b13 a12^-1");
  CHECK(labels[6].rhs == "a23^-1 b13 a23");
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rel[i] == parse_sp_word(labels[i].lhs) * invert(parse_sp_word(labels[i].rhs)));
    // Independently of the normal form: each relator is trivial in SG_3,
    // so its embedding satisfies every oracle invariant.
    auto e = sp3_to_sg3(rel[i]);
    CHECK(exponent_sums(e) == ExponentSums{0, 0});
  }
}

TEST_CASE("conjugation by positive generators") {
  const auto& t = action_table();
  const char* expected[4][6] = {
      {"a12", "a13 a23 a13^-1", "a13", "b12", "a13 b23 a13^-1", "b13"},
      {"a23^-1 a13 a23", "a12", "a23", "a23^-1 b13 a23", "b12", "b23"},
      {"a12", "b12^-1 a23 b12", "b12^-1 a23^-1 a13 a23 b12", "b12",
       "b12^-1 b23 b12", "b12^-1 a12 b13 a12^-1 b12"},
      {"b23^-1 a13 b23", "b23^-1 a23 a12 a23^-1 b23", "a23",
       "b23^-1 b13 b23", "b23^-1 a23 b12 a23^-1 b23", "b23"},
  };
  Generator gens[4] = {sigma(1), sigma(2), tau(1), tau(2)};
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(t[g].generator == gens[g]);
    CHECK(t[g].sign == 1);
    for (std::size_t x = 0; x < 6; ++x) {
      CAPTURE(g);
      CAPTURE(x);
      CHECK(to_string(t[g].images[x]) == expected[g][x]);
    }
  }
  CHECK(conjugate_by_sg3_generator(sp("a23"), letter(sigma(1))) == sp("a13"));
  CHECK(conjugate_by_sg3_generator(sp("b23"), letter(tau(1)))
        == sp("b12^-1 a12 b13 a12^-1 b12"));
  CHECK(conjugate_by_sg3_generator(sp("b13"), letter(sigma(2))) == sp("b12"));
}

TEST_CASE("conjugation agrees with conjugating inside SG_3") {
  for (const auto& act : action_table()) {
    BraidWord g(3, {letter(act.generator, act.sign)});
    for (std::size_t x = 0; x < 6; ++x) {
      auto xw = sp_word(kSPNames[x]);
      CHECK(equal_sp3(conjugate_by_sg3_generator(xw, g.letters()[0]),
                      conjugate_in_sg3(xw, g)));
    }
  }
}

TEST_CASE("inverse conjugation undoes conjugation") {
  for (auto x : kSPNames) {
    for (auto g : {sigma(1), sigma(2), tau(1), tau(2)}) {
      auto xw = sp_word(x);
      auto there = conjugate_by_sg3_generator(xw, letter(g, -1));
      CHECK(equal_sp3(conjugate_by_sg3_generator(there, letter(g)), xw));
      auto back = conjugate_by_sg3_generator(xw, letter(g));
      CHECK(equal_sp3(conjugate_by_sg3_generator(back, letter(g, -1)), xw));
    }
  }
  CHECK(equal_sp3(conjugate_by_sg3_generator(
                      conjugate_by_sg3_generator(sp("a13"), letter(sigma(1), -1)),
                      letter(sigma(1))),
                  sp("a13")));
}

TEST_CASE("conjugation respects the SG_3 relators") {
  for (auto x : kSPNames) {
    for (const auto& r : sg3_relators()) {
      CHECK(equal_sp3(conjugate_along(sp_word(x), r), sp_word(x)));
    }
  }
}

TEST_CASE("conjugation is a homomorphism") {
  Rng rng(44);
  for (int iter = 0; iter < 150; ++iter) {
    auto u = testing::random_sp_word(rng, 8);
    auto v = testing::random_sp_word(rng, 8);
    auto g = testing::random_unit(rng, 3);
    auto l = letter(g.gen, g.sign);
    CHECK(equal_sp3(conjugate_by_sg3_generator(u * v, l),
                    conjugate_by_sg3_generator(u, l)
                        * conjugate_by_sg3_generator(v, l)));
    CHECK(equal_sp3(conjugate_by_sg3_generator(invert(u), l),
                    invert(conjugate_by_sg3_generator(u, l))));
  }
}

TEST_CASE("conjugation by powers and bad letters") {
  auto x = sp("b13 a23");
  CHECK(conjugate_by_sg3_generator(x, letter(tau(2), 2))
        == conjugate_by_sg3_generator(
            conjugate_by_sg3_generator(x, letter(tau(2))), letter(tau(2))));
  CHECK_THROWS_AS(conjugate_by_sg3_generator(x, letter(sigma(3))), DomainError);
}

TEST_CASE("SP_2 normal form") {
  CHECK(sp2_normal_form(sp("a12 b12 a12^-1 b12^-1")) == SP2Form{0, 0});
  CHECK(sp2_normal_form(sp("b12^3")) == SP2Form{0, 3});
  CHECK(sp2_normal_form(sp("a12 b12 a12 b12")) == SP2Form{2, 2});
  CHECK(sp2_normal_form(SPWord()).is_trivial());
  CHECK_THROWS_AS(sp2_normal_form(sp("a12 a13")), DomainError);
}

TEST_CASE("full verification passes") {
  auto report = verify_presentation();
  CHECK(report.all_passed());
  CHECK(report.total(CheckGroup::RewrittenRelators) == 30);
  CHECK(report.total(CheckGroup::PresentationRelators) == 8);
  CHECK(report.total(CheckGroup::ConjugationRules) == 24);
  CHECK(report.total(CheckGroup::GeneratorExpressions) == 19);
  CHECK(report.checks.size() == 81);
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.label == "b13^s2 = b12") {
      found = true;
      CHECK(c.passed);
    }
  }
  CHECK(found);
}

TEST_CASE("verification groups can be selected") {
  VerifyOptions only_rs{true, false, false, false};
  auto report = verify_presentation(only_rs);
  CHECK(report.checks.size() == 30);
  CHECK(report.total(CheckGroup::ConjugationRules) == 0);
}

TEST_CASE("every nontrivial generator is derived from the relators") {
  auto derived = derived_generator_expressions();
  CHECK(derived.size() == 19);
  for (const auto& [g, word] : derived) {
    CHECK(equal_sp3(word, express_schreier_gen(g)));
  }
}

TEST_CASE("corrupting one table row fails exactly that row") {
  const auto& t = transversal3();
  std::size_t corrupted = 0;
  for (const auto& e : enumerate_generators(t)) {
    if (e.trivial) {
      continue;
    }
    ExpressionTable table = expression_table();
    auto idx = expression_index(e.generator);
    table[idx] = table[idx] * sp("b13");
    VerifyOptions only_table{false, false, false, true};
    auto report = verify_presentation(only_table, table);
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      if (!c.passed) {
        ++failed;
        CHECK(c.label.rfind(to_string(e.generator, t) + " = ", 0) == 0);
        CHECK_FALSE(c.witness.empty());
      }
    }
    CHECK(failed == 1);
    ++corrupted;
  }
  CHECK(corrupted == 19);
}

TEST_CASE("corrupting a conjugation rule is caught") {
  ActionTable actions = action_table();
  actions[0].images[2] = sp("a12");  // a23^s1 should be a13
  VerifyOptions only_rules{false, false, true, false};
  auto report = verify_presentation(only_rules, expression_table(), actions);
  CHECK(report.passed(CheckGroup::ConjugationRules) == 23);
}

}  // TEST_SUITE
