#include "sbraid/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "sbraid/errors.hpp"
#include "sbraid/normal_form.hpp"
#include "sbraid/oracles.hpp"
#include "sbraid/permutation.hpp"
#include "sbraid/rewriting.hpp"
#include "sbraid/sp3.hpp"
#include "sbraid/verify.hpp"

namespace sbraid::cli {

namespace {

const char* verdict(bool trivial) { return trivial ? "trivial" : "nontrivial"; }

struct Options {
  int         strands = 3;
  std::string word;
  std::string other;
  std::string letter;
  bool        canonical = false;

  bool verify_all      = false;
  bool verify_rs       = false;
  bool verify_theorem1 = false;
  bool verify_prop41   = false;
  bool verify_table    = false;
};

void require_three(int strands) {
  if (strands != 3) {
    throw DomainError("this subcommand supports only -n 3");
  }
}

int cmd_parse(const Options& o, std::ostream& out) {
  out << to_string(parse_braid_word(o.word, o.strands)) << '\n';
  return kOk;
}

int cmd_pi(const Options& o, std::ostream& out) {
  auto p = pi(parse_braid_word(o.word, o.strands));
  out << to_cycle_string(p) << ' ' << to_one_line_string(p) << '\n';
  return kOk;
}

int cmd_gens(const Options& o, std::ostream& out) {
  auto t = schreier_transversal(o.strands);
  out << "lambda\tletter\tambient\ttrivial\n";
  for (const auto& e : enumerate_generators(t)) {
    out << to_string(t.rep(e.generator.rep_index)) << '\t'
        << to_string(e.generator.letter) << '\t' << to_string(e.ambient)
        << '\t' << (e.trivial ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  auto w = parse_braid_word(o.word, 3);
  out << "tau: " << to_string(rewrite_tau(w, transversal3()), transversal3())
      << '\n';
  out << "sp3: " << to_string(rewrite_to_sp3(w)) << '\n';
  return kOk;
}

int cmd_nf(const Options& o, std::ostream& out) {
  auto form = center_split(parse_sp_word(o.word));
  out << (o.canonical ? to_canonical_string(form) : to_string(form)) << '\n';
  return kOk;
}

int cmd_trivial(const Options& o, std::ostream& out) {
  require_three(o.strands);
  bool trivial = is_trivial_sg3(parse_braid_word(o.word, 3));
  out << verdict(trivial) << '\n';
  return trivial ? kOk : kFalse;
}

int cmd_equal(const Options& o, std::ostream& out) {
  bool eq = equal_sp3(parse_sp_word(o.word), parse_sp_word(o.other));
  out << (eq ? "equal" : "not equal") << '\n';
  return eq ? kOk : kFalse;
}

int cmd_conj(const Options& o, std::ostream& out) {
  auto g = parse_braid_word(o.letter, 3);
  if (g.size() != 1) {
    throw ParseError("-g expects a single generator letter, got '" + o.letter
                         + "'",
                     o.letter);
  }
  out << to_string(conjugate_by_sg3_generator(parse_sp_word(o.word),
                                              g.letters().front()))
      << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  auto w = parse_braid_word(o.word, 3);
  auto r = oracle_report(w);
  auto p = pi(w);
  out << "invariant\tvalue\tverdict\n";
  out << "pi\t" << to_cycle_string(p) << '\t' << verdict(r.pi_trivial) << '\n';
  out << "sigma-sum\t" << r.sigma_sum << '\t' << verdict(r.sigma_sum == 0)
      << '\n';
  out << "tau-sum\t" << r.tau_sum << '\t' << verdict(r.tau_sum == 0) << '\n';
  for (auto [rule, name, ok] :
       {std::tuple{TauRule::TauToSigma, "b3[t->s]", r.b3_tau_to_sigma},
        std::tuple{TauRule::TauToSigmaInverse, "b3[t->s^-1]",
                   r.b3_tau_to_sigma_inverse}}) {
    auto q = quotient_to_b3(w, rule);
    out << name << '\t' << to_string(b3_matrix_image(q)) << " sum "
        << exponent_sums(q).sigma << '\t' << verdict(ok) << '\n';
  }
  out << "necessary\t-\t"
      << (r.necessary_trivial() ? "not refuted" : "refuted") << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  bool any = o.verify_rs || o.verify_theorem1 || o.verify_prop41
             || o.verify_table;
  if (any && !o.verify_all) {
    v.rewritten_relators    = o.verify_rs;
    v.presentation_relators = o.verify_theorem1;
    v.conjugation_rules     = o.verify_prop41;
    v.generator_expressions = o.verify_table;
  }
  auto report = verify_presentation(v);
  for (auto group :
       {CheckGroup::RewrittenRelators, CheckGroup::PresentationRelators,
        CheckGroup::ConjugationRules, CheckGroup::GeneratorExpressions}) {
    if (report.total(group) == 0) {
      continue;
    }
    for (const auto& c : report.checks) {
      if (c.group != group) {
        continue;
      }
      out << (c.passed ? "PASS" : "FAIL") << '\t' << group_name(group) << '\t'
          << c.label;
      if (!c.passed) {
        out << '\t' << c.witness;
      }
      out << '\n';
    }
    out << "# " << group_name(group) << ": " << report.passed(group) << '/'
        << report.total(group) << " passed\n";
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.passed ? 1 : 0;
  }
  out << "# total: " << passed << '/' << report.checks.size() << " passed\n";
  return report.all_passed() ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Word problems and presentations for singular braid groups"};
  app.name("sbraid");
  app.require_subcommand(1, 1);

  Options o;
  int (*handler)(const Options&, std::ostream&) = nullptr;

  auto add_word = [&o](CLI::App* sub, const char* what) {
    sub->add_option("word", o.word, what)->required();
  };
  auto add_strands = [&o](CLI::App* sub) {
    sub->add_option("-n", o.strands, "number of strands")
        ->required()
        ->check(CLI::Range(2, 64));
  };

  auto* parse = app.add_subcommand("parse", "parse and freely reduce a word");
  add_strands(parse);
  add_word(parse, "word in s<i>, t<i>");
  parse->callback([&] { handler = cmd_parse; });

  auto* pi_cmd = app.add_subcommand("pi", "permutation image of a word");
  add_strands(pi_cmd);
  add_word(pi_cmd, "word in s<i>, t<i>");
  pi_cmd->callback([&] { handler = cmd_pi; });

  auto* gens = app.add_subcommand("gens", "Schreier generators as TSV");
  add_strands(gens);
  gens->callback([&] { handler = cmd_gens; });

  auto* rewrite = app.add_subcommand("rewrite", "rewrite a pure SG_3 word");
  add_word(rewrite, "3-strand word with trivial permutation");
  rewrite->callback([&] { handler = cmd_rewrite; });

  auto* nf = app.add_subcommand("nf", "normal form of an SP_3 word");
  add_word(nf, "word in a12 a13 a23 b12 b13 b23");
  nf->add_flag("--canonical", o.canonical,
               "shift bases by powers of a13 a23 for display");
  nf->callback([&] { handler = cmd_nf; });

  auto* trivial = app.add_subcommand("trivial", "decide triviality in SG_3");
  trivial->add_option("-n", o.strands, "number of strands (must be 3)")
      ->required();
  add_word(trivial, "3-strand word");
  trivial->callback([&] { handler = cmd_trivial; });

  auto* equal = app.add_subcommand("equal", "decide equality in SP_3");
  equal->add_option("lhs", o.word, "SP_3 word")->required();
  equal->add_option("rhs", o.other, "SP_3 word")->required();
  equal->callback([&] { handler = cmd_equal; });

  auto* conj = app.add_subcommand("conj", "conjugate an SP_3 word by g");
  conj->add_option("-g", o.letter, "s1, s2, t1 or t2 with optional ^k")
      ->required();
  add_word(conj, "SP_3 word");
  conj->callback([&] { handler = cmd_conj; });

  auto* oracle = app.add_subcommand("oracle", "necessary triviality checks");
  add_word(oracle, "3-strand word");
  oracle->callback([&] { handler = cmd_oracle; });

  auto* verify = app.add_subcommand("verify", "check the SP_3 presentation");
  verify->add_flag("--all", o.verify_all, "every check group (default)");
  verify->add_flag("--rs", o.verify_rs, "rewritten relators");
  verify->add_flag("--theorem1", o.verify_theorem1, "defining relators");
  verify->add_flag("--prop41", o.verify_prop41, "conjugation rules");
  verify->add_flag("--table", o.verify_table, "generator expressions");
  verify->callback([&] { handler = cmd_verify; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    audit_quotient_homomorphisms();
    return handler(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace sbraid::cli
