// Table-driven conformance suite for the 8 axioms and 15 rules, including
// the PCN rule/axiom restriction and the FN restriction. Shared between the
// unit tests and the acceptance binary.
#pragma once

#include <string>
#include <vector>

#include "sntab/axiom.hpp"
#include "sntab/parse.hpp"
#include "sntab/print.hpp"
#include "sntab/rule.hpp"

namespace conformance {

using namespace sntab;

struct AxiomCase {
  const char* seq;
  const char* system;  // "sn" | "pcn" | "fn"
  const char* expect;  // "Ax1".."Ax8" | "none" | "unknown"
};

// expect lists the printed child sequents; err names the expected error code
// (kebab name from errc_name) and must be null for positive cases.
struct RuleCase {
  const char* seq;
  const char* rule;
  const char* path;
  const char* term;    // nullable
  const char* eigen;   // nullable
  const char* system;
  std::vector<const char*> children;
  const char* err;
};

inline const std::vector<AxiomCase>& axiom_cases() {
  static const std::vector<AxiomCase> t = {
      // Axiom 1: true constant prime, antecedent negative.
      {"~(0 = 0) |-", "sn", "Ax1"},
      {"~(0 = 0) |- Q", "sn", "Ax1"},
      {"P & ~(2 = 2) |-", "sn", "Ax1"},
      {"~(0 = 0) |-", "pcn", "Ax1"},
      {"~(0 = 1) |-", "sn", "none"},   // §8 demo: irreducible non-axiom
      {"~P |-", "sn", "none"},
      {"0 = 0 |-", "sn", "none"},
      // Axiom 2: false constant prime, antecedent positive.
      {"0 = 1 |-", "sn", "Ax2"},
      {"~~(1 = 0) |-", "sn", "Ax2"},
      {"2 = 3 |- P", "sn", "Ax2"},
      {"0 = 1 |-", "pcn", "Ax2"},
      {"x = 1 |-", "sn", "none"},      // not constant, and Ax8 is refuted
      {"P |-", "sn", "none"},
      {"1 = 1 |-", "sn", "none"},
      // Axiom 3: true constant prime, succedent positive.
      {"|- 0 = 0", "sn", "Ax3"},
      {"P |- Q | 1 = 1", "sn", "Ax3"},
      {"|- ~~(0 = 0)", "sn", "Ax3"},
      {"|- 0 = 1", "sn", "none"},      // §8 demo
      {"|- ~(0 = 0)", "sn", "none"},
      {"|- P", "sn", "none"},
      {"|- 0 = 0", "pcn", "none"},     // Ax3 is not a PCN axiom
      // Axiom 4: false constant prime, succedent negative.
      {"|- ~(0 = 1)", "sn", "Ax4"},
      {"P |- ~(s(0) = 0)", "sn", "Ax4"},
      {"|- Q | ~(1 = 2)", "sn", "Ax4"},
      {"|- ~(1 = 1)", "sn", "none"},
      {"|- 1 = 2", "sn", "none"},
      {"~(1 = 2) |-", "sn", "none"},
      // Axiom 5: equivalent primes, antecedent positive + antecedent negative.
      {"P & ~P |-", "sn", "Ax5"},
      {"x = y & ~(x = y) |-", "sn", "Ax5"},
      // Closed equal-valued arguments; the predicate is opaque so Ax1
      // cannot witness the negative occurrence first.
      {"Qp(add(1, 1)) & ~Qp(2) |-", "sn", "Ax5"},
      {"P & ~P |-", "pcn", "Ax5"},
      {"P & ~Q |-", "sn", "none"},
      {"P | ~P |-", "sn", "none"},     // v+ does not descend on the antecedent
      {"P & ~(Q & P) |-", "sn", "none"},
      // Axiom 6: equivalent primes, antecedent positive + succedent positive.
      {"P |- P", "sn", "Ax6"},
      {"x = 0 |- x = 0", "sn", "Ax6"},
      {"P & Q |- Q", "sn", "Ax6"},
      {"P |- ~P", "sn", "none"},
      {"P |- Q", "sn", "none"},
      {"P |- P", "pcn", "none"},       // Ax6 is not a PCN axiom
      // Axiom 7: equivalent primes, antecedent negative + succedent negative.
      {"~P |- ~P", "sn", "Ax7"},
      {"~(x = y) |- Q | ~(x = y)", "sn", "Ax7"},
      {"Q & ~P |- ~P", "sn", "Ax7"},
      {"~P |- ~Q", "sn", "none"},
      {"~~P |- ~~~P", "sn", "none"},   // (ant+, suc-) is not an axiom pattern
      {"~P |- P", "sn", "none"},       // (ant-, suc+) is not an axiom pattern
      // Axiom 8: free variables, all numeral instances are axioms 1-7.
      {"|- x = x", "sn", "Ax8"},
      {"s(x) = 0 |-", "sn", "Ax8"},
      {"s(x) = s(y) |- x = y", "sn", "Ax8"},
      {"x = y & x = z |- y = z", "sn", "Ax8"},
      {"s(x) = 0 |-", "pcn", "Ax8"},
      {"|- add(x, y) = add(y, x)", "sn", "Ax8"},
      {"x = x |-", "sn", "none"},      // instances are true at a false role
      {"|- x = s(x)", "sn", "none"},   // refuted by any instance
      {"0 = 0 |- x = 1", "sn", "none"},
      {"P(x) |-", "sn", "unknown"},    // opaque predicate blocks the oracle
  };
  return t;
}

inline const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> t = {
      // ---- and.ant.neg -------------------------------------------------
      {"~(P & Q) |- R", "and.ant.neg", "ant:neg", nullptr, nullptr, "sn",
       {"~P |- R", "~Q |- R"}, nullptr},
      {"~(x = 0 & Q) |-", "and.ant.neg", "ant:neg", nullptr, nullptr, "sn",
       {"~x = 0 |-", "~Q |-"}, nullptr},
      {"~~~(P & Q) |-", "and.ant.neg", "ant:neg/neg/neg", nullptr, nullptr,
       "sn", {"~~~P |-", "~~~Q |-"}, nullptr},
      {"~(P & Q) |-", "and.ant.neg", "ant:neg", nullptr, nullptr, "pcn",
       {"~P |-", "~Q |-"}, nullptr},
      {"~(P | Q) |- R", "and.ant.neg", "ant:neg", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P & Q |- R", "and.ant.neg", "ant:", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"~(P & Q) |- R", "and.ant.neg", "ant:neg", "0", nullptr, "sn", {},
       "wrong-shape"},
      {"~(P & Q) |- R", "and.ant.neg", "ant:or.left", nullptr, nullptr, "sn",
       {}, "part"},
      // ---- and.suc.pos -------------------------------------------------
      {"P |- Q & R", "and.suc.pos", "suc:", nullptr, nullptr, "sn",
       {"P |- Q", "P |- R"}, nullptr},
      {"|- (x = x & Q) | R", "and.suc.pos", "suc:or.left", nullptr, nullptr,
       "sn", {"|- x = x | R", "|- Q | R"}, nullptr},
      {"P |- ~~(Q & R)", "and.suc.pos", "suc:neg/neg", nullptr, nullptr, "sn",
       {"P |- ~~Q", "P |- ~~R"}, nullptr},
      {"P |- ~(Q & R)", "and.suc.pos", "suc:neg", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P & Q |- R", "and.suc.pos", "ant:", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P |- Q & R", "and.suc.pos", "suc:", nullptr, nullptr, "pcn", {},
       "wrong-system"},
      // ---- or.ant.pos --------------------------------------------------
      {"P | Q |- R", "or.ant.pos", "ant:", nullptr, nullptr, "sn",
       {"P |- R", "Q |- R"}, nullptr},
      {"(P | Q) & R |-", "or.ant.pos", "ant:and.left", nullptr, nullptr, "sn",
       {"P & R |-", "Q & R |-"}, nullptr},
      {"~~(P | Q) |-", "or.ant.pos", "ant:neg/neg", nullptr, nullptr, "sn",
       {"~~P |-", "~~Q |-"}, nullptr},
      {"P | Q |-", "or.ant.pos", "ant:", nullptr, nullptr, "pcn",
       {"P |-", "Q |-"}, nullptr},
      {"~(P | Q) |-", "or.ant.pos", "ant:neg", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P & Q |- R", "or.ant.pos", "ant:", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P | Q |- R", "or.ant.pos", "ant:", nullptr, "b", "sn", {},
       "wrong-shape"},
      // ---- or.suc.neg --------------------------------------------------
      {"|- ~(P | Q)", "or.suc.neg", "suc:neg", nullptr, nullptr, "sn",
       {"|- ~P", "|- ~Q"}, nullptr},
      {"P |- ~((Q | R) & S)", "or.suc.neg", "suc:neg/and.left", nullptr,
       nullptr, "sn", {"P |- ~(Q & S)", "P |- ~(R & S)"}, nullptr},
      {"|- ~~~(P | Q)", "or.suc.neg", "suc:neg/neg/neg", nullptr, nullptr,
       "sn", {"|- ~~~P", "|- ~~~Q"}, nullptr},
      {"|- P | Q", "or.suc.neg", "suc:", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"|- ~(P | Q)", "or.suc.neg", "suc:neg", nullptr, nullptr, "pcn", {},
       "wrong-system"},
      {"|- ~(P | Q)", "or.suc.neg", "suc:neg/or.left/neg", nullptr, nullptr,
       "sn", {}, "part"},
      // ---- imp.ant.pos -------------------------------------------------
      {"P -> Q |- R", "imp.ant.pos", "ant:", nullptr, nullptr, "sn",
       {"P -> Q |- R | P", "(P -> Q) & Q |- R"}, nullptr},
      {"(P -> Q) & S |-", "imp.ant.pos", "ant:and.left", nullptr, nullptr,
       "sn", {"(P -> Q) & S |- P", "(P -> Q) & S & Q |-"}, nullptr},
      {"~~(P -> Q) |- R", "imp.ant.pos", "ant:neg/neg", nullptr, nullptr, "sn",
       {"~~(P -> Q) |- R | P", "~~(P -> Q) & Q |- R"}, nullptr},
      {"P -> Q |- R", "imp.ant.pos", "ant:", nullptr, nullptr, "fn", {},
       "wrong-system"},
      {"P -> Q |-", "imp.ant.pos", "ant:", nullptr, nullptr, "pcn", {},
       "wrong-system"},
      {"~(P -> Q) |-", "imp.ant.pos", "ant:neg", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      // ---- imp.suc.pos -------------------------------------------------
      {"P |- Q -> R", "imp.suc.pos", "suc:", nullptr, nullptr, "sn",
       {"P & Q |- R"}, nullptr},
      {"|- Q -> R", "imp.suc.pos", "suc:", nullptr, nullptr, "sn",
       {"Q |- R"}, nullptr},
      {"P |- (Q -> R) | S", "imp.suc.pos", "suc:or.left", nullptr, nullptr,
       "sn", {"P & Q |- R"}, nullptr},
      {"Q |- P -> Q", "imp.suc.pos", "suc:", nullptr, nullptr, "fn",
       {"Q & P |- Q"}, nullptr},
      {"P |- ~(Q -> R)", "imp.suc.pos", "suc:neg", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P |- Q -> R", "imp.suc.pos", "suc:", nullptr, nullptr, "pcn", {},
       "wrong-system"},
      {"P |- Q -> R", "imp.suc.pos", "suc:", "0", nullptr, "sn", {},
       "wrong-shape"},
      // ---- imp.suc.neg -------------------------------------------------
      {"P |- ~(Q -> R)", "imp.suc.neg", "suc:neg", nullptr, nullptr, "sn",
       {"P |- Q", "P |- ~R"}, nullptr},
      {"|- S | ~(Q -> R)", "imp.suc.neg", "suc:or.right/neg", nullptr,
       nullptr, "sn", {"|- S | Q", "|- S | ~R"}, nullptr},
      {"P |- ~((Q -> R) & S)", "imp.suc.neg", "suc:neg/and.left", nullptr,
       nullptr, "sn", {"P |- ~S | Q", "P |- ~(R & S)"}, nullptr},
      {"P |- Q -> R", "imp.suc.neg", "suc:", nullptr, nullptr, "sn", {},
       "wrong-shape"},
      {"P |- ~(Q -> R)", "imp.suc.neg", "suc:neg", nullptr, nullptr, "pcn",
       {}, "wrong-system"},
      {"P |- ~(Q -> R)", "imp.suc.neg", "suc:neg", nullptr, "b", "sn", {},
       "wrong-shape"},
      // ---- all.ant.pos -------------------------------------------------
      {"forall x. P(x) |- Q", "all.ant.pos", "ant:", "0", nullptr, "sn",
       {"(forall x. P(x)) & P(0) |- Q"}, nullptr},
      {"forall x. x = y |-", "all.ant.pos", "ant:", "s(y)", nullptr, "sn",
       {"(forall x. x = y) & s(y) = y |-"}, nullptr},
      {"~~(forall x. P(x)) |- Q", "all.ant.pos", "ant:neg/neg", "z", nullptr,
       "sn", {"~~(forall x. P(x)) & P(z) |- Q"}, nullptr},
      {"forall x. P(x) |-", "all.ant.pos", "ant:", "0", nullptr, "pcn",
       {"(forall x. P(x)) & P(0) |-"}, nullptr},
      {"forall x. P(x) |- Q", "all.ant.pos", "ant:", nullptr, nullptr, "sn",
       {}, "wrong-shape"},
      {"~(forall x. P(x)) |-", "all.ant.pos", "ant:neg", "0", nullptr, "sn",
       {}, "wrong-shape"},
      {"forall x. (exists z. x = z) |-", "all.ant.pos", "ant:", "z", nullptr,
       "sn", {}, "capture"},
      // ---- all.ant.neg -------------------------------------------------
      {"~(forall x. P(x)) |-", "all.ant.neg", "ant:neg", nullptr, "b", "sn",
       {"~P(b) |-"}, nullptr},
      {"~((forall x. P(x)) | Q) |-", "all.ant.neg", "ant:neg/or.left",
       nullptr, "c", "sn", {"~(P(c) | Q) |-"}, nullptr},
      {"~(forall x. P(x)) |- Q(y)", "all.ant.neg", "ant:neg", nullptr, "x",
       "sn", {"~P(x) |- Q(y)"}, nullptr},
      {"~(forall x. P(x)) |-", "all.ant.neg", "ant:neg", nullptr, "b", "pcn",
       {"~P(b) |-"}, nullptr},
      {"~(forall x. P(x)) |- Q(y)", "all.ant.neg", "ant:neg", nullptr, "y",
       "sn", {}, "eigen-not-fresh"},
      {"forall x. P(x) |-", "all.ant.neg", "ant:", nullptr, "b", "sn", {},
       "wrong-shape"},
      {"~(forall x. P(x)) |-", "all.ant.neg", "ant:neg", nullptr, nullptr,
       "sn", {}, "wrong-shape"},
      // ---- all.suc.pos -------------------------------------------------
      {"P |- forall x. Q(x)", "all.suc.pos", "suc:", nullptr, "b", "sn",
       {"P |- Q(b)"}, nullptr},
      {"P |- (forall x. Q(x)) | R", "all.suc.pos", "suc:or.left", nullptr,
       "b", "sn", {"P |- Q(b)"}, nullptr},
      {"|- forall x. x = x", "all.suc.pos", "suc:", nullptr, "x", "sn",
       {"|- x = x"}, nullptr},
      {"P(b) |- forall x. Q(x)", "all.suc.pos", "suc:", nullptr, "b", "sn",
       {}, "eigen-not-fresh"},
      {"P |- forall x. Q(x)", "all.suc.pos", "suc:", nullptr, "b", "pcn", {},
       "wrong-system"},
      {"P |- ~(forall x. Q(x))", "all.suc.pos", "suc:neg", nullptr, "b", "sn",
       {}, "wrong-shape"},
      // ---- all.suc.neg -------------------------------------------------
      {"P |- ~(forall x. Q(x))", "all.suc.neg", "suc:neg", "0", nullptr, "sn",
       {"P |- ~(forall x. Q(x)) | ~Q(0)"}, nullptr},
      {"|- ~(forall x. x = y)", "all.suc.neg", "suc:neg", "y", nullptr, "sn",
       {"|- ~(forall x. x = y) | ~y = y"}, nullptr},
      {"P |- R | ~(forall x. Q(x))", "all.suc.neg", "suc:or.right/neg",
       "s(0)", nullptr, "sn",
       {"P |- R | ~(forall x. Q(x)) | ~Q(1)"}, nullptr},
      {"P |- forall x. Q(x)", "all.suc.neg", "suc:", "0", nullptr, "sn", {},
       "wrong-shape"},
      {"P |- ~(forall x. Q(x))", "all.suc.neg", "suc:neg", nullptr, nullptr,
       "sn", {}, "wrong-shape"},
      {"P |- ~(forall x. Q(x))", "all.suc.neg", "suc:neg", "0", nullptr,
       "pcn", {}, "wrong-system"},
      // ---- ex.ant.pos --------------------------------------------------
      {"exists x. P(x) |-", "ex.ant.pos", "ant:", nullptr, "b", "sn",
       {"P(b) |-"}, nullptr},
      {"(exists x. P(x)) & Q |-", "ex.ant.pos", "ant:and.left", nullptr, "b",
       "sn", {"P(b) & Q |-"}, nullptr},
      {"~~(exists x. x = y) |-", "ex.ant.pos", "ant:neg/neg", nullptr, "z",
       "sn", {"~~z = y |-"}, nullptr},
      {"exists x. P(x) |-", "ex.ant.pos", "ant:", nullptr, "b", "pcn",
       {"P(b) |-"}, nullptr},
      {"exists x. x = y |-", "ex.ant.pos", "ant:", nullptr, "y", "sn", {},
       "eigen-not-fresh"},
      {"~(exists x. P(x)) |-", "ex.ant.pos", "ant:neg", nullptr, "b", "sn",
       {}, "wrong-shape"},
      {"exists x. P(x) |-", "ex.ant.pos", "ant:", "0", nullptr, "sn", {},
       "wrong-shape"},
      // ---- ex.ant.neg --------------------------------------------------
      {"~(exists x. P(x)) |-", "ex.ant.neg", "ant:neg", "0", nullptr, "sn",
       {"~(exists x. P(x)) & ~P(0) |-"}, nullptr},
      {"~(exists x. x = y) |- Q", "ex.ant.neg", "ant:neg", "y", nullptr, "sn",
       {"~(exists x. x = y) & ~y = y |- Q"}, nullptr},
      {"~((exists x. P(x)) | Q) |-", "ex.ant.neg", "ant:neg/or.left", "s(z)",
       nullptr, "sn",
       {"~((exists x. P(x)) | Q) & ~P(s(z)) |-"}, nullptr},
      {"~(exists x. P(x)) |-", "ex.ant.neg", "ant:neg", "1", nullptr, "pcn",
       {"~(exists x. P(x)) & ~P(1) |-"}, nullptr},
      {"exists x. P(x) |-", "ex.ant.neg", "ant:", "0", nullptr, "sn", {},
       "wrong-shape"},
      {"~(exists x. P(x)) |-", "ex.ant.neg", "ant:neg", nullptr, nullptr,
       "sn", {}, "wrong-shape"},
      {"~(exists x. (forall z. x = z)) |-", "ex.ant.neg", "ant:neg", "z",
       nullptr, "sn", {}, "capture"},
      // ---- ex.suc.pos --------------------------------------------------
      {"P |- exists x. Q(x)", "ex.suc.pos", "suc:", "0", nullptr, "sn",
       {"P |- (exists x. Q(x)) | Q(0)"}, nullptr},
      {"|- (exists x. x = y) | R", "ex.suc.pos", "suc:or.left", "y", nullptr,
       "sn", {"|- (exists x. x = y) | R | y = y"}, nullptr},
      {"P |- ~~(exists x. Q(x))", "ex.suc.pos", "suc:neg/neg", "z", nullptr,
       "sn", {"P |- ~~(exists x. Q(x)) | Q(z)"}, nullptr},
      {"P |- ~(exists x. Q(x))", "ex.suc.pos", "suc:neg", "0", nullptr, "sn",
       {}, "wrong-shape"},
      {"P |- exists x. Q(x)", "ex.suc.pos", "suc:", "0", nullptr, "pcn", {},
       "wrong-system"},
      {"P |- exists x. Q(x)", "ex.suc.pos", "suc:", nullptr, nullptr, "sn",
       {}, "wrong-shape"},
      // ---- ex.suc.neg --------------------------------------------------
      {"P |- ~(exists x. Q(x))", "ex.suc.neg", "suc:neg", nullptr, "b", "sn",
       {"P |- ~Q(b)"}, nullptr},
      {"P |- R | ~(exists x. Q(x))", "ex.suc.neg", "suc:or.right/neg",
       nullptr, "b", "sn", {"P |- ~Q(b)"}, nullptr},
      {"|- ~(exists x. x = 0)", "ex.suc.neg", "suc:neg", nullptr, "x", "sn",
       {"|- ~x = 0"}, nullptr},
      {"P(b) |- ~(exists x. Q(x))", "ex.suc.neg", "suc:neg", nullptr, "b",
       "sn", {}, "eigen-not-fresh"},
      {"P |- exists x. Q(x)", "ex.suc.neg", "suc:", nullptr, "b", "sn", {},
       "wrong-shape"},
      {"P |- ~(exists x. Q(x))", "ex.suc.neg", "suc:neg", nullptr, "b", "pcn",
       {}, "wrong-system"},
  };
  return t;
}

struct RunResult {
  int passed = 0;
  std::vector<std::string> failures;
};

inline RunResult run_axiom_cases() {
  RunResult out;
  for (const AxiomCase& c : axiom_cases()) {
    Signature sig;
    Axiom8Oracle oracle;
    std::string got;
    try {
      Sequent s = parse_sequent(c.seq, sig);
      System sys = *parse_system(c.system);
      MatchResult m = match_axiom(s, sig, oracle, sys);
      got = m.kind ? axiom_name(*m.kind)
                   : (m.oracle_unknown ? "unknown" : "none");
    } catch (const Error& e) {
      got = std::string("error: ") + e.what();
    }
    if (got == c.expect) {
      ++out.passed;
    } else {
      out.failures.push_back(std::string(c.seq) + " [" + c.system +
                             "]: expected " + c.expect + ", got " + got);
    }
  }
  return out;
}

inline RunResult run_rule_cases() {
  RunResult out;
  for (const RuleCase& c : rule_cases()) {
    Signature sig;
    std::string fail;
    try {
      Sequent s = parse_sequent(c.seq, sig);
      RuleApp app;
      app.rule = *parse_rule_name(c.rule);
      app.part = parse_part_ref(c.path);
      if (c.term) app.term = parse_term(c.term, sig);
      if (c.eigen) app.eigen = c.eigen;
      std::vector<Sequent> kids = apply_rule(s, app, *parse_system(c.system));
      if (c.err) {
        fail = std::string("expected error ") + c.err + ", rule applied";
      } else if (kids.size() != c.children.size()) {
        fail = "child count mismatch";
      } else {
        for (std::size_t i = 0; i < kids.size(); ++i) {
          std::string printed = print_sequent(kids[i]);
          if (printed != c.children[i])
            fail += "child " + std::to_string(i) + ": expected '" +
                    c.children[i] + "', got '" + printed + "'; ";
        }
      }
    } catch (const Error& e) {
      if (!c.err)
        fail = std::string("unexpected error: ") + e.what();
      else if (errc_name(e.code()) != std::string(c.err))
        fail = std::string("expected error ") + c.err + ", got " +
               errc_name(e.code());
    }
    if (fail.empty()) {
      ++out.passed;
    } else {
      out.failures.push_back(std::string(c.rule) + " on '" + c.seq +
                             "' [" + c.system + "]: " + fail);
    }
  }
  return out;
}

}  // namespace conformance
