// Tableau proof objects and the proof checker. A tableau is a tree of
// sequents: leaves claim an axiom kind, inner nodes claim a rule application
// whose children the checker recomputes and compares against the stored
// subtrees.
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sntab/axiom.hpp"
#include "sntab/error.hpp"
#include "sntab/formula.hpp"
#include "sntab/rule.hpp"

namespace sntab {

struct Tableau;
using TableauPtr = std::shared_ptr<const Tableau>;

struct LeafJust {
  AxiomKind kind;
};

struct StepJust {
  RuleApp app;
};

struct Tableau {
  Sequent seq;
  std::variant<LeafJust, StepJust> just;
  std::vector<TableauPtr> kids;

  static TableauPtr leaf(Sequent s, AxiomKind k) {
    auto t = std::make_shared<Tableau>();
    t->seq = std::move(s);
    t->just = LeafJust{k};
    return t;
  }
  static TableauPtr step(Sequent s, RuleApp app, std::vector<TableauPtr> kids) {
    auto t = std::make_shared<Tableau>();
    t->seq = std::move(s);
    t->just = StepJust{std::move(app)};
    t->kids = std::move(kids);
    return t;
  }
};

inline bool is_leaf(const TableauPtr& t) {
  return std::holds_alternative<LeafJust>(t->just);
}
inline const LeafJust& leaf_just(const TableauPtr& t) {
  return std::get<LeafJust>(t->just);
}
inline const StepJust& step_just(const TableauPtr& t) {
  return std::get<StepJust>(t->just);
}

inline std::size_t tableau_size(const TableauPtr& t) {
  std::size_t n = 1;
  for (const TableauPtr& k : t->kids) n += tableau_size(k);
  return n;
}

// Internal builder used by transformations: recompute the children and check
// the supplied subtrees prove exactly them, in order. A mismatch here is a
// bug in the caller, not bad input.
inline TableauPtr build_step(const Sequent& s, const RuleApp& app, System sys,
                             std::vector<TableauPtr> kids) {
  std::vector<Sequent> want = apply_rule(s, app, sys);
  require(want.size() == kids.size(), Errc::Internal,
          "build_step: child count mismatch");
  for (std::size_t i = 0; i < kids.size(); ++i)
    require(sequent_equal(want[i], kids[i]->seq), Errc::Internal,
            "build_step: child " + std::to_string(i) + " proves '" +
                print_sequent(kids[i]->seq) + "' but the rule yields '" +
                print_sequent(want[i]) + "'");
  return Tableau::step(s, app, std::move(kids));
}

struct CheckOptions {
  System system = System::SN;
  bool strict_axiom8 = false;  // reject when the oracle answers Unknown
};

struct Verdict {
  bool ok = false;
  bool oracle_unknown = false;  // some leaf rested on an Unknown answer
  std::string reason;           // first failure, empty when ok
  std::string where;            // node address like "0.1" (root = "root")
  std::vector<std::string> warnings;
};

namespace detail {
inline bool check_node(const TableauPtr& t, const Signature& sig,
                       const Axiom8Oracle& oracle, const CheckOptions& opt,
                       const std::string& addr, Verdict& v) {
  auto fail = [&](const std::string& why) {
    v.ok = false;
    v.reason = why;
    v.where = addr;
    return false;
  };
  if (opt.system == System::PCN && t->seq.suc)
    return fail("PCN sequents must have an empty succedent: '" +
                print_sequent(t->seq) + "'");
  if (is_leaf(t)) {
    if (!t->kids.empty()) return fail("leaf node with children");
    ValidateResult r =
        validate_axiom(t->seq, leaf_just(t).kind, sig, oracle, opt.system);
    if (r.ok) return true;
    if (r.oracle_unknown) {
      v.oracle_unknown = true;
      if (opt.strict_axiom8) return fail(r.reason);
      v.warnings.push_back(addr + ": accepted without certificate (" +
                           r.reason + ")");
      return true;
    }
    return fail("'" + print_sequent(t->seq) + "': " + r.reason);
  }
  const RuleApp& app = step_just(t).app;
  std::vector<Sequent> want;
  try {
    want = apply_rule(t->seq, app, opt.system);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (want.size() != t->kids.size())
    return fail(rule_name(app.rule) + " yields " +
                std::to_string(want.size()) + " children, node has " +
                std::to_string(t->kids.size()));
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!sequent_equal(want[i], t->kids[i]->seq))
      return fail("child " + std::to_string(i) + " should be '" +
                  print_sequent(want[i]) + "' but is '" +
                  print_sequent(t->kids[i]->seq) + "'");
    std::string kid_addr =
        (addr == "root" ? "" : addr + ".") + std::to_string(i);
    if (!check_node(t->kids[i], sig, oracle, opt, kid_addr, v)) return false;
  }
  return true;
}
}  // namespace detail

inline Verdict check_proof(const TableauPtr& t, const Signature& sig,
                           const Axiom8Oracle& oracle,
                           const CheckOptions& opt = {}) {
  Verdict v;
  v.ok = detail::check_node(t, sig, oracle, opt, "root", v);
  return v;
}

// Assertion form used throughout the transformation tests and as an internal
// sanity net: throws on rejection.
inline void require_checked(const TableauPtr& t, const Signature& sig,
                            const Axiom8Oracle& oracle,
                            const CheckOptions& opt = {}) {
  Verdict v = check_proof(t, sig, oracle, opt);
  require(v.ok, Errc::BadProof, "proof rejected at " + v.where + ": " + v.reason);
}

}  // namespace sntab
