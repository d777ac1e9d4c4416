// Axioms 1-8 and their matcher. Kinds 1-7 are witnessed directly by prime
// parts; kind 8 (sequents with free variables all of whose numeral instances
// are axioms 1-7) is delegated to a certificate-based oracle that can answer
// Certified, Refuted, or Unknown.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/formula.hpp"
#include "sntab/parts.hpp"
#include "sntab/print.hpp"
#include "sntab/signature.hpp"
#include "sntab/term.hpp"
#include "sntab/termnf.hpp"

namespace sntab {

enum class System { SN, PCN, FN };

inline const char* system_name(System s) {
  switch (s) {
    case System::SN: return "sn";
    case System::PCN: return "pcn";
    case System::FN: return "fn";
  }
  return "?";
}

inline std::optional<System> parse_system(const std::string& s) {
  if (s == "sn") return System::SN;
  if (s == "pcn") return System::PCN;
  if (s == "fn") return System::FN;
  return std::nullopt;
}

enum class AxiomKind { Ax1 = 1, Ax2, Ax3, Ax4, Ax5, Ax6, Ax7, Ax8 };

inline std::string axiom_name(AxiomKind k) {
  return "Ax" + std::to_string(static_cast<int>(k));
}

inline std::optional<AxiomKind> parse_axiom_name(const std::string& s) {
  for (int i = 1; i <= 8; ++i)
    if (s == "Ax" + std::to_string(i)) return static_cast<AxiomKind>(i);
  return std::nullopt;
}

// A sequent with an empty succedent is the only shape PCN handles, and there
// axioms 3, 4, 6, 7 are unavailable.
inline bool axiom_allowed(System sys, AxiomKind k) {
  if (sys != System::PCN) return true;
  switch (k) {
    case AxiomKind::Ax1:
    case AxiomKind::Ax2:
    case AxiomKind::Ax5:
    case AxiomKind::Ax8:
      return true;
    default:
      return false;
  }
}

// True-role parts (antecedent negative, succedent positive) assert truth of
// their formula; false-role parts assert falsity.
inline bool truth_role(Side side, Sign sign) {
  return (side == Side::Ant && sign == Sign::Neg) ||
         (side == Side::Suc && sign == Sign::Pos);
}

struct PrimePart {
  PartInfo info;
  bool true_role = false;
  const FormulaPtr& formula_ref() const { return info.formula; }
};

inline std::vector<PrimePart> prime_parts(const Sequent& s) {
  std::vector<PrimePart> out;
  for (PartInfo& p : enumerate_parts(s))
    if (p.formula->conn() == Conn::Prime)
      out.push_back(PrimePart{p, truth_role(p.ref.side, p.sign)});
  return out;
}

// Witness for one of the axioms 1-7 on an arbitrary sequent (free variables
// allowed: axioms 1-4 only consult variable-free primes, 5-7 use positional
// equivalence). Parts are scanned in pre-order, antecedent first.
inline std::optional<AxiomKind> match_axiom_1_7(
    const Sequent& s, const Signature& sig,
    std::vector<PartRef>* witnesses = nullptr) {
  std::vector<PrimePart> pp = prime_parts(s);
  auto single = [&](Side side, Sign sign, bool want) -> const PrimePart* {
    for (const PrimePart& p : pp) {
      if (p.info.ref.side != side || p.info.sign != sign) continue;
      if (!is_constant_prime(p.info.formula)) continue;
      auto v = eval_prime(p.info.formula, sig);
      if (v && *v == want) return &p;
    }
    return nullptr;
  };
  auto pair_match = [&](Side s1, Sign g1, Side s2, Sign g2)
      -> std::optional<std::pair<const PrimePart*, const PrimePart*>> {
    for (const PrimePart& p : pp) {
      if (p.info.ref.side != s1 || p.info.sign != g1) continue;
      for (const PrimePart& q : pp) {
        if (q.info.ref.side != s2 || q.info.sign != g2) continue;
        if (p.info.ref == q.info.ref) continue;
        if (equivalent(p.info.formula, q.info.formula, sig))
          return std::make_pair(&p, &q);
      }
    }
    return std::nullopt;
  };
  auto report = [&](std::initializer_list<const PrimePart*> ws, AxiomKind k) {
    if (witnesses) {
      witnesses->clear();
      for (const PrimePart* w : ws) witnesses->push_back(w->info.ref);
    }
    return k;
  };
  if (const PrimePart* w = single(Side::Ant, Sign::Neg, true))
    return report({w}, AxiomKind::Ax1);
  if (const PrimePart* w = single(Side::Ant, Sign::Pos, false))
    return report({w}, AxiomKind::Ax2);
  if (const PrimePart* w = single(Side::Suc, Sign::Pos, true))
    return report({w}, AxiomKind::Ax3);
  if (const PrimePart* w = single(Side::Suc, Sign::Neg, false))
    return report({w}, AxiomKind::Ax4);
  if (auto w = pair_match(Side::Ant, Sign::Pos, Side::Ant, Sign::Neg))
    return report({w->first, w->second}, AxiomKind::Ax5);
  if (auto w = pair_match(Side::Ant, Sign::Pos, Side::Suc, Sign::Pos))
    return report({w->first, w->second}, AxiomKind::Ax6);
  if (auto w = pair_match(Side::Ant, Sign::Neg, Side::Suc, Sign::Neg))
    return report({w->first, w->second}, AxiomKind::Ax7);
  return std::nullopt;
}

// Check a specific axiom kind 1-7 (not first-match).
inline bool holds_axiom_1_7(const Sequent& s, AxiomKind k, const Signature& sig) {
  std::vector<PrimePart> pp = prime_parts(s);
  auto single = [&](Side side, Sign sign, bool want) {
    for (const PrimePart& p : pp) {
      if (p.info.ref.side != side || p.info.sign != sign) continue;
      if (!is_constant_prime(p.info.formula)) continue;
      auto v = eval_prime(p.info.formula, sig);
      if (v && *v == want) return true;
    }
    return false;
  };
  auto pair_match = [&](Side s1, Sign g1, Side s2, Sign g2) {
    for (const PrimePart& p : pp) {
      if (p.info.ref.side != s1 || p.info.sign != g1) continue;
      for (const PrimePart& q : pp) {
        if (q.info.ref.side != s2 || q.info.sign != g2) continue;
        if (p.info.ref == q.info.ref) continue;
        if (equivalent(p.info.formula, q.info.formula, sig)) return true;
      }
    }
    return false;
  };
  switch (k) {
    case AxiomKind::Ax1: return single(Side::Ant, Sign::Neg, true);
    case AxiomKind::Ax2: return single(Side::Ant, Sign::Pos, false);
    case AxiomKind::Ax3: return single(Side::Suc, Sign::Pos, true);
    case AxiomKind::Ax4: return single(Side::Suc, Sign::Neg, false);
    case AxiomKind::Ax5: return pair_match(Side::Ant, Sign::Pos, Side::Ant, Sign::Neg);
    case AxiomKind::Ax6: return pair_match(Side::Ant, Sign::Pos, Side::Suc, Sign::Pos);
    case AxiomKind::Ax7: return pair_match(Side::Ant, Sign::Neg, Side::Suc, Sign::Neg);
    case AxiomKind::Ax8: return false;  // handled by the oracle
  }
  return false;
}

// ---------------------------------------------------------------------------
// Axiom-8 oracle.

struct OracleResult {
  enum class Verdict { Certified, Refuted, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string detail;
};

class Axiom8Oracle {
 public:
  explicit Axiom8Oracle(Nat per_var_bound = 8, std::size_t tuple_cap = 4096)
      : bound_(per_var_bound), cap_(tuple_cap) {}

  OracleResult query(const Sequent& s, const Signature& sig) const {
    std::string key = print_sequent(s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    OracleResult r = compute(s, sig);
    memo_[key] = r;
    return r;
  }

  Nat per_var_bound() const { return bound_; }

 private:
  Nat bound_;
  std::size_t cap_;
  mutable std::map<std::string, OracleResult> memo_;

  static bool c5_related(const TermPtr& b, const TermPtr& c, const TermNF& nu,
                         const TermNF& nv, const Signature& sig) {
    TermNF nb = term_nf(b, sig), nc = term_nf(c, sig);
    if (nb == nc) return true;
    if ((nb == nu && nc == nv) || (nb == nv && nc == nu)) return true;
    if (b->kind() == TermKind::Succ && c->kind() == TermKind::Succ)
      return c5_related(b->sub(), c->sub(), nu, nv, sig);
    if (b->kind() == TermKind::App && c->kind() == TermKind::App &&
        b->name() == c->name() && b->args().size() == c->args().size()) {
      for (std::size_t i = 0; i < b->args().size(); ++i)
        if (!c5_related(b->args()[i], c->args()[i], nu, nv, sig)) return false;
      return true;
    }
    return false;
  }

  OracleResult compute(const Sequent& s, const Signature& sig) const {
    std::vector<std::string> fv = sequent_free_vars(s);
    if (fv.empty())
      return {OracleResult::Verdict::Refuted, "no free variables"};
    std::vector<PrimePart> pp = prime_parts(s);

    // C0: a decidable variable-free prime already witnesses its role.
    for (const PrimePart& p : pp) {
      if (!is_constant_prime(p.formula_ref())) continue;
      auto v = eval_prime(p.formula_ref(), sig);
      if (v && *v == p.true_role)
        return {OracleResult::Verdict::Certified,
                "C0 constant prime " + print_formula(p.formula_ref()) + " at " +
                    to_string(p.info.ref)};
    }
    // C1: a true-role equality whose sides have equal normal forms.
    for (const PrimePart& p : pp) {
      if (!p.true_role || p.formula_ref()->pred() != "=") continue;
      if (term_nf(p.formula_ref()->args()[0], sig) ==
          term_nf(p.formula_ref()->args()[1], sig))
        return {OracleResult::Verdict::Certified,
                "C1 identically true equality at " + to_string(p.info.ref)};
    }
    // C2: a false-role equality whose sides differ by a positive constant in
    // one direction under every instantiation.
    for (const PrimePart& p : pp) {
      if (p.true_role || p.formula_ref()->pred() != "=") continue;
      TermNF a = term_nf(p.formula_ref()->args()[0], sig);
      TermNF b = term_nf(p.formula_ref()->args()[1], sig);
      if (nf_strictly_dominates(a, b) || nf_strictly_dominates(b, a))
        return {OracleResult::Verdict::Certified,
                "C2 identically false equality at " + to_string(p.info.ref)};
    }
    // C3: a true-role / false-role pair of same-predicate primes with
    // argumentwise congruent arguments.
    for (const PrimePart& p : pp) {
      if (!p.true_role) continue;
      for (const PrimePart& q : pp) {
        if (q.true_role || p.info.ref == q.info.ref) continue;
        const FormulaPtr& fb = p.info.formula;
        const FormulaPtr& fc = q.info.formula;
        if (fb->pred() != fc->pred() || fb->args().size() != fc->args().size())
          continue;
        bool all = true;
        for (std::size_t i = 0; all && i < fb->args().size(); ++i)
          all = congruent(fb->args()[i], fc->args()[i], sig);
        if (all)
          return {OracleResult::Verdict::Certified,
                  "C3 congruent pair at " + to_string(p.info.ref) + " / " +
                      to_string(q.info.ref)};
      }
    }
    // C4: linked equalities E1 (false role, s1=t1) and E2 (true role, s2=t2)
    // with nf(s1)+nf(t2) == nf(s2)+nf(t1) or nf(s1)+nf(s2) == nf(t1)+nf(t2):
    // either way, instances satisfy E1 -> E2, so each instance matches an
    // axiom at E2 (E1 true) or at E1 (E1 false).
    for (const PrimePart& e1 : pp) {
      if (e1.true_role || e1.formula_ref()->pred() != "=") continue;
      TermNF s1 = term_nf(e1.formula_ref()->args()[0], sig);
      TermNF t1 = term_nf(e1.formula_ref()->args()[1], sig);
      for (const PrimePart& e2 : pp) {
        if (!e2.true_role || e2.formula_ref()->pred() != "=") continue;
        TermNF s2 = term_nf(e2.formula_ref()->args()[0], sig);
        TermNF t2 = term_nf(e2.formula_ref()->args()[1], sig);
        if (s1 + t2 == s2 + t1 || s1 + s2 == t1 + t2)
          return {OracleResult::Verdict::Certified,
                  "C4 linked equalities at " + to_string(e1.info.ref) + " / " +
                      to_string(e2.info.ref)};
      }
    }
    // C5: a false-role equality u=v plus a true-role/false-role pair of
    // same-predicate primes whose arguments anti-unify along (u,v).
    for (const PrimePart& e : pp) {
      if (e.true_role || e.formula_ref()->pred() != "=") continue;
      TermNF nu = term_nf(e.formula_ref()->args()[0], sig);
      TermNF nv = term_nf(e.formula_ref()->args()[1], sig);
      for (const PrimePart& p : pp) {
        if (!p.true_role) continue;
        for (const PrimePart& q : pp) {
          if (q.true_role || q.info.ref == p.info.ref) continue;
          const FormulaPtr& fb = p.formula_ref();
          const FormulaPtr& fc = q.formula_ref();
          if (fb->pred() != fc->pred() ||
              fb->args().size() != fc->args().size())
            continue;
          bool all = true;
          for (std::size_t i = 0; all && i < fb->args().size(); ++i)
            all = c5_related(fb->args()[i], fc->args()[i], nu, nv, sig);
          if (all)
            return {OracleResult::Verdict::Certified,
                    "C5 split along " + print_formula(e.formula_ref()) +
                        " with pair " + to_string(p.info.ref) + " / " +
                        to_string(q.info.ref)};
        }
      }
    }
    // Exhaustive small-instance search: refute or give up.
    return enumerate_instances(s, sig, fv);
  }

  OracleResult enumerate_instances(const Sequent& s, const Signature& sig,
                                   const std::vector<std::string>& fv) const {
    std::vector<Nat> tuple(fv.size(), 0);
    std::size_t tried = 0;
    bool saw_opaque_block = false;
    for (;;) {
      if (tried++ >= cap_) break;
      Sequent inst = s;
      for (std::size_t i = 0; i < fv.size(); ++i)
        inst = subst_sequent(inst, fv[i], Term::numeral_term(tuple[i]));
      if (!match_axiom_1_7(inst, sig)) {
        bool opaque = false;
        for (const PrimePart& p : prime_parts(inst))
          if (is_constant_prime(p.formula_ref()) &&
              !eval_prime(p.formula_ref(), sig))
            opaque = true;
        if (opaque) {
          saw_opaque_block = true;
        } else {
          std::string cx;
          for (std::size_t i = 0; i < fv.size(); ++i) {
            if (i) cx += ", ";
            cx += fv[i] + "=" + std::to_string(tuple[i]);
          }
          return {OracleResult::Verdict::Refuted,
                  "instance fails axioms 1-7 at " + cx};
        }
      }
      // Odometer.
      std::size_t i = 0;
      while (i < tuple.size() && tuple[i] == bound_) tuple[i++] = 0;
      if (i == tuple.size()) break;
      ++tuple[i];
    }
    return {OracleResult::Verdict::Unknown,
            saw_opaque_block
                ? "instances blocked by opaque predicates"
                : "no certificate; all tried instances are axioms"};
  }
};

// Testing aid: every small numeral instance of the sequent matches axioms
// 1-7, skipping instances containing undecidable constant primes.
inline bool axiom8_spot_check(const Sequent& s, const Signature& sig,
                              Nat bound = 3) {
  std::vector<std::string> fv = sequent_free_vars(s);
  if (fv.empty()) return false;
  std::vector<Nat> tuple(fv.size(), 0);
  for (;;) {
    Sequent inst = s;
    for (std::size_t i = 0; i < fv.size(); ++i)
      inst = subst_sequent(inst, fv[i], Term::numeral_term(tuple[i]));
    if (!match_axiom_1_7(inst, sig)) {
      bool opaque = false;
      for (const PrimePart& p : prime_parts(inst))
        if (is_constant_prime(p.formula_ref()) &&
            !eval_prime(p.formula_ref(), sig))
          opaque = true;
      if (!opaque) return false;
    }
    std::size_t i = 0;
    while (i < tuple.size() && tuple[i] == bound) tuple[i++] = 0;
    if (i == tuple.size()) break;
    ++tuple[i];
  }
  return true;
}

// ---------------------------------------------------------------------------
// Full matcher.

struct MatchResult {
  std::optional<AxiomKind> kind;
  bool oracle_unknown = false;
  std::string detail;
};

inline MatchResult match_axiom(const Sequent& s, const Signature& sig,
                               const Axiom8Oracle& oracle, System sys) {
  for (int i = 1; i <= 7; ++i) {
    AxiomKind k = static_cast<AxiomKind>(i);
    if (!axiom_allowed(sys, k)) continue;
    if (holds_axiom_1_7(s, k, sig)) return {k, false, axiom_name(k)};
  }
  if (!sequent_free_vars(s).empty()) {
    OracleResult r = oracle.query(s, sig);
    if (r.verdict == OracleResult::Verdict::Certified)
      return {AxiomKind::Ax8, false, r.detail};
    if (r.verdict == OracleResult::Verdict::Unknown)
      return {std::nullopt, true, r.detail};
  }
  return {std::nullopt, false, "no axiom matches"};
}

struct ValidateResult {
  bool ok = false;
  bool oracle_unknown = false;
  std::string reason;
};

// Validate a *claimed* axiom kind (not first-match).
inline ValidateResult validate_axiom(const Sequent& s, AxiomKind k,
                                     const Signature& sig,
                                     const Axiom8Oracle& oracle, System sys) {
  if (!axiom_allowed(sys, k))
    return {false, false,
            axiom_name(k) + " unavailable in " + system_name(sys)};
  if (k != AxiomKind::Ax8) {
    if (holds_axiom_1_7(s, k, sig)) return {true, false, axiom_name(k)};
    return {false, false, "sequent is not an instance of " + axiom_name(k)};
  }
  if (sequent_free_vars(s).empty())
    return {false, false, "Ax8 requires at least one free variable"};
  OracleResult r = oracle.query(s, sig);
  switch (r.verdict) {
    case OracleResult::Verdict::Certified:
      return {true, false, r.detail};
    case OracleResult::Verdict::Refuted:
      return {false, false, "Ax8 refuted: " + r.detail};
    case OracleResult::Verdict::Unknown:
      return {false, true, "Ax8 undecided: " + r.detail};
  }
  return {false, false, "unreachable"};
}

}  // namespace sntab
