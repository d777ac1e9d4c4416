// The fifteen reduction rules: identification, admission per system, and
// application (computing the 1-2 child sequents from a parent sequent, a
// principal part, and an optional term or eigenvariable).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sntab/axiom.hpp"
#include "sntab/error.hpp"
#include "sntab/formula.hpp"
#include "sntab/parts.hpp"

namespace sntab {

enum class RuleId {
  AndAntNeg,  // (A∧B)⁻ in antecedent: branch on A⁻ | B⁻
  AndSucPos,  // (A∧B)₊ in succedent: branch on A₊ | B₊
  OrAntPos,   // (A∨B)⁺ in antecedent: branch on A⁺ | B⁺
  OrSucNeg,   // (A∨B)₋ in succedent: branch on A₋ | B₋
  ImpAntPos,  // (A⊃B)⁺ in antecedent: F -> Δ∨A | F∧B -> Δ (retention)
  ImpSucPos,  // (A⊃B)₊ in succedent: Γ∧A -> B (drops succedent context)
  ImpSucNeg,  // (A⊃B)₋ in succedent: Γ -> G[;]∨A | Γ -> G[B]
  AllAntPos,  // (∀xA)⁺ in antecedent, term t: F∧A(t) -> Δ (retention)
  AllAntNeg,  // (∀xA)⁻ in antecedent, eigen b: F[A(b)] -> Δ
  AllSucPos,  // (∀xA)₊ in succedent, eigen b: Γ -> A(b) (drops context)
  AllSucNeg,  // (∀xA)₋ in succedent, term t: Γ -> G∨∼A(t) (retention)
  ExAntPos,   // (∃xA)⁺ in antecedent, eigen b: F[A(b)] -> Δ
  ExAntNeg,   // (∃xA)⁻ in antecedent, term t: F∧∼A(t) -> Δ (retention)
  ExSucPos,   // (∃xA)₊ in succedent, term t: Γ -> G∨A(t) (retention)
  ExSucNeg    // (∃xA)₋ in succedent, eigen b: Γ -> ∼A(b) (drops context)
};

enum class RuleArg { None, Term, Eigen };

struct RuleInfo {
  RuleId id;
  const char* name;   // stable ASCII identifier used in proof files and CLI
  Side side;          // side the principal part must be on
  Sign sign;          // sign the principal part must have
  Conn conn;          // principal connective
  RuleArg arg;        // extra argument the rule consumes
  int n_children;
  bool retention;     // keeps the principal part (quasi-principal attached)
};

inline const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> t = {
      {RuleId::AndAntNeg, "and.ant.neg", Side::Ant, Sign::Neg, Conn::And, RuleArg::None, 2, false},
      {RuleId::AndSucPos, "and.suc.pos", Side::Suc, Sign::Pos, Conn::And, RuleArg::None, 2, false},
      {RuleId::OrAntPos, "or.ant.pos", Side::Ant, Sign::Pos, Conn::Or, RuleArg::None, 2, false},
      {RuleId::OrSucNeg, "or.suc.neg", Side::Suc, Sign::Neg, Conn::Or, RuleArg::None, 2, false},
      {RuleId::ImpAntPos, "imp.ant.pos", Side::Ant, Sign::Pos, Conn::Imp, RuleArg::None, 2, true},
      {RuleId::ImpSucPos, "imp.suc.pos", Side::Suc, Sign::Pos, Conn::Imp, RuleArg::None, 1, false},
      {RuleId::ImpSucNeg, "imp.suc.neg", Side::Suc, Sign::Neg, Conn::Imp, RuleArg::None, 2, false},
      {RuleId::AllAntPos, "all.ant.pos", Side::Ant, Sign::Pos, Conn::Forall, RuleArg::Term, 1, true},
      {RuleId::AllAntNeg, "all.ant.neg", Side::Ant, Sign::Neg, Conn::Forall, RuleArg::Eigen, 1, false},
      {RuleId::AllSucPos, "all.suc.pos", Side::Suc, Sign::Pos, Conn::Forall, RuleArg::Eigen, 1, false},
      {RuleId::AllSucNeg, "all.suc.neg", Side::Suc, Sign::Neg, Conn::Forall, RuleArg::Term, 1, true},
      {RuleId::ExAntPos, "ex.ant.pos", Side::Ant, Sign::Pos, Conn::Exists, RuleArg::Eigen, 1, false},
      {RuleId::ExAntNeg, "ex.ant.neg", Side::Ant, Sign::Neg, Conn::Exists, RuleArg::Term, 1, true},
      {RuleId::ExSucPos, "ex.suc.pos", Side::Suc, Sign::Pos, Conn::Exists, RuleArg::Term, 1, true},
      {RuleId::ExSucNeg, "ex.suc.neg", Side::Suc, Sign::Neg, Conn::Exists, RuleArg::Eigen, 1, false},
  };
  return t;
}

inline const RuleInfo& rule_info(RuleId id) {
  for (const RuleInfo& r : rule_table())
    if (r.id == id) return r;
  throw Error(Errc::Internal, "unknown rule id");
}

inline std::string rule_name(RuleId id) { return rule_info(id).name; }

inline std::optional<RuleId> parse_rule_name(const std::string& s) {
  for (const RuleInfo& r : rule_table())
    if (s == r.name) return r.id;
  return std::nullopt;
}

// PCN admits exactly the six antecedent rules; FN drops (⊃⁺→); SN has all 15.
inline bool system_admits(System sys, RuleId id) {
  switch (sys) {
    case System::SN:
      return true;
    case System::FN:
      return id != RuleId::ImpAntPos;
    case System::PCN:
      switch (id) {
        case RuleId::AndAntNeg:
        case RuleId::OrAntPos:
        case RuleId::AllAntPos:
        case RuleId::AllAntNeg:
        case RuleId::ExAntPos:
        case RuleId::ExAntNeg:
          return true;
        default:
          return false;
      }
  }
  return false;
}

inline const std::vector<RuleId>& pcn_rules() {
  static const std::vector<RuleId> v = {RuleId::AndAntNeg, RuleId::OrAntPos,
                                        RuleId::AllAntPos, RuleId::AllAntNeg,
                                        RuleId::ExAntNeg,  RuleId::ExAntPos};
  return v;
}

inline bool rule_is_eigen(RuleId id) { return rule_info(id).arg == RuleArg::Eigen; }
inline bool rule_is_term(RuleId id) { return rule_info(id).arg == RuleArg::Term; }

// The three rules that discard succedent context.
inline bool rule_drops_succedent(RuleId id) {
  return id == RuleId::ImpSucPos || id == RuleId::AllSucPos ||
         id == RuleId::ExSucNeg;
}

struct RuleApp {
  RuleId rule;
  PartRef part;
  TermPtr term;        // for term rules
  std::string eigen;   // for eigenvariable rules
};

// Compute the child sequents of applying `app` to `s` in `sys`.
// Errors: WrongShape (part/argument mismatch), WrongSystem, EigenNotFresh,
// Capture (inadmissible substitution).
inline std::vector<Sequent> apply_rule(const Sequent& s, const RuleApp& app,
                                       System sys) {
  const RuleInfo& info = rule_info(app.rule);
  require(system_admits(sys, app.rule), Errc::WrongSystem,
          std::string(info.name) + " not admitted in " + system_name(sys));
  PartInfo p = resolve_part_checked(s, app.part);
  require(p.formula->conn() == info.conn && p.sign == info.sign &&
              app.part.side == info.side,
          Errc::WrongShape,
          std::string(info.name) + " does not apply to part " +
              to_string(app.part) + " of '" + print_sequent(s) + "'");
  switch (info.arg) {
    case RuleArg::None:
      require(!app.term && app.eigen.empty(), Errc::WrongShape,
              std::string(info.name) + " takes no argument");
      break;
    case RuleArg::Term:
      require(app.term != nullptr, Errc::WrongShape,
              std::string(info.name) + " needs a term argument");
      require(app.eigen.empty(), Errc::WrongShape,
              std::string(info.name) + " takes no eigenvariable");
      break;
    case RuleArg::Eigen:
      require(!app.eigen.empty(), Errc::WrongShape,
              std::string(info.name) + " needs an eigenvariable");
      require(app.term == nullptr, Errc::WrongShape,
              std::string(info.name) + " takes no term");
      require(!sequent_has_free_var(s, app.eigen), Errc::EigenNotFresh,
              "eigenvariable '" + app.eigen + "' occurs free in '" +
                  print_sequent(s) + "'");
      break;
  }
  const FormulaPtr& f = p.formula;
  auto instance = [&](const TermPtr& t) {
    return subst_formula(f->left(), f->qvar(), t);
  };
  switch (app.rule) {
    case RuleId::AndAntNeg:
    case RuleId::AndSucPos:
    case RuleId::OrAntPos:
    case RuleId::OrSucNeg:
      return {replace_part(s, app.part, f->left()),
              replace_part(s, app.part, f->right())};
    case RuleId::ImpAntPos:
      return {Sequent{s.ant, attach(s.suc, Conn::Or, f->left())},
              Sequent{attach(s.ant, Conn::And, f->right()), s.suc}};
    case RuleId::ImpSucPos:
      return {Sequent{attach(s.ant, Conn::And, f->left()), f->right()}};
    case RuleId::ImpSucNeg: {
      DeleteResult d = delete_part(s, app.part);
      return {Sequent{s.ant, attach(d.sequent.suc, Conn::Or, f->left())},
              replace_part(s, app.part, f->right())};
    }
    case RuleId::AllAntPos:
      return {Sequent{attach(s.ant, Conn::And, instance(app.term)), s.suc}};
    case RuleId::AllAntNeg:
    case RuleId::ExAntPos:
      return {replace_part(s, app.part, instance(Term::var(app.eigen)))};
    case RuleId::AllSucPos:
      return {Sequent{s.ant, instance(Term::var(app.eigen))}};
    case RuleId::AllSucNeg:
      return {Sequent{
          s.ant, attach(s.suc, Conn::Or, Formula::neg(instance(app.term)))}};
    case RuleId::ExAntNeg:
      return {Sequent{
          attach(s.ant, Conn::And, Formula::neg(instance(app.term))), s.suc}};
    case RuleId::ExSucPos:
      return {Sequent{s.ant, attach(s.suc, Conn::Or, instance(app.term))}};
    case RuleId::ExSucNeg:
      return {Sequent{s.ant, Formula::neg(instance(Term::var(app.eigen)))}};
  }
  throw Error(Errc::Internal, "unhandled rule");
}

}  // namespace sntab
