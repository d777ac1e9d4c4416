// Formulas and sequents: immutable shared ASTs with cached logical length and
// free-variable sets; substitution with capture checking; prime evaluation;
// and the positionwise equivalence relation used by the axioms.
#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/signature.hpp"
#include "sntab/term.hpp"

namespace sntab {

enum class Conn { Prime, Neg, And, Or, Imp, Forall, Exists };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  Conn conn() const { return conn_; }
  const std::string& pred() const { return pred_; }          // Prime
  const std::vector<TermPtr>& args() const { return args_; }  // Prime
  const FormulaPtr& left() const { return left_; }    // Neg/And/Or/Imp/quant body
  const FormulaPtr& right() const { return right_; }  // And/Or/Imp
  const std::string& qvar() const { return qvar_; }   // Forall/Exists

  // Number of logical symbols (primes count zero).
  std::size_t length() const { return length_; }
  // Sorted, deduplicated free variable names.
  const std::vector<std::string>& free_vars() const { return free_; }
  bool closed() const { return free_.empty(); }

  static FormulaPtr prime(const std::string& pred, std::vector<TermPtr> args) {
    auto f = std::make_shared<Formula>(Priv{});
    f->conn_ = Conn::Prime;
    f->pred_ = pred;
    f->args_ = std::move(args);
    std::set<std::string> vs;
    for (const TermPtr& a : f->args_) vs.insert(a->vars().begin(), a->vars().end());
    f->free_.assign(vs.begin(), vs.end());
    f->length_ = 0;
    return f;
  }

  static FormulaPtr neg(FormulaPtr a) {
    auto f = std::make_shared<Formula>(Priv{});
    f->conn_ = Conn::Neg;
    f->left_ = std::move(a);
    f->free_ = f->left_->free_vars();
    f->length_ = f->left_->length() + 1;
    return f;
  }

  static FormulaPtr binary(Conn c, FormulaPtr a, FormulaPtr b) {
    require(c == Conn::And || c == Conn::Or || c == Conn::Imp, Errc::Internal,
            "binary() needs a binary connective");
    auto f = std::make_shared<Formula>(Priv{});
    f->conn_ = c;
    f->left_ = std::move(a);
    f->right_ = std::move(b);
    std::set<std::string> vs(f->left_->free_vars().begin(),
                             f->left_->free_vars().end());
    vs.insert(f->right_->free_vars().begin(), f->right_->free_vars().end());
    f->free_.assign(vs.begin(), vs.end());
    f->length_ = f->left_->length() + f->right_->length() + 1;
    return f;
  }

  static FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
    return binary(Conn::And, std::move(a), std::move(b));
  }
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
    return binary(Conn::Or, std::move(a), std::move(b));
  }
  static FormulaPtr imp(FormulaPtr a, FormulaPtr b) {
    return binary(Conn::Imp, std::move(a), std::move(b));
  }

  static FormulaPtr quant(Conn c, const std::string& v, FormulaPtr body) {
    require(c == Conn::Forall || c == Conn::Exists, Errc::Internal,
            "quant() needs a quantifier");
    auto f = std::make_shared<Formula>(Priv{});
    f->conn_ = c;
    f->qvar_ = v;
    f->left_ = std::move(body);
    f->free_ = f->left_->free_vars();
    auto it = std::lower_bound(f->free_.begin(), f->free_.end(), v);
    if (it != f->free_.end() && *it == v) f->free_.erase(it);
    f->length_ = f->left_->length() + 1;
    return f;
  }

  static FormulaPtr forall(const std::string& v, FormulaPtr body) {
    return quant(Conn::Forall, v, std::move(body));
  }
  static FormulaPtr exists(const std::string& v, FormulaPtr body) {
    return quant(Conn::Exists, v, std::move(body));
  }

  struct Priv {};
  explicit Formula(Priv) {}

 private:
  Conn conn_ = Conn::Prime;
  std::string pred_;
  std::vector<TermPtr> args_;
  FormulaPtr left_, right_;
  std::string qvar_;
  std::size_t length_ = 0;
  std::vector<std::string> free_;
};

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->conn() != b->conn()) return false;
  switch (a->conn()) {
    case Conn::Prime: {
      if (a->pred() != b->pred() || a->args().size() != b->args().size())
        return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_equal(a->args()[i], b->args()[i])) return false;
      return true;
    }
    case Conn::Neg:
      return formula_equal(a->left(), b->left());
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
      return formula_equal(a->left(), b->left()) &&
             formula_equal(a->right(), b->right());
    case Conn::Forall:
    case Conn::Exists:
      return a->qvar() == b->qvar() && formula_equal(a->left(), b->left());
  }
  return false;
}

inline bool is_free_in(const FormulaPtr& f, const std::string& var) {
  return std::binary_search(f->free_vars().begin(), f->free_vars().end(), var);
}

// Substitute repl for every free occurrence of var. Throws Errc::Capture when
// a free variable of repl would be bound by a quantifier of f.
inline FormulaPtr subst_formula(const FormulaPtr& f, const std::string& var,
                                const TermPtr& repl) {
  if (!is_free_in(f, var)) return f;
  switch (f->conn()) {
    case Conn::Prime: {
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const TermPtr& a : f->args()) args.push_back(subst_term(a, var, repl));
      return Formula::prime(f->pred(), std::move(args));
    }
    case Conn::Neg:
      return Formula::neg(subst_formula(f->left(), var, repl));
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
      return Formula::binary(f->conn(), subst_formula(f->left(), var, repl),
                             subst_formula(f->right(), var, repl));
    case Conn::Forall:
    case Conn::Exists: {
      // var is free in f, hence var != qvar here.
      require(!term_has_var(repl, f->qvar()), Errc::Capture,
              "substituting a term containing '" + f->qvar() +
                  "' under its quantifier");
      return Formula::quant(f->conn(), f->qvar(),
                            subst_formula(f->left(), var, repl));
    }
  }
  throw Error(Errc::Internal, "unreachable connective");
}

inline bool substitution_admissible(const FormulaPtr& f, const std::string& var,
                                    const TermPtr& repl) {
  if (!is_free_in(f, var)) return true;
  switch (f->conn()) {
    case Conn::Prime:
      return true;
    case Conn::Neg:
      return substitution_admissible(f->left(), var, repl);
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
      return substitution_admissible(f->left(), var, repl) &&
             substitution_admissible(f->right(), var, repl);
    case Conn::Forall:
    case Conn::Exists:
      return !term_has_var(repl, f->qvar()) &&
             substitution_admissible(f->left(), var, repl);
  }
  return false;
}

// A prime formula all of whose arguments are variable-free.
inline bool is_constant_prime(const FormulaPtr& f) {
  return f->conn() == Conn::Prime && f->closed();
}

// Truth value of a constant prime; nullopt when its predicate is opaque.
inline std::optional<bool> eval_prime(const FormulaPtr& f, const Signature& sig) {
  require(is_constant_prime(f), Errc::Internal,
          "eval_prime needs a constant prime formula");
  std::vector<Nat> vals;
  vals.reserve(f->args().size());
  for (const TermPtr& a : f->args()) vals.push_back(eval_term(a, sig));
  if (f->pred() == "=") return vals[0] == vals[1];
  const PredInfo* p = sig.predicate(f->pred());
  require(p != nullptr, Errc::Signature, "unknown predicate '" + f->pred() + "'");
  require(p->arity == vals.size(), Errc::Signature,
          "arity mismatch for '" + f->pred() + "'");
  if (!p->eval) return std::nullopt;
  return p->eval(vals);
}

// Positionwise equivalence: identical connective/predicate/binder skeleton,
// and at every term position either both sides are variable-free with equal
// values or the terms are syntactically identical.
inline bool equivalent(const FormulaPtr& a, const FormulaPtr& b,
                       const Signature& sig) {
  if (a->conn() != b->conn()) return false;
  switch (a->conn()) {
    case Conn::Prime: {
      if (a->pred() != b->pred() || a->args().size() != b->args().size())
        return false;
      for (std::size_t i = 0; i < a->args().size(); ++i) {
        const TermPtr& u = a->args()[i];
        const TermPtr& v = b->args()[i];
        if (u->closed() && v->closed()) {
          if (eval_term(u, sig) != eval_term(v, sig)) return false;
        } else if (!term_equal(u, v)) {
          return false;
        }
      }
      return true;
    }
    case Conn::Neg:
      return equivalent(a->left(), b->left(), sig);
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
      return equivalent(a->left(), b->left(), sig) &&
             equivalent(a->right(), b->right(), sig);
    case Conn::Forall:
    case Conn::Exists:
      return a->qvar() == b->qvar() && equivalent(a->left(), b->left(), sig);
  }
  return false;
}

inline bool implication_free(const FormulaPtr& f) {
  switch (f->conn()) {
    case Conn::Prime: return true;
    case Conn::Imp: return false;
    case Conn::Neg:
    case Conn::Forall:
    case Conn::Exists:
      return implication_free(f->left());
    case Conn::And:
    case Conn::Or:
      return implication_free(f->left()) && implication_free(f->right());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Sequents: at most one formula on each side.

struct Sequent {
  FormulaPtr ant;  // null = empty antecedent
  FormulaPtr suc;  // null = empty succedent
};

inline bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (static_cast<bool>(a.ant) != static_cast<bool>(b.ant)) return false;
  if (static_cast<bool>(a.suc) != static_cast<bool>(b.suc)) return false;
  if (a.ant && !formula_equal(a.ant, b.ant)) return false;
  if (a.suc && !formula_equal(a.suc, b.suc)) return false;
  return true;
}

inline std::vector<std::string> sequent_free_vars(const Sequent& s) {
  std::set<std::string> vs;
  if (s.ant) vs.insert(s.ant->free_vars().begin(), s.ant->free_vars().end());
  if (s.suc) vs.insert(s.suc->free_vars().begin(), s.suc->free_vars().end());
  return std::vector<std::string>(vs.begin(), vs.end());
}

inline bool sequent_has_free_var(const Sequent& s, const std::string& v) {
  return (s.ant && is_free_in(s.ant, v)) || (s.suc && is_free_in(s.suc, v));
}

inline Sequent subst_sequent(const Sequent& s, const std::string& var,
                             const TermPtr& repl) {
  Sequent r;
  if (s.ant) r.ant = subst_formula(s.ant, var, repl);
  if (s.suc) r.suc = subst_formula(s.suc, var, repl);
  return r;
}

inline bool sequent_implication_free(const Sequent& s) {
  return (!s.ant || implication_free(s.ant)) &&
         (!s.suc || implication_free(s.suc));
}

// All variable names occurring anywhere (free or bound) — used for freshness.
inline void collect_all_vars(const TermPtr& t, std::set<std::string>& out) {
  out.insert(t->vars().begin(), t->vars().end());
}
inline void collect_all_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->conn()) {
    case Conn::Prime:
      for (const TermPtr& a : f->args()) collect_all_vars(a, out);
      return;
    case Conn::Neg:
      collect_all_vars(f->left(), out);
      return;
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
      collect_all_vars(f->left(), out);
      collect_all_vars(f->right(), out);
      return;
    case Conn::Forall:
    case Conn::Exists:
      out.insert(f->qvar());
      collect_all_vars(f->left(), out);
      return;
  }
}
inline void collect_all_vars(const Sequent& s, std::set<std::string>& out) {
  if (s.ant) collect_all_vars(s.ant, out);
  if (s.suc) collect_all_vars(s.suc, out);
}

// Deterministic generator of names unused in everything registered with it.
class FreshGen {
 public:
  void reserve(const std::set<std::string>& names) {
    used_.insert(names.begin(), names.end());
  }
  void reserve(const Sequent& s) {
    std::set<std::string> vs;
    collect_all_vars(s, vs);
    used_.insert(vs.begin(), vs.end());
  }
  void reserve_name(const std::string& n) { used_.insert(n); }
  std::string fresh(const std::string& stem = "v") {
    for (;;) {
      std::string cand = stem + "_" + std::to_string(counter_++);
      if (used_.insert(cand).second) return cand;
    }
  }

 private:
  std::set<std::string> used_;
  unsigned counter_ = 0;
};

}  // namespace sntab
