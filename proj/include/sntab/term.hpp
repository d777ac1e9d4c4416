// Terms: immutable shared ASTs over variables, zero, successor and function
// applications, with construction-time caches for "is a literal numeral",
// "contains no variables" and the set of variables.
#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/signature.hpp"

namespace sntab {

enum class TermKind { Var, Zero, Succ, App };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }        // Var or App head
  const std::vector<TermPtr>& args() const { return args_; }  // App
  const TermPtr& sub() const { return args_[0]; }          // Succ operand

  // Cached: value when the term is a literal numeral s(...s(0)...).
  const std::optional<Nat>& numeral() const { return numeral_; }
  // Cached: true iff the term contains no variables ("numerical" term).
  bool closed() const { return closed_; }
  // Cached, sorted, deduplicated variable names.
  const std::vector<std::string>& vars() const { return vars_; }

  static TermPtr var(const std::string& name) {
    auto t = std::make_shared<Term>(Priv{});
    t->kind_ = TermKind::Var;
    t->name_ = name;
    t->closed_ = false;
    t->vars_ = {name};
    return t;
  }

  static TermPtr zero() {
    auto t = std::make_shared<Term>(Priv{});
    t->kind_ = TermKind::Zero;
    t->closed_ = true;
    t->numeral_ = 0;
    return t;
  }

  static TermPtr succ(TermPtr inner) {
    auto t = std::make_shared<Term>(Priv{});
    t->kind_ = TermKind::Succ;
    t->args_ = {std::move(inner)};
    const Term& in = *t->args_[0];
    t->closed_ = in.closed();
    if (in.numeral()) t->numeral_ = *in.numeral() + 1;
    t->vars_ = in.vars();
    return t;
  }

  static TermPtr app(const std::string& head, std::vector<TermPtr> args) {
    require(head != "s", Errc::Internal,
            "successor must be built with Term::succ");
    auto t = std::make_shared<Term>(Priv{});
    t->kind_ = TermKind::App;
    t->name_ = head;
    t->args_ = std::move(args);
    t->closed_ = true;
    std::set<std::string> vs;
    for (const TermPtr& a : t->args_) {
      t->closed_ = t->closed_ && a->closed();
      vs.insert(a->vars().begin(), a->vars().end());
    }
    t->vars_.assign(vs.begin(), vs.end());
    return t;
  }

  static TermPtr numeral_term(Nat n) {
    TermPtr t = zero();
    for (Nat i = 0; i < n; ++i) t = succ(t);
    return t;
  }

  struct Priv {};  // make_shared access without exposing raw construction
  explicit Term(Priv) {}

  // Large numerals are million-node Succ chains; collapse sole-owner chains
  // iteratively so destruction never recurses deeply.
  ~Term() {
    while (args_.size() == 1 && args_[0].use_count() == 1) {
      TermPtr child = std::move(args_[0]);
      args_ = std::move(const_cast<Term&>(*child).args_);
    }
  }

 private:
  TermKind kind_ = TermKind::Zero;
  std::string name_;
  std::vector<TermPtr> args_;
  std::optional<Nat> numeral_;
  bool closed_ = true;
  std::vector<std::string> vars_;
};

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var: return a->name() == b->name();
    case TermKind::Zero: return true;
    case TermKind::Succ: return term_equal(a->sub(), b->sub());
    case TermKind::App: {
      if (a->name() != b->name()) return false;
      if (a->args().size() != b->args().size()) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_equal(a->args()[i], b->args()[i])) return false;
      return true;
    }
  }
  return false;
}

// Value of a variable-free term. Registered evaluators are total; wrap-around
// 64-bit arithmetic is accepted at the scales this library is used at.
inline Nat eval_term(const TermPtr& t, const Signature& sig) {
  require(t->closed(), Errc::Internal, "eval_term on a term with variables");
  if (t->numeral()) return *t->numeral();
  switch (t->kind()) {
    case TermKind::Zero: return 0;
    case TermKind::Succ: return eval_term(t->sub(), sig) + 1;
    case TermKind::App: {
      std::vector<Nat> vals;
      vals.reserve(t->args().size());
      for (const TermPtr& a : t->args()) vals.push_back(eval_term(a, sig));
      if (t->name() == "add") return vals[0] + vals[1];
      if (t->name() == "mul") return vals[0] * vals[1];
      const FnInfo* f = sig.function(t->name());
      require(f != nullptr, Errc::Signature,
              "unknown function '" + t->name() + "'");
      require(f->arity == vals.size(), Errc::Signature,
              "arity mismatch for '" + t->name() + "'");
      return f->eval(vals);
    }
    case TermKind::Var: break;
  }
  throw Error(Errc::Internal, "unreachable term kind");
}

inline TermPtr subst_term(const TermPtr& t, const std::string& var,
                          const TermPtr& repl) {
  if (!std::binary_search(t->vars().begin(), t->vars().end(), var)) return t;
  switch (t->kind()) {
    case TermKind::Var: return t->name() == var ? repl : t;
    case TermKind::Zero: return t;
    case TermKind::Succ: return Term::succ(subst_term(t->sub(), var, repl));
    case TermKind::App: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const TermPtr& a : t->args()) args.push_back(subst_term(a, var, repl));
      return Term::app(t->name(), std::move(args));
    }
  }
  throw Error(Errc::Internal, "unreachable term kind");
}

inline bool term_has_var(const TermPtr& t, const std::string& var) {
  return std::binary_search(t->vars().begin(), t->vars().end(), var);
}

// All subterms (including t itself), deduplicated by structure, pre-order.
inline void collect_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  for (const TermPtr& s : out)
    if (term_equal(s, t)) return;  // already collected, with its subterms
  out.push_back(t);
  switch (t->kind()) {
    case TermKind::Succ:
      collect_subterms(t->sub(), out);
      break;
    case TermKind::App:
      for (const TermPtr& a : t->args()) collect_subterms(a, out);
      break;
    default:
      break;
  }
}

}  // namespace sntab
