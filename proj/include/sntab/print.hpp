// Canonical printer: decimal numerals, spaced infix operators, minimal
// parentheses, quantifier bodies extending maximally. parse(print(x)) == x.
#pragma once

#include <string>

#include "sntab/formula.hpp"
#include "sntab/term.hpp"

namespace sntab {

inline std::string print_term(const TermPtr& t) {
  if (t->numeral()) return std::to_string(*t->numeral());
  switch (t->kind()) {
    case TermKind::Var: return t->name();
    case TermKind::Zero: return "0";
    case TermKind::Succ: return "s(" + print_term(t->sub()) + ")";
    case TermKind::App: {
      std::string out = t->name() + "(";
      for (std::size_t i = 0; i < t->args().size(); ++i) {
        if (i) out += ", ";
        out += print_term(t->args()[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

namespace detail {

// Precedence levels: -> and quantifiers 0, | 1, & 2, ~ and primes 3.
inline int formula_level(const FormulaPtr& f) {
  switch (f->conn()) {
    case Conn::Imp:
    case Conn::Forall:
    case Conn::Exists:
      return 0;
    case Conn::Or: return 1;
    case Conn::And: return 2;
    case Conn::Neg:
    case Conn::Prime:
      return 3;
  }
  return 3;
}

inline std::string print_formula_at(const FormulaPtr& f, int min_level) {
  if (formula_level(f) < min_level)
    return "(" + print_formula_at(f, 0) + ")";
  switch (f->conn()) {
    case Conn::Prime: {
      if (f->pred() == "=")
        return print_term(f->args()[0]) + " = " + print_term(f->args()[1]);
      if (f->args().empty()) return f->pred();
      std::string out = f->pred() + "(";
      for (std::size_t i = 0; i < f->args().size(); ++i) {
        if (i) out += ", ";
        out += print_term(f->args()[i]);
      }
      return out + ")";
    }
    case Conn::Neg: {
      const FormulaPtr& c = f->left();
      if (c->conn() == Conn::Prime || c->conn() == Conn::Neg)
        return "~" + print_formula_at(c, 3);
      return "~(" + print_formula_at(c, 0) + ")";
    }
    case Conn::And:
      return print_formula_at(f->left(), 2) + " & " +
             print_formula_at(f->right(), 3);
    case Conn::Or:
      return print_formula_at(f->left(), 1) + " | " +
             print_formula_at(f->right(), 2);
    case Conn::Imp:
      return print_formula_at(f->left(), 1) + " -> " +
             print_formula_at(f->right(), 0);
    case Conn::Forall:
      return "forall " + f->qvar() + ". " + print_formula_at(f->left(), 0);
    case Conn::Exists:
      return "exists " + f->qvar() + ". " + print_formula_at(f->left(), 0);
  }
  return "?";
}

}  // namespace detail

inline std::string print_formula(const FormulaPtr& f) {
  return detail::print_formula_at(f, 0);
}

inline std::string print_sequent(const Sequent& s) {
  std::string out;
  if (s.ant) out += print_formula(s.ant) + " ";
  out += "|-";
  if (s.suc) out += " " + print_formula(s.suc);
  return out;
}

}  // namespace sntab
