// Recursive-descent parser for terms, formulas and sequents.
//
// Grammar (precedence low→high: ->  |  &  ~ / quantifiers; -> right-assoc,
// & and | left-assoc, quantifier scope extends maximally):
//   sequent  := [formula] "|-" [formula]
//   formula  := or ("->" formula)?
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | ("forall"|"exists") IDENT "." formula | atom
//   atom     := "(" formula ")" | prime
//   prime    := term "=" term | PRED "(" terms ")" | IDENT
//   term     := NUMBER | "s" "(" term ")" | IDENT ["(" terms ")"]
// A bare identifier is a variable in term position and a 0-ary prime in
// formula position. Unknown predicates are auto-admitted as opaque; unknown
// functions are errors.
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/formula.hpp"
#include "sntab/signature.hpp"
#include "sntab/term.hpp"

namespace sntab {

namespace detail {

class Parser {
 public:
  Parser(const std::string& text, Signature& sig) : text_(text), sig_(sig) {}

  TermPtr parse_term_all() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  FormulaPtr parse_formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  Sequent parse_sequent_all() {
    Sequent s;
    skip_ws();
    if (!lookahead_turnstile()) s.ant = formula();
    skip_ws();
    require(eat_symbol("|-"), Errc::Syntax, at() + "expected '|-'");
    skip_ws();
    if (pos_ < text_.size()) s.suc = formula();
    expect_end();
    return s;
  }

 private:
  const std::string& text_;
  Signature& sig_;
  std::size_t pos_ = 0;

  std::string at() const {
    return "at offset " + std::to_string(pos_) + ": ";
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool lookahead_turnstile() {
    skip_ws();
    return pos_ + 1 < text_.size() && text_[pos_] == '|' &&
           text_[pos_ + 1] == '-';
  }

  bool eat_symbol(const std::string& sym) {
    skip_ws();
    if (text_.compare(pos_, sym.size(), sym) == 0) {
      // '|' must not be confused with '|-'.
      if (sym == "|" && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-')
        return false;
      pos_ += sym.size();
      return true;
    }
    return false;
  }

  void expect_end() {
    skip_ws();
    require(pos_ == text_.size(), Errc::Syntax,
            at() + "unexpected trailing input");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::optional<std::string> try_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::optional<Nat> try_number() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return std::nullopt;
    Nat val = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      val = val * 10 + static_cast<Nat>(text_[pos_] - '0');
      ++pos_;
    }
    return val;
  }

  std::vector<TermPtr> arg_list() {
    std::vector<TermPtr> args;
    require(eat_symbol("("), Errc::Syntax, at() + "expected '('");
    skip_ws();
    if (!eat_symbol(")")) {
      args.push_back(term());
      while (eat_symbol(",")) args.push_back(term());
      require(eat_symbol(")"), Errc::Syntax, at() + "expected ')'");
    }
    return args;
  }

  TermPtr term() {
    if (auto n = try_number()) return Term::numeral_term(*n);
    std::size_t save = pos_;
    auto id = try_ident();
    require(id.has_value(), Errc::Syntax, at() + "expected a term");
    require(*id != "forall" && *id != "exists", Errc::Syntax,
            at() + "quantifier in term position");
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::vector<TermPtr> args = arg_list();
      if (*id == "s") {
        require(args.size() == 1, Errc::Syntax,
                "successor takes one argument");
        return Term::succ(args[0]);
      }
      require(sig_.has_function(*id), Errc::Signature,
              "unknown function '" + *id + "' (offset " +
                  std::to_string(save) + ")");
      require(sig_.function_arity(*id) == args.size(), Errc::Signature,
              "arity mismatch for function '" + *id + "'");
      return Term::app(*id, std::move(args));
    }
    return Term::var(*id);
  }

  // prime := term "=" term | PRED(args) | bare-ident. Parse a term first; if
  // '=' follows it is an equality, otherwise reinterpret the term as a prime.
  FormulaPtr prime() {
    std::size_t save = pos_;
    skip_ws();
    // Try "pred(args)" / bare identifier as a predicate first when the head
    // is a registered or unknown predicate; function heads fall through to
    // term parsing.
    if (auto id = try_ident()) {
      if (*id != "forall" && *id != "exists") {
        skip_ws();
        bool has_args = pos_ < text_.size() && text_[pos_] == '(';
        bool is_fn = (*id == "s") || sig_.has_function(*id);
        if (!is_fn) {
          if (has_args) {
            if (sig_.has_predicate(*id)) {
              std::vector<TermPtr> args = arg_list();
              require(sig_.predicate_arity(*id) == args.size(),
                      Errc::Signature,
                      "arity mismatch for predicate '" + *id + "'");
              skip_ws();
              require(!peek_eq(), Errc::Syntax,
                      at() + "prime formula used as a term");
              return Formula::prime(*id, std::move(args));
            }
            // Unknown applied head in formula position: admit as opaque
            // predicate unless it later turns out to be an equality operand.
            std::size_t arg_save = pos_;
            std::vector<TermPtr> args = arg_list();
            skip_ws();
            if (!peek_eq()) {
              require(sig_.auto_admit_predicates, Errc::Signature,
                      "unknown predicate '" + *id + "'");
              sig_.add_predicate(*id, args.size());
              return Formula::prime(*id, std::move(args));
            }
            // It was a term after all — but unknown functions are errors.
            (void)arg_save;
            throw Error(Errc::Signature, "unknown function '" + *id +
                                             "' (offset " +
                                             std::to_string(save) + ")");
          }
          // Bare identifier: equality operand (variable) or 0-ary prime.
          skip_ws();
          if (!peek_eq()) {
            if (sig_.has_predicate(*id)) {
              require(sig_.predicate_arity(*id) == 0, Errc::Signature,
                      "predicate '" + *id + "' used without arguments");
              return Formula::prime(*id, {});
            }
            require(sig_.auto_admit_predicates, Errc::Signature,
                    "unknown predicate '" + *id + "'");
            sig_.add_predicate(*id, 0);
            return Formula::prime(*id, {});
          }
        }
      }
      pos_ = save;  // reparse as a term-led equality
    }
    TermPtr lhs = term();
    skip_ws();
    require(peek_eq(), Errc::Syntax, at() + "expected '=' after term");
    ++pos_;  // consume '='
    TermPtr rhs = term();
    return Formula::prime("=", {lhs, rhs});
  }

  bool peek_eq() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == '=';
  }

  FormulaPtr atom() {
    skip_ws();
    if (eat_symbol("(")) {
      FormulaPtr f = formula();
      require(eat_symbol(")"), Errc::Syntax, at() + "expected ')'");
      return f;
    }
    return prime();
  }

  FormulaPtr unary() {
    skip_ws();
    if (eat_symbol("~")) return Formula::neg(unary());
    std::size_t save = pos_;
    if (auto id = try_ident()) {
      if (*id == "forall" || *id == "exists") {
        auto v = try_ident();
        require(v.has_value(), Errc::Syntax, at() + "expected a variable");
        require(eat_symbol("."), Errc::Syntax,
                at() + "expected '.' after quantified variable");
        FormulaPtr body = formula();  // maximal scope
        return Formula::quant(*id == "forall" ? Conn::Forall : Conn::Exists,
                              *v, std::move(body));
      }
      pos_ = save;
    }
    return atom();
  }

  FormulaPtr conj_level() {
    FormulaPtr f = unary();
    while (eat_symbol("&")) f = Formula::conj(f, unary());
    return f;
  }

  FormulaPtr disj_level() {
    FormulaPtr f = conj_level();
    while (eat_symbol("|")) f = Formula::disj(f, conj_level());
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = disj_level();
    if (eat_symbol("->")) f = Formula::imp(f, formula());
    return f;
  }
};

}  // namespace detail

inline TermPtr parse_term(const std::string& text, Signature& sig) {
  return detail::Parser(text, sig).parse_term_all();
}
inline FormulaPtr parse_formula(const std::string& text, Signature& sig) {
  return detail::Parser(text, sig).parse_formula_all();
}
inline Sequent parse_sequent(const std::string& text, Signature& sig) {
  return detail::Parser(text, sig).parse_sequent_all();
}

}  // namespace sntab
