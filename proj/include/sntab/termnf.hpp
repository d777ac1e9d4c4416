// Term normal forms: every term maps to a polynomial with natural-number
// coefficients over "atoms" (variables and applications of non-arithmetic
// functions to normalized arguments). Variable-free subterms evaluate to
// constants. Two terms with equal normal forms take equal values under every
// instantiation of their variables, so normal-form identity is a sound and
// transitive congruence used by the free-variable axiom oracle.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/signature.hpp"
#include "sntab/term.hpp"

namespace sntab {

struct TermNF {
  // monomial (atom key -> exponent, all >=1) -> coefficient (>=1).
  // The empty monomial holds the constant term. Empty map = zero.
  using Mono = std::map<std::string, unsigned>;
  std::map<Mono, Nat> coeffs;

  bool operator==(const TermNF& o) const { return coeffs == o.coeffs; }
  bool operator!=(const TermNF& o) const { return !(*this == o); }

  static TermNF constant(Nat c) {
    TermNF p;
    if (c) p.coeffs[{}] = c;
    return p;
  }
  static TermNF atom(const std::string& key) {
    TermNF p;
    p.coeffs[{{key, 1}}] = 1;
    return p;
  }

  TermNF operator+(const TermNF& o) const {
    TermNF r = *this;
    for (const auto& [m, c] : o.coeffs) {
      Nat& slot = r.coeffs[m];
      slot += c;
      if (!slot) r.coeffs.erase(m);
    }
    return r;
  }

  TermNF operator*(const TermNF& o) const {
    TermNF r;
    for (const auto& [m1, c1] : coeffs)
      for (const auto& [m2, c2] : o.coeffs) {
        Mono m = m1;
        for (const auto& [a, e] : m2) m[a] += e;
        Nat prod = c1 * c2;
        if (prod) r.coeffs[m] += prod;
      }
    return r;
  }

  Nat constant_term() const {
    auto it = coeffs.find(Mono{});
    return it == coeffs.end() ? 0 : it->second;
  }

  bool is_constant() const {
    return coeffs.empty() ||
           (coeffs.size() == 1 && coeffs.begin()->first.empty());
  }

  // Canonical text, usable as a map key and for diagnostics.
  std::string key() const {
    std::string out;
    for (const auto& [m, c] : coeffs) {
      if (!out.empty()) out += "+";
      out += std::to_string(c);
      for (const auto& [a, e] : m) {
        out += "*" + a;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }
};

// p - q is a polynomial with all coefficients >= 0 and constant term >= 1:
// under every instantiation, value(p) >= value(q) + 1, hence p != q.
inline bool nf_strictly_dominates(const TermNF& p, const TermNF& q) {
  for (const auto& [m, c] : q.coeffs) {
    auto it = p.coeffs.find(m);
    if (it == p.coeffs.end() || it->second < c) return false;
  }
  return p.constant_term() >= q.constant_term() + 1;
}

inline TermNF term_nf(const TermPtr& t, const Signature& sig) {
  if (t->closed()) return TermNF::constant(eval_term(t, sig));
  switch (t->kind()) {
    case TermKind::Var:
      return TermNF::atom("v:" + t->name());
    case TermKind::Succ:
      return term_nf(t->sub(), sig) + TermNF::constant(1);
    case TermKind::App: {
      if (t->name() == "add")
        return term_nf(t->args()[0], sig) + term_nf(t->args()[1], sig);
      if (t->name() == "mul")
        return term_nf(t->args()[0], sig) * term_nf(t->args()[1], sig);
      // Uninterpreted application: opaque atom keyed by head and the normal
      // forms of its arguments (so congruent arguments give the same atom).
      std::string key = "f:" + t->name() + "(";
      for (std::size_t i = 0; i < t->args().size(); ++i) {
        if (i) key += ",";
        key += term_nf(t->args()[i], sig).key();
      }
      key += ")";
      return TermNF::atom(key);
    }
    case TermKind::Zero:
      return TermNF::constant(0);  // unreachable: Zero is closed
  }
  throw Error(Errc::Internal, "unreachable term kind");
}

inline bool congruent(const TermPtr& a, const TermPtr& b, const Signature& sig) {
  return term_nf(a, sig) == term_nf(b, sig);
}

}  // namespace sntab
