#pragma once
// Proof transformations. Every function here maps checked tableau proofs to
// checked tableau proofs of a related endsequent:
//
//   xf_substitute      instantiate free variables throughout a proof
//   xf_thin            replay onto a sequent carrying at least the same parts
//   xf_invert          recover premise proofs from a decomposition step
//   xf_contract        merge two like parts into one
//   xf_translate_part  move a part to the top of its side (as itself or negated)
//   xf_interchange     swap two disjoint like-signed parts
//   xf_reshape         reorganize to any sequent with a compatible part multiset
//
// Shared machinery and the invariants it rests on:
//
//  * Axiom witnesses and rule applications only ever mention minimal parts,
//    and no prime part lies strictly inside a minimal part. Replacing,
//    deleting, or adding material at positions disjoint from a proof's
//    working parts therefore never invalidates a leaf.
//
//  * thin_replay: replay a proof node by node onto targets whose minimal-part
//    multiset (keyed by side, sign, printed formula) contains the source's.
//    Principal parts are re-located by that key; children that come out
//    unchanged are reused verbatim, so the result never grows.
//
//  * exact replacement: substituting a fixed formula for a tracked minimal
//    part commutes syntactically with every rule applied at a disjoint part,
//    because rule attachments and deletion folds never look inside other
//    parts. Inversion exploits this to peel one decomposition off a proof
//    without any replay at all on most paths.
//
//  * eigenvariable hygiene: public entry points first rename every
//    eigenvariable to a globally fresh name (fresh against free and bound
//    variables alike). After that pass, renaming an eigenvariable or
//    substituting one fresh variable for another can never be captured,
//    which keeps the internal recursions total.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sntab/parts.hpp"
#include "sntab/print.hpp"
#include "sntab/proof.hpp"

namespace sntab {

// Context threaded through every transformation.
struct XfCtx {
  const Signature& sig;
  const Axiom8Oracle& oracle;
  System sys = System::SN;
};

// ---------------------------------------------------------------------------
// Variable bookkeeping across a whole tableau.

inline void collect_tableau_vars(const TableauPtr& t,
                                 std::set<std::string>& out) {
  collect_all_vars(t->seq, out);
  if (!is_leaf(t)) {
    const RuleApp& app = step_just(t).app;
    if (app.term) collect_all_vars(app.term, out);
    if (!app.eigen.empty()) out.insert(app.eigen);
  }
  for (const TableauPtr& k : t->kids) collect_tableau_vars(k, out);
}

inline void collect_eigens(const TableauPtr& t, std::set<std::string>& out) {
  if (!is_leaf(t)) {
    const RuleApp& app = step_just(t).app;
    if (!app.eigen.empty()) out.insert(app.eigen);
  }
  for (const TableauPtr& k : t->kids) collect_eigens(k, out);
}

namespace detail {

// ---------------------------------------------------------------------------
// Leaf re-justification. Prefer the original axiom kind; fall back to a fresh
// match (a schematic leaf can collapse to a decidable one once its free
// variables disappear). Failure means the caller broke a leaf invariant.
inline TableauPtr releaf(const Sequent& s, AxiomKind was, const XfCtx& cx) {
  ValidateResult v = validate_axiom(s, was, cx.sig, cx.oracle, cx.sys);
  if (v.ok || v.oracle_unknown) return Tableau::leaf(s, was);
  MatchResult m = match_axiom(s, cx.sig, cx.oracle, cx.sys);
  require(m.kind.has_value(), Errc::Internal,
          "transformed leaf '" + print_sequent(s) +
              "' no longer closes: " + v.reason);
  return Tableau::leaf(s, *m.kind);
}

// ---------------------------------------------------------------------------
// One-variable substitution through a whole tableau: sequents, rule terms,
// leaf justifications. Rule part references survive because substitution
// preserves the connective skeleton.
inline Sequent subst_sequent(const Sequent& s, const std::string& var,
                             const TermPtr& repl) {
  Sequent out = s;
  if (out.ant) out.ant = subst_formula(out.ant, var, repl);
  if (out.suc) out.suc = subst_formula(out.suc, var, repl);
  return out;
}

inline TableauPtr subst_tableau(const TableauPtr& t, const std::string& var,
                                const TermPtr& repl, const XfCtx& cx) {
  Sequent s2 = subst_sequent(t->seq, var, repl);
  if (is_leaf(t)) return releaf(s2, leaf_just(t).kind, cx);
  const RuleApp& app = step_just(t).app;
  RuleApp app2 = app;
  if (app2.term) app2.term = subst_term(app2.term, var, repl);
  require(app.eigen != var, Errc::Internal,
          "substitution hit eigenvariable '" + var + "'");
  std::vector<TableauPtr> kids2;
  kids2.reserve(t->kids.size());
  for (const TableauPtr& k : t->kids)
    kids2.push_back(subst_tableau(k, var, repl, cx));
  return build_step(s2, app2, cx.sys, std::move(kids2));
}

// ---------------------------------------------------------------------------
// Rename every eigenvariable to a fresh name drawn from `gen`. `gen` must
// already have all names of the tableau reserved.
inline TableauPtr rename_eigens_rec(
    const TableauPtr& t, FreshGen& gen, const XfCtx& cx,
    std::vector<std::pair<std::string, std::string>>& ren) {
  Sequent s2 = t->seq;
  for (const auto& [from, to] : ren)
    s2 = subst_sequent(s2, from, Term::var(to));
  if (is_leaf(t)) return releaf(s2, leaf_just(t).kind, cx);
  const RuleApp& app = step_just(t).app;
  RuleApp app2 = app;
  if (app2.term)
    for (const auto& [from, to] : ren)
      app2.term = subst_term(app2.term, from, Term::var(to));
  std::size_t pushed = 0;
  if (!app.eigen.empty()) {
    app2.eigen = gen.fresh(app.eigen);
    ren.emplace_back(app.eigen, app2.eigen);
    pushed = 1;
  }
  std::vector<TableauPtr> kids2;
  kids2.reserve(t->kids.size());
  for (const TableauPtr& k : t->kids)
    kids2.push_back(rename_eigens_rec(k, gen, cx, ren));
  while (pushed--) ren.pop_back();
  return build_step(s2, app2, cx.sys, std::move(kids2));
}

inline TableauPtr rename_eigens(const TableauPtr& t, FreshGen& gen,
                                const XfCtx& cx) {
  std::vector<std::pair<std::string, std::string>> ren;
  return rename_eigens_rec(t, gen, cx, ren);
}

// Pre-pass used by every public entry point: make eigenvariables globally
// fresh, also against `extra` names the transformation is about to introduce.
inline TableauPtr hygienic(const TableauPtr& t, const XfCtx& cx, FreshGen& gen,
                           const std::set<std::string>& extra = {}) {
  std::set<std::string> names;
  collect_tableau_vars(t, names);
  gen.reserve(names);
  gen.reserve(extra);
  std::set<std::string> eigens;
  collect_eigens(t, eigens);
  if (eigens.empty()) return t;
  return rename_eigens(t, gen, cx);
}

// ---------------------------------------------------------------------------
// Minimal-part multisets keyed by (side, sign, printed formula).

using PartKey = std::tuple<int, int, std::string>;

inline PartKey part_key(const PartInfo& p) {
  return {static_cast<int>(p.ref.side), static_cast<int>(p.sign),
          print_formula(p.formula)};
}

inline std::map<PartKey, int> part_counts(const Sequent& s) {
  std::map<PartKey, int> out;
  for (const PartInfo& p : minimal_parts(s)) ++out[part_key(p)];
  return out;
}

inline bool counts_leq(const std::map<PartKey, int>& a,
                       const std::map<PartKey, int>& b,
                       PartKey* missing = nullptr) {
  for (const auto& [k, n] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second < n) {
      if (missing) *missing = k;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// thin_replay: replay `t` onto `target`, which must carry every minimal part
// of t's endsequent (same key, at least the same count). Assumes hygienic
// eigenvariables. Output size never exceeds the input size.
inline TableauPtr thin_replay(const TableauPtr& t, const Sequent& target,
                              const XfCtx& cx) {
  if (sequent_equal(t->seq, target)) return t;
  if (is_leaf(t)) return releaf(target, leaf_just(t).kind, cx);
  const RuleApp& app = step_just(t).app;
  PartInfo q = resolve_part_checked(t->seq, app.part);
  const std::string key = print_formula(q.formula);
  std::optional<PartRef> hat;
  for (const PartInfo& c : minimal_parts(target))
    if (c.ref.side == app.part.side && c.sign == q.sign &&
        print_formula(c.formula) == key) {
      hat = c.ref;
      break;
    }
  require(hat.has_value(), Errc::Internal,
          "thinning lost part '" + key + "' of '" + print_sequent(t->seq) +
              "' in '" + print_sequent(target) + "'");
  RuleApp app2 = app;
  app2.part = *hat;
  std::vector<Sequent> want = apply_rule(target, app2, cx.sys);
  require(want.size() == t->kids.size(), Errc::Internal,
          "thin replay child count mismatch");
  std::vector<TableauPtr> kids2;
  kids2.reserve(want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    kids2.push_back(sequent_equal(t->kids[i]->seq, want[i])
                        ? t->kids[i]
                        : thin_replay(t->kids[i], want[i], cx));
  return Tableau::step(target, app2, std::move(kids2));
}

// Bridge helper: reuse the subtree when it already proves `want`, replay
// otherwise. Used wherever a rebuilt rule application and a recursive result
// agree on the minimal-part multiset but not necessarily on its arrangement.
inline TableauPtr bridge(const TableauPtr& got, const Sequent& want,
                         const XfCtx& cx) {
  return sequent_equal(got->seq, want) ? got : thin_replay(got, want, cx);
}

// ---------------------------------------------------------------------------
// Track a minimal part reference `p` (disjoint from the acting part, except
// where noted for retention rules) from a sequent into child `child` of the
// rule application `app` on `s`. nullopt when the child discards that side.
inline std::optional<PartRef> track_part_through_rule(const Sequent& s,
                                                      const RuleApp& app,
                                                      std::size_t child,
                                                      const PartRef& p) {
  auto prefixed = [&](PStep st) {
    PartRef r = p;
    r.path.insert(r.path.begin(), st);
    return r;
  };
  switch (app.rule) {
    case RuleId::AndAntNeg:
    case RuleId::AndSucPos:
    case RuleId::OrAntPos:
    case RuleId::OrSucNeg:
    case RuleId::AllAntNeg:
    case RuleId::ExAntPos:
      return p;  // in-place replacement elsewhere
    case RuleId::ImpAntPos:
      if (child == 0) return p.side == Side::Suc ? prefixed(PStep::OrL) : p;
      return p.side == Side::Ant ? prefixed(PStep::AndL) : p;
    case RuleId::ImpSucPos:
      if (p.side == Side::Suc) return std::nullopt;
      return prefixed(PStep::AndL);
    case RuleId::ImpSucNeg: {
      if (child == 1) return p;  // in-place replacement
      if (p.side == Side::Ant) return p;
      DeleteResult d = delete_part(s, app.part);
      std::optional<PartRef> tp = track_part(d, p);
      if (!tp) return std::nullopt;
      tp->path.insert(tp->path.begin(), PStep::OrL);
      return tp;
    }
    case RuleId::AllAntPos:
    case RuleId::ExAntNeg:
      return p.side == Side::Suc ? p : prefixed(PStep::AndL);
    case RuleId::AllSucPos:
    case RuleId::ExSucNeg:
      return p.side == Side::Ant ? p : std::nullopt;
    case RuleId::AllSucNeg:
    case RuleId::ExSucPos:
      return p.side == Side::Ant ? p : prefixed(PStep::OrL);
  }
  throw Error(Errc::Internal, "unhandled rule in part tracking");
}

// ---------------------------------------------------------------------------
// Exact-replacement inversion. Replace the tracked minimal part by `repl` at
// every node; at the node whose rule decomposes the tracked part, keep the
// child realizing `repl` (branch >= 0) or retarget the child's eigenvariable
// to `eigen_to` (branch < 0). Requires hygienic eigenvariables.
struct ReplaceInverter {
  const XfCtx& cx;
  FormulaPtr repl;
  int branch = 0;
  std::string eigen_to;

  TableauPtr run(const TableauPtr& t, const PartRef& p) const {
    Sequent want = replace_part(t->seq, p, repl);
    if (is_leaf(t)) return releaf(want, leaf_just(t).kind, cx);
    const RuleApp& app = step_just(t).app;
    if (app.part == p) {
      if (branch >= 0) {
        const TableauPtr& out = t->kids[static_cast<std::size_t>(branch)];
        require(sequent_equal(out->seq, want), Errc::Internal,
                "inversion branch mismatch");
        return out;
      }
      TableauPtr out =
          subst_tableau(t->kids[0], app.eigen, Term::var(eigen_to), cx);
      require(sequent_equal(out->seq, want), Errc::Internal,
              "inversion eigen retarget mismatch");
      return out;
    }
    // Rule at a disjoint part: replacement commutes with it exactly.
    std::vector<TableauPtr> kids2;
    kids2.reserve(t->kids.size());
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      std::optional<PartRef> pi = track_part_through_rule(t->seq, app, i, p);
      kids2.push_back(pi ? run(t->kids[i], *pi) : t->kids[i]);
    }
    return build_step(want, app, cx.sys, std::move(kids2));
  }
};

// First inversion output of an implication part in the succedent: every node
// target deletes the part and attaches the implication's antecedent as a top
// disjunct. Rules elsewhere are rebuilt with thinning bridges because
// deletion reorders the remaining material.
struct ImpOut1Inverter {
  const XfCtx& cx;
  FormulaPtr a;  // antecedent of the inverted implication

  TableauPtr run(const TableauPtr& t, const PartRef& p) const {
    DeleteResult d = delete_part(t->seq, p);
    Sequent want{t->seq.ant, attach(d.sequent.suc, Conn::Or, a)};
    if (is_leaf(t)) return releaf(want, leaf_just(t).kind, cx);
    const RuleApp& app = step_just(t).app;
    if (app.part == p) {
      require(app.rule == RuleId::ImpSucNeg, Errc::Internal,
              "unexpected rule on an implication part");
      require(sequent_equal(t->kids[0]->seq, want), Errc::Internal,
              "inversion first-child mismatch");
      return t->kids[0];
    }
    std::optional<PartRef> hat = app.part.side == Side::Ant
                                     ? std::optional<PartRef>(app.part)
                                     : track_part(d, app.part);
    require(hat.has_value(), Errc::Internal, "acting part lost by deletion");
    if (app.part.side == Side::Suc)
      hat->path.insert(hat->path.begin(), PStep::OrL);
    RuleApp app2 = app;
    app2.part = *hat;
    std::vector<Sequent> want_kids = apply_rule(want, app2, cx.sys);
    std::vector<TableauPtr> kids2;
    kids2.reserve(t->kids.size());
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      std::optional<PartRef> pi = track_part_through_rule(t->seq, app, i, p);
      if (!pi) {
        require(sequent_equal(t->kids[i]->seq, want_kids[i]), Errc::Internal,
                "dropped-side child mismatch");
        kids2.push_back(t->kids[i]);
      } else {
        kids2.push_back(bridge(run(t->kids[i], *pi), want_kids[i], cx));
      }
    }
    return Tableau::step(want, app2, std::move(kids2));
  }
};

// Partial inversion of the two succedent-discarding quantifier shapes: every
// node target is (antecedent, goal). Fails with NotInvertible when the proof
// closes through other succedent material or discards the tracked part.
struct DropInverter {
  const XfCtx& cx;
  FormulaPtr goal;
  RuleId principal;
  std::string b;  // eigenvariable of the goal instance

  TableauPtr run(const TableauPtr& t, const PartRef& p) const {
    Sequent want{t->seq.ant, goal};
    if (is_leaf(t)) {
      ValidateResult v =
          validate_axiom(want, leaf_just(t).kind, cx.sig, cx.oracle, cx.sys);
      require(v.ok || v.oracle_unknown, Errc::NotInvertible,
              "the proof closes without the quantified part: '" +
                  print_sequent(t->seq) + "'");
      return Tableau::leaf(want, leaf_just(t).kind);
    }
    const RuleApp& app = step_just(t).app;
    if (app.part == p) {
      require(app.rule == principal, Errc::Internal,
              "unexpected rule on the tracked quantifier part");
      TableauPtr out =
          subst_tableau(t->kids[0], app.eigen, Term::var(b), cx);
      require(sequent_equal(out->seq, want), Errc::Internal,
              "inversion eigen retarget mismatch");
      return out;
    }
    if (app.part.side == Side::Ant) {
      std::vector<Sequent> want_kids = apply_rule(want, app, cx.sys);
      std::vector<TableauPtr> kids2;
      kids2.reserve(t->kids.size());
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        std::optional<PartRef> pi =
            track_part_through_rule(t->seq, app, i, p);
        require(pi.has_value(), Errc::Internal,
                "antecedent rule discarded a succedent part");
        kids2.push_back(bridge(run(t->kids[i], *pi), want_kids[i], cx));
      }
      return Tableau::step(want, app, std::move(kids2));
    }
    // Succedent rule elsewhere: the target ignores the succedent context, so
    // one child's inversion already proves it.
    switch (app.rule) {
      case RuleId::AndSucPos:
      case RuleId::OrSucNeg: {
        std::optional<PartRef> pi =
            track_part_through_rule(t->seq, app, 0, p);
        return run(t->kids[0], *pi);
      }
      case RuleId::AllSucNeg:
      case RuleId::ExSucPos: {
        std::optional<PartRef> pi =
            track_part_through_rule(t->seq, app, 0, p);
        return run(t->kids[0], *pi);
      }
      case RuleId::ImpSucNeg:
        return run(t->kids[1], p);
      default:
        throw Error(Errc::NotInvertible,
                    "the quantified part is discarded by '" +
                        std::string(rule_info(app.rule).name) + "' at " +
                        to_string(app.part));
    }
  }
};

TableauPtr contract_rec(const TableauPtr& t, const PartRef& keep,
                        const PartRef& drop, const XfCtx& cx, FreshGen& gen);

// Contract a pair of *minimal* like parts. Requires hygienic eigenvariables.
inline TableauPtr contract_minimal(const TableauPtr& t, const PartRef& keep,
                                   const PartRef& drop, const XfCtx& cx,
                                   FreshGen& gen) {
  const Sequent& s = t->seq;
  DeleteResult dr = delete_part(s, drop);
  const Sequent& tgt = dr.sequent;
  if (is_leaf(t)) return releaf(tgt, leaf_just(t).kind, cx);

  const RuleApp& app = step_just(t).app;
  const PartRef& q = app.part;

  if (!(q == keep) && !(q == drop)) {
    // Acting part disjoint from the pair: rebuild in place.
    std::optional<PartRef> q2 = track_part(dr, q);
    require(q2.has_value(), Errc::Internal, "acting part lost by contraction");
    RuleApp app2 = app;
    app2.part = *q2;
    std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
    std::vector<TableauPtr> kids2;
    kids2.reserve(t->kids.size());
    for (std::size_t i = 0; i < t->kids.size(); ++i) {
      std::optional<PartRef> ki = track_part_through_rule(s, app, i, keep);
      std::optional<PartRef> di = track_part_through_rule(s, app, i, drop);
      if (!ki && !di) {
        require(sequent_equal(t->kids[i]->seq, want[i]), Errc::Internal,
                "dropped-side child mismatch in contraction");
        kids2.push_back(t->kids[i]);
      } else {
        require(ki.has_value() && di.has_value(), Errc::Internal,
                "contraction pair split by a rule");
        kids2.push_back(
            bridge(contract_rec(t->kids[i], *ki, *di, cx, gen), want[i], cx));
      }
    }
    return Tableau::step(tgt, app2, std::move(kids2));
  }

  // The rule acts on one of the twins. Rebuild it at the kept position.
  const PartRef& other = (q == keep) ? drop : keep;
  std::optional<PartRef> keep2 = track_part(dr, keep);
  require(keep2.has_value(), Errc::Internal, "kept part lost by contraction");
  PartInfo pk = resolve_part_checked(s, q);
  const FormulaPtr& f = pk.formula;
  RuleApp app2 = app;
  app2.part = *keep2;
  auto instance = [&](const std::string& v) {
    return subst_formula(f->left(), f->qvar(), Term::var(v));
  };

  switch (app.rule) {
    case RuleId::AndAntNeg:
    case RuleId::AndSucPos:
    case RuleId::OrAntPos:
    case RuleId::OrSucNeg: {
      std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
      FormulaPtr ops[2] = {f->left(), f->right()};
      std::vector<TableauPtr> kids2;
      for (std::size_t i = 0; i < 2; ++i) {
        TableauPtr inv =
            ReplaceInverter{cx, ops[i], static_cast<int>(i), ""}.run(
                t->kids[i], other);
        // Both twin positions now hold ops[i]; contract them.
        TableauPtr con = (q == keep)
                             ? contract_rec(inv, q, other, cx, gen)
                             : contract_rec(inv, other, q, cx, gen);
        kids2.push_back(bridge(con, want[i], cx));
      }
      return Tableau::step(tgt, app2, std::move(kids2));
    }
    case RuleId::AllAntNeg:
    case RuleId::ExAntPos: {
      std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
      FormulaPtr inst = instance(app.eigen);
      TableauPtr inv =
          ReplaceInverter{cx, inst, -1, app.eigen}.run(t->kids[0], other);
      TableauPtr con = (q == keep) ? contract_rec(inv, q, other, cx, gen)
                                   : contract_rec(inv, other, q, cx, gen);
      return Tableau::step(tgt, app2, {bridge(con, want[0], cx)});
    }
    case RuleId::ImpAntPos:
    case RuleId::AllAntPos:
    case RuleId::AllSucNeg:
    case RuleId::ExAntNeg:
    case RuleId::ExSucPos: {
      // Retention shapes: both twins persist into every child.
      std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
      std::vector<TableauPtr> kids2;
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        std::optional<PartRef> ki = track_part_through_rule(s, app, i, keep);
        std::optional<PartRef> di = track_part_through_rule(s, app, i, drop);
        require(ki.has_value() && di.has_value(), Errc::Internal,
                "retention lost a twin");
        kids2.push_back(
            bridge(contract_rec(t->kids[i], *ki, *di, cx, gen), want[i], cx));
      }
      return Tableau::step(tgt, app2, std::move(kids2));
    }
    case RuleId::ImpSucPos:
    case RuleId::AllSucPos:
    case RuleId::ExSucNeg: {
      // Succedent-discarding shapes: both twins lived in the succedent, so
      // the child is already the rebuilt rule's child.
      std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
      require(sequent_equal(t->kids[0]->seq, want[0]), Errc::Internal,
              "discard child mismatch in contraction");
      return Tableau::step(tgt, app2, {t->kids[0]});
    }
    case RuleId::ImpSucNeg: {
      std::vector<Sequent> want = apply_rule(tgt, app2, cx.sys);
      // First child: proof of (ant, delete(suc, q) v A). Invert at the other
      // twin, then contract the duplicated antecedent-of-implication parts.
      DeleteResult dq = delete_part(s, q);
      std::optional<PartRef> o0 = track_part(dq, other);
      require(o0.has_value(), Errc::Internal, "twin lost by deletion");
      o0->path.insert(o0->path.begin(), PStep::OrL);
      // Position of the disjunct A attached by the original application.
      PartRef a_old{Side::Suc, Path{PStep::OrR}};
      TableauPtr inv0 = ImpOut1Inverter{cx, f->left()}.run(t->kids[0], *o0);
      // inv0 proves (ant, delete(child0.suc, o0) v A): the old A tracked
      // through that deletion plus the freshly attached copy.
      DeleteResult d0 = delete_part(t->kids[0]->seq, *o0);
      std::optional<PartRef> a1 = track_part(d0, a_old);
      require(a1.has_value(), Errc::Internal, "attached disjunct lost");
      a1->path.insert(a1->path.begin(), PStep::OrL);
      PartRef a2{Side::Suc, Path{PStep::OrR}};
      TableauPtr con0 = contract_rec(inv0, a2, *a1, cx, gen);
      // Second child: proof of s[q := B]. Invert at the other twin with B.
      TableauPtr inv1 =
          ReplaceInverter{cx, f->right(), 1, ""}.run(t->kids[1], other);
      TableauPtr con1 = (q == keep) ? contract_rec(inv1, q, other, cx, gen)
                                    : contract_rec(inv1, other, q, cx, gen);
      return Tableau::step(
          tgt, app2, {bridge(con0, want[0], cx), bridge(con1, want[1], cx)});
    }
  }
  throw Error(Errc::Internal, "unhandled rule in contraction");
}

// General contraction: reduce a non-minimal pair to a sequence of minimal
// twin contractions, then thin onto the true deletion target.
inline TableauPtr contract_rec(const TableauPtr& t, const PartRef& keep,
                               const PartRef& drop, const XfCtx& cx,
                               FreshGen& gen) {
  PartInfo pd = resolve_part_checked(t->seq, drop);
  if (part_is_minimal(drop.side, pd.formula, pd.sign))
    return contract_minimal(t, keep, drop, cx, gen);
  Sequent target = delete_part(t->seq, drop).sequent;
  // Pair up the minimal parts inside `drop` with their twins inside `keep`.
  std::vector<std::pair<PartRef, PartRef>> todo;
  for (const PartInfo& m : minimal_parts(t->seq)) {
    if (!path_within(drop, m.ref)) continue;
    Path rel(m.ref.path.begin() +
                 static_cast<std::ptrdiff_t>(drop.path.size()),
             m.ref.path.end());
    PartRef twin = keep;
    twin.path.insert(twin.path.end(), rel.begin(), rel.end());
    todo.emplace_back(twin, m.ref);
  }
  require(!todo.empty(), Errc::Internal, "part without minimal subparts");
  TableauPtr cur = t;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    DeleteResult dr = delete_part(cur->seq, todo[i].second);
    cur = contract_minimal(cur, todo[i].first, todo[i].second, cx, gen);
    require(sequent_equal(cur->seq, dr.sequent), Errc::Internal,
            "contraction endsequent drifted");
    for (std::size_t j = i + 1; j < todo.size(); ++j) {
      std::optional<PartRef> k2 = track_part(dr, todo[j].first);
      std::optional<PartRef> d2 = track_part(dr, todo[j].second);
      require(k2.has_value() && d2.has_value(), Errc::Internal,
              "contraction pair lost while sequencing");
      todo[j] = {*k2, *d2};
    }
  }
  return bridge(cur, target, cx);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public transformations. Each validates its output before returning it.

namespace detail {
inline void check_out(const TableauPtr& t, const XfCtx& cx) {
  require_checked(t, cx.sig, cx.oracle, CheckOptions{cx.sys, false});
}
}  // namespace detail

// Simultaneously substitute terms for distinct free variables throughout a
// proof. Throws Capture when a binding is inadmissible somewhere in the
// proof, Syntax on malformed bindings.
inline TableauPtr xf_substitute(
    const TableauPtr& t,
    const std::vector<std::pair<std::string, TermPtr>>& bindings,
    const XfCtx& cx) {
  std::set<std::string> dom;
  for (const auto& [x, tm] : bindings) {
    require(tm != nullptr, Errc::Syntax, "substitute: missing term");
    require(dom.insert(x).second, Errc::Syntax,
            "substitute: variable '" + x + "' bound twice");
  }
  bool identity = true;
  for (const auto& [x, tm] : bindings)
    if (!(tm->kind() == TermKind::Var && tm->name() == x)) identity = false;
  if (identity) return t;

  std::set<std::string> touched = dom;
  for (const auto& [x, tm] : bindings) collect_all_vars(tm, touched);
  FreshGen gen;
  TableauPtr cur = detail::hygienic(t, cx, gen, touched);
  // Two phases make the substitution simultaneous: first move every bound
  // variable out of the way, then put the terms in.
  std::vector<std::string> temps;
  for (const auto& [x, tm] : bindings) {
    (void)tm;
    temps.push_back(gen.fresh("subst"));
  }
  for (std::size_t i = 0; i < bindings.size(); ++i)
    cur = detail::subst_tableau(cur, bindings[i].first, Term::var(temps[i]),
                                cx);
  for (std::size_t i = 0; i < bindings.size(); ++i)
    cur = detail::subst_tableau(cur, temps[i], bindings[i].second, cx);
  detail::check_out(cur, cx);
  return cur;
}

// Replay a proof onto a sequent that carries at least the same minimal parts
// (same side, sign, and formula; at least the same multiplicity). The result
// is never larger than the input.
inline TableauPtr xf_thin(const TableauPtr& t, const Sequent& target,
                          const XfCtx& cx) {
  detail::PartKey missing;
  require(detail::counts_leq(detail::part_counts(t->seq),
                             detail::part_counts(target), &missing),
          Errc::Part,
          "thinning target '" + print_sequent(target) + "' lacks part '" +
              std::get<2>(missing) + "'");
  std::set<std::string> extra;
  collect_all_vars(target, extra);
  FreshGen gen;
  TableauPtr pre = detail::hygienic(t, cx, gen, extra);
  TableauPtr out = detail::thin_replay(pre, target, cx);
  detail::check_out(out, cx);
  return out;
}

// Invert the decomposition of the minimal part at `part`: return proofs of
// the premise sequents that a rule on that part would require. Two proofs
// for the binary shapes, one (with a globally fresh eigenvariable) for the
// quantifier shapes. Retention shapes are not invertible; the two
// succedent-discarding quantifier shapes are partially invertible and throw
// NotInvertible when the proof genuinely bypasses the part.
inline std::vector<TableauPtr> xf_invert(const TableauPtr& t,
                                         const PartRef& part,
                                         const XfCtx& cx) {
  PartInfo p = resolve_part_checked(t->seq, part);
  require(part_is_minimal(part.side, p.formula, p.sign), Errc::Part,
          "inversion needs a minimal part, got " + to_string(part));
  FreshGen gen;
  TableauPtr pre = detail::hygienic(t, cx, gen);
  const FormulaPtr& f = p.formula;
  auto instance = [&](const std::string& v) {
    return subst_formula(f->left(), f->qvar(), Term::var(v));
  };

  std::vector<TableauPtr> out;
  switch (f->conn()) {
    case Conn::And:
    case Conn::Or: {
      bool replaces =
          (f->conn() == Conn::And) ==
          ((part.side == Side::Ant) == (p.sign == Sign::Neg));
      // and-ant-neg, or-ant-pos, and-suc-pos, or-suc-neg all replace in
      // place; the remaining two shapes retain their principal.
      if (!replaces) break;
      out.push_back(detail::ReplaceInverter{cx, f->left(), 0, ""}.run(pre, part));
      out.push_back(
          detail::ReplaceInverter{cx, f->right(), 1, ""}.run(pre, part));
      break;
    }
    case Conn::Imp: {
      if (!(part.side == Side::Suc && p.sign == Sign::Neg)) break;
      out.push_back(detail::ImpOut1Inverter{cx, f->left()}.run(pre, part));
      out.push_back(
          detail::ReplaceInverter{cx, f->right(), 1, ""}.run(pre, part));
      break;
    }
    case Conn::Forall:
    case Conn::Exists: {
      bool eigen_replace =
          (part.side == Side::Ant) &&
          ((f->conn() == Conn::Forall) == (p.sign == Sign::Neg));
      bool eigen_drop =
          (part.side == Side::Suc) &&
          ((f->conn() == Conn::Forall) == (p.sign == Sign::Pos));
      if (!eigen_replace && !eigen_drop) break;
      std::string b = gen.fresh(f->qvar());
      if (eigen_replace) {
        out.push_back(
            detail::ReplaceInverter{cx, instance(b), -1, b}.run(pre, part));
      } else {
        FormulaPtr goal = f->conn() == Conn::Forall
                              ? instance(b)
                              : Formula::neg(instance(b));
        RuleId principal = f->conn() == Conn::Forall ? RuleId::AllSucPos
                                                     : RuleId::ExSucNeg;
        out.push_back(
            detail::DropInverter{cx, goal, principal, b}.run(pre, part));
      }
      break;
    }
    default:
      break;
  }
  require(!out.empty(), Errc::NotInvertible,
          "part " + to_string(part) + " of '" + print_sequent(t->seq) +
              "' has no invertible decomposition");
  for (const TableauPtr& o : out) {
    require(tableau_size(o) <= tableau_size(t), Errc::Internal,
            "inversion enlarged the proof");
    detail::check_out(o, cx);
  }
  return out;
}

// Contract two like parts (same side, same sign, same formula, disjoint
// positions): the result proves the sequent with `drop` deleted.
inline TableauPtr xf_contract(const TableauPtr& t, const PartRef& keep,
                              const PartRef& drop, const XfCtx& cx) {
  PartInfo pk = resolve_part_checked(t->seq, keep);
  PartInfo pd = resolve_part_checked(t->seq, drop);
  require(parts_disjoint(keep, drop), Errc::Part,
          "overlapping parts: " + to_string(keep) + " and " + to_string(drop));
  require(keep.side == drop.side && pk.sign == pd.sign &&
              formula_equal(pk.formula, pd.formula),
          Errc::WrongShape,
          "contraction needs two occurrences of one part with one sign");
  FreshGen gen;
  TableauPtr pre = detail::hygienic(t, cx, gen);
  TableauPtr out = detail::contract_rec(pre, keep, drop, cx, gen);
  require(tableau_size(out) <= tableau_size(t), Errc::Internal,
          "contraction enlarged the proof");
  detail::check_out(out, cx);
  return out;
}

// Move the part at `part` out to the top of its side: positive parts move as
// themselves, negative parts move under a negation sign. The inverse
// direction is xf_thin with the original sequent as target.
inline TableauPtr xf_translate_part(const TableauPtr& t, const PartRef& part,
                                    const XfCtx& cx) {
  PartInfo p = resolve_part_checked(t->seq, part);
  DeleteResult d = delete_part(t->seq, part);
  FormulaPtr moved =
      p.sign == Sign::Pos ? p.formula : Formula::neg(p.formula);
  Sequent target = d.sequent;
  if (part.side == Side::Ant)
    target.ant = attach(target.ant, Conn::And, moved);
  else
    target.suc = attach(target.suc, Conn::Or, moved);
  return xf_thin(t, target, cx);
}

// Swap two disjoint same-side, same-sign parts.
inline TableauPtr xf_interchange(const TableauPtr& t, const PartRef& p1,
                                 const PartRef& p2, const XfCtx& cx) {
  PartInfo a = resolve_part_checked(t->seq, p1);
  PartInfo b = resolve_part_checked(t->seq, p2);
  require(parts_disjoint(p1, p2), Errc::Part,
          "overlapping parts: " + to_string(p1) + " and " + to_string(p2));
  require(p1.side == p2.side && a.sign == b.sign, Errc::WrongShape,
          "interchange needs two parts of one side and one sign");
  Sequent target =
      replace_part(replace_part(t->seq, p1, b.formula), p2, a.formula);
  return xf_thin(t, target, cx);
}

// Reorganize a proof onto any target sequent whose minimal-part multiset
// dominates the proof's after contraction of surplus copies: every part key
// of the proof must still occur in the target.
inline TableauPtr xf_reshape(const TableauPtr& t, const Sequent& target,
                             const XfCtx& cx) {
  std::map<detail::PartKey, int> want = detail::part_counts(target);
  std::set<std::string> extra;
  collect_all_vars(target, extra);
  FreshGen gen;
  TableauPtr cur = detail::hygienic(t, cx, gen, extra);
  for (;;) {
    std::map<detail::PartKey, int> have = detail::part_counts(cur->seq);
    std::optional<detail::PartKey> surplus;
    for (const auto& [k, n] : have) {
      auto it = want.find(k);
      int limit = it == want.end() ? 0 : it->second;
      if (n > limit) {
        require(limit > 0, Errc::Part,
                "reshape target '" + print_sequent(target) +
                    "' lacks part '" + std::get<2>(k) + "'");
        surplus = k;
        break;
      }
    }
    if (!surplus) break;
    std::optional<PartRef> first, second;
    for (const PartInfo& m : minimal_parts(cur->seq)) {
      if (detail::part_key(m) != *surplus) continue;
      if (!first) {
        first = m.ref;
      } else {
        second = m.ref;
        break;
      }
    }
    require(first && second, Errc::Internal, "surplus part not found twice");
    cur = detail::contract_rec(cur, *first, *second, cx, gen);
  }
  TableauPtr out = detail::thin_replay(cur, target, cx);
  detail::check_out(out, cx);
  return out;
}

}  // namespace sntab
