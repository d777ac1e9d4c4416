// Backward proof search. Invertible reductions are applied eagerly and
// deterministically; the remaining rules (context droppers, retained
// quantifier instantiations, positive antecedent implication) form choice
// points explored depth-first over a term pool, under budgets. A goal is
// reported Refuted only along definite paths: an irreducible non-axiom
// sequent, or an invertible reduction all of whose obligations are definite
// failures. Everything else that fails is Exhausted, never Refuted.
#pragma once

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sntab/axiom.hpp"
#include "sntab/proof.hpp"
#include "sntab/rule.hpp"

namespace sntab {

struct SearchBudget {
  int max_depth = 24;           // rule applications along one branch
  Nat pool_numerals = 3;        // numerals 0..k offered to term rules
  std::size_t max_nodes = 200000;
  long max_millis = 30000;
};

struct SearchStats {
  std::size_t nodes = 0;
  bool budget_hit = false;   // a depth/node/time limit cut some branch
  bool unknown_seen = false; // some leaf was an undecided schematic-axiom query
};

enum class SearchStatus { Proved, Refuted, Exhausted };

inline const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proved: return "proved";
    case SearchStatus::Refuted: return "refuted";
    default: return "exhausted";
  }
}

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  TableauPtr proof;     // set iff status == Proved
  SearchStats stats;
  std::string detail;   // e.g. the irreducible non-axiom witness
};

namespace detail {

// Rules applied eagerly: each preserves provability in both directions.
inline bool rule_invertible(RuleId id) {
  switch (id) {
    case RuleId::AndAntNeg:
    case RuleId::AndSucPos:
    case RuleId::OrAntPos:
    case RuleId::OrSucNeg:
    case RuleId::ImpSucNeg:
    case RuleId::AllAntNeg:
    case RuleId::ExAntPos:
      return true;
    default:
      return false;
  }
}

inline void pool_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  out.push_back(t);
  if (t->kind() == TermKind::Succ) {
    pool_subterms(t->sub(), out);
  } else if (t->kind() == TermKind::App) {
    for (const TermPtr& a : t->args()) pool_subterms(a, out);
  }
}

inline void collect_formula_terms(const FormulaPtr& f,
                                  std::vector<TermPtr>& out) {
  if (f->conn() == Conn::Prime) {
    for (const TermPtr& a : f->args()) pool_subterms(a, out);
    return;
  }
  if (f->left()) collect_formula_terms(f->left(), out);
  if (f->right()) collect_formula_terms(f->right(), out);
}

class Searcher {
 public:
  Searcher(const Signature& sig, const Axiom8Oracle& oracle, System sys,
           SearchBudget budget, unsigned seed)
      : sig_(sig),
        oracle_(oracle),
        sys_(sys),
        budget_(budget),
        seed_(seed),
        rng_(seed),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(budget.max_millis)) {}

  struct Outcome {
    TableauPtr proof;        // null on failure
    bool definite = false;   // failure holds for every strategy
    std::string witness;     // irreducible non-axiom sequent, when definite
  };

  Outcome search(const Sequent& s, int depth,
                 std::vector<std::string>& trail) {
    if (stats_.nodes >= budget_.max_nodes ||
        std::chrono::steady_clock::now() >= deadline_) {
      stats_.budget_hit = true;
      return {};
    }
    ++stats_.nodes;

    MatchResult m = match_axiom(s, sig_, oracle_, sys_);
    if (m.kind) return {Tableau::leaf(s, *m.kind), false, {}};
    if (m.oracle_unknown) stats_.unknown_seen = true;

    std::string key = print_sequent(s);
    if (std::find(trail.begin(), trail.end(), key) != trail.end()) {
      stats_.budget_hit = true;  // cyclic retention: treat as a cut branch
      return {};
    }

    std::vector<PartInfo> parts = minimal_parts(s);

    // Eager phase: the first invertible reduction, in part order.
    for (const PartInfo& p : parts) {
      for (const RuleInfo& r : rule_table()) {
        if (!rule_invertible(r.id) || !system_admits(sys_, r.id)) continue;
        if (r.side != p.ref.side || r.sign != p.sign ||
            r.conn != p.formula->conn())
          continue;
        RuleApp app = make_app(s, r, p, nullptr);
        return expand(s, app, depth, trail, /*invertible=*/true, key);
      }
    }

    if (depth >= budget_.max_depth) {
      stats_.budget_hit = true;
      return {};
    }

    // Choice phase.
    std::vector<RuleApp> alts = alternatives(s, parts);
    if (alts.empty()) {
      Outcome o;
      o.definite = !m.oracle_unknown;
      if (o.definite) o.witness = key;
      return o;
    }
    if (seed_ != 0) std::shuffle(alts.begin(), alts.end(), rng_);
    for (const RuleApp& app : alts) {
      Outcome o = expand(s, app, depth, trail, /*invertible=*/false, key);
      if (o.proof) return o;
    }
    return {};
  }

  SearchStats& stats() { return stats_; }

 private:
  RuleApp make_app(const Sequent& s, const RuleInfo& r, const PartInfo& p,
                   TermPtr term) {
    RuleApp app;
    app.rule = r.id;
    app.part = p.ref;
    if (r.arg == RuleArg::Term) {
      app.term = std::move(term);
    } else if (r.arg == RuleArg::Eigen) {
      FreshGen gen;
      gen.reserve(s);
      app.eigen = gen.fresh(p.formula->qvar());
    }
    return app;
  }

  std::vector<TermPtr> term_pool(const Sequent& s) {
    std::vector<TermPtr> raw;
    for (Nat i = 0; i <= budget_.pool_numerals; ++i)
      raw.push_back(Term::numeral_term(i));
    std::vector<TermPtr> sub;
    if (s.ant) collect_formula_terms(s.ant, sub);
    if (s.suc) collect_formula_terms(s.suc, sub);
    std::vector<std::string> free = sequent_free_vars(s);
    std::sort(sub.begin(), sub.end(), [](const TermPtr& a, const TermPtr& b) {
      return print_term(a) < print_term(b);
    });
    for (const TermPtr& t : sub) {
      // Only terms built from the sequent's free variables make sense (and
      // are capture-safe at most positions).
      bool ok = true;
      for (const std::string& v : t->vars())
        ok = ok && std::binary_search(free.begin(), free.end(), v);
      if (ok) raw.push_back(t);
    }
    std::vector<TermPtr> pool;
    std::set<std::string> seen;
    for (const TermPtr& t : raw)
      if (seen.insert(print_term(t)).second) pool.push_back(t);
    return pool;
  }

  std::vector<RuleApp> alternatives(const Sequent& s,
                                    const std::vector<PartInfo>& parts) {
    std::vector<RuleApp> alts;
    std::vector<TermPtr> pool;
    bool pool_ready = false;
    for (const PartInfo& p : parts) {
      for (const RuleInfo& r : rule_table()) {
        if (rule_invertible(r.id) || !system_admits(sys_, r.id)) continue;
        if (r.side != p.ref.side || r.sign != p.sign ||
            r.conn != p.formula->conn())
          continue;
        if (r.arg == RuleArg::Term) {
          if (!pool_ready) {
            pool = term_pool(s);
            pool_ready = true;
          }
          for (const TermPtr& t : pool) alts.push_back(make_app(s, r, p, t));
        } else {
          alts.push_back(make_app(s, r, p, nullptr));
        }
      }
    }
    return alts;
  }

  Outcome expand(const Sequent& s, const RuleApp& app, int depth,
                 std::vector<std::string>& trail, bool invertible,
                 const std::string& key) {
    std::vector<Sequent> kids;
    try {
      kids = apply_rule(s, app, sys_);
    } catch (const Error&) {
      return {};  // capture or freshness rejection: skip this alternative
    }
    trail.push_back(key);
    std::vector<TableauPtr> sub;
    Outcome bad;
    bool all = true;
    for (const Sequent& k : kids) {
      Outcome o = search(k, depth + 1, trail);
      if (!o.proof) {
        all = false;
        if (o.definite && bad.witness.empty()) bad = o;
        break;  // one failed obligation sinks this alternative
      }
      sub.push_back(o.proof);
    }
    trail.pop_back();
    if (all) return {Tableau::step(s, app, std::move(sub)), false, {}};
    if (invertible && bad.definite) return bad;
    return {};
  }

  const Signature& sig_;
  const Axiom8Oracle& oracle_;
  System sys_;
  SearchBudget budget_;
  unsigned seed_;
  std::mt19937 rng_;
  std::chrono::steady_clock::time_point deadline_;
  SearchStats stats_;
};

}  // namespace detail

inline SearchResult prove(const Sequent& goal, const Signature& sig,
                          const Axiom8Oracle& oracle, System sys,
                          SearchBudget budget = {}, unsigned seed = 0) {
  detail::Searcher searcher(sig, oracle, sys, budget, seed);
  std::vector<std::string> trail;
  detail::Searcher::Outcome o = searcher.search(goal, 0, trail);
  SearchResult r;
  r.stats = searcher.stats();
  if (o.proof) {
    Verdict v = check_proof(o.proof, sig, oracle, CheckOptions{sys, false});
    require(v.ok, Errc::Internal,
            "search produced a proof the checker rejects at " + v.where +
                ": " + v.reason);
    r.status = SearchStatus::Proved;
    r.proof = o.proof;
    r.detail = "proved; " + std::to_string(tableau_size(o.proof)) + " nodes";
    return r;
  }
  if (o.definite) {
    r.status = SearchStatus::Refuted;
    r.detail = "irreducible non-axiom sequent: " + o.witness;
    return r;
  }
  r.status = SearchStatus::Exhausted;
  r.detail = r.stats.budget_hit
                 ? "budget exhausted"
                 : (r.stats.unknown_seen
                        ? "undecided schematic-axiom leaf encountered"
                        : "alternatives exhausted");
  return r;
}

}  // namespace sntab
