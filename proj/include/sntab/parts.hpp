// Parts of a sequent: signed subformula occurrences reachable by the polarity
// descent rules, plus the deletion operation that removes a part and folds
// its siblings back in, with position tracking for other parts.
//
// Descent (child signs), with + the sign of a whole side formula:
//   ~A        : A with flipped sign, either side
//   antecedent: A&B at +  -> A+, B+ ;  A|B at -  -> A-, B- ;
//               A->B at - -> A+ (antecedent), B- (consequent)
//   succedent : A|B at +  -> A+, B+ ;  A&B at -  -> A-, B-
// Nothing descends into quantifiers, succedent implications, or implications
// of positive antecedent sign.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sntab/error.hpp"
#include "sntab/formula.hpp"

namespace sntab {

enum class Side { Ant, Suc };
enum class Sign { Pos, Neg };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }

enum class PStep { NegS, AndL, AndR, OrL, OrR, ImpAnt, ImpCon };

using Path = std::vector<PStep>;

struct PartRef {
  Side side = Side::Ant;
  Path path;
};

inline bool operator==(const PartRef& a, const PartRef& b) {
  return a.side == b.side && a.path == b.path;
}

inline const char* pstep_name(PStep s) {
  switch (s) {
    case PStep::NegS: return "neg";
    case PStep::AndL: return "and.left";
    case PStep::AndR: return "and.right";
    case PStep::OrL: return "or.left";
    case PStep::OrR: return "or.right";
    case PStep::ImpAnt: return "imp.ant";
    case PStep::ImpCon: return "imp.con";
  }
  return "?";
}

inline std::string to_string(const PartRef& r) {
  std::string out = r.side == Side::Ant ? "ant:" : "suc:";
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    if (i) out += "/";
    out += pstep_name(r.path[i]);
  }
  return out;
}

inline PartRef parse_part_ref(const std::string& text) {
  PartRef r;
  std::size_t pos;
  if (text.rfind("ant:", 0) == 0) {
    r.side = Side::Ant;
    pos = 4;
  } else if (text.rfind("suc:", 0) == 0) {
    r.side = Side::Suc;
    pos = 4;
  } else {
    throw Error(Errc::Part, "part must start with 'ant:' or 'suc:'");
  }
  while (pos < text.size()) {
    std::size_t end = text.find('/', pos);
    if (end == std::string::npos) end = text.size();
    std::string step = text.substr(pos, end - pos);
    if (step == "neg") r.path.push_back(PStep::NegS);
    else if (step == "and.left") r.path.push_back(PStep::AndL);
    else if (step == "and.right") r.path.push_back(PStep::AndR);
    else if (step == "or.left") r.path.push_back(PStep::OrL);
    else if (step == "or.right") r.path.push_back(PStep::OrR);
    else if (step == "imp.ant") r.path.push_back(PStep::ImpAnt);
    else if (step == "imp.con") r.path.push_back(PStep::ImpCon);
    else throw Error(Errc::Part, "unknown part step '" + step + "'");
    pos = end + (end < text.size() ? 1 : 0);
  }
  return r;
}

// Legal descent steps (with child signs) out of a formula occurrence.
inline std::vector<std::pair<PStep, Sign>> part_children(Side side,
                                                         const FormulaPtr& f,
                                                         Sign sign) {
  switch (f->conn()) {
    case Conn::Neg:
      return {{PStep::NegS, flip(sign)}};
    case Conn::And:
      if (side == Side::Ant && sign == Sign::Pos)
        return {{PStep::AndL, Sign::Pos}, {PStep::AndR, Sign::Pos}};
      if (side == Side::Suc && sign == Sign::Neg)
        return {{PStep::AndL, Sign::Neg}, {PStep::AndR, Sign::Neg}};
      return {};
    case Conn::Or:
      if (side == Side::Ant && sign == Sign::Neg)
        return {{PStep::OrL, Sign::Neg}, {PStep::OrR, Sign::Neg}};
      if (side == Side::Suc && sign == Sign::Pos)
        return {{PStep::OrL, Sign::Pos}, {PStep::OrR, Sign::Pos}};
      return {};
    case Conn::Imp:
      if (side == Side::Ant && sign == Sign::Neg)
        return {{PStep::ImpAnt, Sign::Pos}, {PStep::ImpCon, Sign::Neg}};
      return {};
    default:
      return {};
  }
}

inline const FormulaPtr& formula_child(const FormulaPtr& f, PStep s) {
  switch (s) {
    case PStep::NegS: return f->left();
    case PStep::AndL:
    case PStep::OrL:
    case PStep::ImpAnt:
      return f->left();
    case PStep::AndR:
    case PStep::OrR:
    case PStep::ImpCon:
      return f->right();
  }
  throw Error(Errc::Internal, "unreachable step");
}

inline bool step_is_left(PStep s) {
  return s == PStep::AndL || s == PStep::OrL || s == PStep::ImpAnt;
}

struct PartInfo {
  PartRef ref;
  FormulaPtr formula;
  Sign sign = Sign::Pos;
};

namespace detail {
inline void enumerate_parts_from(Side side, const FormulaPtr& f, Sign sign,
                                 Path& path, std::vector<PartInfo>& out) {
  out.push_back(PartInfo{PartRef{side, path}, f, sign});
  for (auto [step, csign] : part_children(side, f, sign)) {
    path.push_back(step);
    enumerate_parts_from(side, formula_child(f, step), csign, path, out);
    path.pop_back();
  }
}
}  // namespace detail

// All parts, pre-order, antecedent side first.
inline std::vector<PartInfo> enumerate_parts(const Sequent& s) {
  std::vector<PartInfo> out;
  Path path;
  if (s.ant) detail::enumerate_parts_from(Side::Ant, s.ant, Sign::Pos, path, out);
  if (s.suc) detail::enumerate_parts_from(Side::Suc, s.suc, Sign::Pos, path, out);
  return out;
}

// Resolve a reference, validating every descent step. nullopt on failure.
inline std::optional<PartInfo> resolve_part(const Sequent& s, const PartRef& r) {
  const FormulaPtr* cur = r.side == Side::Ant ? &s.ant : &s.suc;
  if (!*cur) return std::nullopt;
  Sign sign = Sign::Pos;
  FormulaPtr f = *cur;
  for (PStep step : r.path) {
    bool ok = false;
    for (auto [cstep, csign] : part_children(r.side, f, sign)) {
      if (cstep == step) {
        sign = csign;
        f = formula_child(f, step);
        ok = true;
        break;
      }
    }
    if (!ok) return std::nullopt;
  }
  return PartInfo{r, f, sign};
}

inline PartInfo resolve_part_checked(const Sequent& s, const PartRef& r) {
  auto p = resolve_part(s, r);
  require(p.has_value(), Errc::Part, "not a part: " + to_string(r));
  return *p;
}

// A minimal part has no proper subparts.
inline bool part_is_minimal(Side side, const FormulaPtr& f, Sign sign) {
  return part_children(side, f, sign).empty();
}

inline std::vector<PartInfo> minimal_parts(const Sequent& s) {
  std::vector<PartInfo> out;
  for (PartInfo& p : enumerate_parts(s))
    if (part_is_minimal(p.ref.side, p.formula, p.sign)) out.push_back(p);
  return out;
}

// Is `inner` equal to or a descendant position of `outer` (same side)?
inline bool path_within(const PartRef& outer, const PartRef& inner) {
  if (outer.side != inner.side) return false;
  if (inner.path.size() < outer.path.size()) return false;
  return std::equal(outer.path.begin(), outer.path.end(), inner.path.begin());
}

inline bool parts_disjoint(const PartRef& a, const PartRef& b) {
  return !path_within(a, b) && !path_within(b, a);
}

// Structural replacement of the subformula at a (validated) part position.
namespace detail {
inline FormulaPtr replace_at(const FormulaPtr& f, const Path& path,
                             std::size_t i, const FormulaPtr& repl) {
  if (i == path.size()) return repl;
  PStep s = path[i];
  switch (f->conn()) {
    case Conn::Neg:
      return Formula::neg(replace_at(f->left(), path, i + 1, repl));
    case Conn::And:
    case Conn::Or:
    case Conn::Imp: {
      FormulaPtr l = f->left(), r = f->right();
      if (step_is_left(s)) l = replace_at(l, path, i + 1, repl);
      else r = replace_at(r, path, i + 1, repl);
      return Formula::binary(f->conn(), std::move(l), std::move(r));
    }
    default:
      throw Error(Errc::Part, "replace path descends into an atom");
  }
}
}  // namespace detail

inline Sequent replace_part(const Sequent& s, const PartRef& r,
                            const FormulaPtr& repl) {
  require(resolve_part(s, r).has_value(), Errc::Part,
          "not a part: " + to_string(r));
  Sequent out = s;
  if (r.side == Side::Ant)
    out.ant = detail::replace_at(s.ant, r.path, 0, repl);
  else
    out.suc = detail::replace_at(s.suc, r.path, 0, repl);
  return out;
}

// attach(ctx, c, b): ctx∘b with an empty context absorbing, used both by
// deletion folding and by rule attachments. Null pointers mean "empty".
inline FormulaPtr attach(const FormulaPtr& ctx, Conn c, const FormulaPtr& b) {
  if (!b) return ctx;
  if (!ctx) return b;
  return Formula::binary(c, ctx, b);
}

// ---------------------------------------------------------------------------
// Deletion. Removing part p from its side folds the siblings met on the walk
// from the root to p back into an accumulator, root-first:
//   antecedent:  A&B at + deleting A: attach sibling with &
//                A|B at - deleting A: attach ~sibling with &
//                A->B at -, deleting the antecedent A: attach ~B with &
//                A->B at -, deleting the consequent B: attach A with &
//   succedent :  A|B at + deleting A: attach sibling with |
//                A&B at - deleting A: attach ~sibling with |
//   ~A: nothing is attached.
// The result may be empty (null).

struct DeletionFold {
  FormulaPtr rest;  // null = side becomes empty
  // Attachment records for position tracking: for the j-th binary step on the
  // deletion path (root-first), where other parts diverging there end up.
  struct Record {
    std::size_t depth;      // index into the deletion path of this step
    bool negated;           // sibling was wrapped in ~
    bool sibling_is_other;  // diverging paths continue into the sibling child
    PStep taken;            // the step the deletion path took
  };
  std::vector<Record> records;
  Conn glue = Conn::And;  // And on the antecedent, Or on the succedent
};

namespace detail {

inline DeletionFold delete_fold(Side side, const FormulaPtr& root,
                                const Path& path) {
  DeletionFold out;
  out.glue = side == Side::Ant ? Conn::And : Conn::Or;
  FormulaPtr acc;  // empty
  FormulaPtr cur = root;
  Sign sign = Sign::Pos;
  for (std::size_t i = 0; i < path.size(); ++i) {
    PStep st = path[i];
    auto kids = part_children(side, cur, sign);
    bool legal = false;
    Sign child_sign = sign;
    for (auto [cstep, csign] : kids)
      if (cstep == st) {
        legal = true;
        child_sign = csign;
      }
    require(legal, Errc::Part, "deletion path is not a part path");
    if (cur->conn() == Conn::Neg) {
      cur = cur->left();
      sign = child_sign;
      continue;
    }
    // Binary step: fold the sibling.
    FormulaPtr sib = step_is_left(st) ? cur->right() : cur->left();
    bool negated = false;
    FormulaPtr attach_f;
    if (side == Side::Ant) {
      if (cur->conn() == Conn::And) {
        attach_f = sib;  // A&B at +
      } else if (cur->conn() == Conn::Or) {
        attach_f = Formula::neg(sib);  // A|B at -
        negated = true;
      } else {  // Imp at -
        if (st == PStep::ImpAnt) {
          attach_f = Formula::neg(cur->right());  // deleting A from A->B
          negated = true;
        } else {
          attach_f = cur->left();  // deleting B from A->B
        }
      }
    } else {
      if (cur->conn() == Conn::Or) {
        attach_f = sib;  // A|B at +
      } else {
        attach_f = Formula::neg(sib);  // A&B at -
        negated = true;
      }
    }
    acc = attach(acc, out.glue, attach_f);
    out.records.push_back(DeletionFold::Record{i, negated, true, st});
    cur = formula_child(cur, st);
    sign = child_sign;
  }
  out.rest = acc;
  return out;
}

}  // namespace detail

// Position remapping for a part that survives a deletion. Returns nullopt if
// the tracked part is the deleted part, inside it, or an ancestor of it.
inline std::optional<Path> track_through_deletion(const DeletionFold& fold,
                                                  const Path& deleted,
                                                  const Path& tracked) {
  // Find first divergence.
  std::size_t i = 0;
  while (i < deleted.size() && i < tracked.size() && deleted[i] == tracked[i])
    ++i;
  if (i == deleted.size() || i == tracked.size())
    return std::nullopt;  // equal, inside, or ancestor: no surviving position
  // tracked diverges at depth i; the record for the binary step at depth i
  // tells where the sibling material went.
  std::size_t k = fold.records.size();
  std::size_t j = 0;  // 1-based attachment index of this divergence
  for (std::size_t r = 0; r < k; ++r)
    if (fold.records[r].depth == i) j = r + 1;
  require(j >= 1, Errc::Internal, "divergence depth not a binary step");
  Path pos;
  // Left-nested chain of k attachments: s_1 at left^(k-1); s_j (j>=2) at
  // left^(k-j) then right. With k == 1 the single attachment is the root.
  PStep left = fold.glue == Conn::And ? PStep::AndL : PStep::OrL;
  PStep right = fold.glue == Conn::And ? PStep::AndR : PStep::OrR;
  std::size_t lefts = k - j;
  for (std::size_t n = 0; n < lefts; ++n) pos.push_back(left);
  if (j >= 2) pos.push_back(right);
  const DeletionFold::Record& rec = fold.records[j - 1];
  if (rec.negated) pos.push_back(PStep::NegS);
  // Special case: deleting one side of an antecedent implication attaches a
  // formula derived from the *other* child, so tracked material inside the
  // taken child's sibling continues after the divergence step; for the
  // implication-consequent deletion the attachment is the antecedent child.
  // In both binary-connective cases the attachment is the sibling subtree, so
  // the remainder of the tracked path (past the divergence step) applies.
  pos.insert(pos.end(), tracked.begin() + static_cast<long>(i) + 1,
             tracked.end());
  return pos;
}

struct DeleteResult {
  Sequent sequent;
  DeletionFold fold;   // fold data for the affected side
  Path deleted_path;   // the path that was deleted (for tracking)
  Side side = Side::Ant;
};

// Delete the part at r from s. The other side is untouched. Deleting the only
// material of a side leaves that side empty.
inline DeleteResult delete_part(const Sequent& s, const PartRef& r) {
  require(resolve_part(s, r).has_value(), Errc::Part,
          "not a part: " + to_string(r));
  DeleteResult out;
  out.side = r.side;
  out.deleted_path = r.path;
  const FormulaPtr& root = r.side == Side::Ant ? s.ant : s.suc;
  out.fold = detail::delete_fold(r.side, root, r.path);
  out.sequent = s;
  if (r.side == Side::Ant)
    out.sequent.ant = out.fold.rest;
  else
    out.sequent.suc = out.fold.rest;
  return out;
}

// Track a same-side part through the deletion in `d`.
inline std::optional<PartRef> track_part(const DeleteResult& d,
                                         const PartRef& tracked) {
  if (tracked.side != d.side) return tracked;  // other side untouched
  auto p = track_through_deletion(d.fold, d.deleted_path, tracked.path);
  if (!p) return std::nullopt;
  return PartRef{tracked.side, *p};
}

// Inverse of delete_part: rebuild the original sequent from the deletion
// result and the formula that was removed. Exercises the fold encoding.
inline Sequent undelete(const DeleteResult& d, const FormulaPtr& deleted) {
  const std::size_t k = d.fold.records.size();
  // Collect attachments a_1..a_k from the left-nested glue chain.
  std::vector<FormulaPtr> att(k);
  if (k > 0) {
    FormulaPtr cur = d.fold.rest;
    require(cur != nullptr, Errc::Internal, "undelete: missing fold rest");
    for (std::size_t j = k; j >= 2; --j) {
      require(cur->conn() == d.fold.glue, Errc::Internal,
              "undelete: fold chain too short");
      att[j - 1] = cur->right();
      cur = cur->left();
    }
    att[0] = cur;
  }
  // Rebuild bottom-up along the deleted path, consuming attachments
  // deepest-first.
  FormulaPtr built = deleted;
  std::size_t next_rec = k;  // records are root-first; walk them backwards
  for (std::size_t i = d.deleted_path.size(); i-- > 0;) {
    PStep st = d.deleted_path[i];
    if (st == PStep::NegS) {
      built = Formula::neg(built);
      continue;
    }
    require(next_rec >= 1, Errc::Internal, "undelete: record underflow");
    const DeletionFold::Record& rec = d.fold.records[--next_rec];
    require(rec.depth == i && rec.taken == st, Errc::Internal,
            "undelete: record mismatch");
    const FormulaPtr& a = att[next_rec];
    switch (st) {
      case PStep::AndL:
        built = Formula::conj(built, rec.negated ? a->left() : a);
        break;
      case PStep::AndR:
        built = Formula::conj(rec.negated ? a->left() : a, built);
        break;
      case PStep::OrL:
        built = Formula::disj(built, rec.negated ? a->left() : a);
        break;
      case PStep::OrR:
        built = Formula::disj(rec.negated ? a->left() : a, built);
        break;
      case PStep::ImpAnt:
        built = Formula::imp(built, a->left());  // attachment was ~consequent
        break;
      case PStep::ImpCon:
        built = Formula::imp(a, built);  // attachment was the antecedent
        break;
      default:
        throw Error(Errc::Internal, "undelete: unexpected step");
    }
  }
  Sequent out = d.sequent;
  if (d.side == Side::Ant)
    out.ant = built;
  else
    out.suc = built;
  return out;
}

}  // namespace sntab
