// Signed parts: enumeration, resolution, replacement, deletion with its
// folding clauses, position tracking, and the deletion inverse.
#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "sntab/parse.hpp"
#include "sntab/parts.hpp"
#include "sntab/print.hpp"

using namespace sntab;

namespace {
std::map<std::string, std::pair<std::string, Sign>> part_map(const Sequent& s) {
  std::map<std::string, std::pair<std::string, Sign>> m;
  for (const PartInfo& p : enumerate_parts(s))
    m[to_string(p.ref)] = {print_formula(p.formula), p.sign};
  return m;
}
}  // namespace

TEST_CASE("part enumeration: worked example with every clause") {
  Signature sig;
  Sequent s = parse_sequent("~(B | (A -> A)) |- A | ~A", sig);
  auto m = part_map(s);
  REQUIRE(m.size() == 10);
  // Antecedent: ~(B|(A->A))+, (B|(A->A))-, B-, (A->A)-, A+ (antecedent of
  // the implication), A- (consequent).
  CHECK(m.at("ant:") == std::make_pair(std::string("~(B | (A -> A))"), Sign::Pos));
  CHECK(m.at("ant:neg") == std::make_pair(std::string("B | (A -> A)"), Sign::Neg));
  CHECK(m.at("ant:neg/or.left") == std::make_pair(std::string("B"), Sign::Neg));
  CHECK(m.at("ant:neg/or.right") == std::make_pair(std::string("A -> A"), Sign::Neg));
  CHECK(m.at("ant:neg/or.right/imp.ant") == std::make_pair(std::string("A"), Sign::Pos));
  CHECK(m.at("ant:neg/or.right/imp.con") == std::make_pair(std::string("A"), Sign::Neg));
  // Succedent: (A|~A)+, A+, ~A+, A-.
  CHECK(m.at("suc:") == std::make_pair(std::string("A | ~A"), Sign::Pos));
  CHECK(m.at("suc:or.left") == std::make_pair(std::string("A"), Sign::Pos));
  CHECK(m.at("suc:or.right") == std::make_pair(std::string("~A"), Sign::Pos));
  CHECK(m.at("suc:or.right/neg") == std::make_pair(std::string("A"), Sign::Neg));
}

TEST_CASE("part enumeration: second worked example") {
  Signature sig;
  Sequent s = parse_sequent("~A & ~~B |- ~C | ~(B & ~A)", sig);
  auto m = part_map(s);
  // A- and B+ on the left.
  CHECK(m.at("ant:and.left/neg") == std::make_pair(std::string("A"), Sign::Neg));
  CHECK(m.at("ant:and.right/neg/neg") == std::make_pair(std::string("B"), Sign::Pos));
  // B- and C- on the right.
  CHECK(m.at("suc:or.left/neg") == std::make_pair(std::string("C"), Sign::Neg));
  CHECK(m.at("suc:or.right/neg/and.left") == std::make_pair(std::string("B"), Sign::Neg));
}

TEST_CASE("part enumeration: smallest example, and closure boundaries") {
  Signature sig;
  Sequent s = parse_sequent("A |- B", sig);
  auto m = part_map(s);
  REQUIRE(m.size() == 2);
  CHECK(m.count("ant:") == 1);
  CHECK(m.count("suc:") == 1);
  // No descent into succedent implications, positive antecedent
  // implications, or quantifiers.
  Sequent t = parse_sequent("(A -> B) & (forall x. P(x)) |- C -> D", sig);
  auto mt = part_map(t);
  CHECK(mt.size() == 4);  // ant whole, both conjuncts, suc whole; nothing inside
  CHECK(mt.count("ant:and.left/imp.ant") == 0);
  CHECK(mt.count("suc:imp.ant") == 0);
  CHECK_FALSE(resolve_part(t, parse_part_ref("suc:imp.con")).has_value());
  CHECK_FALSE(resolve_part(t, parse_part_ref("ant:and.left/imp.ant")).has_value());
}

TEST_CASE("sign soundness: resolve agrees with enumeration") {
  Signature sig;
  const char* samples[] = {
      "~(B | (A -> A)) |- A | ~A",
      "~A & ~~B |- ~C | ~(B & ~A)",
      "~(P -> Q) & (R | ~S) |- ~(P & ~(Q | R))",
  };
  for (const char* text : samples) {
    Sequent s = parse_sequent(text, sig);
    for (const PartInfo& p : enumerate_parts(s)) {
      auto r = resolve_part(s, p.ref);
      REQUIRE(r.has_value());
      CHECK(r->sign == p.sign);
      CHECK(formula_equal(r->formula, p.formula));
      // Serialization round-trip.
      CHECK(parse_part_ref(to_string(p.ref)) == p.ref);
    }
  }
}

TEST_CASE("minimal parts partition the prime parts") {
  Signature sig;
  const char* samples[] = {
      "~(B | (A -> A)) |- A | ~A",
      "~A & ~~B |- ~C | ~(B & ~A)",
      "(A -> B) & (forall x. P(x, y)) |- C -> D",
  };
  for (const char* text : samples) {
    Sequent s = parse_sequent(text, sig);
    std::vector<PartInfo> mins = minimal_parts(s);
    // Pairwise disjoint.
    for (std::size_t i = 0; i < mins.size(); ++i)
      for (std::size_t j = i + 1; j < mins.size(); ++j)
        CHECK(parts_disjoint(mins[i].ref, mins[j].ref));
    // Every part contains at least one minimal part; every prime part lies
    // within exactly one minimal part.
    for (const PartInfo& p : enumerate_parts(s)) {
      int within = 0, contains = 0;
      for (const PartInfo& mp : mins) {
        if (path_within(mp.ref, p.ref)) ++within;
        if (path_within(p.ref, mp.ref)) ++contains;
      }
      CHECK(contains >= 1);
      if (p.formula->conn() == Conn::Prime) CHECK(within == 1);
    }
    // Free variables of the sequent equal the union over minimal parts.
    std::set<std::string> uni;
    for (const PartInfo& mp : mins)
      for (const std::string& v : mp.formula->free_vars()) uni.insert(v);
    std::vector<std::string> fv = sequent_free_vars(s);
    CHECK(std::set<std::string>(fv.begin(), fv.end()) == uni);
  }
}

TEST_CASE("replacement") {
  Signature sig;
  Sequent s = parse_sequent("~(forall x. P(x)) |-", sig);
  Sequent r = replace_part(s, parse_part_ref("ant:neg"),
                           parse_formula("P(b)", sig));
  CHECK(print_sequent(r) == "~P(b) |-");
  Sequent s2 = parse_sequent("A |- B", sig);
  CHECK(print_sequent(replace_part(s2, parse_part_ref("ant:"),
                                   parse_formula("C", sig))) == "C |- B");
  CHECK(print_sequent(replace_part(s2, parse_part_ref("suc:"),
                                   parse_formula("C | D", sig))) ==
        "A |- C | D");
  CHECK_THROWS_AS(
      replace_part(s2, parse_part_ref("ant:neg"), parse_formula("C", sig)),
      Error);
}

TEST_CASE("deletion: the worked two-step example") {
  Signature sig;
  Sequent s = parse_sequent("A & C |- B | D", sig);
  DeleteResult d1 = delete_part(s, parse_part_ref("ant:and.left"));
  CHECK(print_sequent(d1.sequent) == "C |- B | D");
  DeleteResult d2 = delete_part(d1.sequent, parse_part_ref("suc:or.left"));
  CHECK(print_sequent(d2.sequent) == "C |- D");
}

TEST_CASE("deletion: whole-side and under negations") {
  Signature sig;
  CHECK(print_sequent(
            delete_part(parse_sequent("A |-", sig), parse_part_ref("ant:"))
                .sequent) == "|-");
  // Deleting the innermost part of ~~A empties the side: the negation hull
  // contributes nothing.
  CHECK(print_sequent(delete_part(parse_sequent("~~A |-", sig),
                                  parse_part_ref("ant:neg/neg"))
                          .sequent) == "|-");
  CHECK(print_sequent(delete_part(parse_sequent("P |- ~~A", sig),
                                  parse_part_ref("suc:neg/neg"))
                          .sequent) == "P |-");
}

TEST_CASE("deletion clauses: sibling folding per side") {
  Signature sig;
  // Antecedent disjunction at -: sibling comes back negated.
  CHECK(print_sequent(delete_part(parse_sequent("~(A | B) |-", sig),
                                  parse_part_ref("ant:neg/or.left"))
                          .sequent) == "~B |-");
  // Antecedent implication at -: deleting the antecedent A attaches ~B.
  CHECK(print_sequent(delete_part(parse_sequent("~(A -> B) |-", sig),
                                  parse_part_ref("ant:neg/imp.ant"))
                          .sequent) == "~B |-");
  // ... deleting the consequent B attaches A.
  CHECK(print_sequent(delete_part(parse_sequent("~(A -> B) |-", sig),
                                  parse_part_ref("ant:neg/imp.con"))
                          .sequent) == "A |-");
  // Succedent conjunction at -: sibling comes back negated, glued with |.
  CHECK(print_sequent(delete_part(parse_sequent("|- ~(A & B)", sig),
                                  parse_part_ref("suc:neg/and.left"))
                          .sequent) == "|- ~B");
  // Succedent disjunction at +: plain sibling.
  CHECK(print_sequent(delete_part(parse_sequent("|- A | B", sig),
                                  parse_part_ref("suc:or.right"))
                          .sequent) == "|- A");
}

TEST_CASE("deletion reorders: attachments fold root-first") {
  Signature sig;
  Sequent s = parse_sequent("(A & C) & D |-", sig);
  DeleteResult d = delete_part(s, parse_part_ref("ant:and.left/and.left"));
  CHECK(print_sequent(d.sequent) == "D & C |-");
  // Tracking: C ends up at and.right, D at and.left.
  auto c = track_part(d, parse_part_ref("ant:and.left/and.right"));
  REQUIRE(c.has_value());
  CHECK(to_string(*c) == "ant:and.right");
  auto dd = track_part(d, parse_part_ref("ant:and.right"));
  REQUIRE(dd.has_value());
  CHECK(to_string(*dd) == "ant:and.left");
  // The deleted part and its ancestors have no surviving position.
  CHECK_FALSE(track_part(d, parse_part_ref("ant:and.left/and.left")).has_value());
  CHECK_FALSE(track_part(d, parse_part_ref("ant:and.left")).has_value());
  CHECK_FALSE(track_part(d, parse_part_ref("ant:")).has_value());
}

TEST_CASE("tracking preserves formula and sign") {
  Signature sig;
  const char* samples[] = {
      "~(B | (A -> A)) & (P & ~Q) |- A | (~A | R)",
      "~((A -> B) | ~C) |- ~(D & ~E)",
      "(A & ~(B | C)) & ~~D |- (E | ~F) | G",
  };
  for (const char* text : samples) {
    Sequent s = parse_sequent(text, sig);
    std::vector<PartInfo> parts = enumerate_parts(s);
    for (const PartInfo& del : parts) {
      if (del.ref.path.empty()) continue;  // deleting the whole side: trivial
      DeleteResult d = delete_part(s, del.ref);
      for (const PartInfo& tr : parts) {
        if (!parts_disjoint(del.ref, tr.ref)) continue;
        auto moved = track_part(d, tr.ref);
        REQUIRE(moved.has_value());
        auto got = resolve_part(d.sequent, *moved);
        REQUIRE(got.has_value());
        INFO(text << " deleting " << to_string(del.ref) << ", tracking "
                  << to_string(tr.ref) << " -> " << to_string(*moved));
        CHECK(formula_equal(got->formula, tr.formula));
        CHECK(got->sign == tr.sign);
      }
    }
  }
}

TEST_CASE("deletion round-trips through undelete") {
  Signature sig;
  const char* samples[] = {
      "A & C |- B | D",
      "~(B | (A -> A)) |- A | ~A",
      "~A & ~~B |- ~C | ~(B & ~A)",
      "(A & C) & D |-",
      "~((A -> B) | ~C) |- ~(D & ~E)",
      "|- (A | ~(B & C)) | ~~D",
  };
  for (const char* text : samples) {
    Sequent s = parse_sequent(text, sig);
    for (const PartInfo& p : enumerate_parts(s)) {
      DeleteResult d = delete_part(s, p.ref);
      Sequent back = undelete(d, p.formula);
      INFO(text << " deleting " << to_string(p.ref) << " gives '"
                << print_sequent(d.sequent) << "'");
      CHECK(sequent_equal(back, s));
    }
  }
}

TEST_CASE("attach absorption") {
  Signature sig;
  FormulaPtr a = parse_formula("A", sig);
  CHECK(print_formula(attach(nullptr, Conn::And, a)) == "A");
  CHECK(print_formula(attach(a, Conn::And, nullptr)) == "A");
  CHECK(print_formula(attach(a, Conn::Or, parse_formula("~B", sig))) ==
        "A | ~B");
}
