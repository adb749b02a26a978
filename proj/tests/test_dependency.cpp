#include <doctest.h>

#include "pleo/dependency.hpp"
#include "pleo/readings.hpp"
#include "support.hpp"

using namespace pleo;
using pleo::testing::by_id;
using pleo::testing::load_data_treebank;

namespace {

DepTree dep_of(const char* bracketed) { return to_dependency(parse_bracketed(bracketed)[0]); }

}  // namespace

TEST_CASE("content heads: the verb heads the clause, the adjective its phrase") {
  auto d = dep_of("(S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ easy) (S (VP (TO to) (VP (VB see)))))) (. .))");
  REQUIRE(d.size() == 6);
  d.validate();
  CHECK(d[d.root()].token == "is");
  CHECK(d[0].head == 1);
  CHECK(d[2].head == 1);
  CHECK(d[2].label() == "ADJP");
  CHECK(d[4].head == 2);  // "see" under "easy"
  CHECK(d[3].head == 4);  // "to" under "see"
  CHECK(d[5].head == 1);
  CHECK(d.dominates(1, 3));
  CHECK_FALSE(d.dominates(3, 1));
  CHECK(d.dependents(1) == std::vector<std::size_t>{0, 2, 5});
}

TEST_CASE("maximal projection spans cover the constituent") {
  auto d = dep_of("(S (NP (DT The) (NN dog)) (VP (VBD barked)))");
  CHECK(d[1].label() == "NP");
  CHECK(d[1].span_begin == 0);
  CHECK(d[1].span_end == 2);
  CHECK(d[2].projects("S"));
  CHECK(d[2].projects("VP"));
  CHECK_FALSE(d[2].projects("NP"));
}

TEST_CASE("every converted tree passes validation") {
  for (const char* stem : {"pinned", "case_study", "mini_treebank"}) {
    for (const auto& s : load_data_treebank(stem)) {
      CAPTURE(s.id);
      CHECK_NOTHROW(s.dep->validate());
      CHECK(s.dep->size() == s.tokens.size());
      std::size_t roots = 0;
      for (const auto& n : s.dep->nodes()) roots += n.head < 0;
      CHECK(roots == 1);
    }
  }
}

TEST_CASE("validate rejects cycles and multiple roots") {
  std::vector<DepNode> two_roots(2);
  two_roots[0].index = 0;
  two_roots[1].index = 1;
  CHECK_THROWS_AS(DepTree(two_roots).validate(), std::logic_error);

  std::vector<DepNode> cyc(3);
  for (std::size_t i = 0; i < 3; ++i) cyc[i].index = i;
  cyc[0].head = 1;
  cyc[1].head = 0;
  cyc[2].head = -1;
  CHECK_THROWS_AS(DepTree(cyc).validate(), std::logic_error);
}

TEST_CASE("custom head tables are honoured") {
  auto table = HeadTable::parse("# toy\nNP left:DT\n* left:\n");
  CHECK(table.has_rule("NP"));
  auto d = to_dependency(parse_bracketed("(S (NP (DT the) (NN dog)) (VP (VBD ran)))")[0], table);
  // "the" heads the NP, and through it the clause
  CHECK(d[0].projects("NP"));
  CHECK(d[0].projects("S"));
  CHECK(d[1].head == 0);
}

TEST_CASE("grammatical role of it") {
  auto pinned = load_data_treebank("pinned");
  auto role_of = [&](const std::string& id, std::size_t tok) {
    for (const auto& i : find_it_instances(*by_id(pinned, id).dep, id))
      if (i.token_index == tok) return i.role;
    FAIL("no it at token");
    return GrammaticalRole::Subject;
  };
  CHECK(role_of("0006:002", 5) == GrammaticalRole::Subject);
  CHECK(role_of("1286:054", 4) == GrammaticalRole::PrepositionObject);
  CHECK(role_of("0114:007", 2) == GrammaticalRole::VerbObject);
}

TEST_CASE("possessive its is not an instance") {
  auto d = std::make_shared<const DepTree>(
      dep_of("(S (NP (PRP$ Its) (NN price)) (VP (VBD fell)) (. .))"));
  CHECK(find_it_instances(*d).empty());
}

TEST_CASE("case-study readings") {
  auto cs = load_data_treebank("case_study");
  SUBCASE("object-complement construction gets a virtual copula") {
    const auto& s = by_id(cs, "0231:015");
    auto inst = find_it_instances(*s.dep, s.id);
    REQUIRE(inst.size() == 1);
    CHECK(inst[0].token_index == 11);
    auto rs = generate_readings(inst[0], s.dep);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].virtual_copula);
    CHECK(rs[0].matrix_verb_tag() == "VBX");
    CHECK(rs[0].matrix_verb_form() == "be");
    CHECK(rs[0].copular());
    REQUIRE(rs[0].matrix_object);
    CHECK(s.tokens[*rs[0].matrix_object] == "difficult");
    REQUIRE(rs[0].subordinate_clause);
    CHECK(s.tokens[*rs[0].subordinate_clause] == "read");
  }
  SUBCASE("a raising verb yields one reading per verb in the chain") {
    const auto& s = by_id(cs, "0331:033");
    auto inst = find_it_instances(*s.dep, s.id);
    REQUIRE(inst.size() == 1);
    auto rs = generate_readings(inst[0], s.dep);
    REQUIRE(rs.size() == 2);
    CHECK(s.tokens[rs[0].matrix_verb] == "appears");
    CHECK_FALSE(rs[0].copular());
    CHECK(s.tokens[*rs[0].subordinate_clause] == "be");
    CHECK(s.tokens[rs[1].matrix_verb] == "be");
    CHECK(rs[1].copular());
    CHECK(s.tokens[*rs[1].matrix_object] == "sort");
    CHECK(s.tokens[*rs[1].subordinate_clause] == "makes");
  }
}

TEST_CASE("an it with no verb above it has no readings") {
  auto d = std::make_shared<const DepTree>(dep_of("(NP (NP (PRP it)) (CC and) (NP (NNS others)))"));
  auto inst = find_it_instances(*d);
  REQUIRE(inst.size() == 1);
  CHECK_THROWS_AS(generate_readings(inst[0], d), NoGoverningVerb);
}

TEST_CASE("property: conversion conserves tokens and is deterministic") {
  for (const char* stem : {"pinned", "case_study", "mini_treebank"}) {
    for (const auto& s : load_data_treebank(stem)) {
      CAPTURE(s.id);
      auto leaves = s.tree.leaves();
      REQUIRE(leaves.size() == s.dep->size());
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        CHECK((*s.dep)[i].token == leaves[i].first);
        CHECK((*s.dep)[i].tag == leaves[i].second);
      }
      auto again = to_dependency(s.tree);
      for (std::size_t i = 0; i < again.size(); ++i) {
        CHECK(again[i].head == (*s.dep)[i].head);
        CHECK(again[i].projections == (*s.dep)[i].projections);
      }
    }
  }
}

TEST_CASE("property: readings run outermost verb first down the chain") {
  for (const char* stem : {"pinned", "case_study", "mini_treebank"}) {
    for (const auto& s : load_data_treebank(stem)) {
      for (const auto& inst : find_it_instances(*s.dep, s.id)) {
        std::vector<Reading> rs;
        try {
          rs = generate_readings(inst, s.dep);
        } catch (const NoGoverningVerb&) {
          continue;
        }
        auto again = generate_readings(inst, s.dep);
        REQUIRE(again.size() == rs.size());
        for (std::size_t k = 0; k < rs.size(); ++k) {
          CAPTURE(s.id);
          CHECK(again[k].matrix_verb == rs[k].matrix_verb);
          CHECK(again[k].subordinate_clause == rs[k].subordinate_clause);
          if (k + 1 < rs.size()) {
            const auto& d = *s.dep;
            const auto next = rs[k + 1].matrix_verb;
            CHECK(static_cast<std::size_t>(d[next].head) == rs[k].matrix_verb);
          }
        }
      }
    }
  }
}
