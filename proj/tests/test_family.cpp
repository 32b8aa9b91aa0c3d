// Families: roots, labels, children, fathers, level enumeration, and the
// full succession verification, pinned against hand-checked examples and
// the brute-force level oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "finetree/family.hpp"
#include "finetree/perm.hpp"
#include "finetree/words.hpp"
#include "oracles.hpp"

using namespace finetree;

namespace {

FamilyNode perm_node(const std::string& text) {
  FamilyNode n;
  n.perm = parse_permutation(text);
  return n;
}

FamilyNode word_node(const Word& w) {
  FamilyNode n;
  n.word = w;
  return n;
}

}  // namespace

TEST_CASE("builtin family registry") {
  std::vector<std::string> names = builtin_family_names();
  CHECK(names.size() == 11);
  for (const std::string& name : names) {
    FamilySpec spec = builtin_family(name);
    CHECK(spec.name == name);
    CHECK(spec.system.name == name);
  }
  CHECK(builtin_family("f1").kind == FamilyKind::Pattern);
  CHECK(builtin_family("DER").kind == FamilyKind::Derangement);
  FamilySpec w02 = word_family(FineParams{0, 2});
  CHECK(w02.name == "WORDS(0,2)");
  CHECK(w02.kind == FamilyKind::WordTree);
  CHECK(w02.level_shift == 1);
  CHECK(word_family(FineParams{1, 3}).level_shift == 0);
  CHECK(word_family(FineParams{2, 3}).level_shift == 1);
  CHECK(builtin_family("WORDS(1,3)").word_params == FineParams{1, 3});
  CHECK_THROWS_AS(builtin_family("F7"), std::invalid_argument);
}

TEST_CASE("roots and their labels") {
  FamilySpec f1 = builtin_family("F1");
  CHECK(root_node(f1).perm == parse_permutation("1"));
  CHECK(label_of(root_node(f1), f1) == Label{LabelKind::Plain, 2});
  FamilySpec h1 = builtin_family("H1");
  CHECK(label_of(root_node(h1), h1) == Label{LabelKind::T, 0});
  FamilySpec der = builtin_family("DER");
  CHECK(root_node(der).perm == parse_permutation("21"));
  CHECK(label_of(root_node(der), der) == Label{LabelKind::Plain, 2});
  FamilySpec h1star = builtin_family("H1STAR");
  CHECK(label_of(root_node(h1star), h1star) == Label{LabelKind::A, 2});
  FamilySpec w02 = word_family(FineParams{0, 2});
  CHECK(root_node(w02).word.empty());
  CHECK(label_of(root_node(w02), w02) == Label{LabelKind::Plain, 2});
  FamilySpec w13 = word_family(FineParams{1, 3});
  CHECK(root_node(w13).word == Word{0});
  CHECK(label_of(root_node(w13), w13) == Label{LabelKind::Plain, 1});
}

TEST_CASE("active sites and insertion") {
  PatternSet single;
  single.patterns = {parse_permutation("4312")};
  CHECK(active_sites(parse_permutation("326415"), single) ==
        std::vector<int>{4, 5, 6, 7});
  CHECK(active_sites(parse_permutation("1"), builtin_family("F1").patterns) ==
        std::vector<int>{1, 2});
  CHECK(active_sites(Permutation{}, single) == std::vector<int>{1});
  CHECK(insert_at(parse_permutation("231"), 2) == parse_permutation("2431"));
  CHECK(insert_at(parse_permutation("231"), 4) == parse_permutation("2314"));
  CHECK(insert_at(Permutation{}, 1) == parse_permutation("1"));
}

TEST_CASE("hand-checked labels") {
  FamilySpec h1star = builtin_family("H1STAR");
  CHECK(label_of(perm_node("3412"), h1star) == Label{LabelKind::A, 1});
  FamilySpec f1 = builtin_family("F1");
  CHECK(label_of(perm_node("12"), f1) == Label{LabelKind::T, 0});
  CHECK(label_of(perm_node("21"), f1) == Label{LabelKind::Plain, 3});
  FamilySpec der = builtin_family("DER");
  CHECK(label_of(perm_node("231"), der) == Label{LabelKind::T, 0});
  CHECK(label_of(perm_node("312"), der) == Label{LabelKind::Plain, 3});
}

TEST_CASE("hand-checked children") {
  FamilySpec der = builtin_family("DER");
  std::vector<FamilyChild> kids = children_of(perm_node("21"), der);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].node.perm == parse_permutation("231"));
  CHECK(kids[0].spec.label == Label{LabelKind::T, 0});
  CHECK(kids[1].node.perm == parse_permutation("312"));
  CHECK(kids[1].spec.label == Label{LabelKind::Plain, 3});
  std::vector<FamilyChild> t_kids = children_of(perm_node("231"), der);
  REQUIRE(t_kids.size() == 3);
  CHECK(t_kids[0].node.perm == parse_permutation("2341"));
  CHECK(t_kids[0].spec.label == Label{LabelKind::T, 0});
  CHECK(t_kids[1].node.perm == parse_permutation("2143"));
  CHECK(t_kids[1].spec.label == Label{LabelKind::Plain, 2});
  CHECK(t_kids[2].node.perm == parse_permutation("2413"));
  CHECK(t_kids[2].spec.label == Label{LabelKind::Plain, 3});
  for (const FamilyChild& k : kids) CHECK(k.spec.delay == 1);
  // The H1 tree's T nodes get a delayed third child two levels down.
  FamilySpec h1 = builtin_family("H1");
  std::vector<FamilyChild> h_kids = children_of(root_node(h1), h1);
  REQUIRE(h_kids.size() == 3);
  CHECK(h_kids[0].node.perm == parse_permutation("21"));
  CHECK(h_kids[0].spec == ChildSpec{Label{LabelKind::T, 0}, 1});
  CHECK(h_kids[1].node.perm == parse_permutation("12"));
  CHECK(h_kids[1].spec == ChildSpec{Label{LabelKind::Plain, 3}, 1});
  CHECK(h_kids[2].node.perm == parse_permutation("213"));
  CHECK(h_kids[2].spec == ChildSpec{Label{LabelKind::Plain, 3}, 2});
}

TEST_CASE("word tree structure") {
  FamilySpec w02 = word_family(FineParams{0, 2});
  CHECK(word_label(Word{}, w02.word_params) == Label{LabelKind::Plain, 2});
  CHECK(word_label(Word{1}, w02.word_params) == Label{LabelKind::T, 0});
  CHECK(word_label(Word{1, 2}, w02.word_params) == Label{LabelKind::Plain, 3});
  // the jump shape: suffix equal to the block with a valid jump father
  CHECK(word_label(Word{0, 1}, w02.word_params) == Label{LabelKind::Plain, 2});
  CHECK(normalize_p0_word(parse_word("011"), w02.word_params) == Word{1});
  CHECK(denormalize_p0_word(Word{1}, w02.word_params) == parse_word("011"));
  CHECK(denormalize_p0_word(Word{}, w02.word_params) == parse_word("01"));
  FamilySpec w13 = word_family(FineParams{1, 3});
  CHECK(normalize_p0_word(parse_word("0012"), w13.word_params) ==
        parse_word("0012"));  // p >= 1 keeps the full word
  CHECK(tree_word_valid(Word{}, w02.word_params));
  CHECK(tree_word_valid(Word{1, 1}, w02.word_params));
  CHECK_FALSE(tree_word_valid(Word{3}, w02.word_params));
  std::vector<std::vector<FamilyNode>> levels = family_levels(w02, 3);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0] == std::vector<FamilyNode>{word_node(Word{})});
  CHECK(levels[1] ==
        std::vector<FamilyNode>{word_node(Word{1}), word_node(Word{2})});
  CHECK(levels[2] == std::vector<FamilyNode>{
                         word_node(Word{1, 1}), word_node(Word{1, 2}),
                         word_node(Word{0, 1}), word_node(Word{2, 1}),
                         word_node(Word{2, 2}), word_node(Word{2, 3})});
}

TEST_CASE("levels match direct enumeration") {
  for (const std::string name : {"F1", "DER", "WORDS(0,2)", "WORDS(1,3)"}) {
    FamilySpec spec = builtin_family(name);
    std::vector<std::vector<FamilyNode>> levels = family_levels(spec, 6);
    for (int level = 1; level <= 6; ++level) {
      std::vector<FamilyNode> tree = levels[static_cast<size_t>(level) - 1];
      std::vector<FamilyNode> direct = level_oracle(spec, level);
      std::sort(tree.begin(), tree.end());
      std::sort(direct.begin(), direct.end());
      CHECK(tree == direct);
      CHECK(std::adjacent_find(tree.begin(), tree.end()) == tree.end());
    }
  }
}

TEST_CASE("fathers invert children") {
  for (const std::string name : {"F1", "F2", "F3", "DER", "H1", "H1STAR",
                                  "H2", "H3", "H4", "H3IC", "H5",
                                  "WORDS(0,2)", "WORDS(1,3)", "WORDS(2,3)"}) {
    FamilySpec spec = builtin_family(name);
    std::vector<std::vector<FamilyNode>> levels = family_levels(spec, 5);
    for (const std::vector<FamilyNode>& level : levels)
      for (const FamilyNode& node : level)
        for (const FamilyChild& child : children_of(node, spec)) {
          FamilyFather father = father_of(child.node, spec);
          CHECK(father.node == node);
          CHECK(father.delay == child.spec.delay);
        }
  }
}

TEST_CASE("verify_family accepts the builtin families") {
  for (const std::string name : {"F1", "H1", "H3IC"}) {
    FamilyReport rep = verify_family(builtin_family(name), 5);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    CHECK(format_family_report(rep).find("result: PASS") !=
          std::string::npos);
  }
  FamilyReport words = verify_family(word_family(FineParams{0, 2}), 7);
  CHECK(words.ok);
  CHECK(words.violations.empty());
  FamilyReport der = verify_family(builtin_family("DER"), 6);
  CHECK(der.ok);
  REQUIRE(der.levels.size() == 6);
  CHECK(der.levels[5].observed == 186);  // |D_7(321)| at tree level 6
  CHECK(der.levels[5].ok);
}

TEST_CASE("node text forms") {
  FamilySpec der = builtin_family("DER");
  CHECK(format_node(perm_node("2341"), der) == "2341");
  CHECK(parse_node("2341", der) == perm_node("2341"));
  CHECK_THROWS_AS(parse_node("321", der), std::invalid_argument);   // not one
  CHECK_THROWS_AS(parse_node("1234", der), std::invalid_argument);  // fixed
  FamilySpec w02 = word_family(FineParams{0, 2});
  CHECK(format_node(word_node(Word{}), w02) == "e");
  CHECK(parse_node("e", w02) == word_node(Word{}));
  CHECK(format_node(word_node(Word{1, 2}), w02) == "12");
  CHECK(parse_node("12", w02) == word_node(Word{1, 2}));
  CHECK_THROWS_AS(parse_node("3", w02), std::invalid_argument);
  FamilySpec f1 = builtin_family("F1");
  CHECK(parse_node("1", f1) == perm_node("1"));
  CHECK_THROWS_AS(parse_node("1324", f1), std::invalid_argument);
}
