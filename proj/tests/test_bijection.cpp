// Transport between trees: path encoding, the tree index, route discovery,
// hand-checked object maps, and full bijection verification at small depth.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "finetree/bijection.hpp"
#include "finetree/errors.hpp"
#include "finetree/family.hpp"
#include "finetree/perm.hpp"

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

TEST_CASE("tree path text form") {
  TreePath path = {StepKey{Label{LabelKind::T, 0}, 1, 1},
                   StepKey{Label{LabelKind::Plain, 3}, 1, 2},
                   StepKey{Label{LabelKind::Plain, 2}, 2, 1}};
  CHECK(format_tree_path(path) == "T/3#2/2@2");
  CHECK(parse_tree_path("T/3#2/2@2") == path);
  CHECK(format_tree_path({}) == "-");
  CHECK(parse_tree_path("-").empty());
  // explicit defaults are accepted and drop out on the round trip
  CHECK(format_tree_path(parse_tree_path("T#1/3@1#2")) == "T/3#2");
  CHECK(parse_tree_path("A,2/B,3").size() == 2);
  CHECK_THROWS_AS(parse_tree_path("T/@2"), std::invalid_argument);
}

TEST_CASE("tree index encodes and decodes every node") {
  for (const std::string name : {"DER", "WORDS(0,2)", "H1", "H3IC"}) {
    TreeIndex index(builtin_family(name), 6);
    CHECK(index.encode(root_node(index.spec())).empty());
    CHECK(index.decode({}) == root_node(index.spec()));
    for (const std::vector<FamilyNode>& level : index.levels())
      for (const FamilyNode& node : level) {
        TreePath path = index.encode(node);
        CHECK(index.decode(path) == node);
        int span = 1;  // each step descends by its delay
        for (const StepKey& step : path) span += step.delay;
        CHECK(index.level_of(node) == span);
      }
  }
  TreeIndex der(builtin_family("DER"), 4);
  // 234561 lives one level past the indexed depth; 12345 has fixed points.
  CHECK_THROWS_AS(der.level_of(perm_node("234561")), std::invalid_argument);
  CHECK_THROWS_AS(der.level_of(perm_node("12345")), std::invalid_argument);
}

TEST_CASE("route discovery") {
  FamilySpec der = builtin_family("DER");
  FamilySpec w02 = word_family(FineParams{0, 2});
  FamilySpec w13 = word_family(FineParams{1, 3});
  FamilySpec h1 = builtin_family("H1");
  FamilySpec h1star = builtin_family("H1STAR");

  std::optional<TransportRoute> same = find_route(der, der);
  REQUIRE(same.has_value());
  CHECK(same->kind == TransportRoute::Kind::Tree);
  CHECK(same->shift_from == 0);
  CHECK(same->shift_to == 0);

  std::optional<TransportRoute> der_words = find_route(der, w02);
  REQUIRE(der_words.has_value());
  CHECK(der_words->kind == TransportRoute::Kind::Tree);
  CHECK(der_words->shift_from == 0);
  CHECK(der_words->shift_to == 0);

  std::optional<TransportRoute> h1_words = find_route(h1, w13);
  REQUIRE(h1_words.has_value());
  CHECK(h1_words->shift_from == 0);
  CHECK(h1_words->shift_to == 1);
  std::optional<TransportRoute> words_h1 = find_route(w13, h1);
  REQUIRE(words_h1.has_value());
  CHECK(words_h1->shift_from == 1);
  CHECK(words_h1->shift_to == 0);

  std::optional<TransportRoute> sym = find_route(h1, h1star);
  REQUIRE(sym.has_value());
  CHECK(sym->kind == TransportRoute::Kind::Symmetry);
  REQUIRE(sym->ops.size() == 1);
  CHECK(sym->ops[0] == SymOp::complement);

  CHECK(find_route(builtin_family("H2"), builtin_family("H4")).has_value());
  CHECK_FALSE(find_route(builtin_family("F1"), h1).has_value());
  CHECK_FALSE(find_route(builtin_family("H3"), builtin_family("H3IC"))
                  .has_value());
  CHECK_FALSE(find_route(w02, w13).has_value());
}

TEST_CASE("hand-checked transports") {
  FamilySpec der = builtin_family("DER");
  FamilySpec w02 = word_family(FineParams{0, 2});
  CHECK(transport(perm_node("231"), der, w02) == word_node(Word{1}));
  CHECK(transport(perm_node("312"), der, w02) == word_node(Word{2}));
  CHECK(transport(word_node(Word{1}), w02, der) == perm_node("231"));
  // the symmetry route is plain complementation
  FamilySpec h1 = builtin_family("H1");
  FamilySpec h1star = builtin_family("H1STAR");
  for (const Permutation& pi : enumerate_avoiders(5, h1.patterns)) {
    FamilyNode node;
    node.perm = pi;
    FamilyNode image = transport(node, h1, h1star);
    CHECK(image.perm == symmetry(pi, SymOp::complement));
  }
  CHECK_THROWS_AS(
      transport(perm_node("1"), builtin_family("F1"), h1),
      unsupported_pair_error);
}

TEST_CASE("transport round trips on whole trees") {
  struct Pair {
    std::string a;
    std::string b;
  };
  for (const Pair& pair : std::vector<Pair>{{"DER", "WORDS(0,2)"},
                                            {"F1", "F3"},
                                            {"F2", "WORDS(0,2)"},
                                            {"H1", "WORDS(1,3)"},
                                            {"H1STAR", "H2"},
                                            {"H3", "H4"},
                                            {"H3IC", "H5"}}) {
    FamilySpec from = builtin_family(pair.a);
    FamilySpec to = builtin_family(pair.b);
    std::optional<TransportRoute> route = find_route(from, to);
    REQUIRE(route.has_value());
    int depth = 5;
    TreeIndex from_index(from, depth + route->shift_from);
    TreeIndex to_index(to, depth + route->shift_to);
    std::optional<TransportRoute> back = find_route(to, from);
    REQUIRE(back.has_value());
    for (int level = 1; level <= depth; ++level) {
      const std::vector<FamilyNode>& nodes =
          from_index.levels()[static_cast<size_t>(level + route->shift_from) -
                              1];
      for (const FamilyNode& node : nodes) {
        FamilyNode image = transport_indexed(from_index, to_index, *route,
                                             node);
        FamilyNode again = transport_indexed(to_index, from_index, *back,
                                             image);
        CHECK(again == node);
      }
    }
  }
}

TEST_CASE("bijection verification") {
  BijectionReport rep =
      verify_bijection(builtin_family("DER"), word_family(FineParams{0, 2}),
                       6);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  REQUIRE(rep.levels.size() == 6);
  CHECK(rep.levels[5].count_from == 186);
  CHECK(rep.levels[5].count_from == rep.levels[5].count_to);
  CHECK(format_bijection_report(rep).find("result: PASS") !=
        std::string::npos);
  BijectionReport h_rep =
      verify_bijection(builtin_family("H1"), word_family(FineParams{1, 3}), 5);
  CHECK(h_rep.ok);
  BijectionReport sym_rep =
      verify_bijection(builtin_family("H1"), builtin_family("H1STAR"), 5);
  CHECK(sym_rep.ok);
}
