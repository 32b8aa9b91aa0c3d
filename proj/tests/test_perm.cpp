// Permutations: parsing, containment, builtin pattern sets, symmetries,
// and the avoider/derangement enumerations against subset-search oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "finetree/counting.hpp"
#include "finetree/errors.hpp"
#include "finetree/perm.hpp"
#include "oracles.hpp"

using namespace finetree;

TEST_CASE("parse and format permutations") {
  CHECK(format_permutation(parse_permutation("2413")) == "2413");
  CHECK(parse_permutation("2413").v == std::vector<int>{2, 4, 1, 3});
  CHECK(parse_permutation("2,4,1,3").v == std::vector<int>{2, 4, 1, 3});
  Permutation big({10, 3, 1, 2, 4, 5, 6, 7, 8, 9});
  CHECK(format_permutation(big) == "10,3,1,2,4,5,6,7,8,9");
  CHECK(parse_permutation(format_permutation(big)) == big);
  CHECK(format_permutation(Permutation{}) == "");
  CHECK(parse_permutation("") == Permutation{});
  CHECK_THROWS_AS(parse_permutation("1224"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("130"), std::invalid_argument);
}

TEST_CASE("positions and values") {
  Permutation pi = parse_permutation("2413");
  CHECK(pi.at(1) == 2);
  CHECK(pi.at(4) == 3);
  CHECK(pi.position_of(4) == 2);
  CHECK(pi.position_of(7) == 0);
}

TEST_CASE("containment against subset search") {
  CHECK(contains(parse_permutation("2413"), parse_permutation("231")));
  CHECK_FALSE(contains(parse_permutation("2413"), parse_permutation("321")));
  std::vector<Permutation> patterns = {
      parse_permutation("123"), parse_permutation("321"),
      parse_permutation("132"), parse_permutation("2413"),
      parse_permutation("3142")};
  std::vector<int> v(6);
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation pi(v);
    for (const Permutation& tau : patterns)
      CHECK(contains(pi, tau) == oracle::contains_naive(pi.v, tau.v));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("builtin pattern sets") {
  std::vector<std::string> names = builtin_pattern_set_names();
  CHECK(names.size() == 10);
  for (const std::string& name : names) {
    PatternSet set = builtin_pattern_set(name);
    CHECK(set.name == name);
    CHECK(set.patterns.size() == 6);
    for (const Permutation& tau : set.patterns) CHECK(tau.size() == 4);
  }
  PatternSet f1 = builtin_pattern_set("F1");
  PatternSet f1_inline =
      parse_pattern_set("1234;1243;1324;2134;2314;3124");
  CHECK(same_pattern_set(f1, f1_inline));
  CHECK(f1_inline.name.empty());
  CHECK(same_pattern_set(builtin_pattern_set("h3ic"),
                         parse_pattern_set("H3IC")));
  CHECK_FALSE(same_pattern_set(builtin_pattern_set("F1"),
                               builtin_pattern_set("F2")));
  CHECK_THROWS_AS(builtin_pattern_set("F9"), std::invalid_argument);
}

TEST_CASE("symmetries of the square") {
  Permutation pi = parse_permutation("1423");
  CHECK(symmetry(pi, SymOp::mirror) == parse_permutation("3241"));
  CHECK(symmetry(pi, SymOp::complement) == parse_permutation("4132"));
  CHECK(symmetry(pi, SymOp::inverse) == parse_permutation("1342"));
  std::vector<int> v(5);
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation s(v);
    for (SymOp op : {SymOp::mirror, SymOp::complement, SymOp::inverse})
      CHECK(symmetry(symmetry(s, op), op) == s);
    // inverse is an anti-automorphism for composition with c and m
    CHECK(symmetry(s, std::vector<SymOp>{SymOp::mirror, SymOp::complement}) ==
          symmetry(s, std::vector<SymOp>{SymOp::complement, SymOp::mirror}));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("symmetry images of builtin sets") {
  // The H1 and H1STAR sets are complements of each other, and H3IC is the
  // inverse of the complement of H3. Both facts drive the registered maps.
  CHECK(same_pattern_set(
      symmetry_set(builtin_pattern_set("H1"), {SymOp::complement}),
      builtin_pattern_set("H1STAR")));
  CHECK(same_pattern_set(
      symmetry_set(builtin_pattern_set("H3"),
                   {SymOp::complement, SymOp::inverse}),
      builtin_pattern_set("H3IC")));
  CHECK_FALSE(same_pattern_set(
      symmetry_set(builtin_pattern_set("H1"), {SymOp::mirror}),
      builtin_pattern_set("H1STAR")));
}

TEST_CASE("avoider enumeration against the filter oracle") {
  for (const std::string name : {"F1", "H1", "H3IC"}) {
    PatternSet set = builtin_pattern_set(name);
    for (int n = 0; n <= 6; ++n) {
      std::vector<Permutation> got = enumerate_avoiders(n, set);
      std::vector<Permutation> want =
          oracle::avoiders_by_filter(n, set.patterns);
      CHECK(got == want);
    }
  }
  // Spot counts at n = 7 against the closed forms.
  CHECK(BigInt(enumerate_avoiders(7, builtin_pattern_set("F2")).size()) ==
        fine(7));
  CHECK(BigInt(enumerate_avoiders(7, builtin_pattern_set("H4")).size()) ==
        count_formula(8, FineParams{1, 3}));
}

TEST_CASE("avoider enumeration is lexicographic and duplicate-free") {
  std::vector<Permutation> got =
      enumerate_avoiders(6, builtin_pattern_set("F3"));
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
}

TEST_CASE("derangements avoiding 321") {
  CHECK(is_derangement(parse_permutation("231")));
  CHECK_FALSE(is_derangement(parse_permutation("132")));
  for (int n = 0; n <= 7; ++n)
    CHECK(enumerate_derangements_avoiding_321(n) ==
          oracle::derangements321_by_filter(n));
  std::vector<std::string> d3;
  for (const Permutation& pi : enumerate_derangements_avoiding_321(3))
    d3.push_back(format_permutation(pi));
  CHECK(d3 == std::vector<std::string>{"231", "312"});
  std::vector<std::string> d4;
  for (const Permutation& pi : enumerate_derangements_avoiding_321(4))
    d4.push_back(format_permutation(pi));
  CHECK(d4 == std::vector<std::string>{"2143", "2341", "2413", "3142", "3412",
                                       "4123"});
  std::vector<long long> sizes = {1, 2, 6, 18, 57, 186, 622, 2120};
  for (int n = 2; n <= 9; ++n)
    CHECK(BigInt(enumerate_derangements_avoiding_321(n).size()) ==
          sizes[static_cast<size_t>(n) - 2]);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_avoiders(10, builtin_pattern_set("F1")),
                  limit_error);
  CHECK_THROWS_AS(enumerate_derangements_avoiding_321(11), limit_error);
  CHECK_NOTHROW(enumerate_avoiders(9, builtin_pattern_set("F1")));
}
