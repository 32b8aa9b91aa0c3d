// Dyck paths: validation, the word/path coding, and the first-rise
// reshuffling transform, including its injectivity and the resulting
// first-rise distribution against ballot counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "finetree/counting.hpp"
#include "finetree/paths.hpp"
#include "finetree/words.hpp"
#include "oracles.hpp"

using namespace finetree;

TEST_CASE("parse, format, validate") {
  CHECK(parse_path("uuddud").steps == "UUDDUD");
  CHECK(format_path(DyckPath{"UUDD"}) == "UUDD");
  CHECK(validate_path(DyckPath{"UUDD"}));
  CHECK(validate_path(DyckPath{""}));
  CHECK_FALSE(validate_path(DyckPath{"UDDU"}));
  CHECK_FALSE(validate_path(DyckPath{"UUD"}));
  CHECK_THROWS_AS(parse_path("UXD"), std::invalid_argument);
  CHECK(DyckPath{"UUDUDD"}.semilength() == 3);
}

TEST_CASE("first rise and components") {
  CHECK(first_rise(DyckPath{""}) == 0);
  CHECK(first_rise(DyckPath{"UDUD"}) == 1);
  CHECK(first_rise(DyckPath{"UUUDDD"}) == 3);
  std::vector<DyckPath> comps = path_components(DyckPath{"UDUUDD"});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].steps == "UD");
  CHECK(comps[1].steps == "UUDD");
  // Components concatenate back, each touching the axis only at its ends.
  for (const std::string& s : oracle::all_dyck_paths(7)) {
    std::string joined;
    for (const DyckPath& c : path_components(DyckPath{s})) {
      CHECK(oracle::path_first_rise(c.steps) >= 1);
      joined += c.steps;
    }
    CHECK(joined == s);
  }
}

TEST_CASE("word and path coding") {
  CHECK(word_to_path(parse_word("011")).steps == "UUDUDD");
  CHECK(word_to_path(parse_word("012")).steps == "UUUDDD");
  CHECK(word_to_path(parse_word("0012")).steps == "UDUUUDDD");
  for (int n = 1; n <= 9; ++n) {
    std::vector<Word> all;
    Word cur;
    oracle::sim_rec(n, cur, all);
    for (const Word& w : all) {
      DyckPath path = word_to_path(w);
      CHECK(validate_path(path));
      CHECK(path.semilength() == n);
      CHECK(path_to_word(path) == w);
    }
    // and the other way round, over the independent path listing
    for (const std::string& s : oracle::all_dyck_paths(n))
      CHECK(word_to_path(path_to_word(DyckPath{s})).steps == s);
  }
}

TEST_CASE("strict decoding checks the word class") {
  FineParams pq{0, 2};
  CHECK(path_to_word(parse_path("UUDUDD"), pq) == parse_word("011"));
  CHECK_THROWS_AS(path_to_word(parse_path("UDUD"), pq),
                  std::invalid_argument);
}

TEST_CASE("first-rise transform round trips and stays injective") {
  for (const FineParams& pq : std::vector<FineParams>{{0, 2}, {1, 3}}) {
    for (int n = 1; n <= 9; ++n) {
      std::set<std::string> images;
      for (const Word& w : enumerate_fine_words(n, pq)) {
        DyckPath path = word_to_path(w);
        DyckPath moved = first_rise_transform(path, pq);
        CHECK(validate_path(moved));
        CHECK(moved.semilength() == n);
        int f = first_rise(moved);
        CHECK((f - pq.p) % pq.q == 0);
        CHECK(first_rise_untransform(moved, pq) == path);
        images.insert(moved.steps);
      }
      CHECK(images.size() == enumerate_fine_words(n, pq).size());
    }
  }
}

TEST_CASE("first-rise distribution matches ballot counts") {
  for (const FineParams& pq : std::vector<FineParams>{{0, 2}, {1, 3}}) {
    for (int n = 1; n <= 9; ++n) {
      std::map<int, BigInt> hist;
      for (const Word& w : enumerate_fine_words(n, pq))
        ++hist[first_rise(first_rise_transform(word_to_path(w), pq))];
      for (int k = 0; pq.p + k * pq.q <= n; ++k) {
        int rise = pq.p + k * pq.q;
        BigInt got = hist.count(rise) ? hist[rise] : BigInt(0);
        if (rise == 0) {
          CHECK(got == 0);  // no nonempty path has an empty first rise
        } else {
          CHECK(got == ballot(n, rise));
          CHECK(got == oracle::ballot_by_paths(n, rise));
        }
      }
    }
  }
}

TEST_CASE("transform rejects paths outside its domain") {
  FineParams pq{0, 2};
  // UD opens with a rise of 1 < q, so the reshuffle has nowhere to put it.
  CHECK_THROWS_AS(first_rise_transform(parse_path("UD"), pq),
                  std::invalid_argument);
  // Untransform wants a first rise of the form kq + p.
  CHECK_THROWS_AS(first_rise_untransform(parse_path("UDUD"), pq),
                  std::invalid_argument);
  CHECK_THROWS_AS(first_rise_untransform(parse_path("UUDD"), FineParams{1, 3}),
                  std::invalid_argument);
}
