#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finetree/counting.hpp"

namespace finetree {

// A word is a finite sequence of nonnegative letters; words of interest
// start at 0 and never climb by more than 1 per step.
using Word = std::vector<int>;

// Text form: concatenated digits while every letter is <= 9 ("0012"),
// else comma-separated. Both forms are accepted when parsing.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// First letter 0, each step 0 <= w[i+1] <= w[i] + 1. Empty words fail.
bool validate_similarity_word(const Word& w);

// Similarity word with the (p, q) side conditions: for p >= 1 the word
// starts 0, 1, ..., p-1; every zero outside that forced prefix must be
// followed immediately by the letters 1, 2, ..., q-1, all inside the word.
// For p = 0 this applies to every zero, including the first letter.
bool validate_fine_word(const Word& w, const FineParams& pq);

// All valid words of length n in lexicographic order. n = 0 yields the
// empty list. Default length limit 14; past it throws limit_error unless
// unsafe is set.
std::vector<Word> enumerate_fine_words(int n, const FineParams& pq,
                                       bool unsafe = false);

// Reflexive relations on [n] determined by such words: letter w[y] links
// position y to the w[y] positions just before it.
struct SimilarityRelation {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // stored as (smaller, larger)

  bool operator==(const SimilarityRelation&) const = default;
};

SimilarityRelation relation_from_word(const Word& w);

// Inverse of relation_from_word; throws invalid_argument when the relation
// is not of that shape.
Word word_from_relation(const SimilarityRelation& rel);

// No element related only to itself in a removable way: every zero letter
// of the word is immediately followed by a 1. Equivalent to the (0, 2)
// word conditions.
bool is_nonsingular(const SimilarityRelation& rel);

// Text form: "n; x-y, x-y" with edges in increasing order ("3; 1-2, 2-3");
// a relation with no edges prints as "n;".
SimilarityRelation parse_relation(const std::string& text);
std::string format_relation(const SimilarityRelation& rel);

}  // namespace finetree
