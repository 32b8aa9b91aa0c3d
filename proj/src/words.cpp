#include "finetree/words.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "finetree/errors.hpp"

namespace finetree {

namespace {

constexpr int kWordLimit = 14;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& item, const char* what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(item, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
  }
  if (pos != item.size())
    throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
  return value;
}

}  // namespace

Word parse_word(const std::string& text) {
  std::string s = trim(text);
  Word w;
  if (s.empty()) return w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) throw std::invalid_argument("word: empty entry");
      int v = parse_int(item, "word");
      if (v < 0) throw std::invalid_argument("word: negative letter");
      w.push_back(v);
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("word: bad character in '" + s + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  bool compact = true;
  for (int x : w)
    if (x > 9) compact = false;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

bool validate_similarity_word(const Word& w) {
  if (w.empty()) return false;
  if (w[0] != 0) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > w[i - 1] + 1) return false;
  }
  return true;
}

bool validate_fine_word(const Word& w, const FineParams& pq) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (!validate_similarity_word(w)) return false;
  const int n = static_cast<int>(w.size());
  if (n < pq.p) return false;
  for (int i = 1; i <= pq.p; ++i) {
    if (w[static_cast<size_t>(i - 1)] != i - 1) return false;
  }
  for (int i = 1; i <= n; ++i) {
    if (w[static_cast<size_t>(i - 1)] != 0) continue;
    if (pq.p >= 1 && i <= pq.p) continue;  // forced prefix is exempt
    if (i + pq.q - 1 > n) return false;
    for (int j = 1; j <= pq.q - 1; ++j) {
      if (w[static_cast<size_t>(i + j - 1)] != j) return false;
    }
  }
  return true;
}

std::vector<Word> enumerate_fine_words(int n, const FineParams& pq,
                                       bool unsafe) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (n < 0) throw std::invalid_argument("enumerate_fine_words: n < 0");
  if (!unsafe && n > kWordLimit)
    throw limit_error("enumerate_fine_words: n = " + std::to_string(n) +
                      " past limit " + std::to_string(kWordLimit));
  std::vector<Word> out;
  if (n == 0 || n < pq.p) return out;
  Word cur;
  cur.reserve(static_cast<size_t>(n));
  // forced > 0 means the next letters are pinned to forced, forced+1, ...,
  // q-1: they complete the block a freshly placed zero demands.
  struct Rec {
    int n;
    FineParams pq;
    std::vector<Word>& out;
    Word& cur;
    void run(int forced) {
      const int pos = static_cast<int>(cur.size()) + 1;
      if (pos > n) {
        assert(forced == 0);
        out.push_back(cur);
        return;
      }
      if (pq.p >= 1 && pos <= pq.p) {
        cur.push_back(pos - 1);
        run(0);
        cur.pop_back();
        return;
      }
      if (forced > 0) {
        cur.push_back(forced);
        run(forced + 1 <= pq.q - 1 ? forced + 1 : 0);
        cur.pop_back();
        return;
      }
      const int hi = pos == 1 ? 0 : cur.back() + 1;
      for (int letter = 0; letter <= hi; ++letter) {
        if (letter == 0) {
          // A zero here opens a block of q-1 rising letters; skip it when
          // the block cannot fit.
          if (pos > n - pq.q + 1) continue;
          cur.push_back(0);
          run(pq.q >= 2 ? 1 : 0);
          cur.pop_back();
        } else {
          cur.push_back(letter);
          run(0);
          cur.pop_back();
        }
      }
    }
  } rec{n, pq, out, cur};
  rec.run(0);
  return out;
}

SimilarityRelation relation_from_word(const Word& w) {
  if (!validate_similarity_word(w))
    throw std::invalid_argument("relation_from_word: not a similarity word");
  SimilarityRelation rel;
  rel.n = static_cast<int>(w.size());
  for (int y = 1; y <= rel.n; ++y) {
    for (int j = 1; j <= w[static_cast<size_t>(y - 1)]; ++j) {
      rel.edges.insert({y - j, y});
    }
  }
  return rel;
}

Word word_from_relation(const SimilarityRelation& rel) {
  if (rel.n < 0) throw std::invalid_argument("relation: negative size");
  Word w(static_cast<size_t>(rel.n), 0);
  for (const auto& [x, y] : rel.edges) {
    if (x < 1 || y <= x || y > rel.n)
      throw std::invalid_argument("relation: edge outside 1 <= x < y <= n");
  }
  for (int y = 1; y <= rel.n; ++y) {
    int lowest = y;
    for (const auto& [a, b] : rel.edges) {
      if (b == y) lowest = std::min(lowest, a);
    }
    w[static_cast<size_t>(y - 1)] = y - lowest;
  }
  if (!validate_similarity_word(w) || !(relation_from_word(w) == rel))
    throw std::invalid_argument(
        "relation: not induced by any similarity word");
  return w;
}

bool is_nonsingular(const SimilarityRelation& rel) {
  Word w = word_from_relation(rel);
  return validate_fine_word(w, FineParams{0, 2});
}

SimilarityRelation parse_relation(const std::string& text) {
  std::string s = trim(text);
  size_t semi = s.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("relation: missing ';'");
  SimilarityRelation rel;
  rel.n = parse_int(trim(s.substr(0, semi)), "relation size");
  if (rel.n < 0) throw std::invalid_argument("relation: negative size");
  std::string rest = trim(s.substr(semi + 1));
  if (rest.empty()) return rel;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    size_t dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("relation: edge '" + item + "' lacks '-'");
    int x = parse_int(trim(item.substr(0, dash)), "relation edge");
    int y = parse_int(trim(item.substr(dash + 1)), "relation edge");
    if (x == y) throw std::invalid_argument("relation: loop edge");
    if (x > y) std::swap(x, y);
    if (x < 1 || y > rel.n)
      throw std::invalid_argument("relation: edge outside [1, n]");
    rel.edges.insert({x, y});
  }
  return rel;
}

std::string format_relation(const SimilarityRelation& rel) {
  std::string out = std::to_string(rel.n) + ";";
  bool first = true;
  for (const auto& [x, y] : rel.edges) {
    out += first ? " " : ", ";
    out += std::to_string(x) + "-" + std::to_string(y);
    first = false;
  }
  return out;
}

}  // namespace finetree
