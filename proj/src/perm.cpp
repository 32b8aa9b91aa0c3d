#include "finetree/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "finetree/errors.hpp"

namespace finetree {

namespace {

constexpr int kAvoiderLimit = 9;
constexpr int kDerangementLimit = 10;

// Tries to embed tau[ti..] into w[wi..] consistently with the letters chosen
// so far. Patterns here have length <= 4, so the exhaustive scan is cheap.
bool embed(const std::vector<int>& w, const std::vector<int>& tau, size_t wi,
           size_t ti, std::vector<int>& chosen) {
  if (ti == tau.size()) return true;
  size_t remaining = tau.size() - ti;
  for (size_t i = wi; i + remaining <= w.size(); ++i) {
    bool consistent = true;
    for (size_t k = 0; k < ti; ++k) {
      if ((chosen[k] < w[i]) != (tau[k] < tau[ti])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen.push_back(w[i]);
    if (embed(w, tau, i + 1, ti + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Does some occurrence of tau end exactly at the last letter of w? Used by
// the enumerators: appending a letter can only create occurrences that end
// at it, so this is the whole incremental check.
bool occurrence_at_end(const std::vector<int>& w, const std::vector<int>& tau) {
  if (tau.empty() || w.size() < tau.size()) return false;
  const int last = w.back();
  const size_t m = tau.size();
  std::vector<int> chosen;
  // Embed tau[0..m-2] into w[0..n-2], then check the final letter.
  struct Rec {
    const std::vector<int>& w;
    const std::vector<int>& tau;
    int last;
    size_t m;
    bool run(size_t wi, size_t ti, std::vector<int>& chosen) {
      if (ti == m - 1) {
        for (size_t k = 0; k < ti; ++k)
          if ((chosen[k] < last) != (tau[k] < tau[m - 1])) return false;
        return true;
      }
      size_t remaining = (m - 1) - ti;
      for (size_t i = wi; i + remaining <= w.size() - 1; ++i) {
        bool consistent = true;
        for (size_t k = 0; k < ti; ++k) {
          if ((chosen[k] < w[i]) != (tau[k] < tau[ti])) {
            consistent = false;
            break;
          }
        }
        if (!consistent) continue;
        chosen.push_back(w[i]);
        if (run(i + 1, ti + 1, chosen)) return true;
        chosen.pop_back();
      }
      return false;
    }
  } rec{w, tau, last, m};
  return rec.run(0, 0, chosen);
}

bool creates_any_at_end(const std::vector<int>& w, const PatternSet& set) {
  for (const auto& tau : set.patterns)
    if (occurrence_at_end(w, tau.v)) return true;
  return false;
}

const std::map<std::string, std::vector<std::string>>& builtin_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"F1", {"1234", "1243", "1324", "2134", "2314", "3124"}},
      {"F2", {"1324", "2134", "2143", "2314", "3124", "3214"}},
      {"F3", {"1342", "2341", "2413", "2431", "3142", "3241"}},
      {"H1", {"1324", "2314", "2413", "3124", "3142", "3214"}},
      {"H1STAR", {"2341", "2413", "2431", "4231", "3142", "3241"}},
      {"H2", {"1234", "1243", "1324", "1423", "2314", "3124"}},
      {"H3", {"2341", "2413", "2431", "3412", "3421", "4231"}},
      {"H4", {"2134", "2143", "2314", "3124", "3214", "4213"}},
      {"H5", {"1234", "1243", "1324", "1423", "2134", "3124"}},
      {"H3IC", {"1324", "2134", "2143", "2314", "2413", "3214"}},
  };
  return table;
}

std::string to_upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

int Permutation::position_of(int value) const {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == value) return static_cast<int>(i) + 1;
  return 0;
}

bool is_valid_permutation(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : pi.v) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

Permutation parse_permutation(const std::string& text) {
  std::string s = trim(text);
  Permutation pi;
  if (s.empty()) return pi;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) throw std::invalid_argument("permutation: empty entry");
      size_t pos = 0;
      int value = std::stoi(item, &pos);
      if (pos != item.size())
        throw std::invalid_argument("permutation: bad entry '" + item + "'");
      pi.v.push_back(value);
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("permutation: bad character in '" + s + "'");
      pi.v.push_back(c - '0');
    }
  }
  if (!is_valid_permutation(pi))
    throw std::invalid_argument("permutation: '" + s +
                                "' is not a rearrangement of 1..n");
  return pi;
}

std::string format_permutation(const Permutation& pi) {
  std::string out;
  const bool compact = pi.size() <= 9;
  for (int i = 0; i < pi.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(pi.at(i + 1));
  }
  return out;
}

bool contains(const Permutation& pi, const Permutation& tau) {
  if (tau.size() == 0) return true;
  if (pi.size() < tau.size()) return false;
  std::vector<int> chosen;
  return embed(pi.v, tau.v, 0, 0, chosen);
}

bool avoids_all(const Permutation& pi, const PatternSet& set) {
  for (const auto& tau : set.patterns)
    if (contains(pi, tau)) return false;
  return true;
}

PatternSet builtin_pattern_set(const std::string& name) {
  const auto& table = builtin_table();
  auto it = table.find(to_upper(trim(name)));
  if (it == table.end())
    throw std::invalid_argument("unknown pattern set '" + name + "'");
  PatternSet set;
  set.name = it->first;
  for (const auto& s : it->second) set.patterns.push_back(parse_permutation(s));
  return set;
}

std::vector<std::string> builtin_pattern_set_names() {
  std::vector<std::string> names;
  for (const auto& [name, patterns] : builtin_table()) names.push_back(name);
  return names;
}

PatternSet parse_pattern_set(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty pattern set");
  if (builtin_table().count(to_upper(s))) return builtin_pattern_set(s);
  PatternSet set;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    set.patterns.push_back(parse_permutation(item));
  }
  if (set.patterns.empty()) throw std::invalid_argument("empty pattern set");
  return set;
}

std::string format_pattern_set(const PatternSet& set) {
  if (!set.name.empty()) return set.name;
  std::string out;
  for (size_t i = 0; i < set.patterns.size(); ++i) {
    if (i) out += ";";
    out += format_permutation(set.patterns[i]);
  }
  return out;
}

bool same_pattern_set(const PatternSet& a, const PatternSet& b) {
  auto va = a.patterns;
  auto vb = b.patterns;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

Permutation symmetry(const Permutation& pi, SymOp op) {
  const int n = pi.size();
  Permutation out;
  out.v.resize(static_cast<size_t>(n));
  switch (op) {
    case SymOp::mirror:
      for (int i = 1; i <= n; ++i) out.v[static_cast<size_t>(i - 1)] = pi.at(n - i + 1);
      break;
    case SymOp::complement:
      for (int i = 1; i <= n; ++i) out.v[static_cast<size_t>(i - 1)] = n + 1 - pi.at(i);
      break;
    case SymOp::inverse:
      for (int i = 1; i <= n; ++i) out.v[static_cast<size_t>(pi.at(i) - 1)] = i;
      break;
  }
  return out;
}

Permutation symmetry(const Permutation& pi, const std::vector<SymOp>& ops) {
  Permutation out = pi;
  for (SymOp op : ops) out = symmetry(out, op);
  return out;
}

PatternSet symmetry_set(const PatternSet& set, const std::vector<SymOp>& ops) {
  PatternSet out;
  for (const auto& tau : set.patterns) out.patterns.push_back(symmetry(tau, ops));
  return out;
}

bool is_derangement(const Permutation& pi) {
  for (int i = 1; i <= pi.size(); ++i)
    if (pi.at(i) == i) return false;
  return true;
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& set,
                                            bool unsafe) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiders: n < 0");
  if (!unsafe && n > kAvoiderLimit)
    throw limit_error("enumerate_avoiders: n = " + std::to_string(n) +
                      " past limit " + std::to_string(kAvoiderLimit));
  std::vector<Permutation> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  struct Rec {
    int n;
    const PatternSet& set;
    std::vector<Permutation>& out;
    std::vector<int>& cur;
    std::vector<bool>& used;
    void run() {
      if (static_cast<int>(cur.size()) == n) {
        out.emplace_back(cur);
        return;
      }
      for (int v = 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        cur.push_back(v);
        if (!creates_any_at_end(cur, set)) {
          used[static_cast<size_t>(v)] = true;
          run();
          used[static_cast<size_t>(v)] = false;
        }
        cur.pop_back();
      }
    }
  } rec{n, set, out, cur, used};
  rec.run();
  return out;
}

std::vector<Permutation> enumerate_derangements_avoiding_321(int n,
                                                             bool unsafe) {
  if (n < 0)
    throw std::invalid_argument("enumerate_derangements_avoiding_321: n < 0");
  if (!unsafe && n > kDerangementLimit)
    throw limit_error("enumerate_derangements_avoiding_321: n = " +
                      std::to_string(n) + " past limit " +
                      std::to_string(kDerangementLimit));
  static const PatternSet just321{"", {parse_permutation("321")}};
  std::vector<Permutation> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  struct Rec {
    int n;
    std::vector<Permutation>& out;
    std::vector<int>& cur;
    std::vector<bool>& used;
    void run() {
      if (static_cast<int>(cur.size()) == n) {
        out.emplace_back(cur);
        assert(is_derangement(out.back()));
        return;
      }
      const int pos = static_cast<int>(cur.size()) + 1;
      for (int v = 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v)] || v == pos) continue;
        cur.push_back(v);
        if (!creates_any_at_end(cur, just321)) {
          used[static_cast<size_t>(v)] = true;
          run();
          used[static_cast<size_t>(v)] = false;
        }
        cur.pop_back();
      }
    }
  } rec{n, out, cur, used};
  rec.run();
  return out;
}

}  // namespace finetree
