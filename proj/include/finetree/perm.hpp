#pragma once

#include <string>
#include <vector>

namespace finetree {

// One-line notation; values are a rearrangement of 1..n. The length-0
// permutation is a legal object (it avoids everything).
struct Permutation {
  std::vector<int> v;

  Permutation() = default;
  explicit Permutation(std::vector<int> values) : v(std::move(values)) {}

  int size() const { return static_cast<int>(v.size()); }
  // 1-based access, matching the combinatorial convention pi(i).
  int at(int i) const { return v[static_cast<size_t>(i - 1)]; }
  // 1-based position of a value, 0 when absent.
  int position_of(int value) const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return v < o.v; }
};

bool is_valid_permutation(const Permutation& pi);

// Text form: compact digits when n <= 9 ("364125"), else comma-separated.
// Both forms are accepted when parsing.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& pi);

// True iff some subsequence of pi is order-isomorphic to tau.
bool contains(const Permutation& pi, const Permutation& tau);

struct PatternSet {
  std::string name;  // optional; builtin sets carry their usual name
  std::vector<Permutation> patterns;
};

bool avoids_all(const Permutation& pi, const PatternSet& set);

// Builtin sets: F1, F2, F3, H1, H1STAR, H2, H3, H4, H5, H3IC.
PatternSet builtin_pattern_set(const std::string& name);
std::vector<std::string> builtin_pattern_set_names();

// Accepts a builtin name token (case-insensitive) or ";"-separated patterns.
PatternSet parse_pattern_set(const std::string& text);
std::string format_pattern_set(const PatternSet& set);

// Set equality irrespective of listing order.
bool same_pattern_set(const PatternSet& a, const PatternSet& b);

enum class SymOp { mirror, complement, inverse };

// mirror reverses positions, complement maps v to n+1-v, inverse swaps
// positions and values.
Permutation symmetry(const Permutation& pi, SymOp op);
Permutation symmetry(const Permutation& pi, const std::vector<SymOp>& ops);

// Applies the composition in listed order to every pattern. Note the
// convention for composite names like "-1 c": the complement is applied
// first, then the inverse.
PatternSet symmetry_set(const PatternSet& set, const std::vector<SymOp>& ops);

bool is_derangement(const Permutation& pi);

// All of S_n(E) in lexicographic order. Depth-first with prefix pruning;
// containment is monotone under extension, so pruned prefixes are safe.
// Throws limit_error past the default limit of n = 9 unless unsafe is set.
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& set,
                                            bool unsafe = false);

// All 321-avoiding derangements of length n, lexicographic. Default limit
// n = 10.
std::vector<Permutation> enumerate_derangements_avoiding_321(
    int n, bool unsafe = false);

}  // namespace finetree
