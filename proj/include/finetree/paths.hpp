#pragma once

#include <string>
#include <vector>

#include "finetree/counting.hpp"
#include "finetree/words.hpp"

namespace finetree {

// A lattice path of U and D steps starting and ending at height 0, never
// dipping below it. Stored as its step string, e.g. "UUDUDD".
struct DyckPath {
  std::string steps;

  bool operator==(const DyckPath&) const = default;
  bool operator<(const DyckPath& o) const { return steps < o.steps; }

  // Semilength: number of U steps.
  int semilength() const;
};

// Accepts upper or lower case steps; the stored form is upper case.
DyckPath parse_path(const std::string& text);
std::string format_path(const DyckPath& path);

bool validate_path(const DyckPath& path);

// Length of the initial run of U steps (0 for the empty path).
int first_rise(const DyckPath& path);

// Split at each return to height 0; every piece touches 0 only at its ends.
std::vector<DyckPath> path_components(const DyckPath& path);

// Height-profile coding: the i-th letter of the word is one less than the
// height reached by the i-th U step. A bijection between Dyck paths of
// semilength n and similarity words of length n.
DyckPath word_to_path(const Word& w);
Word path_to_word(const DyckPath& path);

// Strict variant: additionally checks the resulting word against the
// (p, q) conditions and throws invalid_argument when they fail.
Word path_to_word(const DyckPath& path, const FineParams& pq);

// Reshuffles a path whose components open with long enough rises into one
// whose first rise is congruent to p mod q, keeping everything recoverable.
// For p >= 1 the first component must rise at least p and the rest at
// least q; for p = 0 every component must rise at least q. Throws
// invalid_argument otherwise.
DyckPath first_rise_transform(const DyckPath& path, const FineParams& pq);

// Exact inverse on the image; throws invalid_argument when the path's
// first rise is not of the form kq + p or the interior does not decompose.
DyckPath first_rise_untransform(const DyckPath& path, const FineParams& pq);

}  // namespace finetree
