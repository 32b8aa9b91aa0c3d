#pragma once
// Transport of nodes between generating trees that follow the same succession
// rule: a node's path from the root (step labels, delays, and an occurrence
// index among equal steps) is replayed in the other tree. Families whose
// trees align only after dropping initial levels are handled by level shifts,
// and pattern families whose sets are related by a symmetry of the square are
// connected by that symmetry instead of a shared tree shape.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finetree/family.hpp"

namespace finetree {

struct StepKey {
  Label label;
  int delay = 1;
  int occ = 1;  // 1-based index among siblings with the same label and delay

  auto operator<=>(const StepKey&) const = default;
};

using TreePath = std::vector<StepKey>;

// Text form: steps joined with '/', each step the label without its brackets,
// then "@d" when the delay exceeds 1 and "#k" when the occurrence index
// exceeds 1. The empty path (the root itself) is written "-".
std::string format_tree_path(const TreePath&);
TreePath parse_tree_path(const std::string&);

// A generating tree materialized to a fixed depth, with parent links and
// child lookup by step key.
class TreeIndex {
 public:
  TreeIndex(const FamilySpec& spec, int depth);

  const FamilySpec& spec() const { return spec_; }
  int depth() const { return depth_; }
  const std::vector<std::vector<FamilyNode>>& levels() const { return levels_; }

  // Level of a node in this tree (the root is level 1); throws
  // invalid_argument if the node was not materialized.
  int level_of(const FamilyNode&) const;
  TreePath encode(const FamilyNode&) const;
  // Replays a path from the node reached by start_singletons forced steps
  // below the root; throws invalid_argument when a step has no match.
  FamilyNode decode(const TreePath&, int start_singletons = 0) const;

 private:
  struct Loc {
    int level = 0;
    int pos = 0;
    auto operator<=>(const Loc&) const = default;
  };

  FamilyNode at(const Loc&) const;
  Loc sole_child(const Loc&) const;

  FamilySpec spec_;
  int depth_ = 0;
  std::vector<std::vector<FamilyNode>> levels_;
  std::map<FamilyNode, Loc> locate_;
  std::map<Loc, std::pair<Loc, StepKey>> parent_;
  std::map<std::pair<Loc, StepKey>, Loc> child_;
};

// How two families are connected. Tree routes replay paths, with shift_from
// leading steps stripped from the source path and shift_to forced steps
// descended in the target tree first; symmetry routes act on the permutation
// directly.
struct TransportRoute {
  enum class Kind { Tree, Symmetry };
  Kind kind = Kind::Tree;
  int shift_from = 0;
  int shift_to = 0;
  std::vector<SymOp> ops;  // symmetry routes only
};

std::optional<TransportRoute> find_route(const FamilySpec& from,
                                         const FamilySpec& to);

// Maps one node, building the trees it needs. Throws unsupported_pair_error
// when no route exists and invalid_argument when the node has no counterpart.
FamilyNode transport(const FamilyNode&, const FamilySpec& from,
                     const FamilySpec& to);

// Same, but against prebuilt trees (the bulk path).
FamilyNode transport_indexed(const TreeIndex& from, const TreeIndex& to,
                             const TransportRoute&, const FamilyNode&);

struct BijectionLevelCheck {
  int level_from = 0;
  int level_to = 0;
  BigInt count_from;
  BigInt count_to;
  bool ok = false;
};

struct BijectionReport {
  std::string from;
  std::string to;
  int depth = 0;
  bool ok = false;
  std::vector<BijectionLevelCheck> levels;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

// Transports every node level by level: counts must agree, the map must be
// injective and onto, round-trips must return the original node, and on tree
// routes labels must be preserved. depth counts aligned level pairs.
BijectionReport verify_bijection(const FamilySpec& from, const FamilySpec& to,
                                 int depth);
BijectionReport verify_bijection(const TreeIndex& from, const TreeIndex& to,
                                 int depth);

std::string format_bijection_report(const BijectionReport&);

}  // namespace finetree
