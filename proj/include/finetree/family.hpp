#pragma once
// Generating-tree families: pattern-avoiding permutation classes, 321-avoiding
// derangements, and the word tree. Each family names a root object, a node
// labeling, child and father maps, and the succession system the tree is
// expected to follow; verify_family replays the system on the real objects
// and reports any mismatch.

#include <string>
#include <vector>

#include "finetree/counting.hpp"
#include "finetree/perm.hpp"
#include "finetree/succession.hpp"
#include "finetree/words.hpp"

namespace finetree {

enum class FamilyKind { Pattern, Derangement, WordTree };

// A node holds a permutation for the pattern and derangement families and a
// word for the word tree; the unused member stays empty. Word-tree nodes store
// the tree word: the full word for p >= 1, the part after the forced initial
// 0,1,...,q-1 block for p = 0 (the root is then the empty word).
struct FamilyNode {
  Permutation perm;
  Word word;

  bool operator==(const FamilyNode&) const = default;
  bool operator<(const FamilyNode& o) const {
    if (perm.v != o.perm.v) return perm.v < o.perm.v;
    return word < o.word;
  }
};

struct FamilySpec {
  std::string name;
  FamilyKind kind = FamilyKind::Pattern;
  PatternSet patterns;      // Pattern kind only
  FineParams word_params;   // WordTree kind only
  SuccessionSystem system;  // the rule the tree is expected to follow
  int level_shift = 0;      // objects at tree level l have size l + level_shift
};

// Family names: F1 F2 F3 H1 H1STAR H2 H3 H4 H3IC H5 DER, plus WORDS(p,q) for
// the word tree. Case-insensitive.
FamilySpec builtin_family(const std::string& name);
FamilySpec word_family(const FineParams& pq);
std::vector<std::string> builtin_family_names();  // excludes WORDS(p,q)

// Node text: permutations use format_permutation; word-tree nodes use the
// tree word with "e" standing for the empty word.
std::string format_node(const FamilyNode&, const FamilySpec&);
FamilyNode parse_node(const std::string&, const FamilySpec&);

// Active sites of a permutation: the 1-based insertion positions for n+1
// (position k places n+1 just before the k-th entry, position n+1 appends)
// that keep the result inside the avoidance class.
std::vector<int> active_sites(const Permutation&, const PatternSet&);
Permutation insert_at(const Permutation&, int site);

FamilyNode root_node(const FamilySpec&);
Label label_of(const FamilyNode&, const FamilySpec&);

// Children in a fixed structural order (insertion sites left to right for the
// permutation families), each paired with the label the tree assigns to it
// and the delay of the edge (1 for an ordinary child).
struct FamilyChild {
  FamilyNode node;
  ChildSpec spec;
};
std::vector<FamilyChild> children_of(const FamilyNode&, const FamilySpec&);

// The unique father of a non-root node, with the edge delay.
struct FamilyFather {
  FamilyNode node;
  int delay = 1;
};
FamilyFather father_of(const FamilyNode&, const FamilySpec&);

// Word-tree structure helpers.
bool tree_word_valid(const Word&, const FineParams&);
Word normalize_p0_word(const Word&, const FineParams&);    // strip the block
Word denormalize_p0_word(const Word&, const FineParams&);  // prepend it again
Label word_label(const Word&, const FineParams&);

// All nodes at tree levels 1..depth (level 1 is the root). A delayed child is
// placed on the level its delay dictates, enqueued when its father is
// expanded.
std::vector<std::vector<FamilyNode>> family_levels(const FamilySpec&, int depth);

// One level built by direct enumeration instead of the tree.
std::vector<FamilyNode> level_oracle(const FamilySpec&, int level,
                                     bool unsafe = false);

struct LevelCheck {
  int level = 0;
  BigInt observed;
  BigInt expected;
  bool ok = false;
};

struct FamilyReport {
  std::string family;
  int depth = 0;
  bool ok = false;
  std::vector<LevelCheck> levels;
  std::vector<std::string> violations;  // first counterexamples, readable text
  std::vector<std::string> notes;
};

// Replays the succession system on the real objects: every node's empirical
// children must match the rule's child list as a multiset, fathers must
// invert children (object, delay, and label), every level must equal direct
// enumeration with no duplicates, and the family's structural site properties
// must hold. Collects at most a handful of violations before stopping.
FamilyReport verify_family(const FamilySpec&, int depth, bool unsafe = false);

std::string format_family_report(const FamilyReport&);

}  // namespace finetree
