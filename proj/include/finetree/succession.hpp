#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finetree/bigint.hpp"
#include "finetree/counting.hpp"

namespace finetree {

// Node labels of a generating tree. Plain labels carry a positive integer
// parameter ("[4]"), T and P are bare tags, A and B carry a parameter
// ("[A,2]"). The parameter is 0 for kinds that take none.
enum class LabelKind { Plain, T, P, A, B };

struct Label {
  LabelKind kind = LabelKind::Plain;
  int param = 0;

  auto operator<=>(const Label&) const = default;
};

bool label_has_param(LabelKind kind);

// Text forms: "[T]", "[P]", "[5]", "[A,2]".
std::string format_label(const Label& label);
Label parse_label(const std::string& text);

// A child slot: the label it gets and how many levels below its parent it
// appears (1 = immediate child).
struct ChildSpec {
  Label label;
  int delay = 1;

  auto operator<=>(const ChildSpec&) const = default;
};

std::string format_child_spec(const ChildSpec& spec);

// A root label plus a production rule. The rule must cover every label it
// can reach; it throws invalid_argument on a label it has no case for.
struct SuccessionSystem {
  std::string name;
  Label root;
  std::function<std::vector<ChildSpec>(const Label&)> rule;
};

// Text grammar, statements separated by ';':
//   root=[A,2]
//   [T] -> [T],[3],[2]@1
//   [t] -> [T],[3..t+1]
//   [A,t] -> [B,3..t+1],[A,t+1]
//   [B,t] -> [A,3],[B,3],[P]^(t-2)
// Parameters are linear in t ("3", "t", "t+1", "t-2"); "lo..hi" expands to
// one child per value (possibly none), "^(expr)" repeats a child, "@d"
// delays it d levels. A concrete left side ("[2]") takes precedence over a
// template ("[t]") of the same kind.
SuccessionSystem parse_system(const std::string& text);

// The system with root [p] (or [q] when p = 0) whose T rule spawns
// [T],[3] plus a delayed [q], and whose [t] rule spawns [T],[3],...,[t+1].
SuccessionSystem make_d1(const FineParams& pq);

// Named systems of the builtin families: F1, F2, F3, DER, H1, H1STAR, H2,
// H3, H4, H3IC, H5.
SuccessionSystem builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();

// Population counts by level; counts[0] is level 1 (the root alone, unless
// delayed arrivals join it). Delayed children are booked at the level they
// actually appear on.
struct ExpandResult {
  std::vector<BigInt> counts;
};

ExpandResult expand(const SuccessionSystem& system, int depth);

// Same system with every child list sorted by (kind, param, delay).
// Idempotent; useful before comparing rules that list children in
// different orders.
SuccessionSystem normalize(const SuccessionSystem& system);

// A rule isomorphism: a bijection of the label kinds reachable from the
// roots (parameters carried over unchanged) under which the two rules
// agree child-for-child, delays included. Child lists are compared as
// sorted lists, so listing order does not matter.
struct RuleIsomorphism {
  std::map<LabelKind, LabelKind> kind_map;
  int shift_a = 0;  // times the first root was advanced before matching
  int shift_b = 0;
};

std::optional<RuleIsomorphism> rule_isomorphic(const SuccessionSystem& a,
                                               const SuccessionSystem& b,
                                               int depth = 12);

// Replaces the root by its single immediate child; throws invalid_argument
// when the root does not have exactly one delay-1 child and no delayed
// ones pending.
SuccessionSystem advance_root(const SuccessionSystem& system);

// Tries root advances of 0..2 on each side, smallest total first, and
// returns the first isomorphism found along with the shifts used.
std::optional<RuleIsomorphism> rule_isomorphic_shifted(
    const SuccessionSystem& a, const SuccessionSystem& b, int depth = 12);

// Whether counts_a[level + shift_a] == counts_b[level + shift_b] for
// level = 1..depth.
bool level_equiv(const SuccessionSystem& a, const SuccessionSystem& b,
                 int shift_a, int shift_b, int depth);

}  // namespace finetree
