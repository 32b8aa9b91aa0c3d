#include "finetree/family.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace finetree {

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

Word block_word(int q) {
  Word b(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) b[static_cast<size_t>(i)] = i;
  return b;
}

Word root_word(const FineParams& pq) {
  if (pq.p >= 1) {
    Word w(static_cast<size_t>(pq.p));
    for (int i = 0; i < pq.p; ++i) w[static_cast<size_t>(i)] = i;
    return w;
  }
  return {};
}

bool ends_with_block(const Word& w, int q) {
  const int n = static_cast<int>(w.size());
  if (n < q) return false;
  for (int i = 0; i < q; ++i)
    if (w[static_cast<size_t>(n - q + i)] != i) return false;
  return true;
}

Word drop_last(Word w) {
  w.pop_back();
  return w;
}

// The candidate the jump edge would come from: the word with the final
// 0,1,...,q-1 run replaced by a single 1.
Word jump_father_candidate(const Word& w, int q) {
  Word f(w.begin(), w.end() - q);
  f.push_back(1);
  return f;
}

Permutation delete_max(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n - 1));
  for (int x : pi.v)
    if (x != n) out.push_back(x);
  return Permutation(out);
}

bool in_derangement_family(const Permutation& pi) {
  static const PatternSet just321{"", {Permutation({3, 2, 1})}};
  return is_derangement(pi) && avoids_all(pi, just321);
}

// Label dispatch for the pattern families. i and j are the positions of n-1
// and n (0 when absent), t the number of active sites.
Label pattern_label(const std::string& name, const Permutation& pi,
                    const PatternSet& patterns) {
  const int n = pi.size();
  const int t = static_cast<int>(active_sites(pi, patterns).size());
  const int i = pi.position_of(n - 1);
  const int j = pi.position_of(n);
  if (name == "F1") {
    if (n >= 2 && pi.at(2) == n) return {LabelKind::T, 0};
    return {LabelKind::Plain, t};
  }
  if (name == "F2" || name == "F3") {
    if (n >= 2 && pi.at(1) == n) return {LabelKind::T, 0};
    return {LabelKind::Plain, t};
  }
  if (name == "H1") {
    if (pi.at(1) == n) return {LabelKind::T, 0};
    return {LabelKind::Plain, t};
  }
  if (name == "H1STAR" || name == "H3" || name == "H4") {
    // H4 boundary: with exactly two active sites the children come out the
    // same whether or not n sits left of n-1, and only the A kind gives the
    // child labels the rule expects. Fold that case into the A side.
    if (name == "H4" && t == 2) return {LabelKind::A, t};
    return {i < j ? LabelKind::A : LabelKind::B, t};
  }
  if (name == "H2") {
    if (j == 1) return {LabelKind::A, t};
    if (j == t - 1) return {LabelKind::B, t};
    return {LabelKind::A, t};
  }
  if (name == "H3IC") {
    if (j == 1) return {t == 2 ? LabelKind::A : LabelKind::B, t};
    if (i == 1 && j >= 3) return {LabelKind::P, 0};
    return {LabelKind::A, t};
  }
  if (name == "H5") {
    if (j == 2) return {LabelKind::B, t};
    if (1 < i && i < j) return {LabelKind::P, 0};
    return {LabelKind::A, t};
  }
  throw std::invalid_argument("no labeler for family '" + name + "'");
}

Label derangement_label(const Permutation& pi) {
  const int n = pi.size();
  if (n >= 2 && pi.at(n - 1) == n && pi.at(n) != n - 1) return {LabelKind::T, 0};
  return {LabelKind::Plain, n + 1 - pi.position_of(n)};
}

std::vector<FamilyChild> pattern_children(const FamilyNode& node,
                                          const FamilySpec& spec) {
  const Permutation& pi = node.perm;
  const int n = pi.size();
  std::vector<FamilyChild> out;
  const Label label = label_of(node, spec);
  if (spec.name == "H1" && label.kind == LabelKind::T) {
    // Sites 1 and 2 stay ordinary; the third child jumps two levels, placing
    // n+1, n, n+2 in front of the tail of the current permutation.
    for (int s = 1; s <= 2; ++s) {
      FamilyNode child{insert_at(pi, s), {}};
      out.push_back({child, {label_of(child, spec), 1}});
    }
    std::vector<int> v{n + 1, n, n + 2};
    for (int k = 2; k <= n; ++k) v.push_back(pi.at(k));
    FamilyNode child{Permutation(v), {}};
    if (!avoids_all(child.perm, spec.patterns))
      throw std::logic_error("jump child leaves the class: " +
                             format_permutation(child.perm));
    out.push_back({child, {label_of(child, spec), 2}});
    return out;
  }
  for (int s : active_sites(pi, spec.patterns)) {
    FamilyNode child{insert_at(pi, s), {}};
    out.push_back({child, {label_of(child, spec), 1}});
  }
  return out;
}

std::vector<FamilyChild> derangement_children(const FamilyNode& node,
                                              const FamilySpec& spec) {
  const Permutation& pi = node.perm;
  const int n = pi.size();
  const Label label = label_of(node, spec);
  std::vector<std::vector<int>> raw;
  if (label.kind == LabelKind::T) {
    std::vector<int> base(pi.v.begin(), pi.v.end() - 2);
    std::vector<int> c1 = base, c2 = base, c3 = base;
    c1.insert(c1.end(), {n, n + 1, pi.at(n)});
    c2.insert(c2.end(), {pi.at(n), n + 1, n});
    c3.insert(c3.end(), {n + 1, pi.at(n), n});
    raw = {c1, c2, c3};
  } else {
    const int i = pi.position_of(n);
    raw.push_back(insert_at(pi, n).v);
    for (int k = n - 1; k >= i + 1; --k) raw.push_back(insert_at(pi, k).v);
    std::vector<int> last(pi.v.begin(), pi.v.begin() + (i - 1));
    last.push_back(n + 1);
    last.insert(last.end(), pi.v.begin() + i, pi.v.end());
    last.push_back(n);
    raw.push_back(last);
  }
  std::vector<FamilyChild> out;
  for (auto& v : raw) {
    FamilyNode child{Permutation(std::move(v)), {}};
    if (!in_derangement_family(child.perm))
      throw std::logic_error("child leaves the class: " +
                             format_permutation(child.perm));
    out.push_back({child, {label_of(child, spec), 1}});
  }
  return out;
}

std::vector<FamilyChild> word_children(const FamilyNode& node,
                                       const FamilySpec& spec) {
  const FineParams pq = spec.word_params;
  const Word& w = node.word;
  const Label label = word_label(w, pq);
  std::vector<std::pair<Word, int>> raw;
  if (label.kind == LabelKind::T) {
    Word a = w, b = w;
    a.push_back(1);
    b.push_back(2);
    Word jump = drop_last(w);
    Word blk = block_word(pq.q);
    jump.insert(jump.end(), blk.begin(), blk.end());
    raw = {{a, 1}, {b, 1}, {jump, pq.q - 1}};
  } else {
    for (int k = 1; k <= label.param; ++k) {
      Word c = w;
      c.push_back(k);
      raw.push_back({c, 1});
    }
  }
  std::vector<FamilyChild> out;
  for (auto& [cw, delay] : raw) {
    if (!tree_word_valid(cw, pq))
      throw std::logic_error("child leaves the class: " + format_word(cw));
    FamilyNode child{{}, cw};
    out.push_back({child, {word_label(cw, pq), delay}});
  }
  return out;
}

FamilyFather derangement_father(const Permutation& pi) {
  const int m = pi.size();
  if (m <= 2) throw std::invalid_argument("node is the root");
  if (derangement_label(pi).kind == LabelKind::T) return {{delete_max(pi), {}}, 1};
  if (pi.position_of(m) == m - 1) {
    std::vector<int> v(pi.v.begin(), pi.v.end() - 3);
    v.push_back(m - 1);
    v.push_back(pi.at(m - 2));
    return {{Permutation(v), {}}, 1};
  }
  if (pi.at(m) == m - 1) {
    std::vector<int> v(pi.v.begin(), pi.v.end() - 1);
    v[static_cast<size_t>(pi.position_of(m) - 1)] = m - 1;
    return {{Permutation(v), {}}, 1};
  }
  return {{delete_max(pi), {}}, 1};
}

FamilyFather word_father(const Word& w, const FineParams& pq) {
  if (w == root_word(pq)) throw std::invalid_argument("node is the root");
  const int n = static_cast<int>(w.size());
  if (n >= pq.q && ends_with_block(w, pq.q)) {
    Word cand = jump_father_candidate(w, pq.q);
    if (tree_word_valid(cand, pq)) return {{{}, cand}, pq.q - 1};
  }
  Word f = drop_last(w);
  assert(tree_word_valid(f, pq));
  return {{{}, f}, 1};
}

}  // namespace

FamilySpec builtin_family(const std::string& name) {
  const std::string key = upper(name);
  if (key.rfind("WORDS", 0) == 0) {
    size_t open = key.find('(');
    size_t comma = key.find(',', open);
    size_t close = key.find(')', open);
    if (open == std::string::npos || comma == std::string::npos ||
        close == std::string::npos)
      throw std::invalid_argument("expected WORDS(p,q), got '" + name + "'");
    FineParams pq;
    pq.p = std::stoi(key.substr(open + 1, comma - open - 1));
    pq.q = std::stoi(key.substr(comma + 1, close - comma - 1));
    return word_family(pq);
  }
  FamilySpec spec;
  spec.name = key;
  if (key == "DER") {
    spec.kind = FamilyKind::Derangement;
    spec.system = builtin_system("DER");
    spec.level_shift = 1;
    return spec;
  }
  spec.kind = FamilyKind::Pattern;
  spec.patterns = builtin_pattern_set(key);
  spec.system = builtin_system(key);
  spec.level_shift = 0;
  return spec;
}

FamilySpec word_family(const FineParams& pq) {
  FamilySpec spec;
  spec.name = "WORDS(" + std::to_string(pq.p) + "," + std::to_string(pq.q) + ")";
  spec.kind = FamilyKind::WordTree;
  spec.word_params = pq;
  spec.system = make_d1(pq);
  spec.level_shift = pq.p >= 1 ? pq.p - 1 : pq.q - 1;
  return spec;
}

std::vector<std::string> builtin_family_names() {
  return {"F1", "F2", "F3", "DER", "H1", "H1STAR", "H2", "H3", "H4", "H3IC", "H5"};
}

std::string format_node(const FamilyNode& node, const FamilySpec& spec) {
  if (spec.kind == FamilyKind::WordTree)
    return node.word.empty() ? "e" : format_word(node.word);
  return format_permutation(node.perm);
}

FamilyNode parse_node(const std::string& text, const FamilySpec& spec) {
  if (spec.kind == FamilyKind::WordTree) {
    Word w = (text == "e" || text.empty()) ? Word{} : parse_word(text);
    if (!tree_word_valid(w, spec.word_params))
      throw std::invalid_argument("not a node of " + spec.name + ": " + text);
    return {{}, w};
  }
  Permutation pi = parse_permutation(text);
  if (!is_valid_permutation(pi))
    throw std::invalid_argument("not a permutation: " + text);
  if (spec.kind == FamilyKind::Derangement) {
    if (!in_derangement_family(pi))
      throw std::invalid_argument("not a node of DER: " + text);
  } else if (!avoids_all(pi, spec.patterns)) {
    throw std::invalid_argument("not a node of " + spec.name + ": " + text);
  }
  return {pi, {}};
}

std::vector<int> active_sites(const Permutation& pi, const PatternSet& set) {
  std::vector<int> sites;
  for (int s = 1; s <= pi.size() + 1; ++s)
    if (avoids_all(insert_at(pi, s), set)) sites.push_back(s);
  return sites;
}

Permutation insert_at(const Permutation& pi, int site) {
  const int n = pi.size();
  if (site < 1 || site > n + 1) throw std::invalid_argument("site out of range");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n + 1));
  v.insert(v.end(), pi.v.begin(), pi.v.begin() + (site - 1));
  v.push_back(n + 1);
  v.insert(v.end(), pi.v.begin() + (site - 1), pi.v.end());
  return Permutation(v);
}

FamilyNode root_node(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Pattern:
      return {Permutation({1}), {}};
    case FamilyKind::Derangement:
      return {Permutation({2, 1}), {}};
    case FamilyKind::WordTree:
      return {{}, root_word(spec.word_params)};
  }
  throw std::logic_error("bad family kind");
}

Label label_of(const FamilyNode& node, const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Pattern:
      return pattern_label(spec.name, node.perm, spec.patterns);
    case FamilyKind::Derangement:
      return derangement_label(node.perm);
    case FamilyKind::WordTree:
      return word_label(node.word, spec.word_params);
  }
  throw std::logic_error("bad family kind");
}

std::vector<FamilyChild> children_of(const FamilyNode& node,
                                     const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Pattern:
      return pattern_children(node, spec);
    case FamilyKind::Derangement:
      return derangement_children(node, spec);
    case FamilyKind::WordTree:
      return word_children(node, spec);
  }
  throw std::logic_error("bad family kind");
}

FamilyFather father_of(const FamilyNode& node, const FamilySpec& spec) {
  if (node == root_node(spec)) throw std::invalid_argument("node is the root");
  switch (spec.kind) {
    case FamilyKind::Pattern: {
      const Permutation& pi = node.perm;
      const int m = pi.size();
      if (spec.name == "H1" && m >= 3 && pi.at(1) == m - 1 &&
          pi.at(2) == m - 2 && pi.at(3) == m) {
        std::vector<int> v{pi.at(2)};
        for (int k = 4; k <= m; ++k) v.push_back(pi.at(k));
        return {{Permutation(v), {}}, 2};
      }
      return {{delete_max(pi), {}}, 1};
    }
    case FamilyKind::Derangement:
      return derangement_father(node.perm);
    case FamilyKind::WordTree:
      return word_father(node.word, spec.word_params);
  }
  throw std::logic_error("bad family kind");
}

bool tree_word_valid(const Word& w, const FineParams& pq) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (pq.p >= 1) return validate_fine_word(w, pq);
  if (w.empty()) return true;
  return validate_fine_word(denormalize_p0_word(w, pq), pq);
}

Word normalize_p0_word(const Word& w, const FineParams& pq) {
  if (pq.p >= 1) return w;
  const Word blk = block_word(pq.q);
  if (w.size() < blk.size() || !std::equal(blk.begin(), blk.end(), w.begin()))
    throw std::invalid_argument("word lacks the initial 0.." +
                                std::to_string(pq.q - 1) + " block");
  return Word(w.begin() + pq.q, w.end());
}

Word denormalize_p0_word(const Word& w, const FineParams& pq) {
  if (pq.p >= 1) return w;
  Word full = block_word(pq.q);
  full.insert(full.end(), w.begin(), w.end());
  return full;
}

Label word_label(const Word& w, const FineParams& pq) {
  if (w == root_word(pq)) return {LabelKind::Plain, pq.p >= 1 ? pq.p : pq.q};
  const int n = static_cast<int>(w.size());
  if (n >= pq.q && ends_with_block(w, pq.q) &&
      tree_word_valid(jump_father_candidate(w, pq.q), pq))
    return {LabelKind::Plain, pq.q};
  if (w.back() == 1) return {LabelKind::T, 0};
  return {LabelKind::Plain, w.back() + 1};
}

std::vector<std::vector<FamilyNode>> family_levels(const FamilySpec& spec,
                                                   int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::map<int, std::vector<FamilyNode>> pending;
  pending[1].push_back(root_node(spec));
  std::vector<std::vector<FamilyNode>> levels;
  for (int level = 1; level <= depth; ++level) {
    levels.push_back(std::move(pending[level]));
    if (level == depth) break;
    for (const FamilyNode& node : levels.back()) {
      for (const FamilyChild& child : children_of(node, spec)) {
        if (level + child.spec.delay <= depth)
          pending[level + child.spec.delay].push_back(child.node);
      }
    }
  }
  return levels;
}

std::vector<FamilyNode> level_oracle(const FamilySpec& spec, int level,
                                     bool unsafe) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  std::vector<FamilyNode> out;
  switch (spec.kind) {
    case FamilyKind::Pattern:
      for (auto& pi : enumerate_avoiders(level, spec.patterns, unsafe))
        out.push_back({pi, {}});
      return out;
    case FamilyKind::Derangement:
      for (auto& pi : enumerate_derangements_avoiding_321(level + 1, unsafe))
        out.push_back({pi, {}});
      return out;
    case FamilyKind::WordTree: {
      const FineParams pq = spec.word_params;
      const int len = level + spec.level_shift;
      for (auto& w : enumerate_fine_words(len, pq, unsafe))
        out.push_back({{}, pq.p >= 1 ? w : normalize_p0_word(w, pq)});
      return out;
    }
  }
  throw std::logic_error("bad family kind");
}

namespace {

std::string spec_list_text(std::vector<ChildSpec> specs) {
  std::sort(specs.begin(), specs.end());
  std::string out = "{";
  for (size_t i = 0; i < specs.size(); ++i) {
    if (i) out += ",";
    out += format_child_spec(specs[i]);
  }
  return out + "}";
}

// Structural site properties per family, checked on top of the rule replay.
void check_sites(const FamilySpec& spec, const FamilyNode& node,
                 const Label& label, std::vector<std::string>& out) {
  if (spec.kind != FamilyKind::Pattern) return;
  const auto sites = active_sites(node.perm, spec.patterns);
  const int t = static_cast<int>(sites.size());
  const std::string where =
      spec.name + " node " + format_permutation(node.perm);
  if (label_has_param(label.kind) && label.param != t)
    out.push_back(where + ": label parameter " + std::to_string(label.param) +
                  " != " + std::to_string(t) + " active sites");
  const bool prefix_family = spec.name == "F1" || spec.name == "F2" ||
                             spec.name == "H2" || spec.name == "H3IC" ||
                             spec.name == "H5";
  if (prefix_family) {
    for (int s = 1; s <= t; ++s)
      if (sites[static_cast<size_t>(s - 1)] != s) {
        out.push_back(where + ": active sites are not a prefix");
        return;
      }
    if ((spec.name == "F1" || spec.name == "F2") &&
        label.kind == LabelKind::T && t != 3)
      out.push_back(where + ": T node must have exactly 3 active sites");
  } else if (spec.name == "F3") {
    const int n = node.perm.size();
    const bool has_first = std::find(sites.begin(), sites.end(), 1) != sites.end();
    const bool has_last =
        std::find(sites.begin(), sites.end(), n + 1) != sites.end();
    if (!has_first || !has_last)
      out.push_back(where + ": sites must include 1 and n+1");
    if (label.kind == LabelKind::T &&
        sites != std::vector<int>{1, 2, n + 1})
      out.push_back(where + ": T node sites must be {1,2,n+1}");
  } else if (spec.name == "H1" && label.kind == LabelKind::T) {
    if (t < 2 || sites[0] != 1 || sites[1] != 2)
      out.push_back(where + ": T node must have sites 1 and 2");
  }
}

}  // namespace

FamilyReport verify_family(const FamilySpec& spec, int depth, bool unsafe) {
  FamilyReport report;
  report.family = spec.name;
  report.depth = depth;
  const size_t kMaxViolations = 12;
  auto add = [&report, kMaxViolations](const std::string& v) {
    if (report.violations.size() < kMaxViolations) report.violations.push_back(v);
  };

  std::vector<std::vector<FamilyNode>> levels;
  try {
    levels = family_levels(spec, depth);
  } catch (const std::exception& e) {
    report.violations.push_back(std::string("tree walk failed: ") + e.what());
    report.ok = false;
    return report;
  }

  for (int level = 1; level <= depth; ++level) {
    const auto& nodes = levels[static_cast<size_t>(level - 1)];

    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        add("level " + std::to_string(level) + ": duplicate node " +
            format_node(sorted[i], spec));

    LevelCheck check;
    check.level = level;
    check.observed = static_cast<int>(nodes.size());
    try {
      auto oracle = level_oracle(spec, level, unsafe);
      std::sort(oracle.begin(), oracle.end());
      check.expected = static_cast<int>(oracle.size());
      check.ok = sorted == oracle;
      if (!check.ok) {
        std::vector<FamilyNode> diff;
        std::set_symmetric_difference(sorted.begin(), sorted.end(),
                                      oracle.begin(), oracle.end(),
                                      std::back_inserter(diff));
        add("level " + std::to_string(level) + ": tree and enumeration differ" +
            (diff.empty() ? "" : ", e.g. " + format_node(diff.front(), spec)));
      }
    } catch (const std::exception& e) {
      check.ok = false;
      add("level " + std::to_string(level) + ": oracle failed: " + e.what());
    }
    report.levels.push_back(check);

    for (const FamilyNode& node : nodes) {
      const Label label = label_of(node, spec);
      std::vector<FamilyChild> kids;
      try {
        kids = children_of(node, spec);
      } catch (const std::exception& e) {
        add("node " + format_node(node, spec) + ": " + e.what());
        continue;
      }
      std::vector<ChildSpec> got;
      for (const auto& kid : kids) got.push_back(kid.spec);
      std::vector<ChildSpec> want;
      try {
        want = spec.system.rule(label);
      } catch (const std::exception& e) {
        add("node " + format_node(node, spec) + ": " + e.what());
        continue;
      }
      auto got_sorted = got, want_sorted = want;
      std::sort(got_sorted.begin(), got_sorted.end());
      std::sort(want_sorted.begin(), want_sorted.end());
      if (got_sorted != want_sorted)
        add("node " + format_node(node, spec) + " labeled " +
            format_label(label) + ": children " + spec_list_text(got) +
            " but rule says " + spec_list_text(want));

      for (const auto& kid : kids) {
        try {
          FamilyFather back = father_of(kid.node, spec);
          if (!(back.node == node) || back.delay != kid.spec.delay)
            add("child " + format_node(kid.node, spec) + " of " +
                format_node(node, spec) + ": father map returns " +
                format_node(back.node, spec) + " at delay " +
                std::to_string(back.delay));
        } catch (const std::exception& e) {
          add("child " + format_node(kid.node, spec) + ": father map failed: " +
              e.what());
        }
      }

      check_sites(spec, node, label, report.violations);
      if (report.violations.size() > kMaxViolations)
        report.violations.resize(kMaxViolations);
    }
  }

  if (spec.kind == FamilyKind::Pattern) {
    report.notes.push_back(
        "labels computed from the positions of n and n-1 and the active site "
        "count; single-letter nodes take the no-inversion branch");
    if (spec.name == "H4")
      report.notes.push_back(
          "H4 boundary resolution: nodes with exactly two active sites are "
          "labeled A even when n precedes n-1, since their children match "
          "the A rule");
  } else if (spec.kind == FamilyKind::Derangement) {
    report.notes.push_back(
        "labels: T when n sits at position n-1 without closing a 2-cycle, "
        "otherwise the plain label n+1-pos(n)");
  } else {
    report.notes.push_back(
        "tree stores words with the forced initial block stripped when p=0; "
        "a word whose tail is the full 0..q-1 block and whose jump source is "
        "valid counts as a delayed child");
  }

  bool levels_ok = true;
  for (const auto& row : report.levels) levels_ok = levels_ok && row.ok;
  report.ok = levels_ok && report.violations.empty();
  return report;
}

std::string format_family_report(const FamilyReport& report) {
  std::ostringstream out;
  out << "family: " << report.family << "\n";
  out << "depth: " << report.depth << "\n";
  for (const auto& row : report.levels)
    out << "level " << row.level << ": tree=" << row.observed
        << " enumeration=" << row.expected << (row.ok ? " ok" : " MISMATCH")
        << "\n";
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "result: " << (report.ok ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace finetree
