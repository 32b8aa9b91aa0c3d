// Command-line front end: count, enumerate, map, verify, tree. Thin glue
// over the library; all the combinatorial work happens there. Output is
// deterministic byte for byte so scripts and tests can compare it directly.

#include "finetree/cli.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finetree/bijection.hpp"
#include "finetree/counting.hpp"
#include "finetree/errors.hpp"
#include "finetree/family.hpp"
#include "finetree/perm.hpp"
#include "finetree/succession.hpp"
#include "finetree/words.hpp"

namespace finetree {
namespace {

std::string upper(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string lower(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool env_unsafe() {
  const char* v = std::getenv("FINETREE_UNSAFE_LIMITS");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

// ---------------------------------------------------------------------------
// count / enumerate

enum class ObjectFamily { Words, Avoiders, Derangements };

struct SelectOpts {
  std::string family;
  std::string set_text;
  int p = -1;
  int q = -1;
  long long n = -1;
  bool both = false;
  bool unsafe = false;
};

struct Target {
  ObjectFamily kind = ObjectFamily::Words;
  FineParams pq;
  PatternSet set;
  bool builtin_set = false;
};

FineParams checked_params(int p, int q) {
  FineParams pq{p, q};
  if (!params_valid(pq))
    throw std::invalid_argument("parameters must satisfy 0 <= p < q");
  return pq;
}

Target resolve_target(const SelectOpts& o) {
  Target t;
  std::string fam = upper(o.family);
  if (fam == "WORDS") {
    if (o.p < 0 || o.q < 0)
      throw std::invalid_argument("--family words requires --p and --q");
    t.kind = ObjectFamily::Words;
    t.pq = checked_params(o.p, o.q);
    return t;
  }
  if (fam == "DERANGEMENTS321" || fam == "DER") {
    t.kind = ObjectFamily::Derangements;
    return t;
  }
  if (fam == "AVOIDERS") {
    if (o.set_text.empty())
      throw std::invalid_argument("--family avoiders requires --set");
    t.kind = ObjectFamily::Avoiders;
    t.set = parse_pattern_set(o.set_text);
    t.builtin_set = !t.set.name.empty();
    return t;
  }
  // A builtin pattern set named directly, e.g. --family F3.
  t.kind = ObjectFamily::Avoiders;
  t.set = builtin_pattern_set(fam);
  t.builtin_set = true;
  return t;
}

// Closed-form count when one is known: word counts directly, the F classes
// through the Fine numbers, the H classes through the (1,3) word counts,
// 321-avoiding derangements through the shifted Fine numbers (n >= 2 only;
// below that the enumeration answers).
std::optional<BigInt> formula_count(const Target& t, long long n) {
  switch (t.kind) {
    case ObjectFamily::Words:
      return count_formula(n, t.pq);
    case ObjectFamily::Derangements:
      if (n >= 2) return fine(n - 1);
      return std::nullopt;
    case ObjectFamily::Avoiders: {
      if (!t.builtin_set) return std::nullopt;
      std::string name = upper(t.set.name);
      if (name == "F1" || name == "F2" || name == "F3") return fine(n);
      if (name == "H1" || name == "H1STAR" || name == "H2" || name == "H3" ||
          name == "H4" || name == "H5" || name == "H3IC")
        return count_formula(n + 1, FineParams{1, 3});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

BigInt oracle_count(const Target& t, long long n, bool unsafe) {
  switch (t.kind) {
    case ObjectFamily::Words:
      return BigInt(
          enumerate_fine_words(static_cast<int>(n), t.pq, unsafe).size());
    case ObjectFamily::Derangements:
      return BigInt(
          enumerate_derangements_avoiding_321(static_cast<int>(n), unsafe)
              .size());
    case ObjectFamily::Avoiders:
      return BigInt(
          enumerate_avoiders(static_cast<int>(n), t.set, unsafe).size());
  }
  return BigInt(0);
}

int cmd_count(const SelectOpts& o, std::ostream& out, std::ostream& err) {
  if (o.n < 0) throw std::invalid_argument("--n must be nonnegative");
  Target t = resolve_target(o);
  std::optional<BigInt> formula = formula_count(t, o.n);
  if (o.both) {
    if (!formula)
      throw std::invalid_argument(
          "no closed formula is available for this family");
    BigInt oracle = oracle_count(t, o.n, o.unsafe);
    out << "formula: " << *formula << "\n";
    out << "oracle: " << oracle << "\n";
    if (*formula != oracle) {
      err << "count mismatch\n";
      return 2;
    }
    return 0;
  }
  if (formula) {
    out << *formula << "\n";
    return 0;
  }
  out << oracle_count(t, o.n, o.unsafe) << "\n";
  return 0;
}

int cmd_enumerate(const SelectOpts& o, std::ostream& out) {
  if (o.n < 0) throw std::invalid_argument("--n must be nonnegative");
  Target t = resolve_target(o);
  switch (t.kind) {
    case ObjectFamily::Words:
      for (const Word& w :
           enumerate_fine_words(static_cast<int>(o.n), t.pq, o.unsafe))
        out << format_word(w) << "\n";
      break;
    case ObjectFamily::Derangements:
      for (const Permutation& pi : enumerate_derangements_avoiding_321(
               static_cast<int>(o.n), o.unsafe))
        out << format_permutation(pi) << "\n";
      break;
    case ObjectFamily::Avoiders:
      for (const Permutation& pi :
           enumerate_avoiders(static_cast<int>(o.n), t.set, o.unsafe))
        out << format_permutation(pi) << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// map

struct MapOpts {
  std::string from;
  std::string to;
  std::string input;
  int p = -1;
  int q = -1;
  bool roundtrip = false;
  bool unsafe = false;
};

struct Endpoint {
  bool relation = false;  // text form is a similarity relation
  FamilySpec spec;
};

// Words endpoints take --p/--q; without them the parameters follow the other
// endpoint ((1,3) next to H1, (0,2) otherwise, matching the registered maps).
FineParams infer_words_params(int p, int q, const std::string& other) {
  if (p >= 0 && q >= 0) return checked_params(p, q);
  if (p >= 0 || q >= 0)
    throw std::invalid_argument("--p and --q must be given together");
  if (upper(other) == "H1") return FineParams{1, 3};
  return FineParams{0, 2};
}

Endpoint resolve_endpoint(const std::string& token, const std::string& other,
                          int p, int q) {
  Endpoint e;
  std::string t = upper(token);
  if (t == "RELATION") {
    e.relation = true;
    e.spec = word_family(infer_words_params(p, q, other));
    return e;
  }
  if (t == "WORDS") {
    e.spec = word_family(infer_words_params(p, q, other));
    return e;
  }
  e.spec = builtin_family(t);
  return e;
}

FamilyNode parse_input(const Endpoint& e, const std::string& text) {
  if (e.relation) {
    SimilarityRelation rel = parse_relation(text);
    Word w = word_from_relation(rel);
    if (!validate_fine_word(w, e.spec.word_params))
      throw std::invalid_argument("relation is not in the mapped class: " +
                                  format_relation(rel));
    FamilyNode node;
    node.word = normalize_p0_word(w, e.spec.word_params);
    return node;
  }
  if (e.spec.kind == FamilyKind::WordTree) {
    Word full = parse_word(text);
    if (!validate_fine_word(full, e.spec.word_params))
      throw std::invalid_argument("not a valid word for these parameters: " +
                                  text);
    FamilyNode node;
    node.word = normalize_p0_word(full, e.spec.word_params);
    return node;
  }
  return parse_node(text, e.spec);
}

std::string render_output(const Endpoint& e, const FamilyNode& node) {
  if (e.relation) {
    Word full = denormalize_p0_word(node.word, e.spec.word_params);
    return format_relation(relation_from_word(full));
  }
  if (e.spec.kind == FamilyKind::WordTree) {
    Word full = denormalize_p0_word(node.word, e.spec.word_params);
    return format_word(full);
  }
  return format_node(node, e.spec);
}

int tree_level(const FamilyNode& node, const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Pattern:
      return node.perm.size();
    case FamilyKind::Derangement:
      return node.perm.size() - 1;
    case FamilyKind::WordTree: {
      int full = static_cast<int>(node.word.size()) +
                 (spec.word_params.p >= 1 ? 0 : spec.word_params.q);
      return full - spec.level_shift;
    }
  }
  return 0;
}

void check_size(const FamilySpec& spec, int level, bool unsafe) {
  if (unsafe) return;
  switch (spec.kind) {
    case FamilyKind::Pattern:
      if (level > 9)
        throw limit_error(
            "permutation size limit is 9 (use --unsafe-limits to override)");
      break;
    case FamilyKind::Derangement:
      if (level + 1 > 10)
        throw limit_error(
            "derangement size limit is 10 (use --unsafe-limits to override)");
      break;
    case FamilyKind::WordTree:
      if (level + spec.level_shift > 14)
        throw limit_error(
            "word length limit is 14 (use --unsafe-limits to override)");
      break;
  }
}

void check_map_limits(const Endpoint& from, const FamilyNode& node,
                      const Endpoint& to, bool unsafe) {
  int lf = tree_level(node, from.spec);
  check_size(from.spec, lf, unsafe);
  if (from.spec.name == to.spec.name) return;
  std::optional<TransportRoute> route = find_route(from.spec, to.spec);
  if (!route)
    throw unsupported_pair_error("no registered map between " +
                                 from.spec.name + " and " + to.spec.name);
  int lt = lf - route->shift_from + route->shift_to;
  if (lt < 1)
    throw std::invalid_argument(
        "object is below the target tree's first level");
  check_size(to.spec, lt, unsafe);
}

int cmd_map(const MapOpts& o, std::ostream& out, std::ostream& err) {
  Endpoint from = resolve_endpoint(o.from, o.to, o.p, o.q);
  Endpoint to = resolve_endpoint(o.to, o.from, o.p, o.q);
  FamilyNode node = parse_input(from, o.input);
  check_map_limits(from, node, to, o.unsafe);
  bool same_tree = from.spec.name == to.spec.name;
  FamilyNode result = same_tree ? node : transport(node, from.spec, to.spec);
  if (o.roundtrip) {
    FamilyNode back =
        same_tree ? result : transport(result, to.spec, from.spec);
    if (!(back == node)) {
      err << "round trip mismatch: " << render_output(from, back) << "\n";
      return 2;
    }
  }
  out << render_output(to, result) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string check;
  long long max_n = -1;
  int depth = -1;
  std::string format = "text";
  bool unsafe = false;
};

struct CheckReport {
  std::string check;
  bool ok = true;
  std::vector<LevelCheck> rows;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

void add_row(CheckReport& r, int level, BigInt observed, BigInt expected) {
  LevelCheck row;
  row.level = level;
  row.observed = std::move(observed);
  row.expected = std::move(expected);
  row.ok = row.observed == row.expected;
  if (!row.ok) r.ok = false;
  r.rows.push_back(std::move(row));
}

void merge_bijection(CheckReport& r, const BijectionReport& bij,
                     const std::string& prefix) {
  if (!bij.ok) r.ok = false;
  for (const std::string& v : bij.violations)
    r.violations.push_back(prefix + v);
  for (const std::string& n : bij.notes) r.notes.push_back(prefix + n);
}

void print_report(const CheckReport& r, std::ostream& out) {
  out << "check: " << r.check << "\n";
  for (const LevelCheck& row : r.rows)
    out << "level " << row.level << ": observed=" << row.observed
        << " expected=" << row.expected << (row.ok ? " ok" : " MISMATCH")
        << "\n";
  for (const std::string& v : r.violations) out << "violation: " << v << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  out << "result: " << (r.ok ? "PASS" : "FAIL") << "\n";
}

nlohmann::json report_json(const CheckReport& r, const std::string& command) {
  nlohmann::json j;
  j["command"] = command;
  j["check"] = r.check;
  j["ok"] = r.ok;
  j["levels"] = nlohmann::json::array();
  for (const LevelCheck& row : r.rows) {
    nlohmann::json o;
    o["level"] = row.level;
    o["observed"] = row.observed.str();
    o["expected"] = row.expected.str();
    o["ok"] = row.ok;
    j["levels"].push_back(o);
  }
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  return j;
}

CheckReport run_shapiro(long long max_n, bool unsafe) {
  if (max_n > 300 && !unsafe)
    throw limit_error("--max-n limit is 300 (use --unsafe-limits to override)");
  CheckReport r;
  r.check = "shapiro";
  for (long long n = 2; n <= max_n; ++n)
    add_row(r, static_cast<int>(n), 2 * fine(n) + fine(n - 1), catalan(n + 1));
  r.notes.push_back("identity: 2*fine(n) + fine(n-1) == catalan(n+1)");
  return r;
}

CheckReport run_formula(long long max_n, bool unsafe) {
  CheckReport r;
  r.check = "formula";
  std::vector<FineParams> pairs;
  for (int p = 0; p <= 3; ++p)
    for (int q = p + 1; q <= 4; ++q) pairs.push_back(FineParams{p, q});
  for (long long n = 1; n <= max_n; ++n) {
    BigInt obs = 0;
    BigInt exp = 0;
    for (const FineParams& pq : pairs) {
      BigInt formula = count_formula(n, pq);
      BigInt listed =
          BigInt(enumerate_fine_words(static_cast<int>(n), pq, unsafe).size());
      obs += listed;
      exp += formula;
      if (formula != listed) {
        std::ostringstream os;
        os << "p=" << pq.p << " q=" << pq.q << " n=" << n
           << ": formula=" << formula << " enumeration=" << listed;
        r.violations.push_back(os.str());
      }
    }
    add_row(r, static_cast<int>(n), obs, exp);
  }
  r.notes.push_back(
      "all 0 <= p < q <= 4; observed sums enumerations, expected sums the "
      "ballot formula");
  return r;
}

CheckReport run_thm1(int depth, bool unsafe) {
  CheckReport r;
  r.check = "thm1";
  const std::vector<FineParams> pairs = {
      {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}};
  std::vector<BigInt> obs(static_cast<size_t>(depth) + 1, BigInt(0));
  std::vector<BigInt> exp(static_cast<size_t>(depth) + 1, BigInt(0));
  for (const FineParams& pq : pairs) {
    ExpandResult ex = expand(make_d1(pq), depth);
    int shift = pq.p >= 1 ? pq.p - 1 : pq.q - 1;
    for (int lvl = 1; lvl <= depth; ++lvl) {
      BigInt tree = ex.counts[static_cast<size_t>(lvl) - 1];
      BigInt words = BigInt(
          enumerate_fine_words(lvl + shift, pq, unsafe).size());
      obs[static_cast<size_t>(lvl)] += tree;
      exp[static_cast<size_t>(lvl)] += words;
      if (tree != words) {
        std::ostringstream os;
        os << "p=" << pq.p << " q=" << pq.q << " level=" << lvl
           << ": tree=" << tree << " words=" << words;
        r.violations.push_back(os.str());
      }
    }
  }
  for (int lvl = 1; lvl <= depth; ++lvl)
    add_row(r, lvl, obs[static_cast<size_t>(lvl)],
            exp[static_cast<size_t>(lvl)]);
  r.notes.push_back(
      "system populations vs word counts for (p,q) in (0,2),(1,2),(1,3),"
      "(2,3),(1,4); level l holds words of length l+p-1 (or l+q-1 when p=0)");
  return r;
}

CheckReport run_thm2(long long max_n, int depth, bool unsafe) {
  CheckReport r;
  r.check = "thm2";
  for (long long n = 2; n <= max_n; ++n)
    add_row(r, static_cast<int>(n),
            BigInt(enumerate_derangements_avoiding_321(static_cast<int>(n),
                                                       unsafe)
                       .size()),
            fine(n - 1));
  BijectionReport bij =
      verify_bijection(builtin_family("DER"), word_family(FineParams{0, 2}),
                       depth);
  merge_bijection(r, bij, "bijection: ");
  std::ostringstream os;
  os << "object map onto the (0,2) word tree (nonsingular relations) "
        "verified to depth "
     << depth;
  r.notes.push_back(os.str());
  return r;
}

CheckReport run_thm3(long long max_n, int depth, bool unsafe) {
  CheckReport r;
  r.check = "thm3";
  const std::vector<std::string> fams = {"F1", "F2", "F3"};
  for (long long n = 1; n <= max_n; ++n) {
    BigInt obs = 0;
    for (const std::string& f : fams) {
      BigInt size = BigInt(enumerate_avoiders(static_cast<int>(n),
                                              builtin_pattern_set(f), unsafe)
                               .size());
      obs += size;
      if (size != fine(n)) {
        std::ostringstream os;
        os << f << " n=" << n << ": avoiders=" << size
           << " expected=" << fine(n);
        r.violations.push_back(os.str());
      }
    }
    add_row(r, static_cast<int>(n), obs, 3 * fine(n));
  }
  TreeIndex words(word_family(FineParams{0, 2}), depth);
  for (const std::string& f : fams) {
    TreeIndex t(builtin_family(f), depth);
    BijectionReport bij = verify_bijection(t, words, depth);
    merge_bijection(r, bij, f + ": ");
  }
  std::ostringstream os;
  os << "each class maps onto the (0,2) word tree; verified to depth "
     << depth;
  r.notes.push_back(os.str());
  return r;
}

CheckReport run_thm4(long long max_n, int depth, bool unsafe) {
  CheckReport r;
  r.check = "thm4";
  const std::vector<std::string> fams = {"H1", "H2", "H3", "H4", "H5"};
  for (long long n = 2; n <= max_n; ++n) {
    BigInt obs = 0;
    BigInt each = count_formula(n, FineParams{1, 3});
    for (const std::string& f : fams) {
      BigInt size = BigInt(enumerate_avoiders(static_cast<int>(n) - 1,
                                              builtin_pattern_set(f), unsafe)
                               .size());
      obs += size;
      if (size != each) {
        std::ostringstream os;
        os << f << " n=" << n << ": avoiders=" << size << " expected=" << each;
        r.violations.push_back(os.str());
      }
    }
    add_row(r, static_cast<int>(n), obs, 5 * each);
  }
  BijectionReport words_bij =
      verify_bijection(builtin_family("H1"), word_family(FineParams{1, 3}),
                       depth);
  merge_bijection(r, words_bij, "H1/words: ");
  BijectionReport sym_bij =
      verify_bijection(builtin_family("H1"), builtin_family("H1STAR"), depth);
  merge_bijection(r, sym_bij, "H1/H1STAR: ");
  r.notes.push_back(
      "classes of size n-1 against the (1,3) word counts of length n; "
      "object maps are registered for H1 only");
  return r;
}

CheckReport run_succession(const std::string& fam, int depth, bool unsafe) {
  FamilySpec spec = builtin_family(fam);
  FamilyReport fr = verify_family(spec, depth, unsafe);
  CheckReport r;
  r.check = "succession:" + spec.name;
  r.ok = fr.ok;
  r.rows = fr.levels;
  r.violations = fr.violations;
  r.notes = fr.notes;
  return r;
}

int cmd_verify(const VerifyOpts& o, const std::string& command_line,
               std::ostream& out, std::ostream& err) {
  int depth = o.depth < 0 ? 7 : o.depth;
  if (depth < 1) throw std::invalid_argument("--depth must be at least 1");
  if (depth > 8 && !o.unsafe)
    throw limit_error("depth limit is 8 (use --unsafe-limits to override)");
  std::string c = lower(o.check);
  CheckReport r;
  if (c == "shapiro")
    r = run_shapiro(o.max_n < 0 ? 15 : o.max_n, o.unsafe);
  else if (c == "formula")
    r = run_formula(o.max_n < 0 ? 12 : o.max_n, o.unsafe);
  else if (c == "thm1")
    r = run_thm1(depth, o.unsafe);
  else if (c == "thm2")
    r = run_thm2(o.max_n < 0 ? 9 : o.max_n, depth, o.unsafe);
  else if (c == "thm3")
    r = run_thm3(o.max_n < 0 ? 8 : o.max_n, depth, o.unsafe);
  else if (c == "thm4")
    r = run_thm4(o.max_n < 0 ? 9 : o.max_n, depth, o.unsafe);
  else if (c.rfind("succession:", 0) == 0)
    r = run_succession(c.substr(11), depth, o.unsafe);
  else
    throw std::invalid_argument("unknown check: " + o.check);
  if (o.format == "json")
    out << report_json(r, command_line).dump(2) << "\n";
  else
    print_report(r, out);
  if (!r.ok) err << "verification failed: " << r.check << "\n";
  return r.ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// tree

struct TreeOpts {
  std::string family;
  std::string system;
  int p = -1;
  int q = -1;
  int depth = -1;
  std::string format = "text";
  bool unsafe = false;
};

struct DisplayNode {
  std::string object;  // empty for label-only (system) trees
  std::string label;
  int delay = 1;  // edge delay from the father; 1 for the root
  std::vector<size_t> kids;
};

size_t build_family_tree(const FamilySpec& spec, const FamilyNode& node,
                         const Label& lbl, int delay, int level, int depth,
                         std::vector<DisplayNode>& nodes) {
  size_t id = nodes.size();
  nodes.push_back(
      DisplayNode{format_node(node, spec), format_label(lbl), delay, {}});
  for (const FamilyChild& ch : children_of(node, spec)) {
    int child_level = level + ch.spec.delay;
    if (child_level > depth) continue;
    size_t kid = build_family_tree(spec, ch.node, ch.spec.label, ch.spec.delay,
                                   child_level, depth, nodes);
    nodes[id].kids.push_back(kid);
  }
  return id;
}

size_t build_system_tree(const SuccessionSystem& sys, const Label& lbl,
                         int delay, int level, int depth,
                         std::vector<DisplayNode>& nodes) {
  size_t id = nodes.size();
  nodes.push_back(DisplayNode{"", format_label(lbl), delay, {}});
  for (const ChildSpec& ch : sys.rule(lbl)) {
    int child_level = level + ch.delay;
    if (child_level > depth) continue;
    size_t kid =
        build_system_tree(sys, ch.label, ch.delay, child_level, depth, nodes);
    nodes[id].kids.push_back(kid);
  }
  return id;
}

void emit_text(const std::vector<DisplayNode>& nodes, size_t id, int indent,
               std::ostream& out) {
  const DisplayNode& n = nodes[id];
  for (int i = 0; i < indent; ++i) out << "  ";
  if (!n.object.empty()) out << n.object << " ";
  out << n.label;
  if (n.delay > 1) out << " @" << n.delay;
  out << "\n";
  for (size_t k : n.kids) emit_text(nodes, k, indent + 1, out);
}

nlohmann::json tree_json(const std::vector<DisplayNode>& nodes, size_t id) {
  const DisplayNode& n = nodes[id];
  nlohmann::json j;
  if (!n.object.empty()) j["object"] = n.object;
  j["label"] = n.label;
  j["delay"] = n.delay;
  j["children"] = nlohmann::json::array();
  for (size_t k : n.kids) j["children"].push_back(tree_json(nodes, k));
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

void emit_dot(const std::vector<DisplayNode>& nodes, std::ostream& out) {
  out << "digraph tree {\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::string text = nodes[i].object.empty()
                           ? nodes[i].label
                           : nodes[i].object + " " + nodes[i].label;
    out << "  n" << i << " [label=\"" << dot_escape(text) << "\"];\n";
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t k : nodes[i].kids) {
      out << "  n" << i << " -> n" << k;
      if (nodes[k].delay > 1)
        out << " [style=dashed,label=\"@" << nodes[k].delay << "\"]";
      out << ";\n";
    }
  out << "}\n";
}

int cmd_tree(const TreeOpts& o, std::ostream& out) {
  if (o.depth < 1) throw std::invalid_argument("--depth must be at least 1");
  if (o.depth > 8 && !o.unsafe)
    throw limit_error("depth limit is 8 (use --unsafe-limits to override)");
  if (o.family.empty() == o.system.empty())
    throw std::invalid_argument(
        "exactly one of --family and --system is required");
  std::vector<DisplayNode> nodes;
  if (!o.family.empty()) {
    FamilySpec spec;
    if (upper(o.family) == "WORDS") {
      if (o.p < 0 || o.q < 0)
        throw std::invalid_argument("--family words requires --p and --q");
      spec = word_family(checked_params(o.p, o.q));
    } else {
      spec = builtin_family(o.family);
    }
    FamilyNode root = root_node(spec);
    build_family_tree(spec, root, label_of(root, spec), 1, 1, o.depth, nodes);
  } else {
    SuccessionSystem sys;
    if (upper(o.system) == "D1") {
      if (o.p < 0 || o.q < 0)
        throw std::invalid_argument("--system d1 requires --p and --q");
      sys = make_d1(checked_params(o.p, o.q));
    } else {
      sys = builtin_system(o.system);
    }
    build_system_tree(sys, sys.root, 1, 1, o.depth, nodes);
  }
  if (o.format == "json")
    out << tree_json(nodes, 0).dump(2) << "\n";
  else if (o.format == "dot")
    emit_dot(nodes, out);
  else
    emit_text(nodes, 0, 0, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Generating trees, words, and pattern classes behind the generalized "
      "Fine numbers"};
  app.name("finetree");
  app.require_subcommand(1);

  SelectOpts count_o;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Count the objects of one size");
  count_cmd->add_option("--family", count_o.family,
                        "words | avoiders | derangements321 | builtin set name")
      ->required();
  count_cmd->add_option("--set", count_o.set_text,
                        "pattern set for avoiders (builtin name or "
                        "semicolon-separated patterns)");
  count_cmd->add_option("--p", count_o.p, "word parameter p");
  count_cmd->add_option("--q", count_o.q, "word parameter q");
  count_cmd->add_option("--n", count_o.n, "object size")->required();
  count_cmd->add_flag("--both", count_o.both,
                      "print formula and enumeration, fail on mismatch");
  count_cmd->add_flag("--unsafe-limits", count_o.unsafe,
                      "lift the built-in size limits");

  SelectOpts enum_o;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "List the objects of one size");
  enum_cmd->add_option("--family", enum_o.family,
                       "words | avoiders | derangements321 | builtin set name")
      ->required();
  enum_cmd->add_option("--set", enum_o.set_text,
                       "pattern set for avoiders (builtin name or "
                       "semicolon-separated patterns)");
  enum_cmd->add_option("--p", enum_o.p, "word parameter p");
  enum_cmd->add_option("--q", enum_o.q, "word parameter q");
  enum_cmd->add_option("--n", enum_o.n, "object size")->required();
  enum_cmd->add_flag("--unsafe-limits", enum_o.unsafe,
                     "lift the built-in size limits");

  MapOpts map_o;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Transport one object between registered families");
  map_cmd->add_option("--from", map_o.from, "source family")->required();
  map_cmd->add_option("--to", map_o.to, "target family")->required();
  map_cmd->add_option("--input", map_o.input, "source object")->required();
  map_cmd->add_option("--p", map_o.p, "word parameter p for word endpoints");
  map_cmd->add_option("--q", map_o.q, "word parameter q for word endpoints");
  map_cmd->add_flag("--roundtrip", map_o.roundtrip,
                    "map back and check the original returns");
  map_cmd->add_flag("--unsafe-limits", map_o.unsafe,
                    "lift the built-in size limits");

  VerifyOpts verify_o;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run one of the consistency checks");
  verify_cmd->add_option(
          "--check", verify_o.check,
          "shapiro | formula | thm1 | thm2 | thm3 | thm4 | succession:<FAM>")
      ->required();
  verify_cmd->add_option("--max-n", verify_o.max_n,
                         "largest size to check (per-check default)");
  verify_cmd->add_option("--depth", verify_o.depth,
                         "tree depth for structural checks (default 7)");
  verify_cmd->add_option("--format", verify_o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--unsafe-limits", verify_o.unsafe,
                       "lift the built-in size limits");

  TreeOpts tree_o;
  CLI::App* tree_cmd =
      app.add_subcommand("tree", "Print a generating tree to a given depth");
  tree_cmd->add_option("--family", tree_o.family,
                       "family tree with objects (builtin name or words)");
  tree_cmd->add_option("--system", tree_o.system,
                       "label-only system tree (builtin name or d1)");
  tree_cmd->add_option("--p", tree_o.p, "word parameter p");
  tree_cmd->add_option("--q", tree_o.q, "word parameter q");
  tree_cmd->add_option("--depth", tree_o.depth, "levels to print")->required();
  tree_cmd->add_option("--format", tree_o.format, "text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  tree_cmd->add_flag("--unsafe-limits", tree_o.unsafe,
                     "lift the built-in size limits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> seen = app.get_subcommands();
    out << (seen.empty() ? app.help() : seen.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  bool env = env_unsafe();
  count_o.unsafe = count_o.unsafe || env;
  enum_o.unsafe = enum_o.unsafe || env;
  map_o.unsafe = map_o.unsafe || env;
  verify_o.unsafe = verify_o.unsafe || env;
  tree_o.unsafe = tree_o.unsafe || env;

  std::string command_line = "finetree";
  for (const std::string& a : args) command_line += " " + a;

  try {
    if (count_cmd->parsed()) return cmd_count(count_o, out, err);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_o, out);
    if (map_cmd->parsed()) return cmd_map(map_o, out, err);
    if (verify_cmd->parsed())
      return cmd_verify(verify_o, command_line, out, err);
    if (tree_cmd->parsed()) return cmd_tree(tree_o, out);
    err << "error: no command given\n";
    return 3;
  } catch (const limit_error& e) {
    err << "limit: " << e.what() << "\n";
    return 3;
  } catch (const unsupported_pair_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "consistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace finetree
