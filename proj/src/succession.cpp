#include "finetree/succession.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace finetree {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Linear expressions in the template variable t: "3", "t", "t+1", "t-2".
struct LinExpr {
  int t_coef = 0;
  int constant = 0;

  int eval(int t) const { return t_coef * t + constant; }
};

LinExpr parse_lin(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("system: empty expression");
  LinExpr e;
  size_t pos = 0;
  if (s[0] == 't') {
    e.t_coef = 1;
    pos = 1;
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos == s.size()) return e;
    int sign = 0;
    if (s[pos] == '+') sign = 1;
    if (s[pos] == '-') sign = -1;
    if (sign == 0)
      throw std::invalid_argument("system: bad expression '" + s + "'");
    ++pos;
  } else {
    int sign = 1;
    if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::string digits = trim(s.substr(pos));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("system: bad expression '" + s + "'");
    e.constant = sign * std::stoi(digits);
    return e;
  }
  std::string rest = trim(s.substr(pos));
  int sign = s.find('-') != std::string::npos ? -1 : 1;
  if (rest.empty() ||
      rest.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("system: bad expression '" + s + "'");
  e.constant = sign * std::stoi(rest);
  return e;
}

struct TermSpec {
  LabelKind kind = LabelKind::Plain;
  bool has_range = false;
  LinExpr lo;
  LinExpr hi;
  LinExpr power{0, 1};
  int delay = 1;
};

struct RuleCase {
  bool concrete = false;
  Label lhs;                              // when concrete
  LabelKind lhs_kind = LabelKind::Plain;  // when template
  std::vector<TermSpec> terms;
};

struct SystemData {
  std::vector<RuleCase> cases;
};

// Splits on commas that are outside [] and ().
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Parses the bracket content of a label or term: "T", "P", "5", "t+1",
// "3..t+1", "A,2", "B,3..t".
void parse_label_body(const std::string& body, LabelKind& kind,
                      bool& has_range, LinExpr& lo, LinExpr& hi) {
  std::string s = trim(body);
  if (s == "T") {
    kind = LabelKind::T;
    has_range = false;
    lo = hi = LinExpr{};
    return;
  }
  if (s == "P") {
    kind = LabelKind::P;
    has_range = false;
    lo = hi = LinExpr{};
    return;
  }
  std::string params = s;
  kind = LabelKind::Plain;
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'B') && trim(s.substr(1))[0] == ',') {
    kind = s[0] == 'A' ? LabelKind::A : LabelKind::B;
    params = trim(s.substr(s.find(',') + 1));
  }
  size_t dots = params.find("..");
  if (dots != std::string::npos) {
    has_range = true;
    lo = parse_lin(params.substr(0, dots));
    hi = parse_lin(params.substr(dots + 2));
  } else {
    has_range = false;
    lo = hi = parse_lin(params);
  }
}

TermSpec parse_term(const std::string& text) {
  std::string s = trim(text);
  if (s.empty() || s[0] != '[')
    throw std::invalid_argument("system: expected label in '" + text + "'");
  size_t close = s.find(']');
  if (close == std::string::npos)
    throw std::invalid_argument("system: unclosed label in '" + text + "'");
  TermSpec term;
  parse_label_body(s.substr(1, close - 1), term.kind, term.has_range, term.lo,
                   term.hi);
  size_t pos = close + 1;
  while (pos < s.size()) {
    char c = s[pos];
    if (c == ' ') {
      ++pos;
      continue;
    }
    if (c == '^') {
      ++pos;
      if (pos < s.size() && s[pos] == '(') {
        size_t end = s.find(')', pos);
        if (end == std::string::npos)
          throw std::invalid_argument("system: unclosed power in '" + text + "'");
        term.power = parse_lin(s.substr(pos + 1, end - pos - 1));
        pos = end + 1;
      } else {
        size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        term.power = parse_lin(s.substr(pos, end - pos));
        pos = end;
      }
    } else if (c == '@') {
      ++pos;
      size_t end = pos;
      bool paren = pos < s.size() && s[pos] == '(';
      if (paren) {
        end = s.find(')', pos);
        if (end == std::string::npos)
          throw std::invalid_argument("system: unclosed delay in '" + text + "'");
        term.delay = parse_lin(s.substr(pos + 1, end - pos - 1)).eval(0);
        pos = end + 1;
      } else {
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos)
          throw std::invalid_argument("system: bad delay in '" + text + "'");
        term.delay = std::stoi(s.substr(pos, end - pos));
        pos = end;
      }
      if (term.delay < 1)
        throw std::invalid_argument("system: delay must be at least 1");
    } else {
      throw std::invalid_argument("system: trailing text in '" + text + "'");
    }
  }
  return term;
}

std::vector<ChildSpec> expand_terms(const std::vector<TermSpec>& terms, int t) {
  std::vector<ChildSpec> out;
  for (const auto& term : terms) {
    int reps = term.power.eval(t);
    if (reps < 0) reps = 0;
    for (int r = 0; r < reps; ++r) {
      if (!label_has_param(term.kind)) {
        out.push_back({{term.kind, 0}, term.delay});
      } else if (term.has_range) {
        for (int v = term.lo.eval(t); v <= term.hi.eval(t); ++v)
          out.push_back({{term.kind, v}, term.delay});
      } else {
        out.push_back({{term.kind, term.lo.eval(t)}, term.delay});
      }
    }
  }
  return out;
}

// Collects the labels reachable from the root within the given number of
// levels, delays included.
std::set<Label> reachable_labels(const SuccessionSystem& system, int depth) {
  std::set<Label> seen;
  std::vector<std::pair<Label, int>> queue{{system.root, 1}};
  seen.insert(system.root);
  for (size_t idx = 0; idx < queue.size(); ++idx) {
    auto [label, level] = queue[idx];
    if (level >= depth) continue;
    for (const auto& child : system.rule(label)) {
      if (level + child.delay > depth) continue;
      if (seen.insert(child.label).second)
        queue.push_back({child.label, level + child.delay});
    }
  }
  return seen;
}

std::vector<ChildSpec> sorted_children(std::vector<ChildSpec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<std::map<LabelKind, LabelKind>> find_kind_map(
    const SuccessionSystem& a, const SuccessionSystem& b, int depth) {
  const auto reach_a = reachable_labels(a, depth);
  const auto reach_b = reachable_labels(b, depth);
  std::set<LabelKind> kinds_a_set, kinds_b_set;
  for (const auto& l : reach_a) kinds_a_set.insert(l.kind);
  for (const auto& l : reach_b) kinds_b_set.insert(l.kind);
  if (kinds_a_set.size() != kinds_b_set.size()) return std::nullopt;
  std::vector<LabelKind> kinds_a(kinds_a_set.begin(), kinds_a_set.end());
  std::vector<LabelKind> kinds_b(kinds_b_set.begin(), kinds_b_set.end());

  std::sort(kinds_b.begin(), kinds_b.end());
  do {
    std::map<LabelKind, LabelKind> f;
    bool class_ok = true;
    for (size_t i = 0; i < kinds_a.size(); ++i) {
      if (label_has_param(kinds_a[i]) != label_has_param(kinds_b[i])) {
        class_ok = false;
        break;
      }
      f[kinds_a[i]] = kinds_b[i];
    }
    if (!class_ok) continue;
    auto map_label = [&f](const Label& l) { return Label{f.at(l.kind), l.param}; };
    if (map_label(a.root) != b.root) continue;

    std::set<Label> mapped_reach;
    for (const auto& l : reach_a) mapped_reach.insert(map_label(l));
    if (mapped_reach != reach_b) continue;

    bool all_match = true;
    for (const auto& l : reach_a) {
      auto kids_a = a.rule(l);
      for (auto& k : kids_a) k.label = map_label(k.label);
      if (sorted_children(std::move(kids_a)) != sorted_children(b.rule(map_label(l)))) {
        all_match = false;
        break;
      }
    }
    if (all_match) return f;
  } while (std::next_permutation(kinds_b.begin(), kinds_b.end()));
  return std::nullopt;
}

}  // namespace

bool label_has_param(LabelKind kind) {
  return kind == LabelKind::Plain || kind == LabelKind::A || kind == LabelKind::B;
}

std::string format_label(const Label& label) {
  switch (label.kind) {
    case LabelKind::T:
      return "[T]";
    case LabelKind::P:
      return "[P]";
    case LabelKind::Plain:
      return "[" + std::to_string(label.param) + "]";
    case LabelKind::A:
      return "[A," + std::to_string(label.param) + "]";
    case LabelKind::B:
      return "[B," + std::to_string(label.param) + "]";
  }
  return "[?]";
}

Label parse_label(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("label: expected brackets in '" + text + "'");
  LabelKind kind;
  bool has_range = false;
  LinExpr lo, hi;
  parse_label_body(s.substr(1, s.size() - 2), kind, has_range, lo, hi);
  if (has_range || lo.t_coef != 0)
    throw std::invalid_argument("label: '" + text + "' is not concrete");
  return Label{kind, label_has_param(kind) ? lo.constant : 0};
}

std::string format_child_spec(const ChildSpec& spec) {
  std::string out = format_label(spec.label);
  if (spec.delay > 1) out += "@" + std::to_string(spec.delay);
  return out;
}

SuccessionSystem parse_system(const std::string& text) {
  auto data = std::make_shared<SystemData>();
  SuccessionSystem system;
  bool have_root = false;
  std::stringstream ss(text);
  std::string statement;
  while (std::getline(ss, statement, ';')) {
    statement = trim(statement);
    if (statement.empty()) continue;
    size_t arrow = statement.find("->");
    if (arrow == std::string::npos) {
      size_t eq = statement.find('=');
      if (eq == std::string::npos || trim(statement.substr(0, eq)) != "root")
        throw std::invalid_argument("system: bad statement '" + statement + "'");
      system.root = parse_label(statement.substr(eq + 1));
      have_root = true;
      continue;
    }
    RuleCase rule_case;
    std::string lhs = trim(statement.substr(0, arrow));
    if (lhs.size() < 2 || lhs.front() != '[' || lhs.back() != ']')
      throw std::invalid_argument("system: bad rule head '" + lhs + "'");
    LabelKind kind;
    bool has_range = false;
    LinExpr lo, hi;
    parse_label_body(lhs.substr(1, lhs.size() - 2), kind, has_range, lo, hi);
    if (has_range)
      throw std::invalid_argument("system: rule head cannot be a range");
    if (!label_has_param(kind) || lo.t_coef == 0) {
      rule_case.concrete = true;
      rule_case.lhs = Label{kind, label_has_param(kind) ? lo.constant : 0};
    } else {
      if (lo.t_coef != 1 || lo.constant != 0)
        throw std::invalid_argument("system: rule head must be concrete or plain t");
      rule_case.concrete = false;
      rule_case.lhs_kind = kind;
    }
    for (const auto& part : split_top_level(statement.substr(arrow + 2)))
      rule_case.terms.push_back(parse_term(part));
    data->cases.push_back(std::move(rule_case));
  }
  if (!have_root) throw std::invalid_argument("system: missing root");
  system.rule = [data](const Label& label) -> std::vector<ChildSpec> {
    for (const auto& c : data->cases)
      if (c.concrete && c.lhs == label) return expand_terms(c.terms, label.param);
    for (const auto& c : data->cases)
      if (!c.concrete && c.lhs_kind == label.kind)
        return expand_terms(c.terms, label.param);
    throw std::invalid_argument("system: no rule for label " + format_label(label));
  };
  return system;
}

SuccessionSystem make_d1(const FineParams& pq) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (pq.q < 2)
    throw std::invalid_argument("make_d1: q must be at least 2");
  const int root_param = pq.p >= 1 ? pq.p : pq.q;
  std::string text = "root=[" + std::to_string(root_param) + "]; [T] -> [T],[3],[" +
                     std::to_string(pq.q) + "]@" + std::to_string(pq.q - 1) +
                     "; [t] -> [T],[3..t+1]";
  SuccessionSystem system = parse_system(text);
  system.name = "d1(" + std::to_string(pq.p) + "," + std::to_string(pq.q) + ")";
  return system;
}

SuccessionSystem builtin_system(const std::string& name) {
  std::string key = trim(name);
  for (char& c : key) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  static const std::map<std::string, std::string> table = {
      {"F1", "root=[2]; [T] -> [3],[T],[2]; [t] -> [t+1],[T],[3..t]"},
      {"F2", "root=[2]; [T] -> [T],[3],[2]; [t] -> [T],[3..t+1]"},
      {"F3", "root=[2]; [T] -> [T],[2],[3]; [t] -> [T],[3..t+1]"},
      {"DER", "root=[2]; [T] -> [T],[2],[3]; [t] -> [T],[3..t+1]"},
      {"H1", "root=[T]; [T] -> [T],[3],[3]@2; [t] -> [T],[3..t+1]"},
      {"H1STAR",
       "root=[A,2]; [A,t] -> [B,3..t+1],[A,t+1]; [B,t] -> [B,3..t],[A,1],[A,t]"},
      {"H2",
       "root=[A,2]; [A,t] -> [A,t+1],[B,3..t+1]; [B,t] -> [A,t],[B,3..t],[A,1]"},
      {"H3",
       "root=[A,2]; [A,t] -> [B,3..t+1],[A,t+1]; [B,t] -> [B,3..t],[A,1],[A,t]"},
      {"H4",
       "root=[A,2]; [A,t] -> [B,3..t+1],[A,t+1]; [B,t] -> [B,3..t],[A,t],[A,1]"},
      {"H3IC",
       "root=[A,2]; [P] -> [A,2]; [A,t] -> [B,t+1],[A,3..t+1]; "
       "[B,t] -> [B,3],[A,3],[P]^(t-2)"},
      {"H5",
       "root=[A,2]; [P] -> [A,2]; [A,t] -> [A,t+1],[B,t+1],[A,3..t]; "
       "[B,t] -> [A,3],[B,3],[P]^(t-2)"},
  };
  auto it = table.find(key);
  if (it == table.end())
    throw std::invalid_argument("unknown succession system '" + name + "'");
  SuccessionSystem system = parse_system(it->second);
  system.name = it->first;
  return system;
}

std::vector<std::string> builtin_system_names() {
  return {"F1", "F2", "F3", "DER", "H1", "H1STAR", "H2", "H3", "H4", "H3IC", "H5"};
}

ExpandResult expand(const SuccessionSystem& system, int depth) {
  if (depth < 0) throw std::invalid_argument("expand: negative depth");
  ExpandResult result;
  result.counts.assign(static_cast<size_t>(depth), BigInt(0));
  std::map<int, std::map<Label, BigInt>> arrivals;
  arrivals[1][system.root] = 1;
  for (int level = 1; level <= depth; ++level) {
    auto it = arrivals.find(level);
    if (it == arrivals.end()) continue;
    BigInt total = 0;
    for (const auto& [label, count] : it->second) {
      total += count;
      for (const auto& child : system.rule(label)) {
        if (level + child.delay <= depth)
          arrivals[level + child.delay][child.label] += count;
      }
    }
    result.counts[static_cast<size_t>(level - 1)] = total;
  }
  return result;
}

SuccessionSystem normalize(const SuccessionSystem& system) {
  SuccessionSystem out;
  out.name = system.name;
  out.root = system.root;
  auto inner = system.rule;
  out.rule = [inner](const Label& label) {
    auto v = inner(label);
    std::stable_sort(v.begin(), v.end());
    return v;
  };
  return out;
}

std::optional<RuleIsomorphism> rule_isomorphic(const SuccessionSystem& a,
                                               const SuccessionSystem& b,
                                               int depth) {
  auto f = find_kind_map(normalize(a), normalize(b), depth);
  if (!f) return std::nullopt;
  RuleIsomorphism iso;
  iso.kind_map = *f;
  return iso;
}

SuccessionSystem advance_root(const SuccessionSystem& system) {
  auto kids = system.rule(system.root);
  if (kids.size() != 1 || kids[0].delay != 1)
    throw std::invalid_argument(
        "advance_root: root must have exactly one immediate child");
  SuccessionSystem out = system;
  out.root = kids[0].label;
  return out;
}

std::optional<RuleIsomorphism> rule_isomorphic_shifted(
    const SuccessionSystem& a, const SuccessionSystem& b, int depth) {
  // Precompute the advanced variants; an advance can fail, which just rules
  // that shift out.
  std::vector<std::optional<SuccessionSystem>> va{a}, vb{b};
  for (int i = 1; i <= 2; ++i) {
    auto grow = [](std::vector<std::optional<SuccessionSystem>>& v) {
      if (!v.back()) {
        v.push_back(std::nullopt);
        return;
      }
      try {
        v.push_back(advance_root(*v.back()));
      } catch (const std::invalid_argument&) {
        v.push_back(std::nullopt);
      }
    };
    grow(va);
    grow(vb);
  }
  for (int total = 0; total <= 4; ++total) {
    for (int sa = 0; sa <= std::min(total, 2); ++sa) {
      int sb = total - sa;
      if (sb < 0 || sb > 2) continue;
      if (!va[static_cast<size_t>(sa)] || !vb[static_cast<size_t>(sb)]) continue;
      auto iso = rule_isomorphic(*va[static_cast<size_t>(sa)],
                                 *vb[static_cast<size_t>(sb)], depth);
      if (iso) {
        iso->shift_a = sa;
        iso->shift_b = sb;
        return iso;
      }
    }
  }
  return std::nullopt;
}

bool level_equiv(const SuccessionSystem& a, const SuccessionSystem& b,
                 int shift_a, int shift_b, int depth) {
  if (depth < 1 || shift_a < 0 || shift_b < 0)
    throw std::invalid_argument("level_equiv: bad arguments");
  const auto ca = expand(a, depth + shift_a).counts;
  const auto cb = expand(b, depth + shift_b).counts;
  for (int level = 1; level <= depth; ++level) {
    if (ca[static_cast<size_t>(level + shift_a - 1)] !=
        cb[static_cast<size_t>(level + shift_b - 1)])
      return false;
  }
  return true;
}

}  // namespace finetree
