#include "finetree/bijection.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "finetree/errors.hpp"

namespace finetree {

namespace {

std::string strip_brackets(const std::string& s) {
  return s.substr(1, s.size() - 2);
}

std::string sym_op_name(SymOp op) {
  switch (op) {
    case SymOp::mirror:
      return "mirror";
    case SymOp::complement:
      return "complement";
    case SymOp::inverse:
      return "inverse";
  }
  return "?";
}

int tree_level_of(const FamilySpec& spec, const FamilyNode& node) {
  switch (spec.kind) {
    case FamilyKind::Pattern:
      return node.perm.size();
    case FamilyKind::Derangement:
      return node.perm.size() - 1;
    case FamilyKind::WordTree: {
      const int len = static_cast<int>(node.word.size());
      return spec.word_params.p >= 1 ? len - spec.word_params.p + 1 : len + 1;
    }
  }
  throw std::logic_error("bad family kind");
}

int route_shift(const std::string& name) { return name == "WORDS(1,3)" ? 1 : 0; }

const std::vector<std::vector<std::string>>& route_classes() {
  static const std::vector<std::vector<std::string>> classes = {
      {"F1", "F2", "F3", "DER", "WORDS(0,2)"},
      {"H1", "WORDS(1,3)"},
      {"H1STAR", "H2", "H3", "H4"},
      {"H3IC", "H5"},
  };
  return classes;
}

bool in_class(const std::vector<std::string>& cls, const std::string& name) {
  return std::find(cls.begin(), cls.end(), name) != cls.end();
}

}  // namespace

std::string format_tree_path(const TreePath& path) {
  if (path.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += "/";
    out += strip_brackets(format_label(path[i].label));
    if (path[i].delay > 1) out += "@" + std::to_string(path[i].delay);
    if (path[i].occ > 1) out += "#" + std::to_string(path[i].occ);
  }
  return out;
}

TreePath parse_tree_path(const std::string& text) {
  if (text.empty() || text == "-") return {};
  TreePath path;
  std::stringstream ss(text);
  std::string seg;
  while (std::getline(ss, seg, '/')) {
    StepKey step;
    size_t hash = seg.find('#');
    if (hash != std::string::npos) {
      step.occ = std::stoi(seg.substr(hash + 1));
      seg = seg.substr(0, hash);
    }
    size_t at = seg.find('@');
    if (at != std::string::npos) {
      step.delay = std::stoi(seg.substr(at + 1));
      seg = seg.substr(0, at);
    }
    step.label = parse_label("[" + seg + "]");
    if (step.delay < 1 || step.occ < 1)
      throw std::invalid_argument("bad path step '" + seg + "'");
    path.push_back(step);
  }
  return path;
}

TreeIndex::TreeIndex(const FamilySpec& spec, int depth)
    : spec_(spec), depth_(depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  struct Pending {
    FamilyNode node;
    Loc parent;
    StepKey key;
    bool is_root = false;
  };
  std::map<int, std::vector<Pending>> pending;
  pending[1].push_back({root_node(spec_), {}, {}, true});
  levels_.resize(static_cast<size_t>(depth));
  for (int level = 1; level <= depth; ++level) {
    for (const Pending& entry : pending[level]) {
      Loc loc{level, static_cast<int>(levels_[static_cast<size_t>(level - 1)].size())};
      levels_[static_cast<size_t>(level - 1)].push_back(entry.node);
      if (!locate_.emplace(entry.node, loc).second)
        throw std::logic_error("duplicate node in tree: " +
                               format_node(entry.node, spec_));
      if (!entry.is_root) {
        parent_[loc] = {entry.parent, entry.key};
        child_[{entry.parent, entry.key}] = loc;
      }
    }
    if (level == depth) break;
    const auto& row = levels_[static_cast<size_t>(level - 1)];
    for (int pos = 0; pos < static_cast<int>(row.size()); ++pos) {
      Loc ploc{level, pos};
      std::map<std::pair<Label, int>, int> seen;
      for (const FamilyChild& kid : children_of(row[static_cast<size_t>(pos)], spec_)) {
        const int occ = ++seen[{kid.spec.label, kid.spec.delay}];
        if (level + kid.spec.delay <= depth)
          pending[level + kid.spec.delay].push_back(
              {kid.node, ploc, {kid.spec.label, kid.spec.delay, occ}, false});
      }
    }
  }
}

FamilyNode TreeIndex::at(const Loc& loc) const {
  return levels_[static_cast<size_t>(loc.level - 1)][static_cast<size_t>(loc.pos)];
}

TreeIndex::Loc TreeIndex::sole_child(const Loc& loc) const {
  const StepKey lowest{Label{LabelKind::Plain, INT_MIN}, INT_MIN, INT_MIN};
  auto it = child_.lower_bound({loc, lowest});
  if (it == child_.end() || !(it->first.first == loc))
    throw std::invalid_argument("forced step below a leaf");
  const Loc next = it->second;
  if (it->first.second.delay != 1)
    throw std::invalid_argument("forced step is delayed");
  ++it;
  if (it != child_.end() && it->first.first == loc)
    throw std::invalid_argument("forced step is ambiguous");
  return next;
}

int TreeIndex::level_of(const FamilyNode& node) const {
  auto it = locate_.find(node);
  if (it == locate_.end())
    throw std::invalid_argument("node not in tree: " + format_node(node, spec_));
  return it->second.level;
}

TreePath TreeIndex::encode(const FamilyNode& node) const {
  auto it = locate_.find(node);
  if (it == locate_.end())
    throw std::invalid_argument("node not in tree: " + format_node(node, spec_));
  TreePath path;
  Loc loc = it->second;
  while (!(loc == Loc{1, 0})) {
    const auto& [parent, key] = parent_.at(loc);
    path.push_back(key);
    loc = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

FamilyNode TreeIndex::decode(const TreePath& path, int start_singletons) const {
  Loc loc{1, 0};
  for (int s = 0; s < start_singletons; ++s) loc = sole_child(loc);
  for (const StepKey& step : path) {
    auto it = child_.find({loc, step});
    if (it == child_.end())
      throw std::invalid_argument("no node along path " + format_tree_path(path));
    loc = it->second;
  }
  return at(loc);
}

std::optional<TransportRoute> find_route(const FamilySpec& from,
                                         const FamilySpec& to) {
  TransportRoute route;
  if (from.name == to.name) {
    route.shift_from = route.shift_to = 0;
    return route;
  }
  for (const auto& cls : route_classes()) {
    if (in_class(cls, from.name) && in_class(cls, to.name)) {
      route.shift_from = route_shift(from.name);
      route.shift_to = route_shift(to.name);
      return route;
    }
  }
  // The one registered non-tree bijection: a symmetry of the square carries
  // one of these two classes onto the other. The operation is detected, not
  // assumed.
  const bool symmetry_pair =
      (from.name == "H1" && to.name == "H1STAR") ||
      (from.name == "H1STAR" && to.name == "H1");
  if (symmetry_pair) {
    static const std::vector<std::vector<SymOp>> candidates = {
        {SymOp::mirror},
        {SymOp::complement},
        {SymOp::inverse},
        {SymOp::mirror, SymOp::complement},
        {SymOp::mirror, SymOp::inverse},
        {SymOp::complement, SymOp::inverse},
        {SymOp::mirror, SymOp::complement, SymOp::inverse},
    };
    for (const auto& ops : candidates) {
      if (same_pattern_set(symmetry_set(from.patterns, ops), to.patterns)) {
        route.kind = TransportRoute::Kind::Symmetry;
        route.ops = ops;
        return route;
      }
    }
  }
  return std::nullopt;
}

FamilyNode transport(const FamilyNode& node, const FamilySpec& from,
                     const FamilySpec& to) {
  auto route = find_route(from, to);
  if (!route)
    throw unsupported_pair_error("no transport route from " + from.name +
                                 " to " + to.name);
  if (route->kind == TransportRoute::Kind::Symmetry)
    return {symmetry(node.perm, route->ops), {}};
  const int level_from = tree_level_of(from, node);
  const int reduced = level_from - route->shift_from;
  if (reduced < 1)
    throw std::invalid_argument("node " + format_node(node, from) +
                                " has no counterpart in " + to.name);
  TreeIndex from_index(from, level_from);
  TreeIndex to_index(to, reduced + route->shift_to);
  return transport_indexed(from_index, to_index, *route, node);
}

FamilyNode transport_indexed(const TreeIndex& from, const TreeIndex& to,
                             const TransportRoute& route,
                             const FamilyNode& node) {
  if (route.kind == TransportRoute::Kind::Symmetry)
    return {symmetry(node.perm, route.ops), {}};
  TreePath path = from.encode(node);
  int stripped_levels = 0;
  for (int i = 0; i < route.shift_from; ++i) {
    if (path.empty())
      throw std::invalid_argument("node " + format_node(node, from.spec()) +
                                  " has no counterpart in " + to.spec().name);
    stripped_levels += path.front().delay;
    path.erase(path.begin());
  }
  if (stripped_levels != route.shift_from)
    throw std::invalid_argument("path does not align across the level shift");
  return to.decode(path, route.shift_to);
}

BijectionReport verify_bijection(const TreeIndex& from, const TreeIndex& to,
                                 int depth) {
  auto route = find_route(from.spec(), to.spec());
  if (!route)
    throw unsupported_pair_error("no transport route from " + from.spec().name +
                                 " to " + to.spec().name);
  auto back = find_route(to.spec(), from.spec());
  if (!back) throw unsupported_pair_error("no reverse transport route");

  BijectionReport report;
  report.from = from.spec().name;
  report.to = to.spec().name;
  report.depth = depth;
  const size_t kMaxViolations = 12;
  auto add = [&report, kMaxViolations](const std::string& v) {
    if (report.violations.size() < kMaxViolations) report.violations.push_back(v);
  };

  for (int r = 1; r <= depth; ++r) {
    const int lf = r + route->shift_from;
    const int lt = r + route->shift_to;
    if (lf > from.depth() || lt > to.depth())
      throw std::invalid_argument("tree not deep enough for requested depth");
    const auto& a_nodes = from.levels()[static_cast<size_t>(lf - 1)];
    const auto& b_nodes = to.levels()[static_cast<size_t>(lt - 1)];
    BijectionLevelCheck row;
    row.level_from = lf;
    row.level_to = lt;
    row.count_from = static_cast<int>(a_nodes.size());
    row.count_to = static_cast<int>(b_nodes.size());
    row.ok = a_nodes.size() == b_nodes.size();
    report.levels.push_back(row);
    if (!row.ok)
      add("levels " + std::to_string(lf) + "/" + std::to_string(lt) +
          ": counts differ");

    std::set<FamilyNode> targets(b_nodes.begin(), b_nodes.end());
    std::set<FamilyNode> hit;
    for (const FamilyNode& a : a_nodes) {
      FamilyNode b;
      try {
        b = transport_indexed(from, to, *route, a);
      } catch (const std::exception& e) {
        add("node " + format_node(a, from.spec()) + ": " + e.what());
        continue;
      }
      if (!targets.count(b))
        add("node " + format_node(a, from.spec()) + " maps outside level " +
            std::to_string(lt));
      if (!hit.insert(b).second)
        add("not injective at " + format_node(b, to.spec()));
      if (route->kind == TransportRoute::Kind::Tree &&
          !(label_of(a, from.spec()) == label_of(b, to.spec())))
        add("label changes across " + format_node(a, from.spec()) + " -> " +
            format_node(b, to.spec()));
      try {
        FamilyNode aa = transport_indexed(to, from, *back, b);
        if (!(aa == a))
          add("round trip moves " + format_node(a, from.spec()) + " to " +
              format_node(aa, from.spec()));
      } catch (const std::exception& e) {
        add("round trip failed at " + format_node(b, to.spec()) + ": " +
            e.what());
      }
    }
    if (hit.size() != targets.size()) {
      std::vector<FamilyNode> missed;
      std::set_difference(targets.begin(), targets.end(), hit.begin(),
                          hit.end(), std::back_inserter(missed));
      if (!missed.empty())
        add("not onto: " + format_node(missed.front(), to.spec()) +
            " never hit");
    }
  }

  if (route->kind == TransportRoute::Kind::Tree) {
    report.notes.push_back(
        "tree route: paths matched by label, delay, and occurrence; source "
        "levels shifted by " +
        std::to_string(route->shift_from) + ", target by " +
        std::to_string(route->shift_to));
  } else {
    std::string ops;
    for (SymOp op : route->ops) {
      if (!ops.empty()) ops += ",";
      ops += sym_op_name(op);
    }
    report.notes.push_back("symmetry route (" + ops +
                           "); labels not compared");
  }

  bool rows_ok = true;
  for (const auto& row : report.levels) rows_ok = rows_ok && row.ok;
  report.ok = rows_ok && report.violations.empty();
  return report;
}

BijectionReport verify_bijection(const FamilySpec& from, const FamilySpec& to,
                                 int depth) {
  auto route = find_route(from, to);
  if (!route)
    throw unsupported_pair_error("no transport route from " + from.name +
                                 " to " + to.name);
  TreeIndex from_index(from, depth + route->shift_from);
  TreeIndex to_index(to, depth + route->shift_to);
  return verify_bijection(from_index, to_index, depth);
}

std::string format_bijection_report(const BijectionReport& report) {
  std::ostringstream out;
  out << "from: " << report.from << "\n";
  out << "to: " << report.to << "\n";
  out << "depth: " << report.depth << "\n";
  for (const auto& row : report.levels)
    out << "level " << row.level_from << "/" << row.level_to << ": "
        << row.count_from << " vs " << row.count_to
        << (row.ok ? " ok" : " MISMATCH") << "\n";
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "result: " << (report.ok ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace finetree
