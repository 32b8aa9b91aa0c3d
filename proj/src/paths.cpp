#include "finetree/paths.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace finetree {

namespace {

// Walks the steps, returning -1 on a dip below zero, else the final height.
int final_height(const std::string& steps) {
  int h = 0;
  for (char c : steps) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return -1;
  }
  return h;
}

}  // namespace

int DyckPath::semilength() const {
  int ups = 0;
  for (char c : steps)
    if (c == 'U') ++ups;
  return ups;
}

DyckPath parse_path(const std::string& text) {
  DyckPath path;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'U' && u != 'D')
      throw std::invalid_argument(std::string("path: bad step '") + c + "'");
    path.steps += u;
  }
  if (!validate_path(path))
    throw std::invalid_argument("path: does not stay at or above zero and end at zero");
  return path;
}

std::string format_path(const DyckPath& path) { return path.steps; }

bool validate_path(const DyckPath& path) {
  for (char c : path.steps)
    if (c != 'U' && c != 'D') return false;
  return final_height(path.steps) == 0;
}

int first_rise(const DyckPath& path) {
  int r = 0;
  while (r < static_cast<int>(path.steps.size()) &&
         path.steps[static_cast<size_t>(r)] == 'U')
    ++r;
  return r;
}

std::vector<DyckPath> path_components(const DyckPath& path) {
  if (!validate_path(path)) throw std::invalid_argument("path: invalid");
  std::vector<DyckPath> comps;
  int h = 0;
  size_t start = 0;
  for (size_t i = 0; i < path.steps.size(); ++i) {
    h += path.steps[i] == 'U' ? 1 : -1;
    if (h == 0) {
      comps.push_back(DyckPath{path.steps.substr(start, i + 1 - start)});
      start = i + 1;
    }
  }
  return comps;
}

DyckPath word_to_path(const Word& w) {
  if (!validate_similarity_word(w))
    throw std::invalid_argument("word_to_path: not a similarity word");
  DyckPath path;
  path.steps += 'U';
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - 1]) {
      path.steps += 'U';
    } else {
      path.steps.append(static_cast<size_t>(w[i - 1] - w[i] + 1), 'D');
      path.steps += 'U';
    }
  }
  path.steps.append(static_cast<size_t>(w.back() + 1), 'D');
  assert(validate_path(path));
  return path;
}

Word path_to_word(const DyckPath& path) {
  if (!validate_path(path)) throw std::invalid_argument("path_to_word: invalid path");
  Word w;
  int h = 0;
  for (char c : path.steps) {
    if (c == 'U') {
      ++h;
      w.push_back(h - 1);
    } else {
      --h;
    }
  }
  return w;
}

Word path_to_word(const DyckPath& path, const FineParams& pq) {
  Word w = path_to_word(path);
  if (!validate_fine_word(w, pq))
    throw std::invalid_argument("path_to_word: word fails the (p, q) conditions");
  return w;
}

DyckPath first_rise_transform(const DyckPath& path, const FineParams& pq) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (!validate_path(path) || path.steps.empty())
    throw std::invalid_argument("first_rise_transform: invalid or empty path");
  const auto comps = path_components(path);
  const int p = pq.p;
  const int q = pq.q;

  // The opening rise of every later component (every component, for p = 0)
  // is at least q; its first q ups move to the front. The first component
  // of a p >= 1 path contributes its interior, which goes last so distinct
  // inputs stay distinguishable.
  std::string image;
  if (p >= 1) {
    if (first_rise(comps[0]) < p)
      throw std::invalid_argument("first_rise_transform: first component rises less than p");
    for (size_t i = 1; i < comps.size(); ++i) {
      if (first_rise(comps[i]) < q)
        throw std::invalid_argument("first_rise_transform: component rises less than q");
    }
    const int k = static_cast<int>(comps.size()) - 1;
    image.append(static_cast<size_t>(k * q + p), 'U');
    image += 'D';
    for (size_t i = 1; i < comps.size(); ++i)
      image += comps[i].steps.substr(static_cast<size_t>(q));
    image += comps[0].steps.substr(static_cast<size_t>(p),
                                   comps[0].steps.size() - static_cast<size_t>(p) - 1);
  } else {
    for (const auto& c : comps) {
      if (first_rise(c) < q)
        throw std::invalid_argument("first_rise_transform: component rises less than q");
    }
    const int k = static_cast<int>(comps.size());
    image.append(static_cast<size_t>(k * q), 'U');
    image += 'D';
    for (size_t i = 1; i < comps.size(); ++i)
      image += comps[i].steps.substr(static_cast<size_t>(q));
    image += comps[0].steps.substr(static_cast<size_t>(q),
                                   comps[0].steps.size() - static_cast<size_t>(q) - 1);
  }
  DyckPath out{image};
  assert(validate_path(out));
  assert(first_rise(out) % q == p % q);
  return out;
}

DyckPath first_rise_untransform(const DyckPath& path, const FineParams& pq) {
  if (!params_valid(pq)) throw std::invalid_argument("invalid (p, q) parameters");
  if (!validate_path(path) || path.steps.empty())
    throw std::invalid_argument("first_rise_untransform: invalid or empty path");
  const int p = pq.p;
  const int q = pq.q;
  const int f = first_rise(path);
  if (f < p || (f - p) % q != 0)
    throw std::invalid_argument("first_rise_untransform: first rise is not kq + p");
  const int k = (f - p) / q;
  if (p == 0 && k == 0)
    throw std::invalid_argument("first_rise_untransform: first rise is zero");
  const std::string rest = path.steps.substr(static_cast<size_t>(f) + 1);

  // Cut at the first passage down to each target height; the piece between
  // consecutive cuts is one component interior.
  const int cuts = p >= 1 ? k : k - 1;
  std::vector<std::string> pieces;
  std::string tail;
  {
    int h = f - 1;
    size_t start = 0;
    int next = 0;
    for (size_t i = 0; i < rest.size() && next < cuts; ++i) {
      h += rest[i] == 'U' ? 1 : -1;
      const int target = p >= 1 ? (k - 1 - next) * q + p - 1
                                : (k - 2 - next + 1) * q - 1;
      if (h == target) {
        pieces.push_back(rest.substr(start, i + 1 - start));
        start = i + 1;
        ++next;
      }
    }
    if (next < cuts)
      throw std::invalid_argument("first_rise_untransform: interior does not decompose");
    tail = rest.substr(start);
  }

  std::string out;
  if (p >= 1) {
    out.append(static_cast<size_t>(p), 'U');
    out += tail;
    out += 'D';
    for (const auto& piece : pieces) {
      out.append(static_cast<size_t>(q), 'U');
      out += piece;
    }
  } else {
    out.append(static_cast<size_t>(q), 'U');
    out += tail;
    out += 'D';
    for (const auto& piece : pieces) {
      out.append(static_cast<size_t>(q), 'U');
      out += piece;
    }
  }
  DyckPath result{out};
  if (!validate_path(result))
    throw std::invalid_argument("first_rise_untransform: interior does not decompose");
  return result;
}

}  // namespace finetree
