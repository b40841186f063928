#include "vpg/normalize.hpp"

#include <algorithm>
#include <map>

#include "vpg/errors.hpp"
#include "vpg/graph.hpp"

namespace vpg {

namespace {

struct Contact {
  GridPoint at;
  std::size_t other;
};

bool inside(const GridPoint& q, const GridPoint& a, const GridPoint& b) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
         q.y <= std::max(a.y, b.y);
}

bool strictly_inside(const GridPoint& q, const GridPoint& a, const GridPoint& b) {
  return inside(q, a, b) && q != a && q != b;
}

// Contacts per path for a 0-bend representation; two such paths share at
// most one point unless they share a grid-edge.
std::vector<std::vector<Contact>> contacts_of(const GridRep& r) {
  const auto index = build_intersection_index(r);
  std::vector<std::vector<Contact>> out(r.size());
  for (const auto& [key, entry] : index.pairs) out[key.first].push_back({entry.first, key.second});
  return out;
}

void require_b0cpg(const GridRep& r) {
  if (r.flavor() != Flavor::CPG) throw PreconditionError("representation is not CPG");
  for (const auto& p : r.paths()) {
    if (p.bends() != 0) throw PreconditionError("path " + p.id() + " has bends");
  }
  const auto contacts = contacts_of(r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& p = r.path(i);
    for (const auto& c : contacts[i]) {
      const auto& q = r.path(c.other);
      if (strictly_inside(c.at, p.front(), p.back()) && strictly_inside(c.at, q.front(), q.back())) {
        throw PreconditionError("paths " + p.id() + " and " + q.id() + " cross");
      }
    }
  }
  const auto flags = structural_checks(intersection_graph(r));
  if (!flags.subcubic) throw PreconditionError("graph is not subcubic");
  if (!flags.triangle_free) throw PreconditionError("graph has a triangle");
}

GridPoint step_toward(const GridPoint& from, const GridPoint& to) {
  GridPoint s = from;
  if (to.x != from.x) s.x += to.x > from.x ? 1 : -1;
  else s.y += to.y > from.y ? 1 : -1;
  return s;
}

// Degree-0 and degree-1 paths become the unit piece at their contact (or at
// their first endpoint when isolated).
void shorten_short_paths(std::vector<std::pair<GridPoint, GridPoint>>& seg,
                         const std::vector<std::vector<Contact>>& contacts) {
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (contacts[i].size() > 1) continue;
    auto& [a, b] = seg[i];
    if (contacts[i].empty()) {
      b = step_toward(a, b);
      continue;
    }
    const GridPoint f = contacts[i].front().at;
    if (f == b) {
      a = step_toward(b, a);
    } else {
      if (f != a) a = f;
      b = step_toward(a, b);
    }
  }
}

}  // namespace

GridRep normalize_b0cpg(const GridRep& r, int min_len) {
  if (min_len != 4 && min_len != 5) throw PreconditionError("min_len must be 4 or 5");
  require_b0cpg(r);
  const auto contacts = contacts_of(r);
  const auto index = build_intersection_index(r);

  std::vector<std::pair<GridPoint, GridPoint>> seg;
  for (std::size_t i = 0; i < r.size(); ++i) {
    GridPoint a = r.path(i).front();
    GridPoint b = r.path(i).back();
    if (contacts[i].size() >= 2) {
      a = *index.first_point[i];
      b = *index.last_point[i];
    }
    seg.emplace_back(a, b);
  }
  shorten_short_paths(seg, contacts);

  // Length requirements as (left x, right x) pairs.
  std::vector<std::pair<std::int64_t, std::int64_t>> need;
  std::vector<std::int64_t> xs;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const auto& [a, b] = seg[i];
    xs.push_back(a.x);
    xs.push_back(b.x);
    if (a.y != b.y || contacts[i].size() < 2) continue;
    const std::int64_t lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
    if (contacts[i].size() == 2) {
      need.emplace_back(lo, hi);
    } else {
      for (const auto& c : contacts[i]) {
        if (c.at.x > lo && c.at.x < hi) {
          need.emplace_back(lo, c.at.x);
          need.emplace_back(c.at.x, hi);
        }
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(need.begin(), need.end(), [](const auto& u, const auto& v) { return u.second < v.second; });

  std::map<std::int64_t, std::int64_t> place;
  std::size_t k = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::int64_t at = i == 0 ? 0 : place[xs[i - 1]] + 1;
    for (; k < need.size() && need[k].second == xs[i]; ++k) {
      at = std::max(at, place[need[k].first] + min_len);
    }
    place[xs[i]] = at;
  }
  for (auto& [a, b] : seg) {
    a.x = place[a.x];
    b.x = place[b.x];
  }
  auto moved = contacts;
  for (auto& list : moved) {
    for (auto& c : list) c.at.x = place.at(c.at.x);
  }
  shorten_short_paths(seg, moved);

  std::vector<GridPath> paths;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    paths.emplace_back(r.path(i).id(), std::vector<GridPoint>{seg[i].first, seg[i].second});
  }
  return GridRep(r.grid_step(), Flavor::CPG, std::move(paths));
}

std::vector<std::string> normalization_audit(const GridRep& r, int min_len) {
  std::vector<std::string> out;
  try {
    require_b0cpg(r);
  } catch (const PreconditionError& e) {
    out.push_back(e.what());
    return out;
  }
  const auto n = static_cast<std::int64_t>(r.size());
  if (n > 0 && column_count(r) > (2 * n - 1) * min_len + 1) {
    out.push_back("(a) " + std::to_string(column_count(r)) + " columns");
  }
  const auto contacts = contacts_of(r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& p = r.path(i);
    const std::size_t degree = contacts[i].size();
    bool holds_endpoint = false;
    for (const auto& c : contacts[i]) {
      const auto& q = r.path(c.other);
      if ((c.at == q.front() || c.at == q.back()) && strictly_inside(c.at, p.front(), p.back())) {
        holds_endpoint = true;
      }
    }
    if (holds_endpoint != (degree == 3)) out.push_back("(b) " + p.id());
    if (degree <= 1 && p.length() != 1) out.push_back("(e) " + p.id());
    if (!p.is_horizontal() || degree < 2) continue;
    const std::int64_t lo = std::min(p.front().x, p.back().x), hi = std::max(p.front().x, p.back().x);
    if (degree == 2 && hi - lo < min_len) out.push_back("(c) " + p.id());
    if (degree == 3) {
      for (const auto& c : contacts[i]) {
        if (c.at.x > lo && c.at.x < hi && (c.at.x - lo < min_len || hi - c.at.x < min_len)) {
          out.push_back("(d) " + p.id());
        }
      }
    }
  }
  return out;
}

}  // namespace vpg
