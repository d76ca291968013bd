#include "subshift/vershik.hpp"

#include <algorithm>
#include <set>

namespace subshift {

VershikMachine::VershikMachine(OrderedBratteliDiagram diagram, ClosingReport closing,
                               std::size_t depth_bound)
    : diagram_(std::move(diagram)), closing_(std::move(closing)), depth_bound_(depth_bound) {
  require(depth_bound_ >= 1, errc::precondition, "depth bound must be positive");
}

void VershikMachine::validate(const PathPrefix& p) const {
  require(p.depth() >= 1, errc::precondition, "empty path prefix");
  require(p.depth() <= depth_bound_, errc::precondition, "path prefix exceeds depth bound");
  const auto& edges = p.edges;
  require(edges[0].order_idx < diagram_.first_level[edges[0].vertex], errc::precondition,
          "level-1 edge index out of range");
  for (std::size_t n = 1; n < edges.size(); ++n) {
    const Word& in = diagram_.incoming(edges[n].vertex);
    require(edges[n].order_idx < in.size(), errc::precondition, "edge order index out of range");
    require(at(in, edges[n].order_idx) == edges[n - 1].vertex, errc::precondition,
            "path prefix breaks source/range chaining");
  }
}

PathPrefix VershikMachine::minimal_prefix(Letter top, std::size_t depth) const {
  require(depth >= 1 && depth <= depth_bound_, errc::precondition, "bad depth");
  PathPrefix p;
  p.edges.resize(depth);
  Letter v = top;
  for (std::size_t n = depth; n >= 2; --n) {
    p.edges[n - 1] = {v, 0};
    v = at(diagram_.incoming(v), 0);
  }
  p.edges[0] = {v, 0};
  return p;
}

PathPrefix VershikMachine::maximal_prefix(Letter top, std::size_t depth) const {
  require(depth >= 1 && depth <= depth_bound_, errc::precondition, "bad depth");
  PathPrefix p;
  p.edges.resize(depth);
  Letter v = top;
  for (std::size_t n = depth; n >= 2; --n) {
    const Word& in = diagram_.incoming(v);
    p.edges[n - 1] = {v, static_cast<std::uint32_t>(in.size() - 1)};
    v = back(in);
  }
  p.edges[0] = {v, static_cast<std::uint32_t>(diagram_.first_level[v] - 1)};
  return p;
}

bool VershikMachine::is_maximal(const PathPrefix& p) const {
  if (p.edges[0].order_idx + 1 != diagram_.first_level[p.edges[0].vertex]) return false;
  for (std::size_t n = 1; n < p.edges.size(); ++n)
    if (p.edges[n].order_idx + 1 != diagram_.degree(p.edges[n].vertex)) return false;
  return true;
}

bool VershikMachine::is_minimal(const PathPrefix& p) const {
  return std::all_of(p.edges.begin(), p.edges.end(),
                     [](const PathPrefix::Edge& e) { return e.order_idx == 0; });
}

PathPrefix VershikMachine::successor(const PathPrefix& p) const {
  validate(p);
  if (p.edges[0].order_idx + 1 < diagram_.first_level[p.edges[0].vertex]) {
    PathPrefix out = p;
    ++out.edges[0].order_idx;  // next parallel root edge, chain unchanged
    return out;
  }
  for (std::size_t n = 1; n < p.edges.size(); ++n) {
    const Word& in = diagram_.incoming(p.edges[n].vertex);
    if (p.edges[n].order_idx + 1 < in.size()) {
      PathPrefix out = p;
      ++out.edges[n].order_idx;
      Letter v = at(in, out.edges[n].order_idx);
      for (std::size_t m = n; m >= 2; --m) {  // minimal fill below the increment
        out.edges[m - 1] = {v, 0};
        v = at(diagram_.incoming(v), 0);
      }
      out.edges[0] = {v, 0};
      return out;
    }
  }
  // fully maximal: the level-1 vertex determines the maximal path
  Letter determining = p.edges[0].vertex;
  if (!closing_.closing) {
    std::string msg = "diagram is not closing; maximal prefix has no continuous successor";
    for (const auto& [v, ws] : closing_.witnesses) {
      msg += "; '" + diagram_.alphabet().name(v) + "' is followed by {";
      for (std::size_t i = 0; i < ws.size(); ++i)
        msg += (i ? "," : "") + diagram_.alphabet().name(ws[i]);
      msg += "}";
    }
    fail(errc::precondition, msg);
  }
  auto it = closing_.pairing.find(determining);
  require(it != closing_.pairing.end(), errc::precondition,
          "maximal prefix descends to '" + diagram_.alphabet().name(determining) +
              "', which determines no maximal path (diagram not normalized?)");
  return minimal_prefix(it->second, p.depth());
}

PathPrefix VershikMachine::predecessor(const PathPrefix& p) const {
  validate(p);
  require(!is_minimal(p), errc::precondition, "minimal prefix has no representable predecessor");
  if (p.edges[0].order_idx > 0) {
    PathPrefix out = p;
    --out.edges[0].order_idx;
    return out;
  }
  for (std::size_t n = 1; n < p.edges.size(); ++n) {
    if (p.edges[n].order_idx == 0) continue;
    PathPrefix out = p;
    --out.edges[n].order_idx;
    Letter v = at(diagram_.incoming(p.edges[n].vertex), out.edges[n].order_idx);
    for (std::size_t m = n; m >= 2; --m) {  // maximal fill below the decrement
      const Word& in = diagram_.incoming(v);
      out.edges[m - 1] = {v, static_cast<std::uint32_t>(in.size() - 1)};
      v = back(in);
    }
    out.edges[0] = {v, static_cast<std::uint32_t>(diagram_.first_level[v] - 1)};
    return out;
  }
  fail(errc::precondition, "unreachable");
}

Word VershikMachine::orbit_labels(const PathPrefix& start, std::size_t count) const {
  validate(start);
  require(count >= 1, errc::precondition, "count must be positive");
  Word out;
  out.reserve(count);
  std::set<PathPrefix> wrapped;  // maximal prefixes already stepped through
  PathPrefix cur = start;
  for (std::size_t step = 0; step < count; ++step) {
    out += word_of(cur.edges[0].vertex);
    if (step + 1 == count) break;
    if (is_maximal(cur)) {
      if (!wrapped.insert(cur).second)
        fail(errc::precondition,
             "orbit left the representable depth at step " + std::to_string(step + 1) +
                 " (wrapped past the same maximal prefix twice)");
    }
    cur = successor(cur);
  }
  return out;
}

std::vector<PathPrefix> VershikMachine::sweep(Letter start_top, std::size_t depth) const {
  require(closing_.closing, errc::precondition, "sweep requires a closing diagram");
  std::vector<PathPrefix> out;
  const std::size_t d = diagram_.vertex_count();
  for (std::size_t i = 0; i < d; ++i) {
    Letter top = static_cast<Letter>((start_top + i) % d);
    PathPrefix cur = minimal_prefix(top, depth);
    for (;;) {
      out.push_back(cur);
      if (is_maximal(cur)) break;
      cur = successor(cur);
    }
  }
  return out;
}

}  // namespace subshift
