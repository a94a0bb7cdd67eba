#include "psp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <utility>

#include "psp/errors.hpp"

namespace psp::oracle {
namespace {

struct LineKeyLess {
  bool operator()(const CostLine& a, const CostLine& b) const {
    if (a.c0 != b.c0) return a.c0 < b.c0;
    return a.c1 < b.c1;
  }
};

class PathEnumerator {
 public:
  PathEnumerator(const DualWeightGraph& graph, VertexId target)
      : graph_(graph), target_(target), on_path_(graph.vertex_count(), false) {}

  void run(VertexId source) {
    on_path_[source.index] = true;
    vertices_.push_back(source);
    visit(source);
  }

  LineSet take() { return std::move(out_); }

 private:
  void visit(VertexId v) {
    if (v == target_) {
      if (seen_.emplace(line_, out_.entries.size()).second) {
        out_.entries.push_back({line_, Path(edges_), vertices_});
      }
      return;
    }
    for (EdgeId id : graph_.out_edges(v)) {
      const Edge& e = graph_.edge(id);
      if (on_path_[e.head.index]) continue;
      on_path_[e.head.index] = true;
      edges_.push_back(id);
      vertices_.push_back(e.head);
      line_ += CostLine{e.w0, e.w1};
      visit(e.head);
      line_.c0 -= e.w0;
      line_.c1 -= e.w1;
      vertices_.pop_back();
      edges_.pop_back();
      on_path_[e.head.index] = false;
    }
  }

  const DualWeightGraph& graph_;
  VertexId target_;
  std::vector<bool> on_path_;
  std::vector<EdgeId> edges_;
  std::vector<VertexId> vertices_;
  CostLine line_;
  std::map<CostLine, std::size_t, LineKeyLess> seen_;
  LineSet out_;
};

}  // namespace

LineSet enumerate_paths(const DualWeightGraph& graph, VertexId source, VertexId target,
                        std::size_t vertex_bound) {
  if (graph.vertex_count() > vertex_bound) {
    throw OracleScaleError("graph has " + std::to_string(graph.vertex_count()) +
                           " vertices; oracle bound is " + std::to_string(vertex_bound));
  }
  if (!graph.contains(source) || !graph.contains(target)) {
    throw PreconditionError("source or target out of range");
  }
  PathEnumerator en(graph, target);
  en.run(source);
  return en.take();
}

std::vector<EnvelopeSegment> envelope_of_lines(const LineSet& lines) {
  if (lines.entries.empty()) throw EmptyInputError("no lines to take the envelope of");

  std::vector<const LineEntry*> order;
  for (const auto& e : lines.entries) order.push_back(&e);
  // Slope descending; among equal slopes the lowest line first.
  std::sort(order.begin(), order.end(), [](const LineEntry* a, const LineEntry* b) {
    const Rational sa = a->line.slope();
    const Rational sb = b->line.slope();
    if (sa != sb) return sa > sb;
    return a->line.c0 < b->line.c0;
  });

  // Lower envelope over the whole real line, left to right.
  std::vector<const LineEntry*> hull;
  for (const LineEntry* cand : order) {
    if (!hull.empty() && hull.back()->line.slope() == cand->line.slope()) continue;
    while (hull.size() >= 2) {
      const CostLine& a = hull[hull.size() - 2]->line;
      const CostLine& b = hull.back()->line;
      if (intersect_lines(a, cand->line) <= intersect_lines(a, b)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(cand);
  }

  // Clip each hull piece to [0, 1].
  std::vector<EnvelopeSegment> out;
  const Rational zero(0);
  const Rational one(1);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Rational lo = zero;
    Rational hi = one;
    if (i > 0) lo = std::max(lo, intersect_lines(hull[i - 1]->line, hull[i]->line));
    if (i + 1 < hull.size()) hi = std::min(hi, intersect_lines(hull[i]->line, hull[i + 1]->line));
    if (lo < hi) out.push_back({lo, hi, hull[i]->path, hull[i]->vertices, hull[i]->line});
  }
  return out;
}

std::optional<EnvelopeDifference> compare_envelopes(std::span<const EnvelopeSegment> a,
                                                    std::span<const EnvelopeSegment> b) {
  check_tiling({a.begin(), a.end()});
  check_tiling({b.begin(), b.end()});

  auto line_text = [](const CostLine& l) { return "(" + l.c0.str() + ", " + l.c1.str() + ")"; };
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i].line != b[i].line) {
      return EnvelopeDifference{i, "segment " + std::to_string(i) + " line " +
                                       line_text(a[i].line) + " vs " + line_text(b[i].line)};
    }
    if (a[i].hi != b[i].hi) {
      return EnvelopeDifference{i, "segment " + std::to_string(i) + " ends at " + a[i].hi.str() +
                                       " vs " + b[i].hi.str()};
    }
  }
  if (a.size() != b.size()) {
    return EnvelopeDifference{common, "segment counts differ: " + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size())};
  }
  return std::nullopt;
}

std::optional<Rational> plain_shortest_distance(const DualWeightGraph& graph,
                                                const Rational& lambda, VertexId source,
                                                VertexId target) {
  using Entry = std::pair<Rational, std::uint32_t>;
  std::vector<std::optional<Rational>> dist(graph.vertex_count());
  std::vector<bool> done(graph.vertex_count(), false);
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source.index] = Rational(0);
  heap.emplace(Rational(0), source.index);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == target.index) return d;
    for (EdgeId id : graph.out_edges(VertexId{u})) {
      const Edge& e = graph.edge(id);
      Rational nd = d + interpolate_weight(graph, id, lambda);
      if (!dist[e.head.index] || nd < *dist[e.head.index]) {
        dist[e.head.index] = nd;
        heap.emplace(std::move(nd), e.head.index);
      }
    }
  }
  return std::nullopt;
}

std::optional<DistSlopeLabel> lexicographic_extremum(const LineSet& lines,
                                                     const Rational& lambda, SlopeMode mode) {
  std::optional<DistSlopeLabel> best;
  for (const auto& e : lines.entries) {
    DistSlopeLabel label{e.line.value(lambda), e.line.slope()};
    if (!best) {
      best = std::move(label);
      continue;
    }
    const bool better =
        label.length < best->length ||
        (label.length == best->length &&
         (mode == SlopeMode::min_slope ? label.slope < best->slope : label.slope > best->slope));
    if (better) best = std::move(label);
  }
  return best;
}

std::optional<Rational> min_cost(const LineSet& lines, const Rational& lambda) {
  std::optional<Rational> best;
  for (const auto& e : lines.entries) {
    Rational v = e.line.value(lambda);
    if (!best || v < *best) best = std::move(v);
  }
  return best;
}

}  // namespace psp::oracle
