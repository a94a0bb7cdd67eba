#include "psp/envelope.hpp"

#include <atomic>
#include <deque>
#include <exception>
#include <thread>

#include "psp/errors.hpp"
#include "psp/slope_dijkstra.hpp"

namespace psp {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct IntervalNode {
  Rational s;
  Rational t;
  LinePath at_s;
  LinePath at_t;
  std::size_t depth = 0;
  std::size_t left = kNone;
  std::size_t right = kNone;
};

/// Outcome of examining one interval: either at_s is optimal on all of it, or
/// it splits at `r` with the max-slope (left) and min-slope (right) shortest
/// paths found there.
struct Expansion {
  bool leaf = true;
  Rational r;
  LinePath left;
  LinePath right;
};

class IntervalExpander {
 public:
  IntervalExpander(const DualWeightGraph& graph, VertexId source, VertexId target)
      : graph_(graph), source_(source), target_(target) {}

  Expansion expand(const IntervalNode& node) {
    if (node.at_s.line.value(node.t) == node.at_t.line.value(node.t)) return {};

    if (!(node.at_s.line.slope() > node.at_t.line.slope())) {
      throw InternalError("endpoint lines on [" + node.s.str() + ", " + node.t.str() +
                          "] do not cross inside the interval");
    }
    Expansion out;
    out.leaf = false;
    out.r = intersect_lines(node.at_s.line, node.at_t.line);
    if (!(node.s < out.r && out.r < node.t)) {
      throw InternalError("split point " + out.r.str() + " not inside (" + node.s.str() + ", " +
                          node.t.str() + ")");
    }
    out.left = shortest(out.r, SlopeMode::max_slope);
    out.right = shortest(out.r, SlopeMode::min_slope);
    return out;
  }

  LinePath shortest(const Rational& lambda, SlopeMode mode) {
    ExtremeSlopePath found = dijkstra_extreme_slope(graph_, lambda, source_, target_, mode);
    calls_.fetch_add(1, std::memory_order_relaxed);
    CostLine line = cost_line(graph_, found.path);
    return {std::move(found.path), std::move(line)};
  }

  std::size_t calls() const { return calls_.load(); }

 private:
  const DualWeightGraph& graph_;
  VertexId source_;
  VertexId target_;
  std::atomic<std::size_t> calls_{0};
};

void attach_children(std::deque<IntervalNode>& nodes, std::size_t parent, Expansion&& ex) {
  IntervalNode left{nodes[parent].s, ex.r, nodes[parent].at_s, std::move(ex.left),
                    nodes[parent].depth + 1};
  IntervalNode right{ex.r, nodes[parent].t, std::move(ex.right), nodes[parent].at_t,
                     nodes[parent].depth + 1};
  nodes[parent].left = nodes.size();
  nodes.push_back(std::move(left));
  nodes[parent].right = nodes.size();
  nodes.push_back(std::move(right));
}

void expand_serial(std::deque<IntervalNode>& nodes, IntervalExpander& expander) {
  std::vector<std::size_t> work{0};
  while (!work.empty()) {
    const std::size_t id = work.back();
    work.pop_back();
    Expansion ex = expander.expand(nodes[id]);
    if (ex.leaf) continue;
    attach_children(nodes, id, std::move(ex));
    work.push_back(nodes[id].right);
    work.push_back(nodes[id].left);
  }
}

// Level-synchronous: every interval of one depth is expanded in parallel, then
// children are attached in a fixed order. The tree is the same as serially.
void expand_parallel(std::deque<IntervalNode>& nodes, IntervalExpander& expander,
                     std::size_t threads) {
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<Expansion> results(level.size());
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < level.size(); i += threads) {
              results[i] = expander.expand(nodes[level[i]]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (results[i].leaf) continue;
      attach_children(nodes, level[i], std::move(results[i]));
      next.push_back(nodes[level[i]].left);
      next.push_back(nodes[level[i]].right);
    }
    level = std::move(next);
  }
}

}  // namespace

ShortestPathIndex::ShortestPathIndex(VertexId source, VertexId target,
                                     std::vector<EnvelopeSegment> segments)
    : source_(source), target_(target), segments_(std::move(segments)) {
  check_tiling(segments_);
}

void check_tiling(const std::vector<EnvelopeSegment>& segments) {
  if (segments.empty()) throw StructureError("envelope has no segments");
  if (segments.front().lo != Rational(0)) {
    throw StructureError("first segment starts at " + segments.front().lo.str() + ", not 0");
  }
  if (segments.back().hi != Rational(1)) {
    throw StructureError("last segment ends at " + segments.back().hi.str() + ", not 1");
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].lo < segments[i].hi)) {
      throw StructureError("segment " + std::to_string(i) + " is empty or reversed");
    }
    if (i + 1 < segments.size() && segments[i].hi != segments[i + 1].lo) {
      throw StructureError("gap or overlap between segments " + std::to_string(i) + " and " +
                           std::to_string(i + 1));
    }
  }
}

std::vector<std::string> index_violations(const ShortestPathIndex& index) {
  std::vector<std::string> out;
  try {
    check_tiling(index.segments());
  } catch (const StructureError& e) {
    out.emplace_back(std::string("tiling: ") + e.what());
  }
  const auto& seg = index.segments();
  for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
    const std::string at = " at boundary " + std::to_string(i);
    if (seg[i].line == seg[i + 1].line) out.push_back("adjacent lines equal" + at);
    if (seg[i].line.value(seg[i].hi) != seg[i + 1].line.value(seg[i].hi)) {
      out.push_back("lines disagree" + at);
    }
    if (!(seg[i].line.slope() > seg[i + 1].line.slope())) {
      out.push_back("slopes not strictly decreasing" + at);
    }
  }
  return out;
}

Rational intersect_lines(const CostLine& a, const CostLine& b) {
  const Rational da = a.slope();
  const Rational db = b.slope();
  if (da == db) {
    throw ParallelLinesError("lines (" + a.c0.str() + ", " + a.c1.str() + ") and (" + b.c0.str() +
                             ", " + b.c1.str() + ") have equal slope");
  }
  // a.c0 + da * x = b.c0 + db * x
  return (b.c0 - a.c0) / (da - db);
}

std::vector<EnvelopeSegment> merge_equal_lines(std::vector<EnvelopeSegment> segments) {
  std::vector<EnvelopeSegment> out;
  out.reserve(segments.size());
  for (auto& seg : segments) {
    if (!out.empty() && out.back().line == seg.line) {
      out.back().hi = seg.hi;
    } else {
      out.push_back(std::move(seg));
    }
  }
  return out;
}

std::vector<EnvelopeSegment> get_shortest_paths(const DualWeightGraph& graph, VertexId source,
                                                VertexId target, const Rational& s,
                                                const Rational& t, LinePath at_s, LinePath at_t,
                                                const BuildOptions& options, BuildStats* stats) {
  if (!(s < t)) throw PreconditionError("interval [" + s.str() + ", " + t.str() + "] is empty");

  IntervalExpander expander(graph, source, target);
  std::deque<IntervalNode> nodes;
  nodes.push_back({s, t, std::move(at_s), std::move(at_t), 0});

  if (options.threads > 1) {
    expand_parallel(nodes, expander, options.threads);
  } else {
    expand_serial(nodes, expander);
  }

  std::vector<EnvelopeSegment> segments;
  std::size_t max_depth = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const IntervalNode& node = nodes[stack.back()];
    stack.pop_back();
    max_depth = std::max(max_depth, node.depth);
    if (node.left == kNone) {
      segments.push_back({node.s, node.t, node.at_s.path,
                          path_vertices(graph, node.at_s.path, source), node.at_s.line});
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }

  if (stats) {
    stats->dijkstra_calls += expander.calls();
    stats->interval_nodes += nodes.size();
    stats->max_depth = std::max(stats->max_depth, max_depth);
    stats->raw_segments += segments.size();
  }
  return segments;
}

ShortestPathIndex build_index(const DualWeightGraph& graph, VertexId source, VertexId target,
                              const BuildOptions& options, BuildStats* stats) {
  IntervalExpander endpoints(graph, source, target);
  LinePath at_zero = endpoints.shortest(Rational(0), SlopeMode::min_slope);
  LinePath at_one = endpoints.shortest(Rational(1), SlopeMode::max_slope);

  BuildStats local;
  local.dijkstra_calls = endpoints.calls();
  auto segments = get_shortest_paths(graph, source, target, Rational(0), Rational(1),
                                     std::move(at_zero), std::move(at_one), options, &local);
  ShortestPathIndex index(source, target, merge_equal_lines(std::move(segments)));
  if (stats) *stats = local;
  return index;
}

}  // namespace psp
