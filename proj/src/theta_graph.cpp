#include "thetagraph/theta_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "thetagraph/errors.hpp"
#include "thetagraph/parallel.hpp"

namespace thetagraph {

std::string_view to_string(TraceClass c) noexcept { return c == TraceClass::A ? "A" : "B"; }

const FieldElement& P1Point::value() const {
  if (!value_) throw std::logic_error("the point at infinity has no finite coordinate");
  return *value_;
}

bool operator==(const P1Point& a, const P1Point& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
  return a.value() == b.value();
}

P1Point theta(const P1Point& p) {
  if (p.is_infinity() || p.value().is_zero()) return P1Point::infinity();
  return P1Point(p.value() + inv(p.value()));
}

TraceClass classify(const P1Point& p) {
  if (p.is_infinity() || p.value().is_zero()) return TraceClass::A;
  return trace(p.value()) == trace(inv(p.value())) ? TraceClass::A : TraceClass::B;
}

ThetaGraph ThetaGraph::build(const FieldSpec& spec, unsigned threads) {
  if (spec.degree() > kMaxGraphDegree) throw budget_exceeded("build_graph", spec.degree(), kMaxGraphDegree);
  ThetaGraph g(spec);
  const std::uint64_t q = spec.order();
  const auto inf = static_cast<std::uint32_t>(q);
  g.successor_.assign(q + 1, inf);
  g.class_.assign(q + 1, static_cast<std::uint8_t>(TraceClass::A));

  const FieldSpec& f = g.spec_;
  auto* succ = g.successor_.data();
  auto* cls = g.class_.data();
  parallel_ranges(1, q, threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x < hi; ++x) {
      const std::uint64_t xi = f.inv(x);
      succ[x] = static_cast<std::uint32_t>(x ^ xi);
      cls[x] = static_cast<std::uint8_t>(f.trace(x) == f.trace(xi) ? TraceClass::A : TraceClass::B);
    }
  });
  return g;
}

P1Point ThetaGraph::point(std::uint32_t v) const {
  if (v == infinity()) return P1Point::infinity();
  return P1Point(FieldElement(spec_, v));
}

std::uint32_t ThetaGraph::index_of(const P1Point& p) const {
  if (p.is_infinity()) return infinity();
  return static_cast<std::uint32_t>(p.value().bits());
}

GraphSummary analyze(const ThetaGraph& graph) {
  const auto succ = graph.successors();
  const std::size_t count = succ.size();

  // Cycle detection by three-colour walk: 0 unseen, 1 on the current path, 2 done.
  std::vector<std::uint8_t> state(count, 0);
  std::vector<std::uint8_t> on_cycle(count, 0);
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<std::uint32_t> path;
  for (std::uint32_t start = 0; start < count; ++start) {
    if (state[start] != 0) continue;
    std::uint32_t u = start;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = succ[u];
    }
    if (state[u] == 1) {
      auto it = std::find(path.rbegin(), path.rend(), u);
      std::vector<std::uint32_t> members(it.base() - 1, path.end());
      for (auto m : members) on_cycle[m] = 1;
      cycles.push_back(std::move(members));
    }
    for (auto v : path) state[v] = 2;
    path.clear();
  }

  // Non-cyclic preimages; theta is at most 2-to-1.
  std::vector<std::uint8_t> pre_count(count, 0);
  std::vector<std::uint32_t> pre(2 * count, 0);
  for (std::uint32_t v = 0; v < count; ++v) {
    if (on_cycle[v]) continue;
    const std::uint32_t s = succ[v];
    if (pre_count[s] == 2) throw std::logic_error("theta vertex with more than two preimages");
    pre[2 * s + pre_count[s]++] = v;
  }

  std::vector<int> root_depth(count, 0);
  GraphSummary summary;
  summary.n = graph.spec().degree();
  summary.modulus = graph.spec().modulus();
  summary.a.trace_class = TraceClass::A;
  summary.b.trace_class = TraceClass::B;
  for (std::uint32_t v = 0; v < count; ++v) {
    (graph.node_class(v) == TraceClass::A ? summary.a : summary.b).vertex_count++;
  }

  std::vector<std::uint32_t> frontier, next;
  for (std::uint32_t r = 0; r < count; ++r) {
    if (!on_cycle[r]) continue;
    TreeCensus census{r, {}};
    frontier.assign(pre.begin() + 2 * r, pre.begin() + 2 * r + pre_count[r]);
    while (!frontier.empty()) {
      census.levels.push_back(frontier.size());
      next.clear();
      for (auto v : frontier) next.insert(next.end(), pre.begin() + 2 * v, pre.begin() + 2 * v + pre_count[v]);
      frontier.swap(next);
    }
    root_depth[r] = census.depth();
    (graph.node_class(r) == TraceClass::A ? summary.a : summary.b).trees.push_back(std::move(census));
  }

  for (auto& members : cycles) {
    CycleInfo info;
    info.length = members.size();
    info.smallest_member = *std::min_element(members.begin(), members.end());
    for (auto m : members) info.tree_depth = std::max(info.tree_depth, root_depth[m]);
    (graph.node_class(info.smallest_member) == TraceClass::A ? summary.a : summary.b).cycle_list.push_back(info);
  }

  for (ClassSummary* cs : {&summary.a, &summary.b}) {
    std::sort(cs->cycle_list.begin(), cs->cycle_list.end(), [](const CycleInfo& x, const CycleInfo& y) {
      return x.length != y.length ? x.length < y.length : x.smallest_member < y.smallest_member;
    });
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> rows;
    for (const auto& c : cs->cycle_list) {
      ++rows[{c.length, c.tree_depth}];
      cs->max_tree_depth = std::max(cs->max_tree_depth, c.tree_depth);
    }
    for (const auto& [key, n] : rows) cs->cycles.push_back({key.first, n, key.second});
  }
  return summary;
}

namespace {

std::vector<std::uint64_t> discrete_log_table(const FieldSpec& spec) {
  const std::uint64_t q = spec.order();
  std::vector<std::uint64_t> log(q, 0);
  const std::uint64_t alpha = spec.degree() == 1 ? 1 : 2;
  std::uint64_t p = alpha;
  for (std::uint64_t i = 1; i < q; ++i) {
    if (log[p] != 0) {
      throw std::invalid_argument("dlog labelling needs a primitive modulus; " +
                                  format_polynomial_hex(spec.modulus()) + " is not");
    }
    log[p] = i;
    p = spec.mul(p, alpha);
  }
  return log;
}

}  // namespace

std::string export_dot(const ThetaGraph& graph, DotLabeling labeling) {
  const FieldSpec& spec = graph.spec();
  std::vector<std::uint64_t> log;
  if (labeling == DotLabeling::dlog) log = discrete_log_table(spec);

  auto label = [&](std::uint32_t v) -> std::string {
    if (v == graph.infinity()) return "inf";
    if (v == 0) return "0";
    if (labeling == DotLabeling::dlog) return std::to_string(log[v]);
    return format_polynomial_hex(v);
  };

  std::ostringstream out;
  out << "digraph theta_n" << spec.degree() << " {\n";
  out << "  // x -> x + 1/x over F_2[x]/(" << format_polynomial_hex(spec.modulus()) << ")\n";
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  \"" << label(v) << "\" [group=" << to_string(graph.node_class(v)) << "];\n";
  }
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  \"" << label(v) << "\" -> \"" << label(graph.successor(v)) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace thetagraph
