#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thetagraph/binary_field.hpp"

namespace thetagraph {

inline constexpr int kMaxGraphDegree = 24;

/// A_n holds 0, infinity and every x with Tr(x) = Tr(1/x); B_n the rest.
enum class TraceClass : std::uint8_t { A, B };

std::string_view to_string(TraceClass c) noexcept;

/// Point of the projective line P^1(F_{2^n}).
class P1Point {
 public:
  explicit P1Point(FieldElement x) : value_(x) {}
  static P1Point infinity() { return P1Point(); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  /// The finite coordinate. Throws std::logic_error at infinity.
  const FieldElement& value() const;

  friend bool operator==(const P1Point& a, const P1Point& b);

 private:
  P1Point() = default;
  std::optional<FieldElement> value_;
};

/// x -> x + 1/x, with 0 and infinity both sent to infinity.
P1Point theta(const P1Point& p);

TraceClass classify(const P1Point& p);

/// The functional graph of theta on P^1(F_{2^n}).
///
/// Vertices are indexed by bitmask for the finite elements and by 2^n for
/// infinity, so every index fits in 32 bits at the enumeration limit.
class ThetaGraph {
 public:
  /// Throws budget_exceeded for n > kMaxGraphDegree.
  static ThetaGraph build(const FieldSpec& spec, unsigned threads = 1);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t vertex_count() const noexcept { return successor_.size(); }
  std::uint32_t infinity() const noexcept { return static_cast<std::uint32_t>(successor_.size() - 1); }

  std::uint32_t successor(std::uint32_t v) const { return successor_.at(v); }
  TraceClass node_class(std::uint32_t v) const { return static_cast<TraceClass>(class_.at(v)); }
  std::span<const std::uint32_t> successors() const noexcept { return successor_; }

  P1Point point(std::uint32_t v) const;
  std::uint32_t index_of(const P1Point& p) const;

 private:
  explicit ThetaGraph(const FieldSpec& spec) : spec_(spec) {}

  FieldSpec spec_;
  std::vector<std::uint32_t> successor_;
  std::vector<std::uint8_t> class_;
};

inline ThetaGraph build_graph(const FieldSpec& spec, unsigned threads = 1) {
  return ThetaGraph::build(spec, threads);
}

/// One row of the per-class table: `count` cycles of `length`, whose
/// vertices root trees of depth `tree_depth`.
struct CycleRecord {
  std::uint64_t length = 0;
  std::uint64_t count = 0;
  int tree_depth = 0;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

/// Per-level vertex counts of the tree hanging off one cycle vertex;
/// levels[k - 1] is the number of vertices at distance k from the root.
struct TreeCensus {
  std::uint32_t root = 0;
  std::vector<std::uint64_t> levels;

  int depth() const noexcept { return static_cast<int>(levels.size()); }
};

struct CycleInfo {
  std::uint64_t length = 0;
  std::uint32_t smallest_member = 0;
  int tree_depth = 0;
};

struct ClassSummary {
  TraceClass trace_class = TraceClass::A;
  std::uint64_t vertex_count = 0;
  /// Rows aggregated by (length, tree_depth), ascending.
  std::vector<CycleRecord> cycles;
  /// Every cycle, ordered by length then smallest member.
  std::vector<CycleInfo> cycle_list;
  /// One census per cycle vertex, ordered by root index.
  std::vector<TreeCensus> trees;
  int max_tree_depth = 0;
};

struct GraphSummary {
  int n = 0;
  std::uint64_t modulus = 0;
  ClassSummary a;
  ClassSummary b;

  const ClassSummary& of(TraceClass c) const noexcept { return c == TraceClass::A ? a : b; }
};

GraphSummary analyze(const ThetaGraph& graph);

enum class DotLabeling { hex, dlog };

/// Graphviz digraph of the map. dlog labels alpha^i by i in [1, 2^n - 1],
/// zero by "0" and infinity by "inf"; it throws std::invalid_argument unless
/// the modulus is primitive.
std::string export_dot(const ThetaGraph& graph, DotLabeling labeling);

}  // namespace thetagraph
