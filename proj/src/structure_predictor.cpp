#include "thetagraph/structure_predictor.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thetagraph/errors.hpp"

namespace thetagraph {

std::string_view to_string(ComponentKind k) noexcept {
  switch (k) {
    case ComponentKind::inert: return "inert";
    case ComponentKind::split: return "split";
    case ComponentKind::ramified: return "ramified";
  }
  return "?";
}

namespace {

PrimeFactor as_prime_factor(const ComponentSpec& c) {
  PrimeKind kind = PrimeKind::split;
  if (c.kind == ComponentKind::inert) kind = PrimeKind::inert;
  if (c.kind == ComponentKind::ramified) kind = PrimeKind::ramified;
  return {c.prime, c.exponent, kind, c.rational_prime};
}

BigInt int_pow(std::uint64_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Number of elements of R/prime^e whose annihilator is exactly prime^j.
BigInt annihilator_census(const ComponentSpec& c, int j) {
  if (j == 0) return 1;
  const std::uint64_t norm = c.kind == ComponentKind::inert ? c.rational_prime * c.rational_prime : c.rational_prime;
  return int_pow(norm, j) - int_pow(norm, j - 1);
}

int order_index_of(const ComponentSpec& c, int j) { return c.kind == ComponentKind::ramified ? (j + 1) / 2 : j; }

bool all_divide(const std::vector<ComponentLevel>& levels, std::uint64_t k, int sign) {
  for (const auto& lv : levels) {
    const PrimeFactor pf = as_prime_factor(lv.component);
    const QuadInt power = pi_bar_power(k, reduction_modulus(pf, lv.annihilator_exponent));
    if (!exact_divides(prime_power(pf, lv.annihilator_exponent), power - QuadInt(sign))) return false;
  }
  return true;
}

std::vector<ComponentLevel> nonzero_levels(const std::vector<ComponentLevel>& levels) {
  std::vector<ComponentLevel> out;
  for (const auto& lv : levels) {
    if (lv.annihilator_exponent < 0 || lv.annihilator_exponent > lv.component.exponent) {
      throw std::out_of_range("annihilator exponent outside [0, component exponent]");
    }
    if (lv.annihilator_exponent > 0) out.push_back(lv);
  }
  if (out.empty()) throw std::invalid_argument("class period is undefined for the zero class");
  return out;
}

}  // namespace

std::vector<ComponentSpec> components_of(const RingFactorization& f) {
  std::vector<ComponentSpec> out;
  for (const auto& pf : f.factors) {
    switch (pf.kind) {
      case PrimeKind::conjugate_frobenius:
        break;
      case PrimeKind::split:
        if (pf.rational_prime == 2) throw std::invalid_argument("components_of: pi divides the target");
        out.push_back({pf.prime, pf.exponent, ComponentKind::split, pf.rational_prime});
        break;
      case PrimeKind::inert:
        out.push_back({pf.prime, pf.exponent, ComponentKind::inert, pf.rational_prime});
        break;
      case PrimeKind::ramified:
        out.push_back({pf.prime, pf.exponent, ComponentKind::ramified, pf.rational_prime});
        break;
    }
  }
  return out;
}

int max_order_index(const ComponentSpec& c) {
  if (c.kind != ComponentKind::ramified) return c.exponent;
  return c.exponent % 2 == 0 ? c.exponent / 2 : (c.exponent + 1) / 2;
}

BigInt order_census(const ComponentSpec& c, int h) {
  if (h < 0 || h > max_order_index(c)) throw std::out_of_range("order_census: h outside the component's range");
  if (h == 0) return 1;
  const std::uint64_t p = c.rational_prime;
  switch (c.kind) {
    case ComponentKind::inert:
      return int_pow(p, 2 * h) - int_pow(p, 2 * (h - 1));
    case ComponentKind::split:
      return int_pow(p, h) - int_pow(p, h - 1);
    case ComponentKind::ramified:
      if (c.exponent % 2 == 1 && h == (c.exponent + 1) / 2) return int_pow(7, 2 * h - 1) - int_pow(7, 2 * (h - 1));
      return int_pow(7, 2 * h) - int_pow(7, 2 * (h - 1));
  }
  return 0;
}

std::uint64_t class_period(const std::vector<ComponentLevel>& levels) {
  const auto active = nonzero_levels(levels);
  std::uint64_t l = 1;
  for (const auto& lv : active) l = std::lcm(l, signed_order(as_prime_factor(lv.component), lv.annihilator_exponent).length);
  // Each component returns to +1 at l_i or 2 l_i, so the period is l or 2l.
  if (all_divide(active, l, 1) || all_divide(active, l, -1)) return l;
  if (!all_divide(active, 2 * l, 1)) throw std::logic_error("class_period: pibar^(2l) is not 1 on every component");
  return 2 * l;
}

std::uint64_t sign_agreement_period(const std::vector<ComponentLevel>& levels) {
  const auto active = nonzero_levels(levels);
  std::uint64_t l = 1;
  bool any_plus = false, any_minus = false;
  for (const auto& lv : active) {
    const SignedOrder so = signed_order(as_prime_factor(lv.component), lv.annihilator_exponent);
    l = std::lcm(l, so.length);
    (so.sign > 0 ? any_plus : any_minus) = true;
  }
  return any_plus && any_minus ? 2 * l : l;
}

QuadInt structure_target(int n, TraceClass c) {
  return pow(QuadInt::pi(), static_cast<std::uint64_t>(n)) - QuadInt(c == TraceClass::A ? 1 : -1);
}

PredictedStructure predict(int n, TraceClass c) {
  if (n < 1 || n > kMaxPredictDegree) {
    throw std::invalid_argument("predict: n must lie in [1, " + std::to_string(kMaxPredictDegree) + "]");
  }
  if (c == TraceClass::B && n == 1) throw std::invalid_argument("predict: B_1 is empty");

  PredictedStructure out;
  out.n = n;
  out.trace_class = c;
  out.target = structure_target(n, c);
  out.factorization = factor(out.target);
  out.components = components_of(out.factorization);
  out.e0 = out.factorization.conjugate_frobenius_exponent();

  const std::size_t w = out.components.size();
  std::vector<int> j(w, 0);
  std::map<std::uint64_t, std::uint64_t> by_length;
  const int depth = c == TraceClass::A ? out.e0 : 1;
  while (true) {
    OrderClass oc;
    oc.point_count = 1;
    oc.is_zero_class = true;
    std::vector<ComponentLevel> levels;
    for (std::size_t i = 0; i < w; ++i) {
      oc.annihilator_exponents.push_back(j[i]);
      oc.h.push_back(order_index_of(out.components[i], j[i]));
      oc.point_count *= annihilator_census(out.components[i], j[i]);
      if (j[i] > 0) oc.is_zero_class = false;
      levels.push_back({out.components[i], j[i]});
    }
    if (oc.is_zero_class) {
      // Only the point at infinity of the curve: the loop at infinity for A,
      // no vertex at all for B.
      oc.period = 1;
      oc.sign_agreement_period = 1;
      oc.x_count = c == TraceClass::A ? 1 : 0;
      oc.cycle_count = c == TraceClass::A ? 1 : 0;
    } else {
      oc.period = class_period(levels);
      oc.sign_agreement_period = sign_agreement_period(levels);
      oc.x_count = oc.point_count / 2;
      const BigInt cycle_mass = 2 * BigInt(oc.period);
      if (oc.point_count % cycle_mass != 0) {
        throw std::logic_error("predict: class size " + oc.point_count.str() + " is not a multiple of 2 * period");
      }
      oc.cycle_count = oc.point_count / cycle_mass;
    }
    if (!oc.cycle_count.is_zero()) by_length[oc.period] += oc.cycle_count.convert_to<std::uint64_t>();
    out.classes.push_back(std::move(oc));

    std::size_t i = 0;
    while (i < w && j[i] == out.components[i].exponent) j[i++] = 0;
    if (i == w) break;
    ++j[i];
  }
  for (const auto& [length, count] : by_length) out.totals.push_back({length, count, depth});
  return out;
}

std::vector<std::uint64_t> tree_profile(TraceClass c, bool root_is_infinity, int e0) {
  if (e0 < 0) throw std::invalid_argument("tree_profile: negative depth");
  if (c == TraceClass::B && (e0 != 1 || root_is_infinity)) {
    throw std::invalid_argument("tree_profile: B-trees have depth 1 and finite roots");
  }
  std::vector<std::uint64_t> levels;
  for (int k = 1; k <= e0; ++k) {
    if (root_is_infinity) {
      levels.push_back(k == 1 ? 1 : std::uint64_t{1} << (k - 2));
    } else {
      levels.push_back(std::uint64_t{1} << (k - 1));
    }
  }
  return levels;
}

bool VerificationReport::all_pass() const noexcept {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

std::string format_rows(const std::vector<CycleRecord>& rows) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i ? ", " : "") << "(" << rows[i].length << "," << rows[i].count << ",d" << rows[i].tree_depth << ")";
  }
  out << "]";
  return out.str();
}

void check_class(VerificationReport& report, const ThetaGraph& graph, const ClassSummary& seen,
                 const PredictedStructure* predicted) {
  const TraceClass c = seen.trace_class;
  const std::string tag(to_string(c));
  const std::vector<CycleRecord> expected_rows = predicted ? predicted->totals : std::vector<CycleRecord>{};
  report.checks.push_back({tag + " cycles", seen.cycles == expected_rows,
                           "enumerated " + format_rows(seen.cycles) + ", predicted " + format_rows(expected_rows)});

  const int e0 = predicted ? (c == TraceClass::A ? predicted->e0 : 1) : 0;
  bool depth_ok = true;
  for (const auto& cyc : seen.cycle_list) depth_ok = depth_ok && cyc.tree_depth == e0;
  report.checks.push_back({tag + " tree depth", depth_ok,
                           "max enumerated depth " + std::to_string(seen.max_tree_depth) + ", predicted " +
                               std::to_string(e0)});

  std::size_t mismatched = 0;
  for (const auto& tree : seen.trees) {
    const bool at_infinity = tree.root == graph.infinity();
    if (tree.levels != tree_profile(c, at_infinity, e0)) ++mismatched;
  }
  report.checks.push_back({tag + " tree profiles", mismatched == 0,
                           std::to_string(seen.trees.size() - mismatched) + "/" + std::to_string(seen.trees.size()) +
                               " roots match"});

  // Vertices implied by the prediction: every finite cycle vertex roots a
  // tree of 2^e0 - 1 vertices (A) or 1 vertex (B); infinity roots 2^(e0-1).
  BigInt expected_vertices = 0;
  if (predicted) {
    for (const auto& oc : predicted->classes) {
      if (oc.is_zero_class) continue;
      expected_vertices += oc.x_count * (c == TraceClass::A ? BigInt(1) << e0 : BigInt(2));
    }
    if (c == TraceClass::A) expected_vertices += 1 + (BigInt(1) << (e0 - 1));
  } else if (c == TraceClass::A) {
    throw std::logic_error("A-class prediction is always available");
  }
  report.checks.push_back({tag + " vertex count", BigInt(seen.vertex_count) == expected_vertices,
                           "enumerated " + std::to_string(seen.vertex_count) + ", predicted " +
                               expected_vertices.str()});
}

}  // namespace

VerificationReport verify(const FieldSpec& spec, unsigned threads) {
  if (spec.degree() > kMaxVerifyDegree) throw budget_exceeded("verify", spec.degree(), kMaxVerifyDegree);
  const int n = spec.degree();
  const ThetaGraph graph = build_graph(spec, threads);
  const GraphSummary summary = analyze(graph);
  const PredictedStructure a = predict(n, TraceClass::A);

  VerificationReport report;
  report.n = n;
  report.modulus = spec.modulus();
  check_class(report, graph, summary.a, &a);
  if (n == 1) {
    check_class(report, graph, summary.b, nullptr);
  } else {
    const PredictedStructure b = predict(n, TraceClass::B);
    check_class(report, graph, summary.b, &b);
  }
  const std::uint64_t total = summary.a.vertex_count + summary.b.vertex_count;
  report.checks.push_back({"vertex total", total == spec.order() + 1,
                           std::to_string(total) + " of " + std::to_string(spec.order() + 1)});
  return report;
}

VerificationReport verify(int n, unsigned threads) {
  if (n > kMaxVerifyDegree) throw budget_exceeded("verify", n, kMaxVerifyDegree);
  return verify(FieldSpec::find_irreducible(n), threads);
}

}  // namespace thetagraph
