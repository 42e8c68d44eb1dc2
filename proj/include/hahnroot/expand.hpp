#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hahnroot/ffpoly.hpp"
#include "hahnroot/hahn.hpp"
#include "hahnroot/hasse.hpp"

namespace hahnroot {

enum class NodeStatus { live, exact_root, accumulating, budget_exhausted };
std::string to_string(NodeStatus s);

struct ApproximationTerm {
  Exponent r;
  FF zeta;
  unsigned multiplicity;
};

/// How a node was reached from its parent: the term zeta*t^r, read off the
/// Newton polygon edge from index edge_low to edge_high. value_line is the
/// smallest parent line i >= 1 whose value at r equals the child's residual
/// valuation, or 0 when there is none.
struct Step {
  Exponent r;
  FF zeta;
  unsigned edge_low;
  unsigned edge_high;
  unsigned value_line;
  bool approximation_term() const { return edge_low == 0; }
};

struct AccumulationSolution {
  FF zeta;
  bool expands;
};

/**
 * Limit data for a chain whose steps keep using the same pair of lines: the
 * exponents approach the crossing r_star of those lines, and the candidates
 * for the coefficient at r_star are the roots of sum_{j in J} b_j z^j.
 */
struct Accumulation {
  Exponent r_star;
  std::vector<unsigned> J;
  /// Over the tree's field, in the variable z.
  FFPoly equation;
  /// Field holding the solutions (an extension of the tree's field).
  FieldPtr solution_field;
  std::vector<AccumulationSolution> solutions;
  unsigned term_line;
  unsigned value_line;
  /// The limit is a theorem for additive f; otherwise it is extrapolated.
  bool additive;
  std::string detector() const { return additive ? "additive" : "heuristic"; }
};

struct BranchNode {
  /// Exact finite sum; every root below this node starts with it.
  HahnSeries w{FieldPtr{}};
  std::optional<Exponent> last_r;
  /// Roots of f (with multiplicity) having w as a prefix followed only by
  /// exponents > last_r.
  unsigned multiplicity = 0;
  /// v(f(w)); unset when f(w) = 0.
  std::optional<Exponent> residual_valuation;
  /// Lines of f at w, for i >= 1.
  std::vector<NewtonLine> lines;
  NodeStatus status = NodeStatus::live;
  /// Multiplicity of w itself as a root.
  unsigned root_multiplicity = 0;
  /// Roots below this node that the depth budget left unexpanded.
  unsigned unexpanded_multiplicity = 0;
  /// For unexpanded roots: their next exponent is at least this value.
  std::optional<Exponent> next_exponent_bound;
  std::optional<Step> step;
  std::optional<Accumulation> accumulation;
  std::vector<BranchNode> children;

  std::size_t depth() const { return w.terms().size(); }
  /// Multiplicity that ends at this node.
  unsigned terminal_multiplicity() const { return root_multiplicity + unexpanded_multiplicity; }
  /// w with its precision: exact as a root, known below the next exponent
  /// bound for unexpanded roots.
  HahnSeries prefix() const;
};

struct ExpansionTree {
  Poly f;
  unsigned depth;
  /// Every coefficient in the tree lives here.
  FieldPtr field;
  BranchNode root;
};

/// Approximation terms zeta*t^r of w: the Newton polygon edge through
/// index 0, kept when r exceeds the support of w. Throws std::domain_error
/// when f(w) = 0.
std::vector<ApproximationTerm> approximation_terms(const Poly& f, const HahnSeries& w);

/// Children of a node: every (r, zeta, multiplicity) with r > last_r such
/// that some root of f continues w with zeta*t^r. Uses node.w, node.last_r
/// and node.multiplicity (0 skips the multiplicity check).
std::vector<BranchNode> branch_step(const Poly& f, const BranchNode& node);

/// Expansion of every root of f from w = 0 up to `depth` terms.
ExpansionTree expand_roots(const Poly& f, unsigned depth);

/// Looks for a stable pair of lines over at least four trailing steps of a
/// root-to-leaf chain; none when the chain ends in a root or no stable
/// pair is found.
std::optional<Accumulation> accumulation_analysis(const Poly& f, const std::vector<const BranchNode*>& chain);

/// Root-to-node chains ending at every node with a terminal multiplicity.
std::vector<std::vector<const BranchNode*>> terminal_chains(const BranchNode& root);

}  // namespace hahnroot
