#pragma once

#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sepred/canonical.hpp"
#include "sepred/graph.hpp"
#include "sepred/tdecomp.hpp"

namespace sepred {

enum class SpecKind : uint8_t { Any, Hereditary, ConnectedBlack };

/// Constraint on the black-edge-induced subgraph of the solution set:
/// membership in an explicit hereditary family, black-connectivity, or
/// nothing.
class ConstraintSpec {
 public:
  static ConstraintSpec any();
  static ConstraintSpec connected_black();

  /// Compiles a decidable hereditary class into the explicit set of its
  /// members with at most max_vertices vertices and verifies heredity by
  /// removing each vertex of each member. Enumeration is capped at 6
  /// vertices.
  static ConstraintSpec hereditary_from_oracle(
      const std::function<bool(const ColoredGraph&)>& member,
      int max_vertices);

  /// Wraps an explicit member set (labels respected); verifies closure
  /// under induced subgraphs.
  static ConstraintSpec hereditary_from_members(
      std::vector<CanonicalGraph> members);

  /// Edgeless graphs on 0..max_vertices vertices.
  static ConstraintSpec edgeless(int max_vertices);
  /// Complete graphs on 0..max_vertices vertices.
  static ConstraintSpec clique(int max_vertices);

  SpecKind kind() const { return kind_; }
  bool contains(const CanonicalGraph& c) const {
    return members_.count(c) > 0;
  }
  size_t member_count() const { return members_.size(); }
  std::vector<CanonicalGraph> members_sorted() const;

 private:
  SpecKind kind_ = SpecKind::Any;
  std::unordered_set<CanonicalGraph, CanonicalGraphHash> members_;
};

/// Terminal-set pairs the solution must separate / must not separate.
struct SeparationDemand {
  std::vector<std::pair<VertexSet, VertexSet>> cut_pairs;
  std::vector<std::pair<VertexSet, VertexSet>> uncut_pairs;
};

struct SolveStats {
  size_t dp_states = 0;
};

/// Minimum-size S with |S| <= k such that S avoids `forbidden`, separates
/// every cut pair, leaves every uncut pair connected, and its black-induced
/// subgraph satisfies `spec`. Ties broken by lexicographically smallest S.
/// nullopt when infeasible. Throws if the decomposition is invalid for g.
std::optional<VertexSet> solve(const ColoredGraph& g,
                               const NiceDecomposition& nice,
                               const SeparationDemand& demand, int k,
                               const ConstraintSpec& spec,
                               const VertexSet& forbidden,
                               SolveStats* stats = nullptr);

}  // namespace sepred
