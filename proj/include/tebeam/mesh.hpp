#pragma once

#include <vector>

namespace tebeam {

/// Two-span 1-D mesh with a shared interface node. Span 1 covers
/// [0, L0] with n1 uniform elements, span 2 covers [L0, L] with n2.
/// The heat field reuses the span-1 partition.
struct Mesh {
  int n1 = 0;
  int n2 = 0;
  double L0 = 0.0;
  double L = 0.0;
  std::vector<double> nodes;  ///< n1+n2+1 strictly increasing, nodes[n1] == L0

  static Mesh uniform(double L0, double L, int n1, int n2);

  int node_count() const { return n1 + n2 + 1; }
  int element_count() const { return n1 + n2; }
  bool in_span1(int elem) const { return elem < n1; }
  double element_length(int elem) const { return nodes[elem + 1] - nodes[elem]; }
};

enum class BcMode { Clamped, Pinned };

/// Global numbering of the Hermite beam DOFs (value, slope per node) and
/// the P1 heat DOFs. Constrained DOFs map to -1. Clamped removes value
/// and slope at both outer ends; pinned removes only the end values.
/// The interface (value, slope) pair is shared between spans because the
/// node itself is shared, which enforces displacement and slope
/// continuity identically.
struct DofMap {
  BcMode mode = BcMode::Clamped;
  int n_beam = 0;         ///< free beam DOFs
  int n_heat = 0;         ///< n1 - 1 interior span-1 nodes
  std::vector<int> beam;  ///< size 2*node_count; global index or -1
  std::vector<int> heat;  ///< size n1+1; global index or -1

  static DofMap build(const Mesh& m, BcMode mode);

  /// Every beam DOF free; used by tests that need the raw bilinear forms
  /// (e.g. rigid-body mass checks). Not a CLI mode.
  static DofMap unconstrained(const Mesh& m);

  int state_dim() const { return 2 * n_beam + n_heat; }
};

}  // namespace tebeam
