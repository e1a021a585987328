#include "tebeam/mesh.hpp"

#include <stdexcept>

namespace tebeam {

Mesh Mesh::uniform(double L0, double L, int n1, int n2) {
  if (!(0.0 < L0 && L0 < L)) throw std::invalid_argument("mesh: require 0 < L0 < L");
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("mesh: element counts must be >= 2");
  Mesh m;
  m.n1 = n1;
  m.n2 = n2;
  m.L0 = L0;
  m.L = L;
  m.nodes.resize(static_cast<std::size_t>(n1 + n2 + 1));
  for (int i = 0; i < n1; ++i) m.nodes[i] = L0 * static_cast<double>(i) / n1;
  m.nodes[n1] = L0;  // the interface node is exact
  for (int j = 1; j < n2; ++j) m.nodes[n1 + j] = L0 + (L - L0) * static_cast<double>(j) / n2;
  m.nodes[n1 + n2] = L;
  return m;
}

DofMap DofMap::build(const Mesh& m, BcMode mode) {
  DofMap d;
  d.mode = mode;
  const int nc = m.node_count();
  d.beam.assign(static_cast<std::size_t>(2 * nc), 0);

  const int last = nc - 1;
  auto removed = [&](int node, int comp) {
    if (mode == BcMode::Clamped) return node == 0 || node == last;
    return comp == 0 && (node == 0 || node == last);  // pinned: end values only
  };

  int next = 0;
  for (int node = 0; node < nc; ++node) {
    for (int comp = 0; comp < 2; ++comp) {
      d.beam[static_cast<std::size_t>(2 * node + comp)] = removed(node, comp) ? -1 : next++;
    }
  }
  d.n_beam = next;

  d.heat.assign(static_cast<std::size_t>(m.n1 + 1), -1);
  for (int i = 1; i < m.n1; ++i) d.heat[i] = i - 1;
  d.n_heat = m.n1 - 1;
  return d;
}

DofMap DofMap::unconstrained(const Mesh& m) {
  DofMap d;
  d.mode = BcMode::Clamped;
  const int nc = m.node_count();
  d.beam.resize(static_cast<std::size_t>(2 * nc));
  for (int i = 0; i < 2 * nc; ++i) d.beam[i] = i;
  d.n_beam = 2 * nc;
  d.heat.assign(static_cast<std::size_t>(m.n1 + 1), -1);
  for (int i = 1; i < m.n1; ++i) d.heat[i] = i - 1;
  d.n_heat = m.n1 - 1;
  return d;
}

}  // namespace tebeam
