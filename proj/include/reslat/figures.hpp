#pragma once

// Hasse diagrams of the published drawings, transcribed as edge lists with
// vertices numbered bottom to top, left to right. Edges run (lower, upper).

#include <cstddef>
#include <utility>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/variety.hpp"

namespace reslat::figures {

struct FigureGraph {
  std::size_t nodes = 0;
  std::vector<Edge> edges;
};

/// Lattice order diagrams of K_{2,3}, K_{1,3}, K_{0,3}.
FigureGraph k_2_3_figure();
FigureGraph k_1_3_figure();
FigureGraph k_0_3_figure();
/// Lattice order of the minimal admissible subalgebra of K(C_5).
FigureGraph c5_cover_figure();
/// Lattice order of K_8.
FigureGraph k8_figure();

/// Subvariety posets.
FigureGraph kph_figure();
FigureGraph l2l3_figure();
FigureGraph two_plus_l2_figure();

/// Covers of the lattice order of an algebra.
FigureGraph lattice_diagram(const FiniteAlgebra& alg);

FigureGraph poset_diagram(const VarietyPoset& p);

bool matches(const FigureGraph& a, const FigureGraph& b);

}  // namespace reslat::figures
