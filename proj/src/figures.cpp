#include "reslat/figures.hpp"

namespace reslat::figures {

FigureGraph k_2_3_figure() {
  return FigureGraph{15, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {4, 7}, {5, 7}, {5, 8}, {6, 9}, {6, 10}, {7, 10}, {7, 11}, {8, 11}, {9, 12}, {10, 12}, {10, 13}, {11, 13}, {12, 14}, {13, 14}}};
}

FigureGraph k_1_3_figure() {
  return FigureGraph{13, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}, {8, 10}, {8, 11}, {9, 11}, {10, 12}, {11, 12}}};
}

FigureGraph k_0_3_figure() {
  return FigureGraph{10, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}, {6, 8}, {7, 8}, {8, 9}}};
}

FigureGraph c5_cover_figure() {
  return FigureGraph{19, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 11}, {8, 12}, {9, 12}, {9, 13}, {10, 13}, {11, 14}, {12, 14}, {12, 15}, {13, 15}, {14, 16}, {14, 17}, {15, 17}, {16, 18}, {17, 18}}};
}

FigureGraph k8_figure() {
  return FigureGraph{8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}}};
}

FigureGraph kph_figure() {
  return FigureGraph{7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}, {5, 6}}};
}

FigureGraph l2l3_figure() {
  return FigureGraph{25, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {4, 9}, {5, 10}, {5, 11}, {5, 12}, {6, 11}, {6, 13}, {7, 12}, {7, 14}, {8, 13}, {8, 15}, {9, 14}, {9, 15}, {10, 16}, {10, 17}, {11, 16}, {11, 18}, {12, 17}, {12, 19}, {13, 18}, {13, 20}, {14, 19}, {14, 20}, {15, 20}, {16, 21}, {17, 21}, {17, 22}, {18, 21}, {18, 23}, {19, 22}, {19, 23}, {20, 23}, {21, 24}, {22, 24}, {23, 24}}};
}

FigureGraph two_plus_l2_figure() {
  return FigureGraph{19, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 10}, {8, 10}, {8, 11}, {9, 11}, {9, 13}, {10, 12}, {11, 12}, {11, 14}, {12, 15}, {13, 14}, {14, 15}, {14, 16}, {15, 17}, {16, 17}, {17, 18}}};
}

FigureGraph lattice_diagram(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      order[i][j] = leq(alg, static_cast<Elem>(i), static_cast<Elem>(j));
  return FigureGraph{n, hasse_edges(order)};
}

FigureGraph poset_diagram(const VarietyPoset& p) { return FigureGraph{p.nodes.size(), p.hasse}; }

bool matches(const FigureGraph& a, const FigureGraph& b) {
  return digraph_isomorphic(a.nodes, a.edges, b.nodes, b.edges);
}

}  // namespace reslat::figures
