// Phase squeezing of the single-full-edge states and of the complete
// (d-1)-graphs, side by side.

#include <cstdio>

#include "hyperstate/hyperstate.hpp"

int main() {
  using namespace hyperstate;
  std::printf("%3s  %14s  %14s\n", "d", "single edge", "complete d-1");
  for (int d = 3; d <= 12; ++d) {
    const auto a = squeeze_report(single_full_edge(d));
    const auto b = squeeze_report(complete_k_graph(d, d - 1));
    std::printf("%3d  %14.6f  %14.6f\n", d, a.s_p.value_or(NAN), b.s_p.value_or(NAN));
  }
}
