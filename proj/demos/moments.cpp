// Exact Agarwal-Tara ratios for small d.

#include <iostream>

#include "hyperstate/moments.hpp"

int main() {
  using namespace hyperstate;
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 6; ++d) {
      if (2 * n - 2 > (1 << d) - 1) continue;
      const auto r = agarwal_tara(d, n);
      std::cout << "A" << n << "(d=" << d << ") = " << to_fraction_string(r.a_n) << " ~ " << to_double(r.a_n) << '\n';
    }
  }
}
