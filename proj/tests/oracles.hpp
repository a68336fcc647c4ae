#pragma once

// Independent reference values used only by the tests.

#include <cstdint>
#include <vector>

namespace oracle {

// Power series coefficients of prod_i (1 - t^{d_i}) / (1 - t)^{n+1} up to t^kmax,
// by plain convolution. This is the Hilbert function of a complete
// intersection of the given degrees in n+1 variables.
inline std::vector<std::int64_t> koszul_hilbert(int n, const std::vector<int>& degrees,
                                                int kmax) {
  std::vector<std::int64_t> num(static_cast<std::size_t>(kmax) + 1, 0);
  num[0] = 1;
  for (int d : degrees) {
    for (int k = kmax; k >= d; --k) num[k] -= num[k - d];
  }
  for (int r = 0; r < n + 1; ++r) {
    for (int k = 1; k <= kmax; ++k) num[k] += num[k - 1];
  }
  return num;
}

// Numerator prod_i (1 - t^{d_i}) expanded: the alternating Betti numbers of a
// complete intersection.
inline std::vector<std::int64_t> koszul_betti(const std::vector<int>& degrees, int jmax) {
  std::vector<std::int64_t> num(static_cast<std::size_t>(jmax) + 1, 0);
  num[0] = 1;
  for (int d : degrees) {
    for (int k = jmax; k >= d; --k) num[k] -= num[k - d];
  }
  return num;
}

}  // namespace oracle
