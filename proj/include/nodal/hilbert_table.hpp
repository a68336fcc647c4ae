#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodal {

/// k -> h_I(k) = dim (S/I)_k for 0 <= k <= kmax.
struct HilbertTable {
  std::vector<std::int64_t> values;

  HilbertTable() = default;
  explicit HilbertTable(std::vector<std::int64_t> v) : values(std::move(v)) {}

  int kmax() const noexcept { return static_cast<int>(values.size()) - 1; }
  bool empty() const noexcept { return values.empty(); }
  std::int64_t at(int k) const {
    if (k < 0 || k > kmax())
      throw std::out_of_range("Hilbert table has no entry for degree " +
                              std::to_string(k));
    return values[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

}  // namespace nodal
