#include <cmath>

#include "gon/kernels/square_scan.hpp"

namespace gon::kernels {

namespace {

// Exact floor sqrt for 0 <= d < 2^62.
std::int64_t isqrt64(std::int64_t d) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r;
}

}  // namespace

std::size_t square_scan_scalar(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root) {
  std::size_t hits = 0;
  for (std::size_t k = 0; k < row.count; ++k) {
    const std::int64_t y = row.y0 + static_cast<std::int64_t>(k);
    const std::int64_t d = (row.alpha * y + row.beta) * y + row.gamma;
    if (d < 0) continue;
    const std::int64_t r = isqrt64(d);
    if (r * r == d) {
      hit_y[hits] = y;
      hit_root[hits] = r;
      ++hits;
    }
  }
  return hits;
}

}  // namespace gon::kernels
