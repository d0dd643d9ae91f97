#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace gon::kernels {

// One row of the isotropy search: D(y) = alpha y^2 + beta y + gamma for
// y = y0, y0 + 1, ..., y0 + count - 1. A hit is a y with D(y) a perfect
// square; hits are written in ascending y with their square roots.
//
// Callers guarantee |alpha| Y^2 + |beta| Y + |gamma| < 2^50 where
// Y = max |y| over the row, which keeps every intermediate exact in a double.
struct SquareRow {
  std::int64_t alpha;
  std::int64_t beta;
  std::int64_t gamma;
  std::int64_t y0;
  std::size_t count;
};

constexpr std::int64_t kSquareScanLimit = std::int64_t{1} << 50;

// Returns the number of hits written (at most row.count).
std::size_t square_scan_scalar(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root);
std::size_t square_scan_avx2(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root);

enum class Isa { Scalar, Avx2 };

// Best kernel the CPU supports, unless overridden.
Isa active_isa();
bool avx2_available();
// Test hook: pin the dispatch (nullopt restores auto-detection).
void force_isa(std::optional<Isa> isa);

std::size_t square_scan(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root);

}  // namespace gon::kernels
