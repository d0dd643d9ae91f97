#include <atomic>

#include "gon/kernels/square_scan.hpp"

namespace gon::kernels {

namespace {

// -1: auto-detect, otherwise the forced Isa value.
std::atomic<int> forced{-1};

}  // namespace

bool avx2_available() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(GON_HAVE_AVX2_KERNEL)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::Avx2 && !avx2_available()) isa = Isa::Scalar;
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

std::size_t square_scan(const SquareRow& row, std::int64_t* hit_y, std::int64_t* hit_root) {
  return active_isa() == Isa::Avx2 ? square_scan_avx2(row, hit_y, hit_root) : square_scan_scalar(row, hit_y, hit_root);
}

}  // namespace gon::kernels
