#include <random>

#include "gon/cli.hpp"
#include "gon/errors.hpp"

namespace gon::cli {

namespace {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Upper triangular basis with diagonal product <= max_covol.
IntLattice random_int_lattice(Rng& rng, std::size_t n, long long max_covol) {
  Matrix<Integer> b(n, n, Integer(0));
  long long room = max_covol;
  for (std::size_t i = 0; i < n; ++i) {
    const long long d = uniform(rng, 1, room);
    room /= d;
    b(i, i) = d;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) b(i, k) = uniform(rng, -20, 20);
  return IntLattice(IntegerRing{}, b);
}

FpPoly random_poly(Rng& rng, std::uint64_t p, long long deg, bool monic) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long long>(p) - 1));
  if (monic) c.back() = 1;
  return FpPoly(p, c);
}

// Upper triangular basis with sum of diagonal degrees = total.
PolyLattice random_poly_lattice(Rng& rng, std::uint64_t p, std::size_t n, long long total) {
  const PolyRing ring(p);
  Matrix<FpPoly> b(n, n, ring.zero());
  std::vector<long long> degs(n, 0);
  for (long long k = 0; k < total; ++k) ++degs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1))];
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = random_poly(rng, p, degs[i], true);
    for (std::size_t k = i + 1; k < n; ++k) b(i, k) = random_poly(rng, p, 3, false);
  }
  return PolyLattice(ring, b);
}

ConstantsRow int_row(Rng& rng, std::size_t n, std::size_t trials) {
  ConstantsRow row{n, trials, 0, 0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const auto l = random_int_lattice(rng, n, 500);
    const Rational covol(l.covolume());
    std::vector<Rational> eps;
    Rational prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const long long den = uniform(rng, 1, 5);
      eps.push_back(ratio(uniform(rng, den, 8 * den), den));
      prod *= eps.back();
    }
    eps.push_back(covol / prod);  // prod eps = covol exactly
    const auto box = IntBox::from_epsilon(eps);
    auto x = solve_box_int(l, box);
    bool ok = x && l.contains(*x) && box.admits(*x);
    if (ok) {
      ok = false;
      for (const auto& v : *x) ok = ok || v != 0;
    }
    if (!ok) ++row.guarantee_failures;
  }
  const auto zn = IntLattice::standard(IntegerRing{}, n);
  for (int k = 2; k <= 10; ++k) {
    const std::vector<Rational> eps(n, Rational(1) - ratio(1, k));
    ++row.sharpness_cases;
    if (solve_box_int(zn, IntBox::from_epsilon(eps))) ++row.sharpness_false_positives;
  }
  return row;
}

ConstantsRow poly_row(Rng& rng, std::uint64_t p, std::size_t n, std::size_t trials) {
  ConstantsRow row{n, trials, 0, 0, 0};
  const PolyRing ring(p);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<long long> e(n);
    long long sum = 0;
    for (auto& v : e) sum += (v = uniform(rng, 0, 2));
    const auto l = random_poly_lattice(rng, p, n, static_cast<long long>(n) - 1 + sum);
    auto x = solve_box_poly(l, e);
    bool ok = x && l.contains(*x);
    if (ok) {
      bool nz = false;
      for (std::size_t i = 0; i < n; ++i) {
        ok = ok && (*x)[i].degree() <= e[i];
        nz = nz || !(*x)[i].is_zero();
      }
      ok = ok && nz;
    }
    if (!ok) ++row.guarantee_failures;
  }
  Matrix<FpPoly> tb = Matrix<FpPoly>::identity(n, ring.zero(), ring.t());
  ++row.sharpness_cases;
  if (solve_box_poly(PolyLattice(ring, tb), std::vector<long long>(n, 0))) ++row.sharpness_false_positives;
  return row;
}

}  // namespace

std::vector<ConstantsRow> run_constants_experiment(const DomainDescriptor& domain, std::size_t n_max,
                                                   std::size_t trials, std::uint64_t seed) {
  const std::size_t cap = domain.is_integers() ? 4 : 3;
  if (n_max < 1 || n_max > cap)
    throw InvalidArgument("n_max must lie in [1, " + std::to_string(cap) + "] for " + domain.name());
  if (!domain.is_integers() && domain.p == 0) throw InvalidArgument("polynomial domain without a prime");
  std::vector<ConstantsRow> rows;
  if (trials == 0) return rows;
  Rng rng(seed);
  for (std::size_t n = 1; n <= n_max; ++n)
    rows.push_back(domain.is_integers() ? int_row(rng, n, trials) : poly_row(rng, domain.p, n, trials));
  return rows;
}

}  // namespace gon::cli
