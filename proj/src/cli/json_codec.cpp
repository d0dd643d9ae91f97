#include "gon/json_codec.hpp"

#include "gon/errors.hpp"

namespace gon::json {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InvalidArgument(path + ": " + what); }

const Integer kExactDoubleLimit = Integer(1) << 53;

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& array_field(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

}  // namespace

bool has(const Json& obj, const std::string& key) { return obj.is_object() && obj.contains(key); }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

Integer to_integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer (number or decimal string)");
}

Rational to_rational(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(to_integer(j, path));
  fail(path, "expected a rational (\"p/q\" string or integer)");
}

long long to_int64(const Json& j, const std::string& path) {
  const Integer v = to_integer(j, path);
  if (!fits_int64(v)) fail(path, "integer out of range");
  return static_cast<long long>(v);
}

DomainDescriptor to_domain(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a domain name such as \"Z\" or \"F3[t]\"");
  try {
    return DomainDescriptor::parse(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    fail(path, e.what());
  }
}

FpPoly to_poly(std::uint64_t p, const Json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_string()) {
    return FpPoly(p, {static_cast<std::uint64_t>(mod_floor(to_integer(j, path), p))});
  }
  array_field(j, path);
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(static_cast<std::uint64_t>(mod_floor(to_integer(j[i], at(path, i)), p)));
  return FpPoly(p, std::move(c));
}

RatFunc to_ratfunc(std::uint64_t p, const Json& j, const std::string& path) {
  if (j.is_object()) {
    FpPoly num = to_poly(p, field(j, "num", path), path + ".num");
    FpPoly den = has(j, "den") ? to_poly(p, j["den"], path + ".den") : FpPoly::constant(p, 1);
    if (den.is_zero()) fail(path + ".den", "zero denominator");
    return RatFunc(num, den);
  }
  return RatFunc(to_poly(p, j, path));
}

std::vector<Integer> to_int_vector(const Json& j, const std::string& path) {
  array_field(j, path);
  std::vector<Integer> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_integer(j[i], at(path, i)));
  return v;
}

std::vector<FpPoly> to_poly_vector(std::uint64_t p, const Json& j, const std::string& path) {
  array_field(j, path);
  std::vector<FpPoly> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_poly(p, j[i], at(path, i)));
  return v;
}

Matrix<Integer> to_int_matrix(const Json& j, const std::string& path) {
  array_field(j, path);
  if (j.empty()) fail(path, "empty matrix");
  const std::size_t cols = array_field(j[0], at(path, 0)).size();
  if (cols == 0) fail(path, "empty matrix row");
  Matrix<Integer> m(j.size(), cols, Integer(0));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = array_field(j[i], at(path, i));
    if (row.size() != cols) fail(at(path, i), "ragged matrix row");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = to_integer(row[k], at(at(path, i), k));
  }
  return m;
}

namespace {

template <class Ring, class Parse>
BasicLattice<Ring> to_lattice(const Ring& ring, const Json& j, const std::string& path, Parse parse) {
  const auto n = static_cast<std::size_t>(to_int64(field(j, "n", path), path + ".n"));
  const auto& basis = array_field(field(j, "basis", path), path + ".basis");
  if (n == 0 || basis.size() != n) fail(path + ".basis", "expected " + std::to_string(n) + " rows");
  const std::size_t cols = array_field(basis[0], path + ".basis[0]").size();
  Matrix<typename Ring::Elem> m(n, cols, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = array_field(basis[i], at(path + ".basis", i));
    if (row.size() != cols) fail(at(path + ".basis", i), "ragged basis row");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(row[k], at(at(path + ".basis", i), k));
  }
  try {
    return BasicLattice<Ring>(ring, m);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

template <class Ring, class Parse>
BasicQuadForm<Ring> to_form(const Ring& ring, const Json& j, const std::string& path, Parse parse) {
  const long long n = to_int64(field(j, "n", path), path + ".n");
  if (n < 1) fail(path + ".n", "arity must be positive");
  BasicQuadForm<Ring> f(ring, static_cast<std::size_t>(n));
  const auto& coeffs = array_field(field(j, "coeffs", path), path + ".coeffs");
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    const auto p = at(path + ".coeffs", t);
    const auto& term = array_field(coeffs[t], p);
    if (term.size() != 3) fail(p, "expected [i, k, m_ik]");
    const long long i = to_int64(term[0], p + "[0]"), k = to_int64(term[1], p + "[1]");
    if (i < 1 || k < i || k > n) fail(p, "indices must satisfy 1 <= i <= k <= n");
    f.add_term(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), parse(term[2], p + "[2]"));
  }
  return f;
}

void expect_domain(const Json& j, const std::string& path, bool integers) {
  const auto d = to_domain(field(j, "domain", path), path + ".domain");
  if (d.is_integers() != integers) fail(path + ".domain", integers ? "expected domain Z" : "expected F_p[t]");
}

}  // namespace

IntLattice to_int_lattice(const Json& j, const std::string& path) {
  expect_domain(j, path, true);
  return to_lattice(IntegerRing{}, j, path, [](const Json& x, const std::string& p) { return to_integer(x, p); });
}

PolyLattice to_poly_lattice(const Json& j, const std::string& path) {
  expect_domain(j, path, false);
  const auto d = to_domain(j["domain"], path + ".domain");
  return to_lattice(PolyRing{d.p}, j, path, [&](const Json& x, const std::string& p) { return to_poly(d.p, x, p); });
}

IntForm to_int_form(const Json& j, const std::string& path) {
  expect_domain(j, path, true);
  return to_form(IntegerRing{}, j, path, [](const Json& x, const std::string& p) { return to_integer(x, p); });
}

PolyForm to_poly_form(const Json& j, const std::string& path) {
  expect_domain(j, path, false);
  const auto d = to_domain(j["domain"], path + ".domain");
  return to_form(PolyRing{d.p}, j, path, [&](const Json& x, const std::string& p) { return to_poly(d.p, x, p); });
}

IntBox to_int_box(const Json& j, std::size_t n, const std::string& path) {
  IntBox box;
  if (has(j, "bounds")) {
    const auto& b = array_field(j["bounds"], path + ".bounds");
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto p = at(path + ".bounds", i);
      Bound bd;
      bd.value = to_rational(field(b[i], "value", p), p + ".value");
      if (has(b[i], "root")) bd.root = static_cast<unsigned>(to_int64(b[i]["root"], p + ".root"));
      if (has(b[i], "strict")) {
        if (!b[i]["strict"].is_boolean()) fail(p + ".strict", "expected a boolean");
        bd.strict = b[i]["strict"].get<bool>();
      }
      if (bd.root == 0) fail(p + ".root", "root must be positive");
      box.bounds.push_back(bd);
    }
  } else {
    const auto& e = array_field(field(j, "eps", path), path + ".eps");
    std::vector<Rational> eps;
    for (std::size_t i = 0; i < e.size(); ++i) eps.push_back(to_rational(e[i], at(path + ".eps", i)));
    std::optional<std::size_t> dist;
    if (has(j, "distinguished")) {
      const long long k = to_int64(j["distinguished"], path + ".distinguished");
      if (k < 1 || static_cast<std::size_t>(k) > eps.size()) fail(path + ".distinguished", "index out of range");
      dist = static_cast<std::size_t>(k - 1);
    }
    try {
      box = IntBox::from_epsilon(eps, dist);
    } catch (const Error& e) {
      fail(path + ".eps", e.what());
    }
  }
  if (box.dim() != n) fail(path, "box has " + std::to_string(box.dim()) + " bounds, lattice dimension is " + std::to_string(n));
  return box;
}

Json from_integer(const Integer& x) {
  if (abs(x) < kExactDoubleLimit) return Json(static_cast<std::int64_t>(x));
  return Json(to_string(x));
}

Json from_rational(const Rational& q) { return Json(to_string(q)); }

Json from_poly(const FpPoly& f) {
  Json a = Json::array();
  for (auto c : f.coeffs()) a.push_back(c);
  return a;
}

Json from_ratfunc(const RatFunc& f) {
  if (f.den.deg() == 0 && f.den.lead() == 1) return from_poly(f.num);
  return Json{{"num", from_poly(f.num)}, {"den", from_poly(f.den)}};
}

Json from_vector(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(from_integer(x));
  return a;
}

Json from_vector(const std::vector<FpPoly>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(from_poly(x));
  return a;
}

namespace {

template <class Ring, class Enc>
Json lattice_json(const BasicLattice<Ring>& l, Enc enc) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < l.dim(); ++k) row.push_back(enc(l.basis()(i, k)));
    rows.push_back(row);
  }
  return Json{{"domain", l.domain().name()}, {"n", l.dim()}, {"basis", rows}};
}

template <class Ring, class Enc>
Json form_json(const BasicQuadForm<Ring>& f, Enc enc) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t k = i; k < f.dim(); ++k)
      if (!f.ring().is_zero(f.coeff(i, k))) terms.push_back(Json::array({i + 1, k + 1, enc(f.coeff(i, k))}));
  return Json{{"domain", f.ring().descriptor().name()}, {"n", f.dim()}, {"coeffs", terms}};
}

}  // namespace

Json from_lattice(const IntLattice& l) { return lattice_json(l, from_integer); }
Json from_lattice(const PolyLattice& l) { return lattice_json(l, from_poly); }
Json from_form(const IntForm& f) { return form_json(f, from_integer); }
Json from_form(const PolyForm& f) { return form_json(f, from_poly); }

}  // namespace gon::json
