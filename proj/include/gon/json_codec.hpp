#pragma once

// JSON encodings shared by the CLI and its tests. Integers are JSON numbers
// when |x| < 2^53 and decimal strings otherwise (both accepted on input);
// rationals are "p/q" strings; polynomials are ascending coefficient arrays;
// indices in form coefficients are 1-based.

#include <string>
#include <vector>

#include "json.hpp"

#include "gon/domain.hpp"
#include "gon/lattice.hpp"
#include "gon/linear_forms.hpp"
#include "gon/quadform.hpp"

namespace gon::json {

using Json = nlohmann::ordered_json;

// Every decoder takes the field path for diagnostics and throws
// InvalidArgument("<path>: <problem>").
const Json& field(const Json& obj, const std::string& key, const std::string& path);
bool has(const Json& obj, const std::string& key);

Integer to_integer(const Json& j, const std::string& path);
Rational to_rational(const Json& j, const std::string& path);
long long to_int64(const Json& j, const std::string& path);
DomainDescriptor to_domain(const Json& j, const std::string& path);
FpPoly to_poly(std::uint64_t p, const Json& j, const std::string& path);
RatFunc to_ratfunc(std::uint64_t p, const Json& j, const std::string& path);
std::vector<Integer> to_int_vector(const Json& j, const std::string& path);
std::vector<FpPoly> to_poly_vector(std::uint64_t p, const Json& j, const std::string& path);
Matrix<Integer> to_int_matrix(const Json& j, const std::string& path);

// {"domain", "n", "basis"}: basis is row-major n x m, columns generate.
IntLattice to_int_lattice(const Json& j, const std::string& path);
PolyLattice to_poly_lattice(const Json& j, const std::string& path);
// {"domain", "n", "coeffs": [[i, k, m_ik], ...]} with 1 <= i <= k <= n.
IntForm to_int_form(const Json& j, const std::string& path);
PolyForm to_poly_form(const Json& j, const std::string& path);
// {"eps": [...], "distinguished": k} (1-based, default n) or
// {"bounds": [{"value", "root", "strict"}, ...]}.
IntBox to_int_box(const Json& j, std::size_t n, const std::string& path);

Json from_integer(const Integer& x);
Json from_rational(const Rational& q);
Json from_poly(const FpPoly& f);
Json from_ratfunc(const RatFunc& f);
Json from_vector(const std::vector<Integer>& v);
Json from_vector(const std::vector<FpPoly>& v);
Json from_lattice(const IntLattice& l);
Json from_lattice(const PolyLattice& l);
Json from_form(const IntForm& f);
Json from_form(const PolyForm& f);

}  // namespace gon::json
