#include <algorithm>
#include <functional>
#include <map>

#include "gon/cli.hpp"
#include "gon/errors.hpp"
#include "gon/small_multiple.hpp"

namespace gon::cli {

using json::Json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::None: return "none";
    case Status::Rejected: return "rejected";
    case Status::Aborted: return "aborted";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::None: return 3;
    case Status::Rejected: return 4;
    case Status::Aborted: return 5;
  }
  return 5;
}

namespace {

// Collects exact re-checks; every relation is evaluated here, never copied
// from the solver.
class Transcript {
 public:
  explicit Transcript(std::vector<Check>& out) : out_(out) {}

  void compare(const std::string& what, const Rational& lhs, const std::string& rel, const Rational& rhs) {
    bool holds = false;
    if (rel == "=") holds = lhs == rhs;
    else if (rel == "!=") holds = lhs != rhs;
    else if (rel == "<") holds = lhs < rhs;
    else if (rel == "<=") holds = lhs <= rhs;
    else if (rel == ">") holds = lhs > rhs;
    else throw InternalError("unknown relation " + rel);
    out_.push_back({what, to_string(lhs), to_string(rhs), rel, holds});
  }

  // Degrees, with -inf for the zero polynomial.
  void degree_le(const std::string& what, Degree lhs, long long rhs) {
    out_.push_back({what, lhs.to_string(), std::to_string(rhs), "<=", lhs <= rhs});
  }

  void fact(const std::string& what, const std::string& lhs, const std::string& rel, const std::string& rhs, bool holds) {
    out_.push_back({what, lhs, rhs, rel, holds});
  }

 private:
  std::vector<Check>& out_;
};

std::string show(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string show(const std::vector<FpPoly>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

bool nonzero_int(const std::vector<Integer>& v) {
  return std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
}
bool nonzero_poly(const std::vector<FpPoly>& v) {
  return std::any_of(v.begin(), v.end(), [](const FpPoly& x) { return !x.is_zero(); });
}

Integer max_abs(const std::vector<Integer>& v) {
  Integer m = 0;
  for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  return m;
}

Degree max_degree(const std::vector<FpPoly>& v) {
  Degree d;
  for (const auto& x : v) d = std::max(d, x.degree());
  return d;
}

bool is_integer_domain(const Json& obj, const std::string& path) {
  return json::to_domain(json::field(obj, "domain", path), path + ".domain").is_integers();
}

std::vector<long long> to_degrees(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidArgument(path + ": expected an array");
  std::vector<long long> e;
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(json::to_int64(j[i], path + "[" + std::to_string(i) + "]"));
  return e;
}

// deg of sum_j (num_j / den_j) x_j, exactly.
Degree ratfunc_combination_degree(std::uint64_t p, const std::vector<RatFunc>& row, const std::vector<FpPoly>& x) {
  FpPoly l = FpPoly::constant(p, 1);
  for (const auto& c : row) l = lcm(l, c.den);
  FpPoly num(p);
  for (std::size_t j = 0; j < row.size(); ++j) num += row[j].num * (l / row[j].den) * x[j];
  if (num.is_zero()) return Degree();
  return Degree(num.deg() - l.deg());
}

struct Outcome {
  Status status = Status::Ok;
  std::optional<Json> solution;
  Json details;
};

Outcome none(Json details = nullptr) { return {Status::None, std::nullopt, std::move(details)}; }

void check_box(Transcript& t, const IntBox& box, const std::vector<Integer>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& b = box.bounds[i];
    const std::string lhs = "|x_" + std::to_string(i + 1) + "|" + (b.root == 1 ? "" : "^" + std::to_string(b.root));
    t.compare(lhs, Rational(ipow(abs(x[i]), b.root)), b.strict ? "<" : "<=", b.value);
  }
}

void check_degrees(Transcript& t, const std::vector<FpPoly>& x, const std::vector<long long>& e) {
  for (std::size_t i = 0; i < x.size(); ++i) t.degree_le("deg x_" + std::to_string(i + 1), x[i].degree(), e[i]);
}

// --- linear forms ---------------------------------------------------------

Outcome cmd_solve_box(const Json& in, Transcript& t) {
  const Json& lj = json::field(in, "lattice", "payload");
  if (is_integer_domain(lj, "payload.lattice")) {
    const auto l = json::to_int_lattice(lj, "payload.lattice");
    const auto box = json::to_int_box(in, l.dim(), "payload");
    SearchOptions opts;
    if (json::has(in, "max_nodes")) opts.max_nodes = static_cast<std::uint64_t>(json::to_int64(in["max_nodes"], "payload.max_nodes"));
    Json details{{"covolume", json::from_integer(l.covolume())}, {"guarantee", box_guarantee_holds(l, box)}};
    auto x = solve_box_int(l, box, opts);
    if (!x) return none(details);
    t.fact("x in lattice", show(*x), "in", "Lambda", l.contains(*x));
    t.fact("x nonzero", show(*x), "!=", "0", nonzero_int(*x));
    check_box(t, box, *x);
    return {Status::Ok, json::from_vector(*x), details};
  }
  const auto l = json::to_poly_lattice(lj, "payload.lattice");
  const auto e = to_degrees(json::field(in, "e", "payload"), "payload.e");
  if (e.size() != l.dim()) throw InvalidArgument("payload.e: expected " + std::to_string(l.dim()) + " degree bounds");
  long long sum = 0;
  for (auto v : e) sum += v;
  Json details{{"deg_covolume", l.deg_covolume()},
               {"guarantee", l.deg_covolume() <= static_cast<long long>(l.dim()) - 1 + sum}};
  auto x = solve_box_poly(l, e);
  if (!x) return none(details);
  t.fact("x in lattice", show(*x), "in", "Lambda", l.contains(*x));
  t.fact("x nonzero", show(*x), "!=", "0", nonzero_poly(*x));
  check_degrees(t, *x, e);
  return {Status::Ok, json::from_vector(*x), details};
}

Outcome cmd_tornheim(const Json& in, Transcript& t) {
  const long long p = json::to_int64(json::field(in, "p", "payload"), "payload.p");
  const auto dom = DomainDescriptor::poly_over(static_cast<std::uint64_t>(std::max(0LL, p)));
  const Json& mj = json::field(in, "matrix", "payload");
  if (!mj.is_array() || mj.empty()) throw InvalidArgument("payload.matrix: expected a non-empty array of rows");
  const std::size_t n = mj.size();
  Matrix<RatFunc> c(n, n, RatFunc(FpPoly(dom.p)));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rp = "payload.matrix[" + std::to_string(i) + "]";
    if (!mj[i].is_array() || mj[i].size() != n) throw InvalidArgument(rp + ": expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) c(i, k) = json::to_ratfunc(dom.p, mj[i][k], rp + "[" + std::to_string(k) + "]");
  }
  const auto e = to_degrees(json::field(in, "e", "payload"), "payload.e");
  if (e.size() != n) throw InvalidArgument("payload.e: expected " + std::to_string(n) + " degree bounds");
  auto x = solve_tornheim(dom.p, c, e);
  t.fact("x nonzero", show(x), "!=", "0", nonzero_poly(x));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatFunc> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(c(i, k));
    t.degree_le("deg (C x)_" + std::to_string(i + 1), ratfunc_combination_degree(dom.p, row, x), e[i]);
  }
  return {Status::Ok, json::from_vector(x), nullptr};
}

Outcome cmd_approx(const Json& in, Transcript& t) {
  const bool integers = !json::has(in, "domain") || is_integer_domain(in, "payload");
  const Json& tj = json::field(in, "theta", "payload");
  if (!tj.is_array() || tj.empty()) throw InvalidArgument("payload.theta: expected a non-empty array");
  const std::size_t n = tj.size();
  if (integers) {
    std::vector<Rational> theta;
    for (std::size_t i = 0; i < n; ++i) theta.push_back(json::to_rational(tj[i], "payload.theta[" + std::to_string(i) + "]"));
    const Rational m = json::to_rational(json::field(in, "M", "payload"), "payload.M");
    auto x = dioph_approx_int(theta, m);
    const Integer& q = x.back();
    t.compare("|q|", Rational(abs(q)), ">", Rational(0));
    t.compare("|q|", Rational(abs(q)), "<", m);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational err = abs(Rational(q) * theta[i] - Rational(x[i]));
      t.compare("|q theta_" + std::to_string(i + 1) + " - x_" + std::to_string(i + 1) + "|^n * M",
                rational_pow(err, n) * m, "<=", Rational(1));
    }
    return {Status::Ok, json::from_vector(x), nullptr};
  }
  const auto dom = json::to_domain(in["domain"], "payload.domain");
  std::vector<RatFunc> theta;
  for (std::size_t i = 0; i < n; ++i) theta.push_back(json::to_ratfunc(dom.p, tj[i], "payload.theta[" + std::to_string(i) + "]"));
  const long long deg_m = json::to_int64(json::field(in, "deg_M", "payload"), "payload.deg_M");
  auto x = dioph_approx_poly(dom.p, theta, deg_m);
  const FpPoly& q = x.back();
  t.fact("q nonzero", q.to_string(), "!=", "0", !q.is_zero());
  t.degree_le("deg q", q.degree(), deg_m - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const FpPoly num = q * theta[i].num - x[i] * theta[i].den;
    const Degree d = num.is_zero() ? Degree() : Degree(static_cast<std::int64_t>(n) * (num.deg() - theta[i].den.deg()));
    t.degree_le("n * deg(q theta_" + std::to_string(i + 1) + " - x_" + std::to_string(i + 1) + ")", d, -deg_m);
  }
  return {Status::Ok, json::from_vector(x), nullptr};
}

Outcome cmd_congruence(const Json& in, Transcript& t) {
  const auto a = json::to_int_matrix(json::field(in, "A", "payload"), "payload.A");
  const auto d = json::to_int_vector(json::field(in, "moduli", "payload"), "payload.moduli");
  if (d.size() != a.rows()) throw InvalidArgument("payload.moduli: expected one modulus per row of A");
  const auto box = json::to_int_box(in, a.cols(), "payload");
  auto x = solve_congruence_box(a, d, box);
  if (!x) return none();
  t.fact("x nonzero", show(*x), "!=", "0", nonzero_int(*x));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * (*x)[k];
    t.compare("(A x)_" + std::to_string(i + 1) + " mod " + to_string(d[i]), Rational(mod_floor(s, d[i])), "=", Rational(0));
  }
  check_box(t, box, *x);
  return {Status::Ok, json::from_vector(*x), nullptr};
}

// --- quadratic forms ------------------------------------------------------

IsotropyOptions isotropy_options(const Json& in) {
  IsotropyOptions o;
  if (json::has(in, "max_candidates")) o.max_candidates = json::to_integer(in["max_candidates"], "payload.max_candidates");
  return o;
}

void check_witness(Transcript& t, const IntForm& f, const std::vector<Integer>& w) {
  t.compare("f(w)", Rational(f.evaluate(w)), "=", Rational(0));
  t.fact("w nonzero", show(w), "!=", "0", nonzero_int(w));
  t.compare("max|w_i|^2", Rational(ipow(max_abs(w), 2)), "<=", Rational(ipow(3 * form_norm(f), f.dim() - 1)));
}

void check_witness(Transcript& t, const PolyForm& f, const std::vector<FpPoly>& w) {
  t.fact("f(w)", f.evaluate(w).to_string(), "=", "0", f.evaluate(w).is_zero());
  t.fact("w nonzero", show(w), "!=", "0", nonzero_poly(w));
  const Degree d = max_degree(w);
  const long long rhs = static_cast<long long>(f.dim() - 1) * form_degree(f);
  t.fact("2 max deg w_i", d.is_neg_infinity() ? "-inf" : std::to_string(2 * d.value()), "<=", std::to_string(rhs),
         d.is_neg_infinity() || 2 * d.value() <= rhs);
}

Outcome cmd_isotropy(const Json& in, Transcript& t) {
  const Json& fj = json::field(in, "form", "payload");
  const auto opts = isotropy_options(in);
  Json sol;
  if (is_integer_domain(fj, "payload.form")) {
    const auto f = json::to_int_form(fj, "payload.form");
    auto c = decide_isotropy(f, opts);
    if (c.isotropic) check_witness(t, f, c.witness);
    sol = Json{{"isotropic", c.isotropic}, {"witness", c.isotropic ? json::from_vector(c.witness) : Json(nullptr)},
               {"bound", json::from_integer(c.bound)}};
  } else {
    const auto f = json::to_poly_form(fj, "payload.form");
    auto c = decide_isotropy(f, opts);
    if (c.isotropic) check_witness(t, f, c.witness);
    sol = Json{{"isotropic", c.isotropic}, {"witness", c.isotropic ? json::from_vector(c.witness) : Json(nullptr)},
               {"degree_bound", json::from_integer(c.bound)}};
  }
  return {Status::Ok, sol, nullptr};
}

Outcome cmd_minimize(const Json& in, Transcript& t) {
  const Json& fj = json::field(in, "form", "payload");
  Json sizes = Json::array();
  if (is_integer_domain(fj, "payload.form")) {
    const auto f = json::to_int_form(fj, "payload.form");
    auto tr = minimize_isotropic(f, json::to_int_vector(json::field(in, "seed", "payload"), "payload.seed"));
    check_witness(t, f, tr.witness);
    for (const auto& s : tr.sizes) sizes.push_back(json::from_integer(s));
    return {Status::Ok, json::from_vector(tr.witness), Json{{"sizes", sizes}}};
  }
  const auto f = json::to_poly_form(fj, "payload.form");
  auto tr = minimize_isotropic(f, json::to_poly_vector(f.ring().p, json::field(in, "seed", "payload"), "payload.seed"));
  check_witness(t, f, tr.witness);
  for (const auto& s : tr.sizes) sizes.push_back(json::from_integer(s));
  return {Status::Ok, json::from_vector(tr.witness), Json{{"degree_sizes", sizes}}};
}

// --- small multiples ------------------------------------------------------

template <class Ring>
void check_h_witnesses(Transcript& t, const BasicQuadForm<Ring>& f,
                       const std::vector<PrimePowerWitness<typename Ring::Elem>>& ws) {
  const auto& ring = f.ring();
  const std::size_t n = f.dim();
  const auto disc = f.disc();
  const typename Ring::Elem sdisc = (n / 2) % 2 == 1 ? typename Ring::Elem(-disc) : disc;
  typename Ring::Elem two_n = ring.one();
  for (std::size_t i = 0; i < n; ++i) two_n = two_n * ring.from_int(2);
  for (const auto& w : ws) {
    typename Ring::Elem m = ring.one();
    for (unsigned i = 0; i < w.exponent; ++i) m = m * w.prime;
    typename Ring::Elem q, r;
    ring.divmod(w.root * w.root * two_n - sdisc, m, q, r);
    t.fact("2^n root^2 - (-1)^(n/2) disc mod " + ring.to_string(w.prime) + "^" + std::to_string(w.exponent),
           ring.to_string(r), "=", "0", ring.is_zero(r));
  }
}

template <class Elem, class Enc>
Json witnesses_json(const std::vector<PrimePowerWitness<Elem>>& ws, Enc enc) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(Json{{"prime", enc(w.prime)}, {"exponent", w.exponent}, {"root", enc(w.root)}});
  return a;
}

Outcome cmd_small_multiple(const Json& in, Transcript& t) {
  const Json& fj = json::field(in, "form", "payload");
  const auto opts = isotropy_options(in);
  if (is_integer_domain(fj, "payload.form")) {
    const auto f = json::to_int_form(fj, "payload.form");
    const Integer d = json::to_integer(json::field(in, "d", "payload"), "payload.d");
    auto c = small_multiple_int(f, d, opts);
    t.compare("f(v)", Rational(f.evaluate(c.v)), "=", Rational(c.k * c.d));
    t.compare("|k|", Rational(abs(c.k)), ">", Rational(0));
    t.compare("|k|", Rational(abs(c.k)), "<", Rational(form_norm(f)));
    t.fact("v in Lambda_d", show(c.v), "in", "Lambda_d", hyperbolic_lattice_mod(f, d).contains(c.v));
    check_h_witnesses(t, f, c.hypothesis.details);
    Json sol{{"v", json::from_vector(c.v)}, {"k", json::from_integer(c.k)}, {"d", json::from_integer(c.d)}};
    Json det{{"bound", json::from_integer(c.bound)},
             {"route", route_name(*c.hypothesis.route)},
             {"witnesses", witnesses_json(c.hypothesis.details, json::from_integer)}};
    return {Status::Ok, sol, det};
  }
  const auto f = json::to_poly_form(fj, "payload.form");
  const FpPoly d = json::to_poly(f.ring().p, json::field(in, "d", "payload"), "payload.d");
  auto c = small_multiple_poly(f, d, opts);
  t.fact("f(v)", f.evaluate(c.v).to_string(), "=", (c.k * c.d).to_string(), f.evaluate(c.v) == c.k * c.d);
  t.fact("k nonzero", c.k.to_string(), "!=", "0", !c.k.is_zero());
  t.degree_le("deg k", c.k.degree(), form_degree(f));
  t.fact("v in Lambda_d", show(c.v), "in", "Lambda_d", hyperbolic_lattice_mod(f, d).contains(c.v));
  check_h_witnesses(t, f, c.hypothesis.details);
  Json sol{{"v", json::from_vector(c.v)}, {"k", json::from_poly(c.k)}, {"d", json::from_poly(c.d)}};
  Json det{{"degree_bound", json::from_integer(c.bound)},
           {"route", route_name(*c.hypothesis.route)},
           {"witnesses", witnesses_json(c.hypothesis.details, json::from_poly)}};
  return {Status::Ok, sol, det};
}

Outcome cmd_four_square(const Json& in, Transcript& t) {
  const Integer n = json::to_integer(json::field(in, "n", "payload"), "payload.n");
  if (n < 1) throw InvalidArgument("payload.n: must be a positive integer");
  auto r = four_square(n);
  t.compare("a^2 + b^2 + c^2 + d^2", Rational(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]), "=", Rational(n));
  return {Status::Ok, json::from_vector(std::vector<Integer>(r.begin(), r.end())), nullptr};
}

// --- experiments ----------------------------------------------------------

Outcome cmd_enumerator(const Json& in, Transcript& t) {
  const auto l = json::to_int_lattice(json::field(in, "lattice", "payload"), "payload.lattice");
  const Json& hj = json::field(in, "halfwidths", "payload");
  if (!hj.is_array() || hj.size() != l.dim()) throw InvalidArgument("payload.halfwidths: expected one per dimension");
  std::vector<Rational> w;
  Rational vol = 1;
  for (std::size_t i = 0; i < hj.size(); ++i) {
    w.push_back(json::to_rational(hj[i], "payload.halfwidths[" + std::to_string(i) + "]"));
    if (w.back() <= 0) throw InvalidArgument("payload.halfwidths: must be positive");
    vol *= 2 * w.back();
  }
  const Integer r = json::to_integer(json::field(in, "r", "payload"), "payload.r");
  if (r < 1) throw InvalidArgument("payload.r: must be positive");
  auto pc = lattice_point_ratio(w, l, r);
  const Rational predicted = vol / Rational(l.covolume());
  const Rational rel = abs(pc.ratio - predicted) / predicted;
  t.compare("count / r^n", Rational(pc.count) / Rational(ipow(r, l.dim())), "=", pc.ratio);
  Json sol{{"count", json::from_integer(pc.count)},
           {"ratio", json::from_rational(pc.ratio)},
           {"predicted", json::from_rational(predicted)},
           {"relative_error", json::from_rational(rel)},
           {"relative_error_approx", static_cast<double>(rel)}};
  return {Status::Ok, sol, nullptr};
}

Outcome cmd_constants(const Json& in, Transcript& t, std::uint64_t seed) {
  const auto dom = json::to_domain(json::field(in, "domain", "payload"), "payload.domain");
  const long long n_max = json::to_int64(json::field(in, "n_max", "payload"), "payload.n_max");
  const long long trials = json::to_int64(json::field(in, "trials", "payload"), "payload.trials");
  if (n_max < 1) throw InvalidArgument("payload.n_max: must be positive");
  if (trials < 0) throw InvalidArgument("payload.trials: must be nonnegative");
  auto rows = run_constants_experiment(dom, static_cast<std::size_t>(n_max), static_cast<std::size_t>(trials), seed);
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back(Json{{"n", r.n},
                         {"trials", r.trials},
                         {"guarantee_failures", r.guarantee_failures},
                         {"sharpness_cases", r.sharpness_cases},
                         {"sharpness_false_positives", r.sharpness_false_positives}});
    const std::string tag = " (n = " + std::to_string(r.n) + ")";
    t.compare("guarantee failures" + tag, Rational(r.guarantee_failures), "=", Rational(0));
    t.compare("sharpness false positives" + tag, Rational(r.sharpness_false_positives), "=", Rational(0));
  }
  return {Status::Ok, table, Json{{"domain", dom.name()}}};
}

using Handler = std::function<Outcome(const Json&, Transcript&, std::uint64_t)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"solve-box", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_solve_box(j, t); }},
      {"tornheim", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_tornheim(j, t); }},
      {"approx", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_approx(j, t); }},
      {"congruence", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_congruence(j, t); }},
      {"isotropy", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_isotropy(j, t); }},
      {"minimize", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_minimize(j, t); }},
      {"small-multiple", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_small_multiple(j, t); }},
      {"four-square", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_four_square(j, t); }},
      {"enumerator", [](const Json& j, Transcript& t, std::uint64_t) { return cmd_enumerator(j, t); }},
      {"constants", cmd_constants},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"solve-box", "tornheim",       "approx",      "congruence", "isotropy",
                                             "minimize",  "small-multiple", "four-square", "enumerator", "constants"};
  return c;
}

Report run(const Request& request) {
  Report rep;
  rep.seed = request.seed;
  Transcript t(rep.transcript);
  auto fail = [&](Status s, const std::string& msg) {
    rep.status = s;
    rep.message = msg;
    rep.solution.reset();
    rep.details = nullptr;
    rep.transcript.clear();
  };
  try {
    auto it = handlers().find(request.command);
    if (it == handlers().end()) throw InvalidArgument("command: unknown command '" + request.command + "'");
    if (!request.payload.is_object()) throw InvalidArgument("payload: expected a JSON object");
    Outcome out = it->second(request.payload, t, request.seed);
    rep.status = out.status;
    rep.solution = std::move(out.solution);
    rep.details = std::move(out.details);
  } catch (const InvalidArgument& e) {
    fail(Status::Rejected, std::string("invalid input: ") + e.what());
  } catch (const PreconditionError& e) {
    fail(Status::Rejected, std::string("precondition violated: ") + e.what());
  } catch (const SearchLimitExceeded& e) {
    fail(Status::Aborted, std::string("search limit: ") + e.what());
  } catch (const InternalError& e) {
    fail(Status::Aborted, std::string("internal error: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(Status::Rejected, std::string("invalid input: ") + e.what());
  }
  // Transcript gate.
  if (rep.status == Status::Ok) {
    for (const auto& c : rep.transcript) {
      if (!c.holds) {
        rep.status = Status::Aborted;
        rep.message = "transcript re-check failed: " + c.check + " " + c.lhs + " " + c.relation + " " + c.rhs;
        rep.solution.reset();
        break;
      }
    }
  }
  return rep;
}

json::Json to_json(const Report& r) {
  Json j;
  j["status"] = status_name(r.status);
  if (r.status == Status::None) j["result"] = "none";
  if (r.solution) j["solution"] = *r.solution;
  if (!r.details.is_null()) j["details"] = r.details;
  Json tr = Json::array();
  for (const auto& c : r.transcript) {
    tr.push_back(Json{{"check", c.check}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  j["transcript"] = tr;
  j["seed"] = r.seed;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace gon::cli
