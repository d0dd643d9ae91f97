#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gon/domain.hpp"
#include "gon/json_codec.hpp"

namespace gon::cli {

enum class Status { Ok, None, Rejected, Aborted };

std::string status_name(Status s);
// 0 ok, 3 none, 4 rejected, 5 aborted.
int exit_code(Status s);

// One exactly re-verified claim: lhs <relation> rhs.
struct Check {
  std::string check;
  std::string lhs;
  std::string rhs;
  std::string relation;
  bool holds = false;
};

struct Request {
  std::string command;
  json::Json payload;
  std::uint64_t seed = 0;
};

struct Report {
  Status status = Status::Ok;
  std::optional<json::Json> solution;
  json::Json details;  // command-specific extras (null when absent)
  std::vector<Check> transcript;
  std::uint64_t seed = 0;
  std::string message;  // diagnostics for rejected / aborted
};

const std::vector<std::string>& commands();

// Never throws for bad input: schema and precondition failures become
// rejected, search ceilings and internal failures aborted. A report is only
// ok when every transcript check holds.
Report run(const Request& request);

json::Json to_json(const Report& r);

struct ConstantsRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t guarantee_failures = 0;
  std::size_t sharpness_cases = 0;
  std::size_t sharpness_false_positives = 0;
};

// Guarantee sweep at the exact threshold (covol = prod eps over Z, deg covol =
// n - 1 + sum e over F_p[t]) plus the sharpness constructions (Z^n with
// eps_i = 1 - 1/k, k = 2..10; t R^n with e = 0). n_max <= 4 over Z, <= 3
// over F_p[t].
std::vector<ConstantsRow> run_constants_experiment(const DomainDescriptor& domain, std::size_t n_max,
                                                   std::size_t trials, std::uint64_t seed);

}  // namespace gon::cli
