// gon <command> [payload-json] [--in FILE] [--out FILE] [--seed N]
// The payload comes from --in, the positional argument, or stdin. The report
// is always a JSON document; the exit code mirrors its status.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gon/cli.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

int emit(const gon::cli::Report& report, const std::string& out_path) {
  const std::string text = gon::cli::to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 5;
    }
    out << text;
  }
  return gon::cli::exit_code(report.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry-of-numbers solvers with exactly re-checked certificates"};
  app.require_subcommand(1);
  std::string in_path, out_path, inline_payload;
  std::uint64_t seed = 0;
  for (const auto& name : gon::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("payload", inline_payload, "payload as a JSON string");
    sub->add_option("--in", in_path, "read the payload from a file");
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_option("--seed", seed, "seed recorded in the report (and used by randomized commands)");
  }
  CLI11_PARSE(app, argc, argv);

  gon::cli::Request req;
  req.command = app.get_subcommands().front()->get_name();
  req.seed = seed;
  std::string text;
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) {
      gon::cli::Report r;
      r.status = gon::cli::Status::Rejected;
      r.seed = seed;
      r.message = "invalid input: cannot read " + in_path;
      return emit(r, out_path);
    }
    text = read_all(in);
  } else if (!inline_payload.empty()) {
    text = inline_payload;
  } else {
    text = read_all(std::cin);
  }
  try {
    req.payload = gon::json::Json::parse(text);
  } catch (const std::exception& e) {
    gon::cli::Report r;
    r.status = gon::cli::Status::Rejected;
    r.seed = seed;
    r.message = std::string("invalid input: malformed JSON: ") + e.what();
    return emit(r, out_path);
  }
  return emit(gon::cli::run(req), out_path);
}
