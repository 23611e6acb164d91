#include "galcrem/cli.hpp"

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "galcrem/report.hpp"

namespace galcrem {

namespace {

struct Args {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 0x5eed;
  std::optional<unsigned> degree_bound;
  std::optional<unsigned> precision_budget;
  std::optional<double> timeout;
  std::string file;
  std::string point;
  std::optional<std::size_t> generator;
  std::string map;
};

int emit(const Report& r, const Args& a, std::ostream& out) {
  out << render_report(r, a.json ? ReportFormat::json : ReportFormat::human);
  return r.exit_code();
}

int error(const std::string& msg, int code, const Args& a, std::ostream& out, std::ostream& err) {
  if (a.json) out << Json{{"error", msg}, {"exit_code", code}}.dump(2) << "\n";
  err << "error: " << msg << "\n";
  return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois points of rational plane curves and plane extensions of their groups", "galcrem"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.json, "Print the report as JSON");
  app.add_option("--seed", a.seed, "Seed for randomized steps");
  app.add_option("--degree-bound", a.degree_bound, "Coefficient degree bound for the fractional-linear search");
  app.add_option("--precision-budget", a.precision_budget, "Largest working precision in bits for square roots");
  app.add_flag("--timings", a.timings, "Include per-stage wall times in the report");
  app.add_option("--timeout", a.timeout, "Cancel after this many seconds (exit 3)");

  auto file_arg = [&](CLI::App* c, const std::string& what) { c->add_option("file", a.file, what)->required(); };
  auto point_opt = [&](CLI::App* c) { c->add_option("--point", a.point, "Center of projection a,b,c"); };

  CLI::App* curve = app.add_subcommand("curve", "Curve commands")->require_subcommand(1);
  CLI::App* info = curve->add_subcommand("info", "Degree, equations, multiplicities");
  file_arg(info, "Curve or scenario JSON file");

  CLI::App* galois = app.add_subcommand("galois", "Galois point commands")->require_subcommand(1);
  CLI::App* test = galois->add_subcommand("test", "Decide whether the projection is Galois");
  file_arg(test, "Curve or scenario JSON file");
  point_opt(test);
  CLI::App* extend = galois->add_subcommand("extend", "Extend a group element to the plane");
  file_arg(extend, "Curve or scenario JSON file");
  point_opt(extend);
  extend->add_option("--generator", a.generator, "Index of the generator to extend (of the non-identity group elements when the file lists no generators)");
  extend->add_option("--map", a.map, "Candidate map as JSON: {\"components\": [...]} or {\"linear\": [[...]]}");

  CLI::App* cremona = app.add_subcommand("cremona", "Cremona reduction")->require_subcommand(1);
  CLI::App* reduce = cremona->add_subcommand("reduce", "Replay or build a reduction chain");
  file_arg(reduce, "Curve or scenario JSON file");

  CLI::App* verify = app.add_subcommand("verify", "Check a scenario against its expected verdicts");
  verify->add_option("scenario", a.file, "Built-in name or scenario file")->required();

  for (CLI::App* c : {curve, galois, cremona, verify, info, test, extend, reduce}) c->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    return error(e.what(), exit_code::input_error, a, out, err);
  }

  RunOptions o;
  o.seed = a.seed;
  o.degree_bound = a.degree_bound;
  if (a.precision_budget) o.budget.max_bits = *a.precision_budget;
  o.timings = a.timings;
  o.generator = a.generator;

  std::stop_source stop;
  std::jthread timer;
  if (a.timeout) {
    auto limit = std::chrono::duration<double>(*a.timeout);
    timer = std::jthread([stop, limit](std::stop_token self) mutable {
      std::mutex m;
      std::condition_variable_any cv;
      std::unique_lock lock(m);
      cv.wait_for(lock, self, limit, [] { return false; });
      if (!self.stop_requested()) stop.request_stop();
    });
    o.stop = stop.get_token();
  }

  try {
    Scenario s = load_scenario(a.file);
    if (!a.point.empty()) s.point = parse_point(a.point, s.field);
    if (!a.map.empty()) s.map = parse_map_json(a.map, s.field);
    if (verify->parsed()) return emit(verify_scenario(s, o), a, out);
    if (info->parsed()) return emit(curve_info(s, o), a, out);
    if (test->parsed()) return emit(galois_test(s, o), a, out);
    if (extend->parsed()) return emit(galois_extend(s, o), a, out);
    if (reduce->parsed()) return emit(cremona_reduce(s, o), a, out);
    return error("no command", exit_code::input_error, a, out, err);
  } catch (const Cancelled&) {
    return error("cancelled after " + std::to_string(*a.timeout) + " s", exit_code::undetermined, a, out, err);
  } catch (const ScenarioError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const CurveError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const PolyError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const FieldError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const GaloisError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const MapError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const CremonaError& e) {
    return error(e.what(), exit_code::input_error, a, out, err);
  } catch (const std::exception& e) {
    return error(std::string("internal error: ") + e.what(), exit_code::failure, a, out, err);
  }
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, out, err);
}

}  // namespace galcrem
