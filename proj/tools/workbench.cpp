#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "workbench/errors.hpp"
#include "workbench/tasks.hpp"

namespace {

using namespace workbench;

struct Options {
  std::string input;
  std::string out_dir;
  long order = -1;
  std::string mode;
  std::string suite;
};

void emit(const std::vector<TaskResult> &results, const std::string &out_dir) {
  if (out_dir.empty()) {
    for (const auto &r : results) std::cout << r.report;
    return;
  }
  std::filesystem::create_directories(out_dir);
  for (const auto &r : results) {
    std::filesystem::path path =
        std::filesystem::path(out_dir) / (r.name + ".txt");
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path.string());
    f << r.report;
    std::cout << "wrote " << path.string() << "\n";
  }
}

int worst(const std::vector<TaskResult> &results) {
  int s = 0;
  for (const auto &r : results) s = std::max(s, r.status);
  return s;
}

/// The file's first matching task seeds the req; command-line options
/// override its fields.
TaskRequest pick_request(const Problem &p, const std::string &kind,
                   const Options &opt) {
  TaskRequest req;
  req.kind = kind;
  for (const auto &t : p.tasks)
    if (t.kind == kind) {
      req = t;
      break;
    }
  if (opt.order >= 0) req.order = opt.order;
  if (!opt.mode.empty()) req.mode = opt.mode;
  if (!opt.suite.empty()) req.suite = opt.suite;
  return req;
}

int dispatch(const std::string &kind, const Options &opt) {
  if (kind == "props" && opt.input.empty()) {
    TaskRequest req;
    req.kind = "props";
    req.suite = opt.suite;
    TaskResult r = run_task(Problem{}, req);
    emit({r}, opt.out_dir);
    return r.status;
  }
  if (opt.input.empty())
    throw ValidationError("missing --input problem file");
  Problem p = load_problem(opt.input);
  if (kind == "run") {
    std::vector<TaskResult> results = run_all(p);
    emit(results, opt.out_dir);
    return worst(results);
  }
  TaskResult r = run_task(p, pick_request(p, kind, opt));
  emit({r}, opt.out_dir);
  return r.status;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact workbench for Lie algebra states, series and moments"};
  app.require_subcommand(1);
  Options opt;
  std::string chosen;

  auto add = [&](const std::string &name, const std::string &desc,
                 bool needs_order) {
    CLI::App *sub = app.add_subcommand(name, desc);
    sub->add_option("--input", opt.input, "problem file (JSON)");
    sub->add_option("--out", opt.out_dir, "directory for report files");
    if (needs_order)
      sub->add_option("--order", opt.order, "truncation order");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };

  add("series", "Taylor coefficients of the state and its orbit", true);
  add("gns", "rank profile and recovered generator matrices", true);
  add("positivity", "positivity certificates order by order", true);
  add("radius", "root-test radius of the restricted series", true);
  CLI::App *fock =
      add("fock", "evaluate or measure the polynomial section", false);
  fock->add_option("--mode", opt.mode, "eval or norm");
  CLI::App *props = add("props", "run the property suites", false);
  props->add_option("--suite", opt.suite, "suite name (default all)");
  add("run", "run every task listed in the problem file", false);

  CLI11_PARSE(app, argc, argv);

  try {
    return dispatch(chosen, opt);
  } catch (const workbench::ContractViolation &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const workbench::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
