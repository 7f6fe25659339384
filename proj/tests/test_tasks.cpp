#include "doctest.h"
#include "workbench/errors.hpp"
#include "workbench/tasks.hpp"

using namespace workbench;

namespace {

Problem cos_problem() {
  return parse_problem(R"({
    "algebra": {"dim": 1},
    "representation": {
      "matrices": [[["0/1+0/1i", "1/1+0/1i"], ["-1/1+0/1i", "0/1+0/1i"]]],
      "nu": ["1/1+0/1i", "0/1+0/1i"]
    },
    "tasks": [{"task": "series", "order": 4}, {"task": "gns", "order": 2}]
  })");
}

TaskRequest request_of(const std::string &kind, long order) {
  TaskRequest s;
  s.kind = kind;
  s.order = order;
  return s;
}

} // namespace

TEST_CASE("series report") {
  TaskResult r = run_task(cos_problem(), request_of("series", 4));
  CHECK(r.status == 0);
  CHECK(r.report == "task series\n"
                    "order 4\n"
                    "state omega\n"
                    "alpha= 0 coeff= 1/1 + 0/1 i\n"
                    "alpha= 1 coeff= 0/1 + 0/1 i\n"
                    "alpha= 2 coeff= -1/2 + 0/1 i\n"
                    "alpha= 3 coeff= 0/1 + 0/1 i\n"
                    "alpha= 4 coeff= 1/24 + 0/1 i\n");
}

TEST_CASE("gns report names the recovered generator") {
  TaskResult r = run_task(cos_problem(), request_of("gns", 2));
  CHECK(r.status == 0);
  CHECK(r.report.find("rank profile 1,2,2\n") != std::string::npos);
  CHECK(r.report.find("stabilized yes\n") != std::string::npos);
  CHECK(r.report.find("generator X1 [[0, -1]; [1, 0]]\n") !=
        std::string::npos);
  CHECK(r.report.find("charpoly lambda^2 + 1\n") != std::string::npos);
}

TEST_CASE("positivity failure reports the witness and exits 2") {
  Problem p = parse_problem(R"({
    "algebra": {"dim": 1},
    "moments": ["1", "0", "-1"],
    "tasks": [{"task": "positivity", "order": 1}]
  })");
  TaskResult r = run_task(p, p.tasks[0]);
  CHECK(r.status == 2);
  CHECK(r.report.find("witness X1\n") != std::string::npos);
  // A healthy state passes order by order.
  TaskResult ok = run_task(cos_problem(), request_of("positivity", 2));
  CHECK(ok.status == 0);
  CHECK(ok.report.find("order 2: positive, rank 2\n") != std::string::npos);
}

TEST_CASE("run_all disambiguates repeated kinds and is deterministic") {
  Problem p = cos_problem();
  TaskRequest extra = request_of("series", 6);
  p.tasks.push_back(extra);
  std::vector<TaskResult> first = run_all(p);
  std::vector<TaskResult> second = run_all(p);
  REQUIRE(first.size() == 3);
  CHECK(first[0].name == "series");
  CHECK(first[1].name == "gns");
  CHECK(first[2].name == "series_2");
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].report == second[k].report);
    CHECK(first[k].status == second[k].status);
  }
}

TEST_CASE("task validation") {
  CHECK_THROWS_AS(run_task(cos_problem(), request_of("sing", 2)),
                  ValidationError);
  CHECK_THROWS_AS(run_task(cos_problem(), request_of("series", -1)),
                  ValidationError);
  Problem empty;
  CHECK_THROWS_AS(run_task(empty, request_of("series", 2)), ValidationError);
}

TEST_CASE("props task wraps the suites") {
  TaskRequest s;
  s.kind = "props";
  s.suite = "scalar";
  TaskResult r = run_task(Problem{}, s);
  CHECK(r.status == 0);
  CHECK(r.report.find("suite scalar\n") == 0);
  s.suite = "nope";
  CHECK_THROWS_AS(run_task(Problem{}, s), ValidationError);
}
