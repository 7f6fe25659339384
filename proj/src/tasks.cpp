#include "workbench/tasks.hpp"

#include <map>

#include "workbench/errors.hpp"
#include "workbench/gns.hpp"
#include "workbench/selftest.hpp"

namespace workbench {

namespace {

DualFunctional state_of(const Problem &p) {
  if (p.cyclic) return state_from_rep(*p.cyclic);
  if (p.moments) {
    if (!p.algebra)
      throw ValidationError("moment state needs an algebra section");
    return moment_state(p.algebra, *p.moments);
  }
  throw ValidationError("task needs a representation or moments section");
}

long required_order(const TaskRequest &req) {
  if (req.order < 0)
    throw ValidationError("task '" + req.kind + "' needs an order");
  return req.order;
}

std::string run_series(const Problem &p, const TaskRequest &req) {
  unsigned n = static_cast<unsigned>(required_order(req));
  std::string out = "task series\norder " + std::to_string(n) + "\n";
  out += "state omega\n";
  out += series_to_text(to_power_series(state_of(p), n));
  for (std::size_t i = 0; i < p.xi_list.size(); ++i) {
    out += "state e_xi " + std::to_string(i + 1) + "\n";
    DualFunctional e = representative_functional(*p.cyclic, p.xi_list[i]);
    out += series_to_text(to_power_series(e, n));
  }
  return out;
}

std::string profile_str(const std::vector<unsigned> &profile) {
  std::string s;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile[i]);
  }
  return s;
}

std::string run_gns(const Problem &p, const TaskRequest &req) {
  unsigned n = static_cast<unsigned>(required_order(req));
  DualFunctional omega = state_of(p);
  GnsRep rep = generator_matrices(omega, n);
  const AlgebraPtr &alg = rep.algebra;
  std::string out = "task gns\norder " + std::to_string(n) + "\n";
  out += "rank profile " + profile_str(rep.rank_profile) + "\n";
  out += std::string("stabilized ") + (rep.stabilized ? "yes" : "no") + "\n";
  out += "quotient dimension " + std::to_string(rep.quotient_basis.size()) +
         "\n";
  out += "quotient basis";
  for (const auto &alpha : rep.quotient_basis)
    out += " [" + PbwElement::monomial(alg, alpha).str() + "]";
  out += "\n";
  GnsData quot = gns_quotient(omega, n);
  out += "null basis";
  if (quot.null_basis.empty()) out += " (empty)";
  out += "\n";
  for (const auto &e : quot.null_basis) out += e.str() + "\n";
  out += "quotient gram " + rep.quotient_gram.str() + "\n";
  if (rep.stabilized) {
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      out += "generator " + alg->name(i) + " " + rep.matrices[i].str() + "\n";
      out += "charpoly " + poly_str(charpoly(rep.matrices[i]), "lambda") +
             "\n";
    }
    out += "cyclic class " + vector_str(rep.cyclic) + "\n";
  } else {
    for (std::size_t i = 0; i < alg->dim(); ++i)
      out += "truncated action " + alg->name(i) + " " +
             rep.truncated[i].str() + "\n";
  }
  return out;
}

TaskResult run_positivity(const Problem &p, const TaskRequest &req) {
  unsigned n = static_cast<unsigned>(required_order(req));
  TaskResult r;
  r.report = "task positivity\norder " + std::to_string(n) + "\n";
  try {
    DualFunctional omega = state_of(p);
    for (unsigned m = 0; m <= n; ++m) {
      StatePositivity res = check_positivity(omega, m);
      if (res.positive) {
        r.report += "order " + std::to_string(m) + ": positive, rank " +
                    std::to_string(res.rank) + "\n";
      } else {
        r.report += "order " + std::to_string(m) + ": NOT positive\n";
        r.report += "witness " + res.witness.str() + "\n";
        r.report += "value " + res.witness_value.str() + "\n";
        r.status = 2;
        break;
      }
    }
  } catch (const PositivityFailure &e) {
    r.report += "certificate failed during state construction\n";
    r.report += "witness " + e.witness + "\n";
    r.report += std::string("reason ") + e.what() + "\n";
    r.status = 2;
  }
  return r;
}

std::string run_radius(const Problem &p, const TaskRequest &req) {
  unsigned n = static_cast<unsigned>(required_order(req));
  DualFunctional omega = state_of(p);
  std::vector<Rational> dir = req.direction;
  if (dir.empty()) dir.assign(omega.algebra()->dim(), Rational(1));
  std::string out = "task radius\norder " + std::to_string(n) + "\n";
  out += "direction";
  for (const auto &d : dir) out += " " + rational_str(d);
  out += "\n";
  RadiusEstimate est = radius_estimate(to_power_series(omega, n), dir);
  out += "precision " + std::to_string(est.precision) + "\n";
  for (const auto &s : est.samples)
    out += "k= " + std::to_string(s.k) + " value= " + s.value.str() + "\n";
  out += "estimate " + est.estimate.str() + "\n";
  return out;
}

std::string run_fock(const Problem &p, const TaskRequest &req) {
  if (!p.fock) throw ValidationError("fock task needs a fock section");
  const FockSection &f = *p.fock;
  if (req.mode == "eval") {
    if (f.xi.size() != f.space.dim)
      throw ValidationError("fock eval needs a point of the space dimension");
    std::string out = "task fock eval\n";
    out += "point " + vector_str(f.xi) + "\n";
    Scalar value = evaluate_poly(f.poly, f.xi);
    SymPolynomial dag = poly_involution(f.space, f.poly);
    Scalar dvalue = evaluate_poly(dag, f.xi);
    out += "value " + value.str_compact() + "\n";
    out += "involution value " + dvalue.str_compact() + "\n";
    out += std::string("conjugate pair ") +
           (dvalue == value.conj() ? "yes" : "no") + "\n";
    return out;
  }
  if (req.mode == "norm") {
    if (!f.radius) throw ValidationError("fock norm needs a radius");
    std::string out = "task fock norm\n";
    out += "radius " + rational_str(*f.radius) + "\n";
    RNorm nrm = r_norm(f.poly, *f.radius);
    for (const auto &[deg, sq] : nrm.squared)
      out += "degree " + std::to_string(deg) + " squared " +
             rational_str(sq) + "\n";
    out += "value " + nrm.value.str() + "\n";
    return out;
  }
  throw ValidationError("fock task mode must be eval or norm");
}

TaskResult run_props(const TaskRequest &req) {
  std::string suite = req.suite.empty() ? "all" : req.suite;
  TaskResult r;
  SuiteResult res = run_suite(suite);
  r.report = suite_report(res);
  r.status = res.pass ? 0 : 3;
  return r;
}

} // namespace

TaskResult run_task(const Problem &p, const TaskRequest &req) {
  TaskResult r;
  r.name = req.kind;
  if (req.kind == "series")
    r.report = run_series(p, req);
  else if (req.kind == "gns")
    r.report = run_gns(p, req);
  else if (req.kind == "positivity") {
    TaskResult sub = run_positivity(p, req);
    r.report = sub.report;
    r.status = sub.status;
  } else if (req.kind == "radius")
    r.report = run_radius(p, req);
  else if (req.kind == "fock")
    r.report = run_fock(p, req);
  else if (req.kind == "props") {
    TaskResult sub = run_props(req);
    r.report = sub.report;
    r.status = sub.status;
  } else
    throw ValidationError("unknown task '" + req.kind + "'");
  return r;
}

std::vector<TaskResult> run_all(const Problem &p) {
  std::vector<TaskResult> out;
  std::map<std::string, unsigned> seen;
  for (const auto &req : p.tasks) {
    TaskResult r = run_task(p, req);
    unsigned k = ++seen[req.kind];
    if (k > 1) r.name += "_" + std::to_string(k);
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace workbench
