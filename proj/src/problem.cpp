#include "workbench/problem.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "workbench/errors.hpp"

namespace workbench {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw ValidationError("problem file, " + where + ": " + what);
}

const json &field(const json &obj, const std::string &where,
                  const std::string &key) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::size_t get_dim(const json &obj, const std::string &where) {
  const json &d = field(obj, where, "dim");
  if (!d.is_number_unsigned() || d.get<unsigned long>() == 0)
    fail(where, "'dim' must be a positive integer");
  return d.get<std::size_t>();
}

Rational get_rational(const json &v, const std::string &where) {
  if (!v.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError &e) {
    fail(where, e.message);
  }
}

Scalar get_scalar(const json &v, const std::string &where) {
  if (!v.is_string()) fail(where, "expected a scalar string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const ParseError &e) {
    fail(where, e.message);
  }
}

std::vector<Scalar> get_vector(const json &v, const std::string &where,
                               std::size_t len) {
  if (!v.is_array() || v.size() != len)
    fail(where, "expected an array of " + std::to_string(len) + " scalars");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(get_scalar(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix get_matrix(const json &v, const std::string &where, std::size_t n) {
  if (!v.is_array() || v.size() != n)
    fail(where, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> row =
        get_vector(v[i], where + " row " + std::to_string(i + 1), n);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = row[j];
  }
  return m;
}

AlgebraPtr parse_algebra(const json &a) {
  std::size_t dim = get_dim(a, "algebra");
  std::vector<std::string> names;
  if (a.contains("names")) {
    const json &ns = a["names"];
    if (!ns.is_array() || ns.size() != dim)
      fail("algebra", "'names' must list one name per generator");
    for (const auto &n : ns) {
      if (!n.is_string()) fail("algebra", "names must be strings");
      names.push_back(n.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= dim; ++i) names.push_back("X" + std::to_string(i));
  }
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(dim,
                                              std::vector<Rational>(dim, 0)));
  std::vector<std::vector<bool>> listed(dim, std::vector<bool>(dim, false));
  if (a.contains("brackets")) {
    const json &bs = a["brackets"];
    if (!bs.is_array()) fail("algebra", "'brackets' must be an array");
    for (const auto &b : bs) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_number_unsigned() ||
          !b[1].is_number_unsigned() || !b[2].is_array())
        fail("algebra", "each bracket must be [i, j, [[k, \"p/q\"], ...]]");
      std::size_t i = b[0].get<std::size_t>(), j = b[1].get<std::size_t>();
      if (i < 1 || i > dim || j < 1 || j > dim)
        fail("algebra", "bracket indices are 1-based generator numbers");
      for (const auto &term : b[2]) {
        if (!term.is_array() || term.size() != 2 ||
            !term[0].is_number_unsigned())
          fail("algebra", "bracket terms must be [k, \"p/q\"]");
        std::size_t k = term[0].get<std::size_t>();
        if (k < 1 || k > dim)
          fail("algebra", "bracket term index out of range");
        c[i - 1][j - 1][k - 1] = get_rational(term[1], "algebra brackets");
      }
      listed[i - 1][j - 1] = true;
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (listed[i][j] && !listed[j][i])
        for (std::size_t k = 0; k < dim; ++k) c[j][i][k] = -c[i][j][k];
  return LieAlgebra::create(names, c);
}

} // namespace

Problem parse_problem(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
  if (!doc.is_object()) throw ValidationError("problem file: expected a JSON object");

  Problem p;
  if (doc.contains("algebra")) p.algebra = parse_algebra(doc["algebra"]);

  if (doc.contains("representation") && doc.contains("moments"))
    throw ValidationError(
        "problem file: give a representation or moments, not both");

  if (doc.contains("representation")) {
    if (!p.algebra)
      throw ValidationError("problem file: representation needs an algebra");
    const json &r = doc["representation"];
    const json &ms = field(r, "representation", "matrices");
    if (!ms.is_array() || ms.size() != p.algebra->dim())
      fail("representation", "need one matrix per generator");
    if (!ms[0].is_array() || ms[0].empty())
      fail("representation", "matrices must be nonempty square arrays");
    std::size_t d = ms[0].size();
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < ms.size(); ++i)
      mats.push_back(get_matrix(ms[i], "matrix " + p.algebra->name(i), d));
    MatrixRep rep = make_matrix_rep(p.algebra, std::move(mats));
    if (r.contains("unitary_flag")) {
      if (!r["unitary_flag"].is_boolean())
        fail("representation", "'unitary_flag' must be a boolean");
      if (r["unitary_flag"].get<bool>() != rep.unitary_flag)
        fail("representation",
             "declared unitary_flag contradicts the matrices");
    }
    Matrix u = r.contains("J") ? get_matrix(r["J"], "J", d)
                               : Matrix::identity(d);
    std::vector<Scalar> nu = get_vector(field(r, "representation", "nu"),
                                        "nu", d);
    p.cyclic = CyclicData::create(std::move(rep), std::move(u), std::move(nu));
    if (r.contains("xi_list")) {
      const json &xs = r["xi_list"];
      if (!xs.is_array()) fail("representation", "'xi_list' must be an array");
      for (std::size_t i = 0; i < xs.size(); ++i)
        p.xi_list.push_back(
            get_vector(xs[i], "xi_list[" + std::to_string(i) + "]", d));
    }
  }

  if (doc.contains("moments")) {
    if (!p.algebra)
      throw ValidationError("problem file: moments need an algebra");
    const json &ms = doc["moments"];
    if (!ms.is_array() || ms.empty())
      fail("moments", "expected a nonempty array of rationals");
    std::vector<Rational> moments;
    for (std::size_t k = 0; k < ms.size(); ++k)
      moments.push_back(
          get_rational(ms[k], "moments[" + std::to_string(k) + "]"));
    p.moments = std::move(moments);
  }

  if (doc.contains("fock")) {
    const json &f = doc["fock"];
    std::size_t d = get_dim(f, "fock");
    Matrix u = f.contains("J") ? get_matrix(f["J"], "fock J", d)
                               : Matrix::identity(d);
    FockSection fs{make_fspace(d, std::move(u)), SymPolynomial::zero(d), {}, {}};
    if (f.contains("polynomial")) {
      const json &lines = f["polynomial"];
      if (!lines.is_array()) fail("fock", "'polynomial' must be an array of lines");
      std::string text_lines;
      for (const auto &ln : lines) {
        if (!ln.is_string()) fail("fock", "'polynomial' must be an array of lines");
        text_lines += ln.get<std::string>() + "\n";
      }
      fs.poly = sym_poly_from_text(d, text_lines);
    }
    if (f.contains("xi")) fs.xi = get_vector(f["xi"], "fock xi", d);
    if (f.contains("r")) fs.radius = get_rational(f["r"], "fock r");
    p.fock = std::move(fs);
  }

  const json &tasks = field(doc, "problem file", "tasks");
  if (!tasks.is_array()) throw ValidationError("problem file: 'tasks' must be an array");
  for (const auto &t : tasks) {
    const json &kind = field(t, "task", "task");
    if (!kind.is_string()) fail("task", "'task' must be a string");
    TaskRequest req;
    req.kind = kind.get<std::string>();
    if (t.contains("order")) {
      if (!t["order"].is_number_unsigned())
        fail("task " + req.kind, "'order' must be a nonnegative integer");
      req.order = t["order"].get<long>();
    }
    if (t.contains("direction")) {
      const json &dir = t["direction"];
      if (!dir.is_array() || dir.empty())
        fail("task " + req.kind, "'direction' must be a nonempty array");
      for (const auto &v : dir)
        req.direction.push_back(get_rational(v, "task direction"));
    }
    if (t.contains("mode")) {
      if (!t["mode"].is_string()) fail("task " + req.kind, "'mode' must be a string");
      req.mode = t["mode"].get<std::string>();
    }
    if (t.contains("suite")) {
      if (!t["suite"].is_string()) fail("task " + req.kind, "'suite' must be a string");
      req.suite = t["suite"].get<std::string>();
    }
    bool state_task = req.kind == "series" || req.kind == "gns" ||
                      req.kind == "positivity" || req.kind == "radius";
    if (state_task && !p.cyclic && !p.moments)
      fail("task " + req.kind, "needs a representation or moments section");
    if (state_task && req.order < 0)
      fail("task " + req.kind, "needs an order");
    if (req.kind == "fock" && !p.fock)
      fail("task fock", "needs a fock section");
    if (req.kind == "fock" && req.mode != "eval" && req.mode != "norm")
      fail("task fock", "mode must be 'eval' or 'norm'");
    if (req.kind == "props" && req.suite.empty())
      fail("task props", "needs a suite name");
    if (!state_task && req.kind != "fock" && req.kind != "props")
      fail("task", "unknown task '" + req.kind + "'");
    if (req.kind == "radius" && p.algebra &&
        req.direction.size() != p.algebra->dim())
      fail("task radius", "direction length must match the algebra dimension");
    p.tasks.push_back(std::move(req));
  }
  return p;
}

Problem load_problem(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

namespace {

json matrix_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).str_compact());
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const std::vector<Scalar> &v) {
  json out = json::array();
  for (const auto &x : v) out.push_back(x.str_compact());
  return out;
}

} // namespace

std::string serialize_problem(const Problem &p) {
  json doc = json::object();
  if (p.algebra) {
    json a;
    a["dim"] = p.algebra->dim();
    a["names"] = p.algebra->names();
    json brackets = json::array();
    for (std::size_t i = 0; i < p.algebra->dim(); ++i)
      for (std::size_t j = i + 1; j < p.algebra->dim(); ++j) {
        const auto &c = p.algebra->bracket(i, j);
        json terms = json::array();
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0) terms.push_back(json::array({k + 1, rational_str(c[k])}));
        if (!terms.empty())
          brackets.push_back(json::array({i + 1, j + 1, terms}));
      }
    a["brackets"] = brackets;
    doc["algebra"] = a;
  }
  if (p.cyclic) {
    json r;
    json mats = json::array();
    for (const auto &m : p.cyclic->rep().matrices) mats.push_back(matrix_json(m));
    r["matrices"] = mats;
    r["nu"] = vector_json(p.cyclic->cyclic());
    r["J"] = matrix_json(p.cyclic->u());
    r["unitary_flag"] = true;
    if (!p.xi_list.empty()) {
      json xs = json::array();
      for (const auto &xi : p.xi_list) xs.push_back(vector_json(xi));
      r["xi_list"] = xs;
    }
    doc["representation"] = r;
  }
  if (p.moments) {
    json ms = json::array();
    for (const auto &m : *p.moments) ms.push_back(rational_str(m));
    doc["moments"] = ms;
  }
  if (p.fock) {
    json f;
    f["dim"] = p.fock->space.dim;
    f["J"] = matrix_json(p.fock->space.u);
    json lines = json::array();
    std::istringstream ls(sym_poly_to_text(p.fock->poly));
    std::string line;
    while (std::getline(ls, line)) lines.push_back(line);
    f["polynomial"] = lines;
    if (!p.fock->xi.empty()) f["xi"] = vector_json(p.fock->xi);
    if (p.fock->radius) f["r"] = rational_str(*p.fock->radius);
    doc["fock"] = f;
  }
  json tasks = json::array();
  for (const auto &t : p.tasks) {
    json req;
    req["task"] = t.kind;
    if (t.order >= 0) req["order"] = t.order;
    if (!t.direction.empty()) {
      json dir = json::array();
      for (const auto &d : t.direction) dir.push_back(rational_str(d));
      req["direction"] = dir;
    }
    if (!t.mode.empty()) req["mode"] = t.mode;
    if (!t.suite.empty()) req["suite"] = t.suite;
    tasks.push_back(req);
  }
  doc["tasks"] = tasks;
  return doc.dump(2) + "\n";
}

} // namespace workbench
