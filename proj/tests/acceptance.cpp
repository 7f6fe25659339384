#include <chrono>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "workbench/errors.hpp"
#include "workbench/gns.hpp"
#include "workbench/selftest.hpp"
#include "workbench/tasks.hpp"

using namespace workbench;
using namespace workbench::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome &o, const std::string &why) {
  o.pass = false;
  if (o.detail.empty()) o.detail = why;
}

// 1. The quarter-turn state realizes cosine exactly through order 12,
//    computed in under 1000 ms.
Outcome criterion_series_exact() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  CyclicData cd = make_cos();
  PowerSeries s = to_power_series(state_from_rep(cd), 12);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  for (unsigned k = 0; k <= 12; ++k)
    if (s.coeffs.at(MultiIndex{k}) != Scalar(cos_taylor(k)))
      fail(o, "coefficient " + std::to_string(k) + " is wrong");
  if (elapsed >= 1000)
    fail(o, "took " + std::to_string(elapsed) + " ms, limit 1000 ms");
  o.detail = "took " + std::to_string(elapsed) + " ms, limit 1000 ms";
  return o;
}

// 2. Generators act as derivations of the dual product: 100 random
//    finite-table functionals per algebra, residual exactly zero.
Outcome criterion_derivation() {
  Outcome o;
  Rng rng(1002);
  auto heis = LieAlgebra::heisenberg();
  auto so3 = LieAlgebra::by_name("so3");
  for (int t = 0; t < 50; ++t) {
    DualFunctional a = rng.functional(heis, 5), b = rng.functional(heis, 5);
    for (std::size_t i = 0; i < 3; ++i)
      if (!vanishes_up_to(derivation_residual(i, a, b), 4))
        fail(o, "heisenberg residual at sample " + std::to_string(t));
  }
  for (int t = 0; t < 50; ++t) {
    DualFunctional a = rng.functional(so3, 4), b = rng.functional(so3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      if (!vanishes_up_to(derivation_residual(i, a, b), 3))
        fail(o, "so3 residual at sample " + std::to_string(t));
  }
  return o;
}

// 3. The Taylor realization is multiplicative: f_{ab} = f_a f_b exactly for
//    100 random pairs over one to three variables at order 6.
Outcome criterion_series_homomorphism() {
  Outcome o;
  Rng rng(1003);
  std::vector<AlgebraPtr> algs{LieAlgebra::abelian(1), LieAlgebra::abelian(3),
                               LieAlgebra::heisenberg()};
  std::vector<int> counts{34, 33, 33};
  for (std::size_t k = 0; k < algs.size(); ++k)
    for (int t = 0; t < counts[k]; ++t) {
      DualFunctional a = rng.functional(algs[k], 6);
      DualFunctional b = rng.functional(algs[k], 6);
      PowerSeries lhs = to_power_series(dual_product(a, b), 6);
      PowerSeries rhs =
          series_product(to_power_series(a, 6), to_power_series(b, 6));
      if (!(lhs == rhs))
        fail(o, "algebra " + std::to_string(k) + " pair " + std::to_string(t));
    }
  return o;
}

// 4. Coalgebra laws: coassociativity and cocommutativity on every monomial
//    of degree <= 4, multiplicativity of the coproduct on 50 random pairs.
Outcome criterion_coalgebra() {
  Outcome o;
  auto heis = LieAlgebra::heisenberg();
  auto so3 = LieAlgebra::by_name("so3");
  for (const auto &alg : {heis, so3})
    for (const auto &alpha : indices_up_to(3, 4)) {
      PbwElement mono = PbwElement::monomial(alg, alpha);
      if (!(coproduct_left(mono) == coproduct_right(mono)))
        fail(o, "coassociativity at " + index_str(alpha));
      if (!(tensor_flip(coproduct(mono)) == coproduct(mono)))
        fail(o, "cocommutativity at " + index_str(alpha));
    }
  Rng rng(1004);
  for (const auto &alg : {heis, so3})
    for (int t = 0; t < 25; ++t) {
      PbwElement a = rng.element(alg, 3, 2), b = rng.element(alg, 3, 2);
      if (!(coproduct(multiply(a, b)) ==
            tensor_multiply(coproduct(a), coproduct(b))))
        fail(o, "multiplicativity at sample " + std::to_string(t));
    }
  return o;
}

// 5. The normal-ordered product is sound: matrix oracles satisfy
//    rho(ab) = rho(a) rho(b) on 200 random pairs of degree <= 4.
Outcome criterion_pbw_soundness() {
  Outcome o;
  Rng rng(1005);
  MatrixRep heis = heis_oracle();
  MatrixRep su2 = su2_oracle();
  for (int t = 0; t < 100; ++t) {
    PbwElement a = rng.element(heis.algebra, 4, 3);
    PbwElement b = rng.element(heis.algebra, 4, 3);
    if (!(rep_matrix(heis, multiply(a, b)) ==
          rep_matrix(heis, a) * rep_matrix(heis, b)))
      fail(o, "heisenberg oracle at sample " + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    PbwElement a = rng.element(su2.algebra, 4, 3);
    PbwElement b = rng.element(su2.algebra, 4, 3);
    if (!(rep_matrix(su2, multiply(a, b)) ==
          rep_matrix(su2, a) * rep_matrix(su2, b)))
      fail(o, "su2 oracle at sample " + std::to_string(t));
  }
  return o;
}

// 6. Involution laws on 100 samples: antiautomorphism and self-inverse on
//    the enveloping algebra, conjugation compatibility on the dual.
Outcome criterion_involution() {
  Outcome o;
  Rng rng(1006);
  auto heis = LieAlgebra::heisenberg();
  auto su2 = LieAlgebra::su2();
  for (const auto &alg : {heis, su2})
    for (int t = 0; t < 25; ++t) {
      PbwElement a = rng.element(alg, 3, 3), b = rng.element(alg, 3, 3);
      if (!(involution(multiply(a, b)) ==
            multiply(involution(b), involution(a))))
        fail(o, "antiautomorphism at sample " + std::to_string(t));
      if (!(involution(involution(a)) == a))
        fail(o, "self-inverse at sample " + std::to_string(t));
    }
  for (const auto &alg : {heis, su2})
    for (int t = 0; t < 25; ++t) {
      DualFunctional a = rng.functional(alg, 5);
      PbwElement e = rng.element(alg, 2, 2);
      DualFunctional lhs = dual_involution(act(e, a));
      DualFunctional rhs = act(conjugate(e), dual_involution(a));
      for (const auto &alpha : indices_up_to(alg->dim(), 3))
        if (lhs.coeff(alpha) != rhs.coeff(alpha))
          fail(o, "module compatibility at sample " + std::to_string(t));
    }
  return o;
}

// 7. Equivariance: the action on a representative functional equals the
//    functional of the moved point, exactly through order 8.
Outcome criterion_equivariance() {
  Outcome o;
  Rng rng(1007);
  CyclicData cos_cd = make_cos();
  CyclicData so3_cd = make_so3();
  for (int t = 0; t < 25; ++t) {
    PbwElement e = rng.element(cos_cd.rep().algebra, 3, 2);
    if (!vanishes_up_to(equivariance_residual(cos_cd, e, rng.vec(2)), 8))
      fail(o, "quarter turn at sample " + std::to_string(t));
  }
  for (int t = 0; t < 25; ++t) {
    PbwElement e = rng.element(so3_cd.rep().algebra, 3, 2);
    if (!vanishes_up_to(equivariance_residual(so3_cd, e, rng.vec(3)), 8))
      fail(o, "rotation fixture at sample " + std::to_string(t));
  }
  return o;
}

// 8. The GNS quotient of the cosine state stabilizes at order 2 with rank 2,
//    the recovered generator has characteristic polynomial lambda^2 + 1, and
//    the quotient form reproduces the state through degree 4.
Outcome criterion_gns_recovery() {
  Outcome o;
  DualFunctional omega = state_from_rep(make_cos());
  GnsRep rep = generator_matrices(omega, 2);
  if (!rep.stabilized) fail(o, "did not stabilize at order 2");
  if (rep.rank_profile != std::vector<unsigned>{1, 2, 2})
    fail(o, "rank profile " + [&] {
      std::string s;
      for (unsigned r : rep.rank_profile) s += std::to_string(r) + " ";
      return s;
    }());
  if (o.pass) {
    std::string cp = poly_str(charpoly(rep.matrices[0]), "lambda");
    if (cp != "lambda^2 + 1") fail(o, "characteristic polynomial " + cp);
    for (const auto &alpha : indices_up_to(1, 4)) {
      PbwElement mono = PbwElement::monomial(omega.algebra(), alpha);
      std::vector<Scalar> moved = mat_vec(rep_element(rep, mono), rep.cyclic);
      Scalar got = inner(rep.cyclic, mat_vec(rep.quotient_gram, moved));
      if (got != omega.coeff(alpha))
        fail(o, "state mismatch at degree " + std::to_string(degree(alpha)));
    }
  }
  return o;
}

// 9. Positivity: every representation-backed state certifies positive up to
//    order 4, the cosine null space is a left ideal, and corrupted moments
//    fail with a concrete witness whose squared value is negative.
Outcome criterion_positivity() {
  Outcome o;
  std::vector<std::pair<std::string, CyclicData>> fixtures;
  fixtures.emplace_back("quarter turn", make_cos());
  fixtures.emplace_back("rotation", make_so3());
  fixtures.emplace_back("grid", make_grid4());
  for (const auto &[label, cd] : fixtures) {
    DualFunctional omega = state_from_rep(cd);
    for (unsigned m = 0; m <= 4; ++m)
      if (!check_positivity(omega, m).positive)
        fail(o, label + " not positive at order " + std::to_string(m));
  }
  if (!null_ideal_closed(gns_quotient(state_from_rep(make_cos()), 2)))
    fail(o, "cosine null space is not a left ideal");
  bool failed = false;
  try {
    moment_state(LieAlgebra::abelian(1),
                 {Rational(1), Rational(0), Rational(-1)});
  } catch (const PositivityFailure &e) {
    failed = true;
    if (e.witness != "X1") fail(o, "witness " + e.witness);
  }
  if (!failed) fail(o, "corrupted moments were accepted");
  // Independent check of the witness value through the functional itself.
  TermMap t;
  t.emplace(MultiIndex{0}, Scalar(1));
  t.emplace(MultiIndex{2}, Scalar(1));
  DualFunctional bad = DualFunctional::from_table(LieAlgebra::abelian(1),
                                                  TruncOrder::at(2), t);
  StatePositivity res = check_positivity(bad, 1);
  if (res.positive) {
    fail(o, "corrupted table certified positive");
  } else {
    Scalar direct =
        bad.evaluate(multiply(involution(res.witness), res.witness));
    if (direct != res.witness_value || !direct.is_real() ||
        !(direct.re() < 0))
      fail(o, "witness value does not certify");
  }
  return o;
}

// 10. Moment states: the Gaussian sequence realizes exp(-x^2/2) exactly to
//     order 12; factorial moments give unit coefficients and a root-test
//     estimate inside [9/10, 11/10] at order 16.
Outcome criterion_moments() {
  Outcome o;
  DualFunctional gauss =
      moment_state(LieAlgebra::abelian(1), gaussian_moments(12));
  PowerSeries gs = to_power_series(gauss, 12);
  for (unsigned k = 0; k <= 12; ++k)
    if (gs.coeffs.at(MultiIndex{k}) != Scalar(gauss_taylor(k)))
      fail(o, "gaussian coefficient " + std::to_string(k));
  DualFunctional fact =
      moment_state(LieAlgebra::abelian(1), factorial_moments(16));
  PowerSeries fs = to_power_series(fact, 16);
  for (unsigned k = 0; k <= 16; ++k)
    if (fs.coeffs.at(MultiIndex{k}).norm2() != Rational(1))
      fail(o, "factorial coefficient " + std::to_string(k));
  RadiusEstimate est = radius_estimate(fs, {Rational(1)});
  if (est.estimate < BigFloat(Rational(9, 10)) ||
      est.estimate > BigFloat(Rational(11, 10)))
    fail(o, "estimate " + est.estimate.str(10) + " outside [9/10, 11/10]");
  o.detail = "estimate " + est.estimate.str(10) + " in [9/10, 11/10]";
  return o;
}

// 11. Polynomial layer: point evaluation is multiplicative on 100 random
//     pairs, homogeneous products contract exactly, weighted norms are
//     submultiplicative within 10^-20 at the working precision, and squared
//     norms grow exactly with the radius.
Outcome criterion_fock() {
  Outcome o;
  Rng rng(1011);
  for (int t = 0; t < 100; ++t) {
    std::size_t d = static_cast<std::size_t>(rng.int_in(1, 3));
    SymPolynomial p = rng.poly(d, 4, 3), q = rng.poly(d, 4, 3);
    std::vector<Scalar> xi = rng.vec(d);
    if (evaluate_poly(poly_multiply(p, q), xi) !=
        evaluate_poly(p, xi) * evaluate_poly(q, xi))
      fail(o, "evaluation at sample " + std::to_string(t));
  }
  for (int t = 0; t < 30; ++t) {
    std::size_t d = static_cast<std::size_t>(rng.int_in(1, 3));
    unsigned n = static_cast<unsigned>(rng.int_in(1, 2));
    unsigned m = static_cast<unsigned>(rng.int_in(1, 2));
    SymPolynomial p = SymPolynomial::zero(d), q = SymPolynomial::zero(d);
    for (int j = 0; j < 3; ++j) {
      MultiIndex a = rng.index(d, n);
      while (degree(a) != n) a = rng.index(d, n);
      MultiIndex b = rng.index(d, m);
      while (degree(b) != m) b = rng.index(d, m);
      p = p + SymPolynomial::monomial(d, a, rng.scalar());
      q = q + SymPolynomial::monomial(d, b, rng.scalar());
    }
    SymPolynomial pq = poly_multiply(p, q);
    Scalar lhs = sym_inner(pq.component(n + m), pq.component(n + m));
    Scalar rhs = sym_inner(p.component(n), p.component(n)) *
                 sym_inner(q.component(m), q.component(m));
    if (rhs.re() < lhs.re())
      fail(o, "contraction at sample " + std::to_string(t));
  }
  BigFloat eps(rational_pow(Rational(1, 10), 20));
  for (int t = 0; t < 30; ++t) {
    SymPolynomial p = rng.poly(2, 3, 3), q = rng.poly(2, 3, 3);
    for (const Rational &r : {Rational(1, 2), Rational(1), Rational(2)}) {
      BigFloat lhs = r_norm(poly_multiply(p, q), r).value;
      BigFloat rhs = r_norm(p, r).value * r_norm(q, r).value + eps;
      if (!(lhs <= rhs))
        fail(o, "submultiplicativity at sample " + std::to_string(t));
    }
  }
  for (int t = 0; t < 20; ++t) {
    SymPolynomial p = rng.poly(3, 4, 4);
    RNorm small = r_norm(p, Rational(1, 3));
    RNorm big = r_norm(p, Rational(3));
    Rational lo(0), hi(0);
    for (const auto &[n, sq] : small.squared)
      lo += sq * rational_pow(Rational(1, 3), 2 * n);
    for (const auto &[n, sq] : big.squared)
      hi += sq * rational_pow(Rational(3), 2 * n);
    if (hi < lo) fail(o, "monotonicity at sample " + std::to_string(t));
  }
  return o;
}

// 12. Determinism: running every shipped fixture twice produces
//     byte-identical reports, and serialization is a parse fixed point.
Outcome criterion_determinism() {
  Outcome o;
  const char *names[] = {"cos", "so3", "heisenberg_grid4", "gauss_moments",
                         "factorial_moments", "bad_moments", "fock_plane",
                         "selftest"};
  for (const char *name : names) {
    std::string path = std::string(WORKBENCH_FIXTURE_DIR) + "/" + name +
                       ".json";
    Problem p = load_problem(path);
    std::vector<TaskResult> first = run_all(p);
    std::vector<TaskResult> second = run_all(load_problem(path));
    if (first.size() != second.size()) {
      fail(o, std::string(name) + ": run sizes differ");
      continue;
    }
    for (std::size_t k = 0; k < first.size(); ++k)
      if (first[k].report != second[k].report ||
          first[k].status != second[k].status ||
          first[k].name != second[k].name)
        fail(o, std::string(name) + ": task " + first[k].name + " differs");
    std::string canon = serialize_problem(p);
    if (serialize_problem(parse_problem(canon)) != canon)
      fail(o, std::string(name) + ": serialization is not a fixed point");
  }
  return o;
}

} // namespace

int main() {
  struct Entry {
    const char *label;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"cosine series exact to order 12 within 1000 ms",
       criterion_series_exact},
      {"generators are derivations on 100 random functional pairs",
       criterion_derivation},
      {"Taylor realization multiplicative on 100 random pairs",
       criterion_series_homomorphism},
      {"coalgebra laws on degree-4 monomials and 50 random pairs",
       criterion_coalgebra},
      {"normal-ordered product sound against matrix oracles, 200 pairs",
       criterion_pbw_soundness},
      {"involution laws on 100 samples", criterion_involution},
      {"equivariance exact through order 8 on both fixtures",
       criterion_equivariance},
      {"GNS recovery of the quarter turn at order 2",
       criterion_gns_recovery},
      {"positivity certificates and null ideal behaviour",
       criterion_positivity},
      {"moment states match their closed forms; radius inside [9/10, 11/10]",
       criterion_moments},
      {"polynomial layer evaluation, contraction, norms",
       criterion_fock},
      {"byte-identical reports over every fixture",
       criterion_determinism},
  };
  int failures = 0;
  int id = 0;
  for (const auto &e : entries) {
    ++id;
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception &ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    if (!o.pass) ++failures;
    std::ostringstream line;
    line << "criterion " << (id < 10 ? " " : "") << id << ": "
         << (o.pass ? "PASS" : "FAIL") << "  " << e.label;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    std::cout << line.str() << "\n";
  }
  if (failures == 0)
    std::cout << "all 12 criteria hold\n";
  else
    std::cout << failures << " criteria failing\n";
  return failures == 0 ? 0 : 1;
}
