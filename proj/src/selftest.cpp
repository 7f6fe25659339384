#include "workbench/selftest.hpp"

#include <array>

#include "workbench/errors.hpp"
#include "workbench/gns.hpp"
#include "workbench/problem.hpp"
#include "workbench/rep.hpp"

namespace workbench {

long Rng::int_in(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(gen_);
}

Rational Rng::rational() {
  Int n(int_in(-9, 9)), d(int_in(1, 9));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

Scalar Rng::scalar() { return Scalar(rational(), rational()); }

MultiIndex Rng::index(std::size_t nvars, unsigned max_degree) {
  MultiIndex alpha(nvars, 0);
  unsigned total = static_cast<unsigned>(int_in(0, max_degree));
  for (unsigned k = 0; k < total; ++k)
    alpha[static_cast<std::size_t>(int_in(0, static_cast<long>(nvars) - 1))] += 1;
  return alpha;
}

PbwElement Rng::element(const AlgebraPtr &alg, unsigned max_degree,
                        unsigned terms) {
  PbwElement out = PbwElement::zero(alg);
  for (unsigned t = 0; t < terms; ++t)
    out = out + PbwElement::monomial(alg, index(alg->dim(), max_degree),
                                     scalar());
  return out;
}

DualFunctional Rng::functional(const AlgebraPtr &alg, unsigned order) {
  TermMap table;
  for (const auto &alpha : indices_up_to(alg->dim(), order)) {
    Scalar c = scalar();
    if (!c.is_zero()) table.emplace(alpha, c);
  }
  return DualFunctional::from_table(alg, TruncOrder::at(order),
                                    std::move(table));
}

SymPolynomial Rng::poly(std::size_t dim, unsigned max_degree, unsigned terms) {
  SymPolynomial out = SymPolynomial::zero(dim);
  for (unsigned t = 0; t < terms; ++t)
    out = out + SymPolynomial::monomial(dim, index(dim, max_degree), scalar());
  return out;
}

std::vector<Scalar> Rng::vec(std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar());
  return out;
}

std::vector<Rational> Rng::rational_vec(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational());
  return out;
}

namespace {

void put(std::vector<PropertyResult> &out, const std::string &name, bool ok,
         const std::string &detail = "") {
  out.push_back({name, ok, ok ? "" : detail});
}

bool functional_eq(const DualFunctional &a, const DualFunctional &b,
                   unsigned order) {
  for (const auto &alpha : indices_up_to(a.algebra()->dim(), order))
    if (a.coeff(alpha) != b.coeff(alpha)) return false;
  return true;
}

Matrix int_matrix(std::size_t n, const std::vector<int> &vals) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(vals[i * n + j]);
  return m;
}

CyclicData cos_data() {
  auto line = LieAlgebra::abelian(1);
  MatrixRep rep = make_matrix_rep(line, {int_matrix(2, {0, 1, -1, 0})});
  return CyclicData::create(std::move(rep), Matrix::identity(2),
                            {Scalar(1), Scalar(0)});
}

CyclicData so3_data() {
  auto so3 = LieAlgebra::by_name("so3");
  MatrixRep rep = make_matrix_rep(
      so3, {int_matrix(3, {0, 0, 0, 0, 0, -1, 0, 1, 0}),
            int_matrix(3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
            int_matrix(3, {0, -1, 0, 1, 0, 0, 0, 0, 0})});
  return CyclicData::create(std::move(rep), Matrix::identity(3),
                            {Scalar(1), Scalar(0), Scalar(0)});
}

/// Four-point grid representation of the Heisenberg algebra with central
/// element acting as zero; all generators diagonal and skew-Hermitian, the
/// conjugation the index flip.
CyclicData grid4_data() {
  auto heis = LieAlgebra::heisenberg();
  auto diag = [](std::initializer_list<Rational> vals) {
    Matrix m(4, 4);
    std::size_t i = 0;
    for (const Rational &v : vals) {
      m.at(i, i) = Scalar(Rational(0), v);
      ++i;
    }
    return m;
  };
  Matrix x = diag({Rational(-3, 2), Rational(-1, 2), Rational(1, 2),
                   Rational(3, 2)});
  Matrix y = diag({Rational(1, 2), Rational(-3, 2), Rational(3, 2),
                   Rational(-1, 2)});
  Matrix z(4, 4);
  MatrixRep rep = make_matrix_rep(heis, {x, y, z});
  Matrix flip(4, 4);
  for (std::size_t i = 0; i < 4; ++i) flip.at(i, 3 - i) = Scalar(1);
  std::vector<Scalar> nu(4, Scalar(Rational(1, 2)));
  return CyclicData::create(std::move(rep), std::move(flip), std::move(nu));
}

std::vector<Rational> gaussian_moments(unsigned order) {
  std::vector<Rational> m{1};
  for (unsigned k = 1; k <= order; ++k) {
    if (k % 2 == 1)
      m.push_back(0);
    else
      m.push_back(m[k - 2] * Rational(k - 1)); // (k-1)!! on even k
  }
  return m;
}

// ---- scalar ----

std::vector<PropertyResult> suite_scalar() {
  std::vector<PropertyResult> out;
  Rng rng(101);
  bool ring = true, conj_mult = true, division = true, norm = true;
  for (int t = 0; t < 50; ++t) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    ring = ring && (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c &&
           a * b == b * a && (a * b) * c == a * (b * c);
    conj_mult = conj_mult && (a * b).conj() == a.conj() * b.conj();
    if (!a.is_zero()) division = division && (b / a) * a == b;
    norm = norm && Scalar(a.norm2()) == a * a.conj();
  }
  put(out, "ring axioms on random samples", ring);
  put(out, "conjugation is multiplicative", conj_mult);
  put(out, "division inverts multiplication", division);
  put(out, "norm2 equals a times conj(a)", norm);
  bool round = true;
  for (int t = 0; t < 50; ++t) {
    Scalar a = rng.scalar();
    round = round && parse_scalar(a.str()) == a &&
            parse_scalar(a.str_spaced()) == a &&
            parse_scalar(a.str_compact()) == a;
  }
  put(out, "print/parse round-trip in all three forms", round);
  bool pw = true;
  for (int t = 0; t < 20; ++t) {
    Scalar a = rng.scalar();
    Scalar byhand(1);
    for (int k = 0; k < 7; ++k) byhand *= a;
    pw = pw && scalar_pow(a, 7) == byhand;
  }
  put(out, "scalar_pow matches repeated multiplication", pw);
  return out;
}

// ---- matrix ----

std::vector<PropertyResult> suite_matrix() {
  std::vector<PropertyResult> out;
  Rng rng(202);
  auto random_matrix = [&rng](std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.scalar();
    return m;
  };
  bool dagger_ok = true, trace_ok = true;
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(3), b = random_matrix(3);
    dagger_ok = dagger_ok && (a * b).dagger() == b.dagger() * a.dagger();
    trace_ok = trace_ok && (a * b).trace() == (b * a).trace();
  }
  put(out, "dagger reverses products", dagger_ok);
  put(out, "trace is cyclic", trace_ok);
  bool kernel_ok = true;
  for (int t = 0; t < 20; ++t) {
    Matrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = rng.scalar();
    RrefResult r = rref(a);
    auto kern = kernel_basis(a);
    kernel_ok = kernel_ok && r.rank + kern.size() == 4;
    for (const auto &k : kern) {
      std::vector<Scalar> img = mat_vec(a, k);
      for (const auto &v : img) kernel_ok = kernel_ok && v.is_zero();
    }
  }
  put(out, "kernel basis is annihilated, rank-nullity adds up", kernel_ok);
  std::vector<Scalar> cp = charpoly(int_matrix(2, {0, 1, -1, 0}));
  put(out, "characteristic polynomial of the quarter turn",
      poly_str(cp, "lambda") == "lambda^2 + 1",
      "got " + poly_str(cp, "lambda"));
  bool psd_ok = true;
  for (int t = 0; t < 10; ++t) {
    Matrix b = random_matrix(3);
    PsdResult res = check_psd(b.dagger() * b);
    psd_ok = psd_ok && res.positive;
  }
  put(out, "Gram-type matrices certified positive", psd_ok);
  bool witness_ok = true;
  for (int t = 0; t < 10; ++t) {
    Matrix b = random_matrix(3);
    Matrix m = b.dagger() * b - Matrix::identity(3) * Scalar(rng.int_in(1, 5));
    PsdResult res = check_psd(m);
    if (!res.positive) {
      Scalar val = inner(res.witness, mat_vec(m, res.witness));
      witness_ok = witness_ok && val == res.witness_value &&
                   val.is_real() && val.re() < 0;
    }
  }
  put(out, "negative witnesses certify themselves", witness_ok);
  return out;
}

// ---- pbw ----

std::vector<PropertyResult> suite_pbw() {
  std::vector<PropertyResult> out;
  auto heis = LieAlgebra::heisenberg();
  auto su2 = LieAlgebra::su2();
  Rng rng(303);
  bool assoc = true;
  for (const auto &alg : {heis, su2})
    for (int t = 0; t < 15; ++t) {
      PbwElement a = rng.element(alg, 2, 2), b = rng.element(alg, 2, 2),
                 c = rng.element(alg, 2, 2);
      assoc = assoc &&
              multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
    }
  put(out, "product is associative", assoc);
  bool unit_ok = true, inv_ok = true;
  for (const auto &alg : {heis, su2})
    for (int t = 0; t < 15; ++t) {
      PbwElement a = rng.element(alg, 3, 3), b = rng.element(alg, 3, 3);
      Scalar c = rng.scalar();
      PbwElement one = PbwElement::one(alg);
      unit_ok = unit_ok && multiply(one, a) == a && multiply(a, one) == a;
      inv_ok = inv_ok &&
               involution(multiply(a, b)) ==
                   multiply(involution(b), involution(a)) &&
               involution(involution(a)) == a &&
               involution(a * c) == involution(a) * c.conj();
    }
  put(out, "unit is two-sided", unit_ok);
  put(out, "involution is a conjugate-linear antiautomorphism", inv_ok);
  bool deg_ok = true;
  for (int t = 0; t < 20; ++t) {
    MultiIndex alpha = rng.index(3, 3), beta = rng.index(3, 3);
    PbwElement prod = multiply(PbwElement::monomial(su2, alpha),
                               PbwElement::monomial(su2, beta));
    deg_ok = deg_ok && prod.top_degree() == degree(alpha) + degree(beta);
  }
  put(out, "monomial products keep total degree on top", deg_ok);
  PbwElement yx = multiply(PbwElement::generator(heis, 1),
                           PbwElement::generator(heis, 0));
  PbwElement want = multiply(PbwElement::generator(heis, 0),
                             PbwElement::generator(heis, 1)) -
                    PbwElement::generator(heis, 2);
  put(out, "Heisenberg straightening X2 X1 = X1 X2 - X3", yx == want,
      "got " + yx.str());
  PbwElement su_yx = multiply(PbwElement::generator(su2, 1),
                              PbwElement::generator(su2, 0));
  PbwElement su_want = multiply(PbwElement::generator(su2, 0),
                                PbwElement::generator(su2, 1)) -
                       PbwElement::generator(su2, 2);
  put(out, "su2 straightening X2 X1 = X1 X2 - X3", su_yx == su_want,
      "got " + su_yx.str());
  return out;
}

// ---- coproduct ----

using TripleKey = std::array<MultiIndex, 3>;
using TripleMap = std::map<TripleKey, Scalar>;

void triple_add(TripleMap &m, const TripleKey &k, const Scalar &c) {
  Scalar &slot = m[k];
  slot += c;
  if (slot.is_zero()) m.erase(k);
}

TripleMap coproduct_then_left(const PbwElement &e) {
  TripleMap out;
  PbwTensor d = coproduct(e);
  for (const auto &[key, c] : d.terms()) {
    PbwTensor dl = coproduct(PbwElement::monomial(e.algebra(), key.first));
    for (const auto &[k2, c2] : dl.terms())
      triple_add(out, {k2.first, k2.second, key.second}, c * c2);
  }
  return out;
}

TripleMap coproduct_then_right(const PbwElement &e) {
  TripleMap out;
  PbwTensor d = coproduct(e);
  for (const auto &[key, c] : d.terms()) {
    PbwTensor dr = coproduct(PbwElement::monomial(e.algebra(), key.second));
    for (const auto &[k2, c2] : dr.terms())
      triple_add(out, {key.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

/// Contract the first tensor slot with the functional 1 at X^0 and compare
/// with the identity; mirrored for the second slot.
bool counit_reduces(const PbwElement &e) {
  PbwTensor d = coproduct(e);
  PbwElement left = PbwElement::zero(e.algebra());
  PbwElement right = PbwElement::zero(e.algebra());
  MultiIndex zero(e.algebra()->dim(), 0);
  for (const auto &[key, c] : d.terms()) {
    if (key.first == zero)
      left = left + PbwElement::monomial(e.algebra(), key.second, c);
    if (key.second == zero)
      right = right + PbwElement::monomial(e.algebra(), key.first, c);
  }
  return left == e && right == e;
}

std::vector<PropertyResult> suite_coproduct(unsigned monomial_degree,
                                            unsigned pair_count) {
  std::vector<PropertyResult> out;
  auto heis = LieAlgebra::heisenberg();
  auto so3 = LieAlgebra::by_name("so3");
  bool cocomm = true, coassoc = true, counit = true;
  for (const auto &alg : {heis, so3})
    for (const auto &alpha : indices_up_to(alg->dim(), monomial_degree)) {
      PbwElement mono = PbwElement::monomial(alg, alpha);
      PbwTensor d = coproduct(mono);
      cocomm = cocomm && tensor_flip(d) == d;
      coassoc = coassoc && coproduct_then_left(mono) ==
                               coproduct_then_right(mono);
      counit = counit && counit_reduces(mono);
    }
  put(out, "coproduct is cocommutative on monomials", cocomm);
  put(out, "coproduct is coassociative on monomials", coassoc);
  put(out, "counit legs reduce to the identity", counit);
  Rng rng(404);
  bool morphism = true;
  for (const auto &alg : {heis, so3})
    for (unsigned t = 0; t < pair_count; ++t) {
      PbwElement a = rng.element(alg, 3, 2), b = rng.element(alg, 3, 2);
      morphism = morphism && coproduct(multiply(a, b)) ==
                                 tensor_multiply(coproduct(a), coproduct(b));
    }
  put(out, "coproduct is an algebra morphism", morphism);
  bool primitive = true;
  for (std::size_t i = 0; i < heis->dim(); ++i) {
    PbwElement x = PbwElement::generator(heis, i);
    PbwTensor expect = tensor_of(x, PbwElement::one(heis)) +
                       tensor_of(PbwElement::one(heis), x);
    primitive = primitive && coproduct(x) == expect;
  }
  put(out, "generators are primitive", primitive);
  return out;
}

// ---- dual ----

std::vector<PropertyResult> suite_dual() {
  std::vector<PropertyResult> out;
  auto heis = LieAlgebra::heisenberg();
  auto so3 = LieAlgebra::by_name("so3");
  Rng rng(505);
  bool leibniz = true;
  for (int t = 0; t < 10; ++t) {
    DualFunctional a = rng.functional(heis, 5), b = rng.functional(heis, 5);
    for (std::size_t i = 0; i < heis->dim(); ++i)
      leibniz = leibniz && vanishes_up_to(derivation_residual(i, a, b), 4);
  }
  for (int t = 0; t < 10; ++t) {
    DualFunctional a = rng.functional(so3, 4), b = rng.functional(so3, 4);
    for (std::size_t i = 0; i < so3->dim(); ++i)
      leibniz = leibniz && vanishes_up_to(derivation_residual(i, a, b), 3);
  }
  put(out, "generators act as derivations of the dual product", leibniz);
  bool module = true;
  for (int t = 0; t < 10; ++t) {
    DualFunctional a = rng.functional(heis, 6);
    PbwElement e = rng.element(heis, 2, 2), f = rng.element(heis, 2, 2);
    DualFunctional lhs = act(e, act(f, a));
    DualFunctional rhs = act(multiply(e, f), a);
    long n = std::min(lhs.order().bound(), rhs.order().bound());
    if (n >= 0)
      module = module && functional_eq(lhs, rhs, static_cast<unsigned>(n));
  }
  put(out, "action composes along the enveloping product", module);
  bool compat = true;
  for (int t = 0; t < 10; ++t) {
    DualFunctional a = rng.functional(so3, 5);
    PbwElement e = rng.element(so3, 2, 2);
    DualFunctional lhs = dual_involution(act(e, a));
    DualFunctional rhs = act(conjugate(e), dual_involution(a));
    long n = std::min(lhs.order().bound(), rhs.order().bound());
    if (n >= 0)
      compat = compat && functional_eq(lhs, rhs, static_cast<unsigned>(n));
  }
  put(out, "involution intertwines the action with conjugation", compat);
  bool comm = true, assoc = true, unit = true;
  for (int t = 0; t < 10; ++t) {
    DualFunctional a = rng.functional(heis, 4), b = rng.functional(heis, 4),
                   c = rng.functional(heis, 4);
    comm = comm && functional_eq(dual_product(a, b), dual_product(b, a), 4);
    assoc = assoc && functional_eq(dual_product(dual_product(a, b), c),
                                   dual_product(a, dual_product(b, c)), 4);
    unit = unit &&
           functional_eq(dual_product(DualFunctional::chi0(heis), a), a, 4);
  }
  put(out, "dual product is commutative", comm);
  put(out, "dual product is associative", assoc);
  put(out, "counit functional is the unit", unit);
  return out;
}

// ---- series ----

std::vector<PropertyResult> suite_series() {
  std::vector<PropertyResult> out;
  auto so3 = LieAlgebra::by_name("so3");
  Rng rng(606);
  bool homomorphism = true;
  for (int t = 0; t < 20; ++t) {
    DualFunctional a = rng.functional(so3, 6), b = rng.functional(so3, 6);
    PowerSeries lhs = to_power_series(dual_product(a, b), 6);
    PowerSeries rhs = series_product(to_power_series(a, 6),
                                     to_power_series(b, 6));
    homomorphism = homomorphism && lhs == rhs;
  }
  put(out, "Taylor realization turns the dual product into a series product",
      homomorphism);
  bool round = true;
  for (int t = 0; t < 10; ++t) {
    PowerSeries s = to_power_series(rng.functional(so3, 4), 4);
    round = round && series_from_text(series_to_text(s)) == s;
  }
  put(out, "series text round-trips", round);
  CyclicData cd = cos_data();
  DualFunctional omega = state_from_rep(cd);
  PowerSeries cosf = to_power_series(omega, 12);
  RadiusEstimate re = radius_estimate(cosf, {Rational(1)});
  bool window = re.estimate > BigFloat(Rational(376, 100)) &&
                re.estimate < BigFloat(Rational(377, 100));
  put(out, "cosine root-test lands in the pinned window", window,
      "estimate " + re.estimate.str(10));
  bool short_series = false;
  try {
    radius_estimate(to_power_series(omega, 4), {Rational(1)});
  } catch (const InsufficientOrder &) {
    short_series = true;
  }
  put(out, "too few coefficients are rejected", short_series);
  return out;
}

// ---- gns ----

std::vector<PropertyResult> suite_gns() {
  std::vector<PropertyResult> out;
  CyclicData cos_cd = cos_data();
  DualFunctional omega = state_from_rep(cos_cd);
  auto line = omega.algebra();
  GramData g1 = gram_matrix(omega, 1);
  put(out, "cosine Gram at order 1 is the identity",
      g1.gram == Matrix::identity(2), "got " + g1.gram.str());
  GramData g2 = gram_matrix(omega, 2);
  Matrix g2_expect = int_matrix(3, {1, 0, -1, 0, 1, 0, -1, 0, 1});
  put(out, "cosine Gram at order 2 matches the pinned matrix",
      g2.gram == g2_expect, "got " + g2.gram.str());
  GnsData quot = gns_quotient(omega, 2);
  put(out, "cosine rank profile is 1,2,2",
      quot.rank_profile == std::vector<unsigned>({1, 2, 2}));
  put(out, "cosine null space is spanned by 1 + X1^2",
      quot.null_basis.size() == 1 &&
          quot.null_basis[0] ==
              PbwElement::one(line) +
                  PbwElement::monomial(line, MultiIndex{2}));
  put(out, "cosine null ideal is a left ideal", null_ideal_closed(quot));
  GnsRep rep = generator_matrices(omega, 2);
  put(out, "cosine quotient stabilizes", rep.stabilized);
  put(out, "recovered generator has characteristic polynomial lambda^2 + 1",
      rep.stabilized &&
          poly_str(charpoly(rep.matrices[0]), "lambda") == "lambda^2 + 1");
  put(out, "cosine state is recovered through degree 8",
      rep.stabilized && state_recovered(omega, rep, 8));
  bool skew = true;
  if (rep.stabilized)
    for (const auto &m : rep.matrices) {
      Matrix lhs = m.dagger() * rep.quotient_gram;
      Matrix rhs = rep.quotient_gram * m;
      skew = skew && lhs + rhs == Matrix(lhs.rows(), lhs.cols());
    }
  put(out, "recovered action is skew-symmetric for the quotient form", skew);

  CyclicData grid = grid4_data();
  DualFunctional omega_g = state_from_rep(grid);
  GnsRep rep_g = generator_matrices(omega_g, 3);
  put(out, "grid rank profile is 1,3,4,4",
      rep_g.rank_profile == std::vector<unsigned>({1, 3, 4, 4}));
  put(out, "grid quotient stabilizes", rep_g.stabilized);
  bool bracket_ok = false;
  if (rep_g.stabilized) {
    Matrix comm = rep_g.matrices[0] * rep_g.matrices[1] -
                  rep_g.matrices[1] * rep_g.matrices[0];
    bracket_ok = comm == rep_g.matrices[2] && comm == Matrix(4, 4);
  }
  put(out, "grid recovery satisfies the bracket relations", bracket_ok);
  put(out, "grid recovered generator has the grid spectrum",
      rep_g.stabilized &&
          poly_str(charpoly(rep_g.matrices[0]), "lambda") ==
              "lambda^4 + 5/2 lambda^2 + 9/16",
      rep_g.stabilized
          ? "got " + poly_str(charpoly(rep_g.matrices[0]), "lambda")
          : "not stabilized");
  put(out, "grid state recovered through degree 6",
      rep_g.stabilized && state_recovered(omega_g, rep_g, 6));

  auto heis = LieAlgebra::heisenberg();
  GnsRep triv = generator_matrices(DualFunctional::chi0(heis), 2);
  bool triv_ok = triv.stabilized &&
                 triv.rank_profile == std::vector<unsigned>({1, 1, 1});
  if (triv_ok)
    for (const auto &m : triv.matrices) triv_ok = triv_ok && m == Matrix(1, 1);
  put(out, "counit state gives the one-dimensional trivial module", triv_ok);

  DualFunctional gauss =
      moment_state(LieAlgebra::abelian(1), gaussian_moments(6));
  GnsData gq = gns_quotient(gauss, 3);
  put(out, "Gaussian Gram at order 3 has full rank and keeps growing",
      gq.rank_profile == std::vector<unsigned>({1, 2, 3, 4}) &&
          !gq.stabilized);

  bool witness = false;
  try {
    moment_state(LieAlgebra::abelian(1), {Rational(1), Rational(0),
                                          Rational(-1)});
  } catch (const PositivityFailure &e) {
    witness = e.witness == "X1";
  }
  put(out, "corrupted moments fail with the witness X1", witness);

  bool nonherm = false;
  TermMap bad_table;
  bad_table.emplace(MultiIndex{0}, Scalar(1));
  bad_table.emplace(MultiIndex{1}, Scalar(1)); // breaks conjugate symmetry
  DualFunctional bad = DualFunctional::from_table(
      LieAlgebra::abelian(1), TruncOrder::at(2), std::move(bad_table));
  try {
    gram_matrix(bad, 1);
  } catch (const HermitianViolation &) {
    nonherm = true;
  }
  put(out, "non-hermitian tables are rejected at Gram assembly", nonherm);
  return out;
}

// ---- rep ----

std::vector<PropertyResult> suite_rep() {
  std::vector<PropertyResult> out;
  CyclicData cos_cd = cos_data();
  CyclicData so3_cd = so3_data();
  CyclicData grid = grid4_data();
  Rng rng(707);
  bool equiv = true;
  for (int t = 0; t < 10; ++t) {
    PbwElement e = rng.element(cos_cd.rep().algebra, 3, 2);
    equiv = equiv &&
            vanishes_up_to(equivariance_residual(cos_cd, e, rng.vec(2)), 6);
  }
  for (int t = 0; t < 10; ++t) {
    PbwElement e = rng.element(so3_cd.rep().algebra, 3, 2);
    equiv = equiv &&
            vanishes_up_to(equivariance_residual(so3_cd, e, rng.vec(3)), 4);
  }
  put(out, "the action matches the moved representative", equiv);
  bool herm = hermitian_state_check(state_from_rep(cos_cd), 8) &&
              hermitian_state_check(state_from_rep(so3_cd), 4) &&
              hermitian_state_check(state_from_rep(grid), 4);
  put(out, "fixture states are hermitian", herm);
  bool jcons = true;
  for (const CyclicData &cd : {cos_cd, so3_cd, grid}) {
    for (int t = 0; t < 5; ++t) {
      std::vector<Scalar> xi = rng.vec(cd.rep().dim);
      DualFunctional lhs = representative_functional(cd, cd.conjugation(xi));
      DualFunctional rhs = dual_involution(representative_functional(cd, xi));
      jcons = jcons && functional_eq(lhs, rhs, 4);
    }
  }
  put(out, "conjugated points give involuted functionals", jcons);
  DualFunctional omega = state_from_rep(cos_cd);
  put(out, "states evaluate to 1 at the unit",
      omega.coeff(MultiIndex{0}) == Scalar(1));
  DualFunctional zerof =
      representative_functional(cos_cd, {Scalar(0), Scalar(0)});
  put(out, "the zero vector represents the zero functional",
      vanishes_up_to(zerof, 8));
  auto fam = orbit_algebra_generators(cos_cd, {cos_cd.cyclic()}, 0);
  bool orbit0 = fam.size() == 1 && functional_eq(fam[0].first, omega, 6) &&
                functional_eq(fam[0].second, dual_involution(omega), 6);
  put(out, "depth zero orbit is the state and its involution", orbit0);
  DualFunctional fact = moment_state(
      LieAlgebra::abelian(1), {Rational(1), Rational(1), Rational(2),
                               Rational(6), Rational(24)});
  bool fact_ok = true;
  Scalar ipow(1);
  Rational kfact(1);
  for (unsigned k = 0; k <= 4; ++k) {
    if (k > 0) kfact *= Rational(k);
    fact_ok = fact_ok && fact.coeff(MultiIndex{k}) == ipow * Scalar(kfact);
    ipow *= Scalar::i();
  }
  put(out, "factorial moments carry the alternating twist", fact_ok);
  bool gate = false;
  try {
    moment_state(LieAlgebra::heisenberg(), {Rational(1)});
  } catch (const ValidationError &) {
    gate = true;
  }
  put(out, "moment states require a one-generator abelian algebra", gate);
  return out;
}

// ---- fock ----

std::vector<PropertyResult> suite_fock() {
  std::vector<PropertyResult> out;
  Rng rng(808);
  bool homo = true;
  for (int t = 0; t < 30; ++t) {
    std::size_t d = static_cast<std::size_t>(rng.int_in(1, 3));
    SymPolynomial p = rng.poly(d, 3, 3), q = rng.poly(d, 3, 3);
    std::vector<Scalar> xi = rng.vec(d);
    homo = homo && evaluate_poly(poly_multiply(p, q), xi) ==
                       evaluate_poly(p, xi) * evaluate_poly(q, xi);
  }
  put(out, "point evaluation is multiplicative", homo);
  bool contract = true;
  for (int t = 0; t < 20; ++t) {
    std::size_t d = static_cast<std::size_t>(rng.int_in(1, 3));
    unsigned n = static_cast<unsigned>(rng.int_in(1, 2));
    unsigned m = static_cast<unsigned>(rng.int_in(1, 2));
    SymPolynomial p = SymPolynomial::zero(d);
    SymPolynomial q = SymPolynomial::zero(d);
    for (int k = 0; k < 3; ++k) {
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
    contract = contract && !(rhs.re() < lhs.re());
  }
  put(out, "homogeneous products contract in norm", contract);
  BigFloat eps(rational_pow(Rational(1, 10), 20));
  bool submult = true;
  for (int t = 0; t < 10; ++t) {
    SymPolynomial p = rng.poly(2, 3, 3), q = rng.poly(2, 3, 3);
    for (const Rational &r :
         {Rational(1, 2), Rational(1), Rational(2)}) {
      BigFloat lhs = r_norm(poly_multiply(p, q), r).value;
      BigFloat rhs = r_norm(p, r).value * r_norm(q, r).value + eps;
      submult = submult && lhs <= rhs;
    }
  }
  put(out, "weighted norms are submultiplicative within tolerance", submult);
  bool mono = true;
  for (int t = 0; t < 10; ++t) {
    SymPolynomial p = rng.poly(3, 4, 4);
    RNorm small = r_norm(p, Rational(1, 3)), big = r_norm(p, Rational(3));
    for (std::size_t k = 0; k < small.squared.size(); ++k) {
      unsigned n = small.squared[k].first;
      Rational ls = small.squared[k].second *
                    rational_pow(Rational(1, 3), 2 * n);
      Rational rs = big.squared[k].second * rational_pow(Rational(3), 2 * n);
      mono = mono && !(rs < ls);
    }
    mono = mono && small.value <= big.value;
  }
  put(out, "weighted norms grow with the radius", mono);
  bool proj = true;
  for (int t = 0; t < 10; ++t) {
    PlainTensor u{2, 3, {}}, v{2, 3, {}};
    for (int k = 0; k < 3; ++k) {
      Word w1, w2;
      for (int l = 0; l < 3; ++l) {
        w1.push_back(static_cast<unsigned>(rng.int_in(0, 1)));
        w2.push_back(static_cast<unsigned>(rng.int_in(0, 1)));
      }
      u.coeffs[w1] += rng.scalar();
      v.coeffs[w2] += rng.scalar();
    }
    Scalar lhs = tensor_inner(expand(symmetrize(u)), v);
    Scalar rhs = tensor_inner(u, expand(symmetrize(v)));
    proj = proj && lhs == rhs &&
           symmetrize(expand(symmetrize(u))).coeffs == symmetrize(u).coeffs;
  }
  put(out, "symmetrization projects orthogonally", proj);
  Matrix swap(2, 2);
  swap.at(0, 1) = Scalar(1);
  swap.at(1, 0) = Scalar(1);
  FSpace hs = make_fspace(2, swap);
  std::vector<SymPolynomial> gens{SymPolynomial::basis_vector(2, 0),
                                  SymPolynomial::basis_vector(2, 1),
                                  rng.poly(2, 2, 2)};
  std::vector<Scalar> fixed{Scalar(Rational(1, 2), Rational(3)),
                            Scalar(Rational(1, 2), Rational(-3))};
  CharacterReport good = character_check(hs, gens, fixed);
  bool char_ok = good.pass && good.point_fixed;
  for (bool r : good.reality) char_ok = char_ok && r;
  put(out, "fixed points give real characters", char_ok);
  std::vector<Scalar> moved{Scalar::i(), Scalar::i()};
  CharacterReport off = character_check(
      hs, {SymPolynomial::basis_vector(2, 0), SymPolynomial::basis_vector(2, 1)},
      moved);
  bool unreal = !off.point_fixed && !(off.reality[0] && off.reality[1]);
  put(out, "unfixed points break reality on some generator", unreal);
  std::vector<SymPolynomial> two{SymPolynomial::basis_vector(2, 0),
                                 SymPolynomial::basis_vector(2, 1)};
  std::vector<std::vector<SymPolynomial>> table{
      {poly_multiply(two[0], two[0]), poly_multiply(two[0], two[1])},
      {poly_multiply(two[1], two[0]),
       poly_multiply(two[1], two[1]) + SymPolynomial::constant(2, Scalar(1))}};
  CharacterReport corrupt = character_check_table(
      standard_fspace(2), two, table, {Scalar(1), Scalar(1)});
  bool corrupt_ok = !corrupt.pass;
  for (const auto &pr : corrupt.products)
    corrupt_ok = corrupt_ok && pr.ok == !(pr.i == 1 && pr.j == 1);
  put(out, "a corrupted product table fails on the offending pair",
      corrupt_ok);
  bool round = true;
  for (int t = 0; t < 10; ++t) {
    SymPolynomial p = rng.poly(3, 3, 4);
    round = round && sym_poly_from_text(3, sym_poly_to_text(p)) == p;
  }
  put(out, "polynomial text round-trips", round);
  return out;
}

// ---- problem ----

const char *sample_problem = R"({
  "algebra": {"dim": 1},
  "representation": {
    "matrices": [[["0/1+0/1i", "1/1+0/1i"], ["-1/1+0/1i", "0/1+0/1i"]]],
    "nu": ["1/1+0/1i", "0/1+0/1i"]
  },
  "tasks": [{"task": "series", "order": 6}, {"task": "gns", "order": 2}]
})";

std::vector<PropertyResult> suite_problem() {
  std::vector<PropertyResult> out;
  Problem p = parse_problem(sample_problem);
  std::string canon = serialize_problem(p);
  std::string canon2 = serialize_problem(parse_problem(canon));
  put(out, "canonical serialization is a fixed point", canon == canon2);
  bool both = false;
  try {
    parse_problem(R"({"algebra": {"dim": 1},
      "representation": {"matrices": [[["0/1+0/1i"]]], "nu": ["1/1+0/1i"]},
      "moments": ["1/1"], "tasks": []})");
  } catch (const ValidationError &) {
    both = true;
  }
  put(out, "a file cannot carry both state sources", both);
  bool badidx = false;
  try {
    parse_problem(R"({"algebra": {"dim": 2,
      "brackets": [[1, 3, [[1, "1/1"]]]]}, "tasks": []})");
  } catch (const ValidationError &) {
    badidx = true;
  }
  put(out, "bracket indices outside the basis are rejected", badidx);
  bool syntax = false;
  try {
    parse_problem("{\n  \"algebra\": oops\n}");
  } catch (const ParseError &e) {
    syntax = e.line >= 2;
  }
  put(out, "syntax errors carry a line number", syntax);
  return out;
}

} // namespace

std::vector<std::string> suite_names() {
  return {"scalar", "matrix", "pbw", "coproduct", "dual",
          "series", "gns",    "rep", "fock",      "problem"};
}

SuiteResult run_suite(const std::string &name) {
  SuiteResult r;
  r.suite = name;
  if (name == "scalar")
    r.results = suite_scalar();
  else if (name == "matrix")
    r.results = suite_matrix();
  else if (name == "pbw")
    r.results = suite_pbw();
  else if (name == "coproduct")
    r.results = suite_coproduct(3, 10);
  else if (name == "dual")
    r.results = suite_dual();
  else if (name == "series")
    r.results = suite_series();
  else if (name == "gns")
    r.results = suite_gns();
  else if (name == "rep")
    r.results = suite_rep();
  else if (name == "fock")
    r.results = suite_fock();
  else if (name == "problem")
    r.results = suite_problem();
  else if (name == "all") {
    for (const auto &n : suite_names()) {
      SuiteResult sub = run_suite(n);
      for (auto &res : sub.results) {
        res.name = n + ": " + res.name;
        r.results.push_back(std::move(res));
      }
    }
  } else {
    throw ValidationError("unknown property suite '" + name + "'");
  }
  r.pass = true;
  for (const auto &res : r.results) r.pass = r.pass && res.pass;
  return r;
}

std::string suite_report(const SuiteResult &r) {
  std::string out = "suite " + r.suite + "\n";
  for (const auto &res : r.results) {
    out += std::string(res.pass ? "pass" : "FAIL") + " " + res.name;
    if (!res.detail.empty()) out += " (" + res.detail + ")";
    out += "\n";
  }
  out += std::string(r.pass ? "ok" : "FAILED") + " " +
         std::to_string(r.results.size()) + " properties\n";
  return out;
}

} // namespace workbench
