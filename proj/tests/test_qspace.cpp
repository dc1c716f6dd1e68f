#include <random>

#include "doctest.h"
#include "hypcox/qspace.hpp"

using namespace hypcox;

namespace {

FieldScalar q2(long a, long b, long c = 1) { return FieldScalar(mpz_class(a), mpz_class(b), mpz_class(c), 2); }

QVector vec(std::initializer_list<FieldScalar> xs) { return QVector{std::vector<FieldScalar>(xs)}; }

QVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> coef(-6, 6);
  QVector v{std::vector<FieldScalar>(n)};
  for (auto& x : v.coords) x = q2(coef(rng), coef(rng));
  return v;
}

QSpace bugaenko_space() {
  std::vector<FieldScalar> diag(7, FieldScalar(1));
  diag[0] = -q2(1, 1);
  return QSpace(diag);
}

// Standard D6 simple roots e1-e2, ..., e5-e6, e5+e6.
std::vector<QVector> d6_roots() {
  std::vector<QVector> roots;
  for (int i = 0; i < 5; ++i) {
    QVector r{std::vector<FieldScalar>(6)};
    r[i] = 1;
    r[i + 1] = -1;
    roots.push_back(r);
  }
  QVector r{std::vector<FieldScalar>(6)};
  r[4] = 1;
  r[5] = 1;
  roots.push_back(r);
  return roots;
}

}  // namespace

TEST_CASE("inner products in the Bugaenko space") {
  const QSpace s = bugaenko_space();
  CHECK(s.is_lorentzian());
  const QVector r1 = vec({0, -1, 1, 0, 0, 0, 0});
  const QVector r7 = vec({1, q2(1, 1), 0, 0, 0, 0, 0});
  CHECK(norm(s, r1) == FieldScalar(2));
  CHECK(norm(s, r7) == q2(2, 1));
  CHECK(inner(s, r1, QVector{std::vector<FieldScalar>(7)}) == FieldScalar());
  CHECK_THROWS_AS(inner(s, r1, vec({1, 2})), LinearAlgebraError);
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(QSpace({FieldScalar(-1), FieldScalar(-1), FieldScalar(1)}), LinearAlgebraError);
  CHECK_THROWS_AS(QSpace({FieldScalar(0), FieldScalar(1)}), LinearAlgebraError);
  CHECK_FALSE(QSpace::euclidean(3).is_lorentzian());
}

TEST_CASE("reflections") {
  const QSpace s = bugaenko_space();
  const QVector r = vec({0, -1, 1, 0, 0, 0, 0});
  CHECK(reflect(s, r, r) == FieldScalar(-1) * r);
  const QVector v = vec({3, 1, 1, 0, 2, 0, 0});
  CHECK(inner(s, r, v).is_zero());
  CHECK(reflect(s, r, v) == v);
  CHECK_THROWS_AS(reflect(s, vec({1, 0, 0, 0, 0, 0, 0}), v), LinearAlgebraError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const QVector a = random_vector(rng, 7), b = random_vector(rng, 7), c = random_vector(rng, 7);
    if (norm(s, a).sign() <= 0) continue;
    CHECK(reflect(s, a, reflect(s, a, b)) == b);
    CHECK(inner(s, reflect(s, a, b), reflect(s, a, c)) == inner(s, b, c));
  }
}

TEST_CASE("gram matrices") {
  const QSpace s = QSpace::euclidean(3);
  CHECK(gram(s, std::vector<QVector>{}).rows() == 0);
  const std::vector<QVector> basis = {vec({2, 0, 0}), vec({0, 3, 0}), vec({0, 0, 1})};
  const Matrix g = gram(s, basis);
  CHECK(g(0, 0) == FieldScalar(4));
  CHECK(g(1, 1) == FieldScalar(9));
  CHECK(g(0, 1).is_zero());
  CHECK(g(1, 2).is_zero());
}

TEST_CASE("projections onto a D6 root system") {
  const auto roots = d6_roots();
  // The extension vectors get two extra coordinates with weights 2 and 1.
  const QSpace s7({1, 1, 1, 1, 1, 1, 2, 1});
  std::vector<QVector> roots7;
  for (const auto& r : roots) {
    QVector x = r;
    x.coords.push_back(0);
    x.coords.push_back(0);
    roots7.push_back(x);
  }
  // ear vector: inner product -1 with e5+e6 only, norm 2.
  const QVector ear = vec({FieldScalar::rational(-1, 2), FieldScalar::rational(-1, 2), FieldScalar::rational(-1, 2),
                           FieldScalar::rational(-1, 2), FieldScalar::rational(-1, 2), FieldScalar::rational(-1, 2),
                           FieldScalar::rational(1, 2), 0});
  // tail vector: inner product -1 with e1-e2 only.
  const QVector tail = vec({-1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(norm(s7, ear) == FieldScalar(2));
  CHECK(norm(s7, tail) == FieldScalar(2));
  for (std::size_t i = 0; i < roots7.size(); ++i) {
    CHECK(inner(s7, ear, roots7[i]) == FieldScalar(i == 5 ? -1 : 0));
    CHECK(inner(s7, tail, roots7[i]) == FieldScalar(i == 0 ? -1 : 0));
  }
  const QVector pe = span_project(s7, roots7, ear);
  const QVector pt = span_project(s7, roots7, tail);
  CHECK(norm(s7, pe) == FieldScalar::rational(3, 2));
  CHECK(norm(s7, pt) == FieldScalar(1));
  CHECK(norm(s7, orth_project(s7, roots7, ear)) == FieldScalar::rational(1, 2));
  CHECK(norm(s7, orth_project(s7, roots7, tail)) == FieldScalar(1));
}

TEST_CASE("projection invariants") {
  const QSpace s = bugaenko_space();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QVector> span;
    span.push_back(vec({0, -1, 1, 0, 0, 0, 0}));
    span.push_back(vec({0, 0, -1, 1, 0, 0, 0}));
    span.push_back(vec({0, 0, 0, 0, 0, 0, 1}));
    const QVector v = random_vector(rng, 7), w = random_vector(rng, 7);
    const QVector pv = orth_project(s, span, v);
    const QVector pw = orth_project(s, span, w);
    CHECK(orth_project(s, span, pv) == pv);
    for (const auto& x : span) CHECK(inner(s, pv, x).is_zero());
    const QVector qv = span_project(s, span, v), qw = span_project(s, span, w);
    CHECK(inner(s, pv, pw) == inner(s, v, w) - inner(s, qv, qw));
  }
  const std::vector<QVector> iso = {vec({1, 1, 0, 0, 0, 0, 0})};
  CHECK_NOTHROW(orth_project(s, iso, vec({1, 0, 0, 0, 0, 0, 0})));
  const QSpace l = QSpace::lorentzian(2);
  const std::vector<QVector> null_span = {vec({1, 1, 0})};
  CHECK_THROWS_AS(orth_project(l, null_span, vec({1, 0, 0})), LinearAlgebraError);
}

TEST_CASE("null space and orthogonal bases") {
  const QSpace l = QSpace::lorentzian(3);
  Matrix m(1, 4);
  m(0, 0) = 2;
  m(0, 1) = 1;
  const auto ns = null_space(m);
  CHECK(ns.size() == 3);
  for (const auto& v : ns) CHECK((FieldScalar(2) * v[0] + v[1]).is_zero());
  Matrix iso_row(1, 4);
  iso_row(0, 0) = -1;
  iso_row(0, 1) = 1;
  CHECK_THROWS_AS(orthogonal_basis(l, null_space(iso_row)), LinearAlgebraError);
  const auto ob = orthogonal_basis(l, ns);
  CHECK(ob.size() == 3);
  for (std::size_t i = 0; i < ob.size(); ++i) {
    CHECK_FALSE(norm(l, ob[i]).is_zero());
    for (std::size_t j = i + 1; j < ob.size(); ++j) CHECK(inner(l, ob[i], ob[j]).is_zero());
  }
  // a basis made only of isotropic vectors
  const std::vector<QVector> iso = {vec({1, 1, 0, 0}), vec({1, -1, 0, 0})};
  const auto ob2 = orthogonal_basis(l, iso);
  CHECK(ob2.size() == 2);
  CHECK(inner(l, ob2[0], ob2[1]).is_zero());
}

TEST_CASE("solve and proportionality") {
  Matrix a(2, 2);
  a(0, 0) = 0;
  a(0, 1) = 2;
  a(1, 0) = q2(1, 1);
  a(1, 1) = 1;
  const std::vector<FieldScalar> b = {FieldScalar(4), FieldScalar(3)};
  const auto x = solve(a, b);
  CHECK(x[1] == FieldScalar(2));
  CHECK(a(1, 0) * x[0] + x[1] == FieldScalar(3));
  Matrix sing(2, 2);
  sing(0, 0) = 1;
  sing(1, 0) = 2;
  CHECK_THROWS_AS(solve(sing, b), LinearAlgebraError);

  CHECK(positively_proportional(vec({1, 2}), vec({q2(0, 1), q2(0, 2)})));
  CHECK_FALSE(positively_proportional(vec({1, 2}), vec({-1, -2})));
  CHECK_FALSE(positively_proportional(vec({1, 2}), vec({1, 3})));
}

TEST_CASE("realize a Gram matrix") {
  // A2 Cartan-type Gram matrix plus a dependent row
  Matrix g(3, 3);
  g(0, 0) = 2;
  g(1, 1) = 2;
  g(2, 2) = 2;
  g(0, 1) = g(1, 0) = -1;
  g(1, 2) = g(2, 1) = -1;
  g(0, 2) = g(2, 0) = -1;
  const auto real = realize_gram(g);
  CHECK(real.space.dim() == 2);
  CHECK(gram(real.space, real.vectors) == g);
}
