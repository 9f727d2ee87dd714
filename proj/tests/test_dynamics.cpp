#include "ariadne/dynamics.hpp"
#include "ariadne/game.hpp"
#include "ariadne/generators.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ariadne;

namespace {

Matrix m2(double a, double b, double c, double d) { return (Matrix(2, 2) << a, b, c, d).finished(); }
Strategy s2(double a, double b) { return Strategy((Vector(2) << a, b).finished()); }

Matrix random_normalized(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.25, 0.5);
  Matrix c(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) c(i, j) = c(j, i) = u(rng);
  return c;
}

Strategy random_strategy(Index n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Vector w(n);
  for (Index i = 0; i < n; ++i) w(i) = e(rng);
  return Strategy::normalized(w);
}

bool contains(const std::vector<Strategy>& pts, const Vector& x) {
  for (const auto& p : pts)
    if ((p.mass() - x).cwiseAbs().maxCoeff() < 1e-12) return true;
  return false;
}

}  // namespace

TEST_CASE("Hedge on an equalized strategy is stationary") {
  const Strategy x = hedge_step(m2(0, 1, 1, 0), s2(0.5, 0.5), 3.0);
  CHECK(x(0) == doctest::Approx(0.5));
}

TEST_CASE("Hedge step matches the long double closed form") {
  const Strategy x = hedge_step(m2(0, 1, 1, 0), s2(0.25, 0.75), 1.0);
  const auto ref = oracle::hedge({{0, 1}, {1, 0}}, {0.25L, 0.75L}, 1.0L);
  CHECK(std::abs(x(0) - static_cast<double>(ref[0])) < 1e-14);
  CHECK(x(0) == doctest::Approx(0.35467).epsilon(1e-4));
  CHECK(x(1) == doctest::Approx(0.64533).epsilon(1e-4));
}

TEST_CASE("pure strategies are fixed by every map") {
  const Matrix c = build_nisan_game(gen::cycle(5), 2).c;
  for (Index i = 0; i < 5; ++i) {
    const Strategy e = Strategy::pure(5, i);
    CHECK(hedge_step(c, e, 2.0).mass() == e.mass());
    CHECK(replicator_step(c, e).mass() == e.mass());
    CHECK(finite_k_step(c, e, 2.0, 3).mass() == e.mass());
    CHECK(detect_fixed_point(c, e).is_fixed);
  }
}

TEST_CASE("Hedge exponent is stabilized") {
  const Strategy x = hedge_step(m2(1e3, 0, 0, 1e3), s2(0.5, 0.5), 10.0);
  CHECK(x(0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(hedge_step(m2(0, 1, 1, 0), s2(0.5, 0.5), 0.0), ValidationError);
}

TEST_CASE("replicator step") {
  CHECK(replicator_step(m2(1, 2, 2, 1), s2(0.5, 0.5))(0) == doctest::Approx(0.5));
  const Strategy x = replicator_step(m2(1, 2, 2, 1), s2(0.25, 0.75));
  CHECK(x(0) == doctest::Approx(7.0 / 22.0).epsilon(1e-14));
  CHECK(x(1) == doctest::Approx(15.0 / 22.0).epsilon(1e-14));
  const Matrix k4 = build_nisan_game(gen::complete(4), 4).raw_c;
  CHECK(replicator_step(k4, Strategy::uniform(4)).mass().isApprox(Vector::Constant(4, 0.25)));
}

TEST_CASE("finite-k map") {
  const Matrix c = (Matrix(2, 2) << 0.25, 0.5, 0.5, 0.3).finished();
  const Strategy x = s2(0.4, 0.6);
  const Vector p = c * x.mass();
  const Vector lin = x.mass().array() * (1.0 + 0.7 * p.array());
  CHECK((finite_k_step(c, x, 0.7, 1).mass() - lin / lin.sum()).norm() < 1e-15);

  const Matrix eq = m2(0.25, 0.5, 0.5, 0.25);
  CHECK(finite_k_step(eq, s2(0.5, 0.5), 2.0, 5)(0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(finite_k_step(m2(1, 1, 1, 1), x, 1.0, 2), ValidationError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + t % 7;
    const Matrix r = random_normalized(n, rng);
    const Strategy y = random_strategy(n, rng);
    const double alpha = 0.1 + 3.9 * (t / 100.0);
    const double diff =
        (finite_k_step(r, y, alpha, 1L << 20).mass() - hedge_step(r, y, alpha).mass()).cwiseAbs().maxCoeff();
    CHECK(diff <= 1e-5);
  }
}

TEST_CASE("detect_fixed_point") {
  const Graph g = gen::complete_multipartite({2, 2, 2});
  const Matrix c = build_nisan_game(g, 3).c;
  CHECK(detect_fixed_point(c, characteristic_vector(VertexSet{1, 3, 5}, 6)).is_fixed);
  const auto r = detect_fixed_point(m2(0, 1, 1, 0), s2(0.25, 0.75));
  CHECK_FALSE(r.is_fixed);
  CHECK(r.payoff_spread == doctest::Approx(0.5));
}

TEST_CASE("fixed-point enumeration") {
  const Matrix k2 = build_nisan_game(gen::complete(2), 2).raw_c;
  const auto f = enumerate_replicator_fixed_points(k2);
  CHECK(f.points.size() == 3);
  CHECK(contains(f.points, Vector::Unit(2, 0)));
  CHECK(contains(f.points, Vector::Unit(2, 1)));
  CHECK(contains(f.points, Vector::Constant(2, 0.5)));

  const Graph c5 = gen::cycle(5);
  const auto g = enumerate_replicator_fixed_points(build_nisan_game(c5, 2).raw_c);
  for (auto [u, v] : c5.edges())
    CHECK(contains(g.points, characteristic_vector(VertexSet{u, v}, 5).mass()));
  for (Index i = 0; i < 5; ++i) CHECK(contains(g.points, Vector::Unit(5, i)));

  CHECK_THROWS_AS(enumerate_replicator_fixed_points(Matrix::Ones(9, 9)), ValidationError);
}

TEST_CASE("twin vertices make a support degenerate") {
  // Vertices 1 and 2 are adjacent with identical neighbourhoods.
  const Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
  const Matrix c = build_nisan_game(g, 2).raw_c;
  Matrix twins = c;
  twins(0, 0) = twins(1, 1) = twins(0, 1) = twins(1, 0) = 1.0;
  const auto f = enumerate_replicator_fixed_points(twins);
  CHECK_FALSE(f.degenerate.empty());
}

TEST_CASE("growth of the potential under Hedge and finite-k maps") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> rate(1e-3, 4.0);
  for (int t = 0; t < 2000; ++t) {
    const Index n = 2 + t % 7;
    const Matrix c = random_normalized(n, rng);
    const Strategy x = random_strategy(n, rng);
    const double alpha = rate(rng);
    const double before = potential(c, x);
    CHECK(potential(c, hedge_step(c, x, alpha)) >= before - 1e-12);
    for (long k : {1L, 2L, 8L, 64L}) CHECK(potential(c, finite_k_step(c, x, alpha, k)) >= before - 1e-12);
  }
}

TEST_CASE("carrier preservation and shift invariance") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Index n = 3 + t % 5;
    const Matrix c = random_normalized(n, rng);
    Vector w = random_strategy(n, rng).mass();
    w(t % n) = 0.0;
    const Strategy x = Strategy::normalized(w);
    const Strategy y = hedge_step(c, x, 1.5);
    CHECK(y.carrier() == x.carrier());
    CHECK(replicator_step(c, x).carrier() == x.carrier());
    const Strategy shifted = hedge_step((c.array() + 0.37).matrix(), x, 1.5);
    CHECK((shifted.mass() - y.mass()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("enumerated fixed points are fixed by every map") {
  for (const Graph& g : gen::connected_graphs(5)) {
    const Matrix c = build_nisan_game(g, 2).c;
    for (const Strategy& x : enumerate_replicator_fixed_points(c).points) {
      CHECK(detect_fixed_point(c, x).is_fixed);
      CHECK((hedge_step(c, x, 1.0).mass() - x.mass()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((replicator_step(c, x).mass() - x.mass()).cwiseAbs().maxCoeff() < 1e-12);
      for (long k : {1L, 4L, 64L})
        CHECK((finite_k_step(c, x, 1.0, k).mass() - x.mass()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("diamond graph carries a non-clique fixed point above 1 - 1/(2(omega-1))") {
  // Recorded finding: the potential bound for non-clique fixed points does not hold here.
  const Graph d = gen::diamond();
  const Matrix c = build_nisan_game(d, 3).raw_c;
  const Vector x = (Vector(4) << 0.125, 0.125, 0.375, 0.375).finished();
  const auto f = enumerate_replicator_fixed_points(c);
  REQUIRE(contains(f.points, x));
  const Strategy s(x);
  CHECK_FALSE(is_clique(d, s.carrier()));
  CHECK(potential(c, s) == doctest::Approx(0.8125));
  CHECK(potential(c, s) > 1.0 - 1.0 / (2.0 * 2));
}
