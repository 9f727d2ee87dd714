#include "ariadne/game.hpp"
#include "ariadne/generators.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ariadne;

namespace {

Strategy random_strategy(Index n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Vector w(n);
  for (Index i = 0; i < n; ++i) w(i) = e(rng);
  return Strategy::normalized(w);
}

}  // namespace

TEST_CASE("Strategy validates simplex membership") {
  CHECK_NOTHROW(Strategy(Vector::Constant(4, 0.25)));
  CHECK_THROWS_AS(Strategy(Vector::Constant(4, 0.3)), ValidationError);
  Vector neg(2);
  neg << 1.5, -0.5;
  CHECK_THROWS_AS(Strategy{neg}, ValidationError);
  const Strategy x = characteristic_vector(VertexSet{2, 4}, 5);
  CHECK(x.carrier() == VertexSet{2, 4});
  CHECK_FALSE(x.is_pure());
  CHECK(Strategy::pure(3, 1).is_pure());
}

TEST_CASE("simplex projection") {
  Vector v(3);
  v << 0.2, 0.3, 0.5;
  CHECK((project_to_simplex(v) - v).norm() < 1e-15);
  v << 2.0, 0.0, 0.0;
  CHECK(project_to_simplex(v)(0) == doctest::Approx(1.0));
  v << 1.0, 1.0, -5.0;
  const Vector p = project_to_simplex(v);
  CHECK(p(0) == doctest::Approx(0.5));
  CHECK(p(2) == 0.0);
}

TEST_CASE("K3 game at k = 3") {
  const NisanGame g = build_nisan_game(gen::complete(3), 3);
  CHECK(g.raw_c(0, 0) == 0.5);
  CHECK(g.raw_c(0, 1) == 1.0);
  CHECK(g.raw.c00 == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(g.raw.c_ell == doctest::Approx(19.0 / 24.0).epsilon(1e-15));
  CHECK(g.eps_a == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(g.eps == doctest::Approx(1.0 / 1152.0).epsilon(1e-15));
}

TEST_CASE("Nisan constants match exact fractions for k = 2..10") {
  for (int k = 2; k <= 10; ++k) {
    const NisanGame g = build_nisan_game(gen::complete(10), k);
    const auto exact = oracle::nisan_constants(k);
    CHECK(std::abs(g.raw.c00 - exact.c00.value()) <= 1e-15);
    CHECK(std::abs(g.raw.c_ell - exact.c_ell.value()) <= 1e-15);
    CHECK(std::abs(g.eps_a - exact.eps_a.value()) <= 1e-15);
    CHECK(std::abs(g.eps - exact.eps.value()) <= 1e-15);
  }
}

TEST_CASE("Nisan game structure") {
  const Graph graph = gen::petersen();
  const NisanGame g = build_nisan_game(graph, 4);
  CHECK(g.raw_cplus.row(0).isConstant(g.raw.c00));
  CHECK(g.raw_cplus.col(0).isConstant(g.raw.c00));
  CHECK(g.raw_c == g.raw_cplus.bottomRightCorner(10, 10));
  CHECK(g.cplus.minCoeff() >= 0.25);
  CHECK(g.cplus.maxCoeff() <= 0.5);
  CHECK(g.payoff_ratio() <= 2.0);
  CHECK(g.normalized.c00 == doctest::Approx((g.raw.c00 + 1) / 4));
  CHECK(g.normalized.c_ell == doctest::Approx((g.raw.c_ell + 1) / 4));
  CHECK_THROWS_AS(build_nisan_game(graph, 1), ValidationError);
  CHECK_THROWS_AS(build_nisan_game(graph, 11), ValidationError);
}

TEST_CASE("normalize_payoffs endpoints") {
  Matrix raw(1, 3);
  raw << 0.0, 1.0, 0.5;
  const auto [m, t] = normalize_payoffs(raw);
  CHECK(m(0, 0) == 0.25);
  CHECK(m(0, 1) == 0.5);
  CHECK(m(0, 2) == 0.375);
  CHECK(m.maxCoeff() / m.minCoeff() == 2.0);
  CHECK(t.invert(t.apply(0.3)) == doctest::Approx(0.3));
  raw(0, 0) = -0.1;
  CHECK_THROWS_AS(normalize_payoffs(raw), ValidationError);
}

TEST_CASE("potential values") {
  const NisanGame k3 = build_nisan_game(gen::complete(3), 3);
  CHECK(potential(k3.raw_c, Strategy::uniform(3)) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  const NisanGame c5 = build_nisan_game(gen::cycle(5), 2);
  CHECK(potential(c5.raw_c, characteristic_vector(VertexSet{1, 2}, 5)) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(potential(c5.raw_c, Strategy::pure(5, 3)) == c5.raw_c(3, 3));
  CHECK_THROWS_AS(potential(c5.raw_c, Strategy::uniform(4)), ValidationError);
}

TEST_CASE("characteristic vectors") {
  CHECK(characteristic_vector(VertexSet{1, 2}, 5).mass().isApprox(
      (Vector(5) << 0.5, 0.5, 0, 0, 0).finished()));
  CHECK(characteristic_vector(VertexSet{3}, 3).mass() == Vector::Unit(3, 2));
  CHECK(characteristic_vector(VertexSet{1, 2, 3}, 3).mass().isApprox(Vector::Constant(3, 1.0 / 3)));
  CHECK_THROWS_AS(characteristic_vector(VertexSet{}, 3), ValidationError);
}

TEST_CASE("every clique has the Bomze potential of its size") {
  std::vector<Graph> graphs = {gen::complete(5), gen::cycle(5), gen::petersen(), gen::wheel(6),
                               gen::complete_multipartite({2, 2, 2}), gen::diamond()};
  for (const Graph& g : graphs) {
    const Matrix c = build_nisan_game(g, 2).raw_c;
    for (unsigned s = 1; s < (1u << g.n()); ++s) {
      std::vector<int> members;
      for (int v = 0; v < g.n(); ++v)
        if (s >> v & 1) members.push_back(v + 1);
      const VertexSet q(members);
      if (!is_clique(g, q)) continue;
      std::vector<long double> x(g.n(), 0.0L);
      for (int v : members) x[v - 1] = 1.0L / members.size();
      const double expected = 1.0 - 1.0 / (2.0 * members.size());
      CHECK(std::abs(potential(c, characteristic_vector(q, g.n())) - expected) <= 1e-12);
      CHECK(std::abs(static_cast<double>(oracle::raw_potential(g.n(), g.edges(), x)) - expected) <=
            1e-12);
    }
  }
}

TEST_CASE("no strategy beats the Bomze value of the clique number") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : gen::connected_graphs(n)) {
      const int omega = max_clique_bruteforce(g).size;
      const Matrix c = build_nisan_game(g, 2).raw_c;
      double best = 0.0;
      for (int t = 0; t < 200; ++t) best = std::max(best, potential(c, random_strategy(n, rng)));
      CHECK(best <= bomze_value(omega) + 1e-9);
    }
  }
}

TEST_CASE("normalization is affine on the simplex and preserves ordering") {
  std::mt19937_64 rng(9);
  const NisanGame g = build_nisan_game(gen::petersen(), 3);
  std::vector<std::pair<double, double>> values;
  for (int t = 0; t < 100; ++t) {
    const Strategy x = random_strategy(10, rng);
    const double raw = potential(g.raw_c, x);
    const double norm = potential(g.c, x);
    CHECK(norm == doctest::Approx(g.transform.apply(raw)).epsilon(1e-13));
    values.emplace_back(raw, norm);
  }
  std::sort(values.begin(), values.end());
  CHECK(std::is_sorted(values.begin(), values.end(),
                       [](auto a, auto b) { return a.second < b.second; }));
}
