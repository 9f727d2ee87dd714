#include "ariadne/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace ariadne {

Strategy::Strategy(Vector mass) : mass_(std::move(mass)) {
  if (mass_.size() == 0) throw ValidationError("empty strategy");
  if (!mass_.allFinite()) throw ValidationError("strategy has non-finite entries");
  if (mass_.minCoeff() < 0.0) throw ValidationError("strategy has negative mass");
  if (std::abs(mass_.sum() - 1.0) > kSimplexTol)
    throw ValidationError("strategy mass does not sum to 1");
}

Strategy Strategy::normalized(const Vector& weights) {
  if (weights.size() == 0 || !weights.allFinite() || weights.minCoeff() < 0.0)
    throw ValidationError("weights must be finite and nonnegative");
  const double s = weights.sum();
  if (!(s > 0.0)) throw ValidationError("weights sum to zero");
  return Strategy(weights / s);
}

Strategy Strategy::uniform(Index n) { return Strategy(Vector::Constant(n, 1.0 / n)); }

Strategy Strategy::pure(Index n, Index i) {
  if (i < 0 || i >= n) throw RangeError("pure strategy index out of range");
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return Strategy(e);
}

VertexSet Strategy::carrier() const {
  std::vector<int> out;
  for (Index i = 0; i < mass_.size(); ++i)
    if (mass_(i) > 0.0) out.push_back(static_cast<int>(i) + 1);
  return VertexSet(std::move(out));
}

bool Strategy::is_pure() const { return (mass_.array() > 0.0).count() == 1; }

Strategy characteristic_vector(const VertexSet& s, int n) {
  if (s.empty()) throw ValidationError("characteristic vector of an empty set");
  Vector x = Vector::Zero(n);
  for (int v : s) {
    if (v > n) throw RangeError("vertex outside strategy dimension");
    x(v - 1) = 1.0 / static_cast<double>(s.size());
  }
  return Strategy(x);
}

Vector project_to_simplex(const Vector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vector x = (v.array() - theta).max(0.0);
  return x / x.sum();
}

}  // namespace ariadne
