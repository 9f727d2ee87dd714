#include "ariadne/shapley.hpp"

#include "ariadne/dynamics.hpp"

namespace ariadne {

Matrix shapley_matrix() {
  Matrix c(6, 6);
  c << 0, 0, 0, 0, 1, 2,
       0, 0, 0, 2, 0, 1,
       0, 0, 0, 1, 2, 0,
       0, 1, 2, 0, 0, 0,
       2, 0, 1, 0, 0, 0,
       1, 2, 0, 0, 0, 0;
  return 0.5 * c;
}

Strategy shapley_start() {
  Vector x(6);
  x << 0.1, 0.2, 0.3, 0.2, 0.1, 0.1;
  return Strategy::normalized(x);
}

std::vector<DivergencePoint> shapley_divergence(const Matrix& c, const Strategy& x0, double alpha,
                                                long iterations, long every) {
  if (iterations < 1 || every < 1) throw ValidationError("iterations and every must be positive");
  const Index n = c.rows();
  const Vector uniform = Vector::Constant(n, 1.0 / n);
  std::vector<DivergencePoint> out;
  Strategy x = x0;
  Vector sum = Vector::Zero(n);
  for (long k = 0; k < iterations; ++k) {
    sum += x.mass();
    if ((k + 1) % every == 0 || k + 1 == iterations)
      out.push_back({k, (sum / static_cast<double>(k + 1) - uniform).cwiseAbs().maxCoeff()});
    x = hedge_step(c, x, alpha);
  }
  return out;
}

}  // namespace ariadne
