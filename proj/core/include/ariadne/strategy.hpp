#pragma once

#include "ariadne/graph.hpp"
#include "ariadne/types.hpp"

namespace ariadne {

inline constexpr double kSimplexTol = 1e-12;

/// A point of the probability simplex. Coordinate i is strategy i (0-based internally).
class Strategy {
 public:
  /// Throws ValidationError unless entries are nonnegative and sum to 1 within kSimplexTol.
  explicit Strategy(Vector mass);

  /// Divides a nonnegative vector with positive sum by its sum.
  static Strategy normalized(const Vector& weights);
  static Strategy uniform(Index n);
  static Strategy pure(Index n, Index i);

  const Vector& mass() const noexcept { return mass_; }
  double operator()(Index i) const { return mass_(i); }
  Index size() const noexcept { return mass_.size(); }

  /// Positive coordinates, reported 1-based.
  VertexSet carrier() const;
  bool is_pure() const;
  double min_mass() const { return mass_.minCoeff(); }

 private:
  Vector mass_;
};

/// Uniform mass on the members of s inside an n-dimensional simplex.
Strategy characteristic_vector(const VertexSet& s, int n);

/// Euclidean projection onto the probability simplex (sort-based).
Vector project_to_simplex(const Vector& v);

}  // namespace ariadne
