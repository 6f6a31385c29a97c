#pragma once

#include <span>

namespace lwrdg {

// Nodes on [-1, 1], weights summing to 2.
struct QuadratureRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

// n-point Gauss-Legendre rule, 1 <= n <= 6; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

// n-point Gauss-Lobatto rule, n in {2, 3}; includes both endpoints; exact for
// degree 2n-3.
QuadratureRule gauss_lobatto(int n);

// Node count of the Gauss-Lobatto rule used for degree-k bound checks:
// the smallest n >= 2 with 2n-3 >= k.
int lobatto_points_for_degree(int degree);

// Smallest Gauss-Lobatto weight when the rule is mapped to a unit-width cell.
double min_lobatto_weight(int degree);

}  // namespace lwrdg
