#include "lwrdg/quadrature.hpp"

#include <stdexcept>

namespace lwrdg {

namespace {

constexpr double kGl1Nodes[] = {0.0};
constexpr double kGl1Weights[] = {2.0};

constexpr double kGl2Nodes[] = {-0.5773502691896257, 0.5773502691896257};
constexpr double kGl2Weights[] = {1.0, 1.0};

constexpr double kGl3Nodes[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGl3Weights[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

constexpr double kGl4Nodes[] = {-0.8611363115940526, -0.3399810435848563,
                                0.3399810435848563, 0.8611363115940526};
constexpr double kGl4Weights[] = {0.34785484513745385, 0.6521451548625461,
                                  0.6521451548625461, 0.34785484513745385};

constexpr double kGl5Nodes[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                0.5384693101056831, 0.9061798459386640};
constexpr double kGl5Weights[] = {0.23692688505618908, 0.47862867049936647,
                                  0.5688888888888889, 0.47862867049936647,
                                  0.23692688505618908};

constexpr double kGl6Nodes[] = {-0.9324695142031521, -0.6612093864662645,
                                -0.2386191860831969, 0.2386191860831969,
                                0.6612093864662645,  0.9324695142031521};
constexpr double kGl6Weights[] = {0.17132449237917036, 0.3607615730481386,
                                  0.46791393457269104, 0.46791393457269104,
                                  0.3607615730481386,  0.17132449237917036};

constexpr double kLob2Nodes[] = {-1.0, 1.0};
constexpr double kLob2Weights[] = {1.0, 1.0};

constexpr double kLob3Nodes[] = {-1.0, 0.0, 1.0};
constexpr double kLob3Weights[] = {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0};

}  // namespace

QuadratureRule gauss_legendre(int n) {
  switch (n) {
    case 1: return {kGl1Nodes, kGl1Weights};
    case 2: return {kGl2Nodes, kGl2Weights};
    case 3: return {kGl3Nodes, kGl3Weights};
    case 4: return {kGl4Nodes, kGl4Weights};
    case 5: return {kGl5Nodes, kGl5Weights};
    case 6: return {kGl6Nodes, kGl6Weights};
    default: throw std::out_of_range("gauss_legendre: n must be in [1, 6]");
  }
}

QuadratureRule gauss_lobatto(int n) {
  switch (n) {
    case 2: return {kLob2Nodes, kLob2Weights};
    case 3: return {kLob3Nodes, kLob3Weights};
    default: throw std::out_of_range("gauss_lobatto: n must be 2 or 3");
  }
}

int lobatto_points_for_degree(int degree) {
  return degree <= 1 ? 2 : 3;
}

double min_lobatto_weight(int degree) {
  // Lobatto weights above sum to 2; on a unit-width cell they are halved.
  return degree <= 1 ? 0.5 : 1.0 / 6.0;
}

}  // namespace lwrdg
