#pragma once

#include <functional>
#include <vector>

namespace gkcp2::quad {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes from the Legendre zeros.
Rule gauss_legendre_rule(int n);

double integrate(const Rule& rule, const std::function<double(double)>& f, double a, double b);

struct Result {
  double value = 0.0;
  int order = 0;
  int rounds = 0;
};

/// Doubles the order from `order` until successive values differ by less than
/// `tol`; throws QuadratureError after `max_rounds` doublings.
Result gauss_legendre_doubling(const std::function<double(double)>& f, double a, double b,
                               int order, double tol = 1e-10, int max_rounds = 12);

/// Composite trapezoid rule with n panels.
double trapezoid(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace gkcp2::quad
