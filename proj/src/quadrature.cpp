#include "gkcp2/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/legendre.hpp>

#include "gkcp2/errors.hpp"

namespace gkcp2::quad {

Rule gauss_legendre_rule(int n) {
  if (n < 1) throw DomainError("quadrature order must be positive");
  // boost returns the non-negative zeros in increasing order
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  Rule r;
  auto weight = [n](double x) {
    const double dp = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * dp * dp);
  };
  for (double x : pos) {
    r.nodes.push_back(x);
    r.weights.push_back(weight(x));
    if (x != 0.0) {
      r.nodes.push_back(-x);
      r.weights.push_back(weight(-x));
    }
  }
  return r;
}

double integrate(const Rule& rule, const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

Result gauss_legendre_doubling(const std::function<double(double)>& f, double a, double b,
                               int order, double tol, int max_rounds) {
  double prev = integrate(gauss_legendre_rule(order), f, a, b);
  for (int round = 1; round <= max_rounds; ++round) {
    order *= 2;
    const double cur = integrate(gauss_legendre_rule(order), f, a, b);
    if (!std::isfinite(cur)) throw QuadratureError("non-finite quadrature value");
    if (std::abs(cur - prev) < tol) return {cur, order, round};
    prev = cur;
  }
  std::ostringstream os;
  os << "Gauss-Legendre doubling did not converge after " << max_rounds << " rounds";
  throw QuadratureError(os.str());
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = 0.5 * (f(a) + f(b));
  for (int k = 1; k < n; ++k) sum += f(a + k * h);
  return sum * h;
}

}  // namespace gkcp2::quad
