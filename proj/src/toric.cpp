#include "gkcp2/toric.hpp"

#include <cmath>
#include <sstream>

namespace gkcp2::toric {

namespace {

constexpr int T1 = 0, T2 = 1, Y1 = 2, Y2 = 3;

}  // namespace

DelzantPolygon DelzantPolygon::cp2() {
  return {{IVec2(1, 0), IVec2(0, 1), IVec2(-1, -1)}, {0.0, 0.0, 1.0}};
}

DelzantPolygon DelzantPolygon::square() {
  return {{IVec2(1, 0), IVec2(0, 1), IVec2(-1, 0), IVec2(0, -1)}, {0.0, 0.0, 1.0, 1.0}};
}

bool DelzantPolygon::is_cp2() const {
  const DelzantPolygon ref = cp2();
  if (normals.size() != 3 || offsets.size() != 3) return false;
  for (int a = 0; a < 3; ++a)
    if (normals[a] != ref.normals[a] || offsets[a] != ref.offsets[a]) return false;
  return true;
}

void DelzantPolygon::validate() const {
  const std::size_t n = normals.size();
  if (n < 3 || offsets.size() != n) throw DomainError("polygon needs >= 3 faces and offsets");
  for (std::size_t a = 0; a < n; ++a) {
    if (cross(normals[a], normals[(a + 1) % n]) != 1) {
      std::ostringstream os;
      os << "corner " << a << " is not smooth (cross product != 1)";
      throw InvalidCornerError(os.str());
    }
  }
}

int cross(const IVec2& a, const IVec2& b) { return a.x() * b.y() - a.y() * b.x(); }

std::vector<double> face_values(const DelzantPolygon& poly, const MomentPoint& y) {
  std::vector<double> l(poly.normals.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    l[a] = poly.normals[a].x() * y.y1 + poly.normals[a].y() * y.y2 + poly.offsets[a];
    if (!(l[a] > kFaceTolerance)) {
      std::ostringstream os;
      os << "moment point on or outside face " << a << " (value " << l[a] << ")";
      throw BoundaryError(os.str());
    }
  }
  return l;
}

GuilleminData guillemin(const DelzantPolygon& poly, const MomentPoint& y) {
  const std::vector<double> l = face_values(poly, y);
  GuilleminData d;
  for (std::size_t a = 0; a < l.size(); ++a) {
    const Vec2 v = poly.normals[a].cast<double>();
    d.G += 0.5 * l[a] * std::log(l[a]);
    d.grad += 0.5 * (std::log(l[a]) + 1.0) * v;
    d.hess += 0.5 * v * v.transpose() / l[a];
  }
  d.hess_inv = d.hess.inverse();
  return d;
}

Mat4 complex_structure_ytheta(const DelzantPolygon& poly, const MomentPoint& y) {
  const GuilleminData d = guillemin(poly, y);
  Mat4 J = Mat4::Zero();
  J.block<2, 2>(T1, Y1) = d.hess;
  J.block<2, 2>(Y1, T1) = -d.hess_inv;
  return J;
}

Mat4 metric_ytheta(const DelzantPolygon& poly, const MomentPoint& y) {
  const GuilleminData d = guillemin(poly, y);
  Mat4 g = Mat4::Zero();
  g.block<2, 2>(T1, T1) = d.hess_inv;
  g.block<2, 2>(Y1, Y1) = d.hess;
  return g;
}

Mat4 symplectic_ytheta() {
  Mat4 w = Mat4::Zero();
  w(Y1, T1) = 1.0;
  w(T1, Y1) = -1.0;
  w(Y2, T2) = 1.0;
  w(T2, Y2) = -1.0;
  return w;
}

std::vector<CornerCoords> complex_coords(const DelzantPolygon& poly, const MomentPoint& y,
                                         const Vec2& theta) {
  const GuilleminData d = guillemin(poly, y);
  const Complex lx1(d.grad.x(), theta.x());  // log xi_1
  const Complex lx2(d.grad.y(), theta.y());
  const std::size_t n = poly.normals.size();
  std::vector<CornerCoords> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    const IVec2& u1 = poly.normals[a];
    const IVec2& u2 = poly.normals[(a + 1) % n];
    const Complex l1 = double(u2.y()) * lx1 - double(u2.x()) * lx2;
    const Complex l2 = -double(u1.y()) * lx1 + double(u1.x()) * lx2;
    out.push_back({static_cast<int>(a), std::exp(l1), std::exp(l2)});
  }
  return out;
}

std::pair<Complex, Complex> cp2_coords(const MomentPoint& y, const Vec2& theta) {
  face_values(DelzantPolygon::cp2(), y);
  const double y3 = y.y3();
  return {std::sqrt(y.y1 / y3) * std::exp(Complex(0.0, theta.x())),
          std::sqrt(y.y2 / y3) * std::exp(Complex(0.0, theta.y()))};
}

MomentPoint cp2_moment_from_coords(Complex z1, Complex z2) {
  const double a = std::norm(z1);
  const double b = std::norm(z2);
  const double den = 1.0 + a + b;
  return {a / den, b / den};
}

IMat2 transition_matrix(const IVec2& u1, const IVec2& u2, const IVec2& v1, const IVec2& v2) {
  if (cross(u1, u2) != 1 || cross(v1, v2) != 1)
    throw InvalidCornerError("corner normals must have cross product 1");
  IMat2 A;
  A << cross(u1, v2), cross(u2, v2), cross(v1, u1), cross(v1, u2);
  return A;
}

std::pair<Complex, Complex> monomial_map(const IMat2& A, Complex z1, Complex z2) {
  auto pw = [](Complex z, int k) { return std::pow(z, k); };
  return {pw(z1, A(0, 0)) * pw(z2, A(0, 1)), pw(z1, A(1, 0)) * pw(z2, A(1, 1))};
}

CMat4 holomorphic_poisson_ytheta(const DelzantPolygon& poly, const MomentPoint& y) {
  const GuilleminData d = guillemin(poly, y);
  const Complex I(0.0, 1.0);
  // sigma = i a ^ b with a = G^{1i} d_yi / 2 - (i/2) d_theta1, b likewise.
  Eigen::Vector4cd a = Eigen::Vector4cd::Zero();
  Eigen::Vector4cd b = Eigen::Vector4cd::Zero();
  a(T1) = -0.5 * I;
  a(Y1) = 0.5 * d.hess_inv(0, 0);
  a(Y2) = 0.5 * d.hess_inv(0, 1);
  b(T2) = -0.5 * I;
  b(Y1) = 0.5 * d.hess_inv(1, 0);
  b(Y2) = 0.5 * d.hess_inv(1, 1);
  return I * (a * b.transpose() - b * a.transpose());
}

double poisson_norm_general(const DelzantPolygon& poly, const MomentPoint& y) {
  return 0.5 / guillemin(poly, y).hess.determinant();
}

double poisson_norm(const MomentPoint& y) {
  face_values(DelzantPolygon::cp2(), y);
  return 2.0 * y.y1 * y.y2 * y.y3();
}

Mat4 hitchin_Q_ytheta(const MomentPoint& y) {
  face_values(DelzantPolygon::cp2(), y);
  Mat4 Q = Mat4::Zero();
  const double c = 4.0 * y.y1 * y.y2 * y.y3();
  Q(Y1, Y2) = c;
  Q(Y2, Y1) = -c;
  Q(T1, T2) = -1.0;
  Q(T2, T1) = 1.0;
  return Q;
}

}  // namespace gkcp2::toric
