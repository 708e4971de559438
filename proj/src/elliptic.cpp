#include "g3/elliptic.hpp"

#include <stdexcept>

namespace g3 {

namespace {

// Shared chord-tangent arithmetic for y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a6.
// The two models used here are (a1,a3) = (1,0) and (0,lambda).
struct Coeffs {
  Fe a1, a2, a3, a6;
};

Coeffs coeffs(const WeierstrassOrd& e) { return {1, e.r, 0, e.a}; }
Coeffs coeffs(const SupersingularEC& e) { return {0, e.d, e.lambda, e.e}; }

bool on_curve_impl(const Field& k, const Coeffs& c, const ECPoint& p) {
  if (p.infinity) return true;
  const Fe lhs = k.sqr(p.y) ^ k.mul(c.a1, k.mul(p.x, p.y)) ^ k.mul(c.a3, p.y);
  const Fe rhs = k.mul(p.x, k.sqr(p.x)) ^ k.mul(c.a2, k.sqr(p.x)) ^ c.a6;
  return lhs == rhs;
}

ECPoint negate_impl(const Field& k, const Coeffs& c, const ECPoint& p) {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, p.y ^ k.mul(c.a1, p.x) ^ c.a3);
}

ECPoint add_impl(const Field& k, const Coeffs& c, const ECPoint& p, const ECPoint& q) {
  if (!on_curve_impl(k, c, p) || !on_curve_impl(k, c, q))
    throw std::invalid_argument("add_points: point not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && (p.y ^ q.y) == (k.mul(c.a1, p.x) ^ c.a3)) return ECPoint::at_infinity();

  Fe s;
  if (p.x != q.x) {
    s = k.div(p.y ^ q.y, p.x ^ q.x);
  } else {
    // Tangent slope in characteristic 2: (x^2 + a1*y) / (a1*x + a3).
    s = k.div(k.sqr(p.x) ^ k.mul(c.a1, p.y), k.mul(c.a1, p.x) ^ c.a3);
  }
  const Fe x3 = k.sqr(s) ^ k.mul(c.a1, s) ^ c.a2 ^ p.x ^ q.x;
  const Fe y3 = k.mul(s, p.x ^ x3) ^ p.y ^ k.mul(c.a1, x3) ^ c.a3;
  return ECPoint::affine(x3, y3);
}

}  // namespace

Fe j_invariant(const Field& k, const WeierstrassOrd& e) { return k.inv(e.a); }

Fe signature(const Field& k, const WeierstrassOrd& e) {
  return k.trace(e.r) == 0 ? 0 : k.r0();
}

WeierstrassOrd quadratic_twist(const Field& k, const WeierstrassOrd& e) {
  return {e.r ^ k.r0(), e.a};
}

long long count_points(const Field& k, const WeierstrassOrd& e) {
  // x = 0 carries the single point (0, sqrt(a)); for x != 0, y = xz turns the
  // equation into z^2 + z = x + r + a/x^2, solvable iff the trace vanishes.
  long long count = 2;
  for (std::uint64_t xv = 1; xv < k.order(); ++xv) {
    const Fe x = static_cast<Fe>(xv);
    const Fe w = x ^ e.r ^ k.mul(e.a, k.sqr(k.inv(x)));
    if (k.trace(w) == 0) count += 2;
  }
  return count;
}

long long count_points(const Field& k, const SupersingularEC& e) {
  const Fe li2 = k.sqr(k.inv(e.lambda));
  long long count = 1;
  for (std::uint64_t xv = 0; xv < k.order(); ++xv) {
    const Fe x = static_cast<Fe>(xv);
    const Fe rhs = k.mul(x, k.sqr(x)) ^ k.mul(e.d, k.sqr(x)) ^ e.e;
    if (k.trace(k.mul(rhs, li2)) == 0) count += 2;
  }
  return count;
}

long long trace_of(const Field& k, const WeierstrassOrd& e) {
  return static_cast<long long>(k.order()) + 1 - count_points(k, e);
}

long long trace_of(const Field& k, const SupersingularEC& e) {
  return static_cast<long long>(k.order()) + 1 - count_points(k, e);
}

OrdinaryInvariants invariants_of(const Field& k, const WeierstrassOrd& e) {
  return {j_invariant(k, e), signature(k, e), trace_of(k, e)};
}

bool on_curve(const Field& k, const WeierstrassOrd& e, const ECPoint& p) {
  return on_curve_impl(k, coeffs(e), p);
}
bool on_curve(const Field& k, const SupersingularEC& e, const ECPoint& p) {
  return on_curve_impl(k, coeffs(e), p);
}

ECPoint negate_point(const Field& k, const WeierstrassOrd& e, const ECPoint& p) {
  return negate_impl(k, coeffs(e), p);
}
ECPoint negate_point(const Field& k, const SupersingularEC& e, const ECPoint& p) {
  return negate_impl(k, coeffs(e), p);
}

ECPoint add_points(const Field& k, const WeierstrassOrd& e, const ECPoint& p, const ECPoint& q) {
  return add_impl(k, coeffs(e), p, q);
}
ECPoint add_points(const Field& k, const SupersingularEC& e, const ECPoint& p, const ECPoint& q) {
  return add_impl(k, coeffs(e), p, q);
}

long long order_of(const Field& k, const WeierstrassOrd& e, const ECPoint& p) {
  long long n = 1;
  ECPoint acc = p;
  while (!acc.infinity) {
    acc = add_points(k, e, acc, p);
    ++n;
  }
  return n;
}

std::vector<ECPoint> enumerate_points(const Field& k, const WeierstrassOrd& e) {
  std::vector<ECPoint> pts{ECPoint::at_infinity()};
  pts.push_back(ECPoint::affine(0, k.sqrt(e.a)));
  for (std::uint64_t xv = 1; xv < k.order(); ++xv) {
    const Fe x = static_cast<Fe>(xv);
    const Fe w = x ^ e.r ^ k.mul(e.a, k.sqr(k.inv(x)));
    if (auto z = k.solve_as(w)) {
      pts.push_back(ECPoint::affine(x, k.mul(x, *z)));
      pts.push_back(ECPoint::affine(x, k.mul(x, *z) ^ x));
    }
  }
  return pts;
}

std::vector<ECPoint> enumerate_points(const Field& k, const SupersingularEC& e) {
  std::vector<ECPoint> pts{ECPoint::at_infinity()};
  const Fe li2 = k.sqr(k.inv(e.lambda));
  for (std::uint64_t xv = 0; xv < k.order(); ++xv) {
    const Fe x = static_cast<Fe>(xv);
    const Fe rhs = k.mul(x, k.sqr(x)) ^ k.mul(e.d, k.sqr(x)) ^ e.e;
    if (auto w = k.solve_as(k.mul(rhs, li2))) {
      pts.push_back(ECPoint::affine(x, k.mul(e.lambda, *w)));
      pts.push_back(ECPoint::affine(x, k.mul(e.lambda, *w) ^ e.lambda));
    }
  }
  return pts;
}

bool torsion_probe(const Field& k, const WeierstrassOrd& e, int target) {
  if (target != 4 && target != 8)
    throw std::invalid_argument("torsion_probe: target must be 4 or 8");
  if (signature(k, e) != 0)
    throw std::invalid_argument("torsion_probe: requires signature 0");
  for (const auto& p : enumerate_points(k, e))
    if (!p.infinity && order_of(k, e, p) == target) return true;
  return false;
}

ECPoint two_torsion_point(const Field& k, const WeierstrassOrd& e) {
  return ECPoint::affine(0, k.sqrt(e.a));
}

ECPoint tau_n(const Field& k, const WeierstrassOrd& e, const ECPoint& p) {
  if (!on_curve(k, e, p)) throw std::invalid_argument("tau_n: point not on the curve");
  const ECPoint n = two_torsion_point(k, e);
  if (p.infinity) return n;
  if (p == n) return ECPoint::at_infinity();
  const Fe s = k.sqrt(e.a);
  const Fe xi = k.inv(p.x);
  const Fe xi2 = k.sqr(xi);
  const Fe x3 = k.mul(s, xi);
  const Fe y3 = k.mul(s, k.mul(p.y, xi2)) ^ s ^ k.mul(s, xi) ^ k.mul(e.a, xi2);
  return ECPoint::affine(x3, y3);
}

}  // namespace g3
