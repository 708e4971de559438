#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "g3/field.hpp"

namespace g3 {

/// Ordinary-model curve y^2 + xy = x^3 + r x^2 + a; ordinary iff a != 0.
struct WeierstrassOrd {
  Fe r{}, a{};
  friend bool operator==(const WeierstrassOrd&, const WeierstrassOrd&) = default;
};

/// Supersingular curve y^2 + lambda*y = x^3 + d x^2 + e (j = 0); lambda != 0.
struct SupersingularEC {
  Fe lambda{}, d{}, e{};
  friend bool operator==(const SupersingularEC&, const SupersingularEC&) = default;
};

using EllipticCurve = std::variant<WeierstrassOrd, SupersingularEC>;

struct ECPoint {
  bool infinity = true;
  Fe x{}, y{};
  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Fe x, Fe y) { return {false, x, y}; }
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

/// (j, sgn, trace) of an ordinary curve. sgn is 0 or r0; trace is odd and
/// satisfies the Hasse bound.
struct OrdinaryInvariants {
  Fe j{}, sgn{};
  long long trace = 0;
};

Fe j_invariant(const Field& k, const WeierstrassOrd& e);
/// The x^2 coefficient of the normalized model: 0 when trace(r) = 0, else
/// r0. The normalizing substitution y <- y + wx shifts r by AS(k) and fixes a.
Fe signature(const Field& k, const WeierstrassOrd& e);
/// Quadratic twist (r + r0, a); negates the trace.
WeierstrassOrd quadratic_twist(const Field& k, const WeierstrassOrd& e);

long long count_points(const Field& k, const WeierstrassOrd& e);
long long count_points(const Field& k, const SupersingularEC& e);
long long trace_of(const Field& k, const WeierstrassOrd& e);
long long trace_of(const Field& k, const SupersingularEC& e);

OrdinaryInvariants invariants_of(const Field& k, const WeierstrassOrd& e);

bool on_curve(const Field& k, const WeierstrassOrd& e, const ECPoint& p);
bool on_curve(const Field& k, const SupersingularEC& e, const ECPoint& p);

ECPoint negate_point(const Field& k, const WeierstrassOrd& e, const ECPoint& p);
ECPoint negate_point(const Field& k, const SupersingularEC& e, const ECPoint& p);
/// Chord-tangent addition; throws std::invalid_argument on off-curve input.
ECPoint add_points(const Field& k, const WeierstrassOrd& e, const ECPoint& p, const ECPoint& q);
ECPoint add_points(const Field& k, const SupersingularEC& e, const ECPoint& p, const ECPoint& q);

long long order_of(const Field& k, const WeierstrassOrd& e, const ECPoint& p);

/// All rational points, infinity first, then by ascending x.
std::vector<ECPoint> enumerate_points(const Field& k, const WeierstrassOrd& e);
std::vector<ECPoint> enumerate_points(const Field& k, const SupersingularEC& e);

/// Whether E(k) has a point of exact order `target` (4 or 8), by full group
/// enumeration. Requires signature(e) = 0.
bool torsion_probe(const Field& k, const WeierstrassOrd& e, int target);

/// The unique nontrivial 2-torsion point N = (0, a^(1/2)).
ECPoint two_torsion_point(const Field& k, const WeierstrassOrd& e);
/// Translation by N: closed form on affine points with x != 0, group law at
/// the two exceptional points. Equals add_points(p, N).
ECPoint tau_n(const Field& k, const WeierstrassOrd& e, const ECPoint& p);

}  // namespace g3
