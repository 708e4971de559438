#pragma once

#include <array>
#include <variant>

#include "g3/elliptic.hpp"
#include "g3/genus3.hpp"

namespace g3 {

/// The three elliptic quotients of a genus-3 curve with many involutions.
/// Ordinary for the four ordinary families, supersingular for SS.
struct EllipticTriple {
  std::variant<std::array<WeierstrassOrd, 3>, std::array<SupersingularEC, 3>> curves;
  bool ordinary() const { return curves.index() == 0; }
  const std::array<WeierstrassOrd, 3>& ord() const {
    return std::get<std::array<WeierstrassOrd, 3>>(curves);
  }
  const std::array<SupersingularEC, 3>& ss() const {
    return std::get<std::array<SupersingularEC, 3>>(curves);
  }
};

/// Quotient coefficients, emitted as literal records (the intermediate
/// isomorphisms are proof devices and are not modeled):
///   HypA   E_i: y^2+xy = x^3 + (r + a(t+1)) x^2 + {(a(t+1))^4, (at)^4, a^4}
///   HypB   E_1: r x^2 + b^4 u^-4 (u+1)^-4;  E_2, E_3: (r+r0) x^2 with
///          b^4 u^4 (u+1)^-4 and b^4 u^-4 (u+1)^4, where u(u+1) = s+t
///   SS     E_i: y^2 + (g/v_i) y = x^3 + d x^2 + e over the cubic's roots
///   NHypA  x^2 coeffs e, e+r, e+r; constants (a+r)^2(a+c+e+r)^2,
///          c^2(a+c+e+r)^2, c^2(a+r)^2
///   NHypB  x^2 coeffs c^2d^2, c^2d^2+r, c^2d^2+r; constants d^4(a+dr)^4,
///          c^4(a+dr)^4, (c+d+1)^4(a+dr)^4
EllipticTriple quotients_of(const Field& k, const Genus3Curve& c);

std::array<long long, 3> traces_of(const Field& k, const EllipticTriple& t);

/// The counting identity #C = q + 1 - (tr E_1 + tr E_2 + tr E_3) checked by
/// two independent computations. A false report is surfaced verbatim.
struct IsogenyReport {
  long long count = 0;
  std::array<long long, 3> traces{};
  long long trace_sum = 0;
  long long expected = 0;  // q + 1 - trace_sum
  bool ok = false;
  EllipticTriple triple;
};
IsogenyReport verify_isogeny(const Field& k, const Genus3Curve& c);

}  // namespace g3
