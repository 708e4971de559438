#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "g3/field.hpp"

namespace g3 {

// The five genus-3 families with a C2 x C2 automorphism subgroup. Parameter
// names follow the defining equations:
//
//   HypA   y^2 + y = a(x + t/x) + a(t+1)(1/(x+1) + t/(x+t)) + r
//   HypB   y^2 + y = b(1/(x^2+x+s) + 1/(x^2+x+t)) + r
//   SS     y^4 + f y^2 z^2 + g y z^3 = x^3 z + d x^2 z^2 + e x^4
//   NHypA  (a(x^2+y^2) + c z^2 + xy + e z(x+y))^2 = (r(x^2+y^2) + xy) z(x+y+z)
//   NHypB  (a(x^2+y^2) + c z(x+y+z) + d xy)^2 = (r(x^2+y^2) + xy) z(x+y+z)

struct HypA {
  Fe a{}, r{}, t{};
  friend bool operator==(const HypA&, const HypA&) = default;
};
struct HypB {
  Fe b{}, r{}, s{}, t{};
  friend bool operator==(const HypB&, const HypB&) = default;
};
struct SSQuartic {
  Fe d{}, e{}, f{}, g{};
  friend bool operator==(const SSQuartic&, const SSQuartic&) = default;
};
struct NHypA {
  Fe a{}, c{}, e{}, r{};
  friend bool operator==(const NHypA&, const NHypA&) = default;
};
struct NHypB {
  Fe a{}, c{}, d{}, r{};
  friend bool operator==(const NHypB&, const NHypB&) = default;
};

using Genus3Curve = std::variant<HypA, HypB, SSQuartic, NHypA, NHypB>;

const char* family_tag(const Genus3Curve& c);  // "hypa" | "hypb" | "ss" | "nhypa" | "nhypb"
int family_index(std::string_view tag);        // 0..4 in the order above, -1 if unknown
bool is_hyperelliptic_family(const Genus3Curve& c);

/// Visit every valid parameter tuple of one family, in lexicographic
/// parameter order (deterministic across runs).
void for_each_valid_tuple(const Field& k, std::string_view family,
                          const std::function<void(const Genus3Curve&)>& fn);
std::vector<Genus3Curve> all_valid_tuples(const Field& k, std::string_view family);
/// Rejection-sample a valid tuple.
Genus3Curve random_valid_tuple(const Field& k, std::string_view family, std::mt19937_64& rng);
/// Estimated tuple count, for the exhaustive-vs-sampled sweep policy.
double estimated_tuple_count(const Field& k, std::string_view family);

/// Every violated parameter constraint, by name; empty means valid.
std::vector<std::string> validate(const Field& k, const Genus3Curve& c);
bool is_valid(const Field& k, const Genus3Curve& c);

/// Point of P^2, kept in canonical form: last nonzero coordinate scaled to 1
/// and later coordinates zero (charts z=1; z=0,y=1; (1,0,0)).
struct ProjPoint {
  Fe x{}, y{}, z{};
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};
ProjPoint normalize(const Field& k, ProjPoint p);

/// Dense plane quartic: coeff[i][j] multiplies x^i y^j z^(4-i-j).
struct Quartic {
  std::array<std::array<Fe, 5>, 5> coeff{};
  Fe eval(const Field& k, Fe x, Fe y, Fe z) const;
  /// Formal partial derivative (axis 0,1,2 = x,y,z) evaluated at a point;
  /// in characteristic 2 only odd-exponent monomials survive.
  Fe partial(const Field& k, int axis, Fe x, Fe y, Fe z) const;
};

/// The defining quartic of a plane-quartic family member (SS/NHypA/NHypB).
Quartic quartic_of(const Field& k, const Genus3Curve& c);

/// Right-hand side f(x) of a hyperelliptic model; x must avoid the poles
/// {0, 1, t} (HypA). HypB is pole-free on k.
Fe hyp_rhs(const Field& k, const HypA& c, Fe x);
Fe hyp_rhs(const Field& k, const HypB& c, Fe x);

/// Rational points of the smooth model.
///   HypA:  2 * #{x outside poles : tr f(x) = 0} + 4 (one ramified point over
///          each simple pole x = 0, 1, t, infinity).
///   HypB:  2 * #{x in k : tr f(x) = 0} + 2*[tr(r) = 0] (the two unramified
///          points over x = infinity, where f tends to r).
///   quartics: projective scan over the three standard charts.
long long count_points(const Field& k, const Genus3Curve& c);

/// The three nontrivial involutions i_1, i_2, i_3 as maps on points.
/// Hyperelliptic families act on affine points (x, y) away from the poles;
/// quartic families act on projective points.
std::pair<Fe, Fe> apply_involution(const Field& k, const HypA& c, int which, std::pair<Fe, Fe> p);
std::pair<Fe, Fe> apply_involution(const Field& k, const HypB& c, int which, std::pair<Fe, Fe> p);
ProjPoint apply_involution(const Field& k, const SSQuartic& c, int which, ProjPoint p);
ProjPoint apply_involution(const Field& k, const NHypA& c, int which, ProjPoint p);
ProjPoint apply_involution(const Field& k, const NHypB& c, int which, ProjPoint p);

/// Rational fixed points of one involution.
struct FixedPointSet {
  std::vector<std::pair<Fe, Fe>> affine;  // hyperelliptic families
  std::vector<ProjPoint> points;          // quartic families
  int at_infinity = 0;                    // HypB: rational points over x = infinity
  std::string description;
};
struct InvolutionReport {
  std::array<FixedPointSet, 3> fixed;
};
InvolutionReport fixed_point_report(const Field& k, const Genus3Curve& c);

/// Quadratic extension k2 = k[w]/(w^2 + w + r0); elements are lo + hi*w.
/// Only what the degree-2 smoothness scan needs.
struct Fe2 {
  Fe lo{}, hi{};
  friend bool operator==(const Fe2&, const Fe2&) = default;
};
class Ext2 {
 public:
  explicit Ext2(const Field& base) : k_(base) {}
  Fe2 embed(Fe a) const { return {a, 0}; }
  Fe2 add(Fe2 a, Fe2 b) const { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  Fe2 mul(Fe2 a, Fe2 b) const;
  const Field& base() const { return k_; }

 private:
  const Field& k_;
};

/// Search for a singular point over k (degree 1) or k2 (degree 2); nullopt
/// means the quartic passed. Quartic families only; q^(2*degree) <= 2^26.
std::optional<std::array<Fe2, 3>> smoothness_spotcheck(const Field& k, const Genus3Curve& c,
                                                       int degree);

}  // namespace g3
