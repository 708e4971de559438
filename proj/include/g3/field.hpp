#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace g3 {

/// Element of GF(2^n) in polynomial basis: bit i is the coefficient of x^i
/// of the residue polynomial. All bits at positions >= n are zero.
using Fe = std::uint32_t;

/// Degree of a polynomial bitmask, -1 for the zero polynomial.
int poly_degree(std::uint64_t p);

/// Smallest irreducible degree-n polynomial by bitmask value (1 <= n <= 30).
Fe default_modulus(int n);

/// A nontrivial factor of p (found by trial division by all polynomials of
/// degree <= deg(p)/2), or nullopt if p is irreducible.
std::optional<Fe> reducibility_witness(std::uint64_t p);

/// The field k = GF(2^n), immutable after construction. All operations are
/// pure functions of (field, inputs) and safe to share across threads.
///
/// Multiplication uses log/antilog tables for small n and carry-less
/// multiply + reduction otherwise; the two paths agree (see tests).
class Field {
 public:
  static constexpr int kMaxDegree = 30;

  /// Field with the default (smallest-bitmask irreducible) modulus.
  explicit Field(int n);
  /// Field with an explicit modulus. Throws std::invalid_argument naming a
  /// witness factor when the modulus is reducible or of the wrong degree.
  Field(int n, Fe modulus);

  int degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  Fe modulus() const { return mod_; }
  /// Distinguished trace-1 element: 1 when n is odd, otherwise the smallest
  /// bitmask of trace 1.
  Fe r0() const { return r0_; }

  Fe add(Fe a, Fe b) const { return a ^ b; }
  Fe mul(Fe a, Fe b) const;
  Fe sqr(Fe a) const { return mul(a, a); }
  /// Multiplicative inverse; throws std::domain_error on 0.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;

  /// The p-power Frobenius x -> x^2 (a field automorphism; its n-fold
  /// iterate is the identity).
  Fe frobenius(Fe a) const { return sqr(a); }
  /// Unique square root: sqrt(a)^2 == a for every a (squaring is bijective).
  Fe sqrt(Fe a) const;
  Fe root4(Fe a) const { return sqrt(sqrt(a)); }
  Fe root8(Fe a) const { return sqrt(root4(a)); }

  /// Absolute trace tr(a) = a + a^2 + ... + a^(2^(n-1)), valued in {0,1}.
  int trace(Fe a) const;
  /// Membership in AS(k) = {x + x^2 : x in k} = ker(tr).
  bool in_as(Fe a) const { return trace(a) == 0; }
  /// A solution x of x^2 + x = c, or nullopt when trace(c) = 1 (the other
  /// solution is x + 1). Half-trace for odd n, linear solve for even n.
  std::optional<Fe> solve_as(Fe c) const;

  /// All roots in k of y^3 + f*y + g, with multiplicity, by exhaustive scan
  /// (requires n <= 20).
  std::vector<Fe> cubic_roots(Fe f, Fe g) const;

 private:
  void init(int n, Fe modulus);
  void build_tables();
  Fe mul_notable(Fe a, Fe b) const;

  int n_ = 0;
  Fe mod_ = 0;
  std::uint64_t q_ = 0;
  Fe r0_ = 0;
  bool has_tables_ = false;
  std::vector<Fe> exp_;   // exp_[i] = g^i, i in [0, q-1)
  std::vector<Fe> log_;   // log_[exp_[i]] = i; log_[0] unused
};

}  // namespace g3
