#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "g3/covers.hpp"
#include "g3/genus3.hpp"

namespace g3 {

/// m = floor(2 sqrt(2^n)) by exact integer square root (1 <= n <= 61).
long long m_of(int n);

/// Decide {2 sqrt(q)} < 1 - 4cos^2(3pi/7) exactly, for q = 2^n. The
/// threshold is the root of x^3 + 2x^2 - x - 1 in (0.8, 0.81) (obtained from
/// the minimal cubic of 2cos(6pi/7) by x -> -1-x); the comparison bisects a
/// certified rational bracket until the quadratic irrational 2 sqrt(q)
/// escapes it.
bool frac_below_threshold(int n);

/// First ordinary curve (by j bitmask) with the requested Frobenius trace.
/// The signature is forced by the trace class mod 4; the scan failing is a
/// hard error, not an impossibility proof. Requires q > 2, target odd,
/// |target| <= m.
WeierstrassOrd find_curve_with_trace(const Field& k, long long target);

enum class MaxStatus {
  exact_defect0,
  exact_defect3,
  lower_bound_only,
  not_covered,
  known_small_case,
  minimal,
};
const char* to_string(MaxStatus s);

struct MaximalReport {
  int n = 0;
  unsigned long long q = 0;
  long long m = 0;
  int m_mod8 = 0;
  std::optional<bool> frac_below;  // threshold test, m = 0,2,6 (mod 8) only
  MaxStatus status = MaxStatus::not_covered;
  std::optional<long long> nq3_lo, nq3_hi;
  std::optional<Genus3Curve> witness;
  std::optional<long long> count;  // independently scanned witness count
};

/// Defect-0 curve from the (E,E,E) cover of a trace -m curve; m = 1,5,7
/// (mod 8). Witness count is re-verified to equal q+1+3m.
MaximalReport construct_defect0(int n);
/// Defect-3 curve from a trace -m+1 curve; m = 0,2,6 (mod 8). Proves the
/// lower bound q+1+3m-3.
MaximalReport construct_defect3(int n);
/// Minimal-curve analogue from a trace +m curve; m = 1,3,7 (mod 8).
MaximalReport construct_minimal(int n);

/// N_q(3) for odd n: exact for m = 1,5,7 (mod 8), exact or lower-bound-only
/// for m = 0,2,6 depending on the fractional-part test, not covered for
/// m = 3,4, and the known value 7 for n = 1. Witnesses attached for n <= 13.
MaximalReport nq3(int n);

/// m_n = floor(sqrt(2^(2n+1))), the floor of 2 sqrt(q) over the nonsquare
/// powers q = 2^(2n-1).
struct MSeqEntry {
  int n = 0;
  mpz_class m;
  bool eps_half = false;  // whether {2 sqrt(q_n)} > 1/2
  int residue4 = 0;
};

/// Entries for n = 1..count (count <= 200), with the doubling recurrence
/// m_{n+1} = 2 m_n + [eps_n > 1/2] verified at every step.
std::vector<MSeqEntry> m_sequence(int count);

/// The closed-form quartics built from s = j^(-1/4): NHypA(s, s, s, 0), or
/// NHypB(s, 1, 1, 0) for the variant with signature class r0.
Genus3Curve remark_quartic(const Field& k, Fe j, bool variant_b);

}  // namespace g3
