#include "g3/maximal.hpp"

#include <stdexcept>

#include "g3/quotients.hpp"

namespace g3 {

namespace {

mpz_class isqrt(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// h(x) = x^3 + 2x^2 - x - 1; its root in (0.8, 0.81) is 1 - 4cos^2(3pi/7).
int h_sign(const mpq_class& x) {
  const mpq_class v = x * x * x + 2 * x * x - x - 1;
  return sgn(v);
}

struct Bracket {
  mpq_class lo, hi;
};

const Bracket& threshold_bracket() {
  static const Bracket b = [] {
    Bracket br{mpq_class(4, 5), mpq_class(81, 100)};
    if (h_sign(br.lo) >= 0 || h_sign(br.hi) <= 0)
      throw std::logic_error("threshold bracket failed certification");
    while (br.hi - br.lo > mpq_class(1, 1000000)) {
      mpq_class mid = (br.lo + br.hi) / 2;
      mid.canonicalize();
      (h_sign(mid) < 0 ? br.lo : br.hi) = mid;
    }
    return br;
  }();
  return b;
}

// 2 sqrt(q) < m + y for rational y, by exact squaring.
bool two_sqrt_q_below(const mpz_class& q, long long m, const mpq_class& y) {
  const mpz_class num = y.get_num(), den = y.get_den();
  const mpz_class rhs = mpz_class(static_cast<long>(m)) * den + num;
  if (rhs < 0) return false;
  return 4 * q * den * den < rhs * rhs;
}

void require_odd_n(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("q = 2^n must be nonsquare (n odd, n >= 1)");
}

}  // namespace

long long m_of(int n) {
  if (n < 1 || n > 61) throw std::invalid_argument("m_of: n must be in [1, 61]");
  const mpz_class m = isqrt(mpz_class(1) << (n + 2));
  return m.get_si();
}

bool frac_below_threshold(int n) {
  if (n < 1 || n > 61) throw std::invalid_argument("frac_below_threshold: n must be in [1, 61]");
  const mpz_class q = mpz_class(1) << n;
  const long long m = m_of(n);
  Bracket br = threshold_bracket();
  // eps = 2 sqrt(q) - m never equals the cubic irrationality, so the
  // bisection terminates.
  for (;;) {
    if (two_sqrt_q_below(q, m, br.lo)) return true;
    if (!two_sqrt_q_below(q, m, br.hi)) return false;
    mpq_class mid = (br.lo + br.hi) / 2;
    mid.canonicalize();
    (h_sign(mid) < 0 ? br.lo : br.hi) = mid;
  }
}

WeierstrassOrd find_curve_with_trace(const Field& k, long long target) {
  if (k.order() <= 2) throw std::invalid_argument("find_curve_with_trace: requires q > 2");
  if (target % 2 == 0)
    throw std::invalid_argument("find_curve_with_trace: ordinary traces are odd");
  if (target * target > 4 * static_cast<long long>(k.order()))
    throw std::invalid_argument("find_curve_with_trace: target outside the Hasse interval");
  const int cls = static_cast<int>(((target % 4) + 4) % 4);
  const Fe sgn = cls == 1 ? 0 : k.r0();
  for (std::uint64_t jv = 1; jv < k.order(); ++jv) {
    const WeierstrassOrd e{sgn, k.inv(static_cast<Fe>(jv))};
    if (trace_of(k, e) == target) return e;
  }
  throw std::runtime_error("find_curve_with_trace: no curve with trace " +
                           std::to_string(target) + " over GF(2^" +
                           std::to_string(k.degree()) + ")");
}

const char* to_string(MaxStatus s) {
  switch (s) {
    case MaxStatus::exact_defect0: return "exact-defect-0";
    case MaxStatus::exact_defect3: return "exact-defect-3";
    case MaxStatus::lower_bound_only: return "lower-bound-only";
    case MaxStatus::not_covered: return "not-covered";
    case MaxStatus::known_small_case: return "known-small-case";
    case MaxStatus::minimal: return "minimal";
  }
  return "?";
}

namespace {

MaximalReport base_report(int n) {
  MaximalReport rep;
  rep.n = n;
  rep.q = 1ull << n;
  rep.m = m_of(n);
  rep.m_mod8 = static_cast<int>(rep.m % 8);
  return rep;
}

MaximalReport construct_with_trace(int n, long long target, long long expected_count,
                                   MaxStatus status) {
  MaximalReport rep = base_report(n);
  require_odd_n(n);
  if (n > Field::kMaxDegree)
    throw std::invalid_argument("witness construction capped at n <= 30");
  const Field k(n);
  const WeierstrassOrd e = find_curve_with_trace(k, target);
  // The (E, E, E) cover is the closed-form quartic built from j^(-1/4):
  // the NHypB shape when sgn(E) = r0 (trace = 3 mod 4), NHypA when sgn = 0.
  const bool variant_b = ((target % 4) + 4) % 4 == 3;
  rep.witness = remark_quartic(k, j_invariant(k, e), variant_b);
  rep.count = count_points(k, *rep.witness);
  if (*rep.count != expected_count)
    throw std::logic_error("witness count " + std::to_string(*rep.count) +
                           " does not match the predicted " + std::to_string(expected_count));
  rep.status = status;
  return rep;
}

}  // namespace

MaximalReport construct_defect0(int n) {
  require_odd_n(n);
  MaximalReport rep = base_report(n);
  if (rep.m_mod8 != 1 && rep.m_mod8 != 5 && rep.m_mod8 != 7) {
    rep.status = MaxStatus::not_covered;
    return rep;
  }
  const long long bound = static_cast<long long>(rep.q) + 1 + 3 * rep.m;
  rep = construct_with_trace(n, -rep.m, bound, MaxStatus::exact_defect0);
  rep.nq3_lo = rep.nq3_hi = bound;
  return rep;
}

MaximalReport construct_defect3(int n) {
  require_odd_n(n);
  MaximalReport rep = base_report(n);
  if (rep.m_mod8 != 0 && rep.m_mod8 != 2 && rep.m_mod8 != 6) {
    rep.status = MaxStatus::not_covered;
    return rep;
  }
  const long long bound = static_cast<long long>(rep.q) + 1 + 3 * rep.m;
  rep = construct_with_trace(n, -rep.m + 1, bound - 3, MaxStatus::lower_bound_only);
  rep.nq3_lo = bound - 3;
  rep.nq3_hi = bound;
  return rep;
}

MaximalReport construct_minimal(int n) {
  require_odd_n(n);
  MaximalReport rep = base_report(n);
  if (rep.m_mod8 != 1 && rep.m_mod8 != 3 && rep.m_mod8 != 7) {
    rep.status = MaxStatus::not_covered;
    return rep;
  }
  const long long low = static_cast<long long>(rep.q) + 1 - 3 * rep.m;
  rep = construct_with_trace(n, rep.m, low, MaxStatus::minimal);
  return rep;
}

MaximalReport nq3(int n) {
  require_odd_n(n);
  if (n > 61) throw std::invalid_argument("nq3: n must be at most 61");
  MaximalReport rep = base_report(n);
  if (n == 1) {
    rep.status = MaxStatus::known_small_case;
    rep.nq3_lo = rep.nq3_hi = 7;  // N_2(3) = 7 = q+1+3m-2
    return rep;
  }
  const long long bound = static_cast<long long>(rep.q) + 1 + 3 * rep.m;
  const bool with_witness = n <= 13;
  switch (rep.m_mod8) {
    case 1:
    case 5:
    case 7:
      if (with_witness) rep = construct_defect0(n);
      rep.status = MaxStatus::exact_defect0;
      rep.nq3_lo = rep.nq3_hi = bound;
      return rep;
    case 0:
    case 2:
    case 6: {
      if (with_witness) rep = construct_defect3(n);
      const bool below = frac_below_threshold(n);
      rep.frac_below = below;
      if (below) {
        rep.status = MaxStatus::exact_defect3;
        rep.nq3_lo = rep.nq3_hi = bound - 3;
      } else {
        rep.status = MaxStatus::lower_bound_only;
        rep.nq3_lo = bound - 3;
        rep.nq3_hi = bound;
      }
      return rep;
    }
    default:
      rep.status = MaxStatus::not_covered;
      rep.nq3_hi = bound;  // Serre-Weil
      return rep;
  }
}

std::vector<MSeqEntry> m_sequence(int count) {
  if (count < 1 || count > 200)
    throw std::invalid_argument("m_sequence: count must be in [1, 200]");
  std::vector<MSeqEntry> out;
  out.reserve(count);
  for (int n = 1; n <= count; ++n) {
    const mpz_class pw = mpz_class(1) << (2 * n + 1);
    MSeqEntry e;
    e.n = n;
    e.m = isqrt(pw);
    if (e.m * e.m == pw)
      throw std::logic_error("2^(2n+1) can never be a perfect square");
    // eps_n > 1/2  <=>  2^(2n+3) > (2m+1)^2
    const mpz_class twice = 2 * e.m + 1;
    e.eps_half = (mpz_class(1) << (2 * n + 3)) > twice * twice;
    e.residue4 = static_cast<int>(mpz_class(e.m % 4).get_si());
    if (!out.empty()) {
      const MSeqEntry& prev = out.back();
      if (e.m != 2 * prev.m + (prev.eps_half ? 1 : 0))
        throw std::logic_error("m-sequence recurrence m_{n+1} = 2 m_n + [eps > 1/2] failed");
    }
    out.push_back(std::move(e));
  }
  return out;
}

Genus3Curve remark_quartic(const Field& k, Fe j, bool variant_b) {
  if (j == 0) throw std::invalid_argument("remark_quartic: j must be nonzero");
  const Fe s = k.root4(k.inv(j));
  if (variant_b) return NHypB{s, 1, 1, 0};
  return NHypA{s, s, s, 0};
}

}  // namespace g3
