#include "g3/covers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "g3/quotients.hpp"

namespace g3 {

namespace {

Fe pow4(const Field& k, Fe a) { return k.sqr(k.sqr(a)); }

// Reorder inputs so that slots 1 and 2 share a signature class (then slot 0
// carries sgn_sum). Identity when all classes agree, otherwise the odd one
// out moves to the front.
std::array<int, 3> reorder_by_signature(const TripleInvariants& t) {
  if (t.sgn[0] == t.sgn[1] && t.sgn[1] == t.sgn[2]) return {0, 1, 2};
  if (t.sgn[1] == t.sgn[2]) return {0, 1, 2};
  if (t.sgn[0] == t.sgn[2]) return {1, 0, 2};
  return {2, 0, 1};
}

// Round-trip the witness through quotients_of and record which input slot
// each quotient reproduces; a failed matching is a library bug. (The slot
// order of HypB quotients depends on which root of u^2+u = s+t the quotient
// code picks, so the permutation is derived from the quotients themselves.)
std::array<int, 3> match_quotients(const Field& k, const Genus3Curve& curve,
                                   const TripleInvariants& t) {
  const auto v = validate(k, curve);
  if (!v.empty()) throw std::logic_error("cover construction produced an invalid curve");
  const EllipticTriple triple = quotients_of(k, curve);
  std::array<int, 3> perm{-1, -1, -1};
  std::array<bool, 3> used{};
  for (int i = 0; i < 3; ++i) {
    const auto& e = triple.ord()[i];
    for (int p = 0; p < 3; ++p) {
      if (used[p]) continue;
      if (j_invariant(k, e) == t.j[p] && signature(k, e) == t.sgn[p]) {
        perm[i] = p;
        used[p] = true;
        break;
      }
    }
    if (perm[i] < 0) throw std::logic_error("cover construction failed the quotient round-trip");
  }
  return perm;
}

}  // namespace

TripleInvariants make_triple_invariants(const Field& k, std::array<Fe, 3> j,
                                        std::array<Fe, 3> sgn) {
  for (int i = 0; i < 3; ++i) {
    if (j[i] == 0) throw std::invalid_argument("triple invariants need ordinary curves (j != 0)");
    if (sgn[i] != 0 && sgn[i] != k.r0())
      throw std::invalid_argument("signatures must lie in {0, r0}");
  }
  TripleInvariants t;
  t.j = j;
  t.sgn = sgn;
  t.sgn_sum = sgn[0] ^ sgn[1] ^ sgn[2];
  const Fe prod = k.mul(j[0], k.mul(j[1], j[2]));
  t.ta = k.div(k.sqr(j[0] ^ j[1] ^ j[2]), prod);
  const Fe denom = k.mul(j[0], j[1]) ^ k.mul(j[0], j[2]) ^ k.mul(j[1], j[2]);
  if (denom != 0) t.tb = k.div(k.mul(k.mul(j[0], j[1]), k.sqr(j[2])), k.sqr(denom));
  return t;
}

TripleInvariants triple_invariants(const Field& k, const WeierstrassOrd& e1,
                                   const WeierstrassOrd& e2, const WeierstrassOrd& e3) {
  return make_triple_invariants(
      k, {j_invariant(k, e1), j_invariant(k, e2), j_invariant(k, e3)},
      {signature(k, e1), signature(k, e2), signature(k, e3)});
}

bool hyp_cover_condition(const Field& k, const TripleInvariants& t) {
  return (k.inv(t.j[0]) ^ k.inv(t.j[1]) ^ k.inv(t.j[2])) == 0;
}

bool nonhyp_cover_condition(const Field& k, const TripleInvariants& t) {
  if (k.trace(t.ta ^ t.sgn_sum) == 0) return true;
  return t.tb && k.trace(*t.tb ^ t.sgn_sum) == 0;
}

std::optional<CoverWitness> exists_hyp_cover(const Field& k, const TripleInvariants& t) {
  if (!hyp_cover_condition(k, t)) return std::nullopt;
  if (k.order() == 2)
    throw std::invalid_argument("hyperelliptic cover construction requires q > 2");

  const auto order = reorder_by_signature(t);
  const Fe j1 = t.j[order[0]], j2 = t.j[order[1]], j3 = t.j[order[2]];
  const Fe sgn1 = t.sgn[order[0]];
  const bool all_equal = t.sgn[0] == t.sgn[1] && t.sgn[1] == t.sgn[2];

  Genus3Curve curve;
  if (all_equal) {
    const Fe a = k.root4(k.inv(j3));
    const Fe tt = k.root4(k.div(j3, j2));
    // r is the AS-class representative of a(t+1) + sgn(E_1) inside {0, r0};
    // the AS part is absorbed by a shift y <- y + w within the family.
    const Fe r = k.trace(k.mul(a, tt ^ 1) ^ sgn1) == 0 ? 0 : k.r0();
    curve = HypA{a, r, tt};
  } else {
    const Fe b = k.root8(k.inv(k.mul(j2, j3)));
    const Fe u = k.root8(k.div(j1, j2));
    const Fe s = k.r0();  // smallest element outside AS(k)
    curve = HypB{b, sgn1, s, static_cast<Fe>(s ^ u ^ k.sqr(u))};
  }
  return CoverWitness{curve, match_quotients(k, curve, t)};
}

std::optional<CoverWitness> exists_nonhyp_cover(const Field& k, const TripleInvariants& t) {
  if (k.order() == 2)
    throw std::invalid_argument("non-hyperelliptic cover construction requires q > 2");
  const bool ta_ok = k.trace(t.ta ^ t.sgn_sum) == 0;
  const bool tb_ok = t.tb && k.trace(*t.tb ^ t.sgn_sum) == 0;
  if (!ta_ok && !tb_ok) return std::nullopt;

  const auto order = reorder_by_signature(t);
  const Fe s1 = k.root4(k.inv(t.j[order[0]]));
  const Fe s2 = k.root4(k.inv(t.j[order[1]]));
  const Fe s3 = k.root4(k.inv(t.j[order[2]]));
  const bool all_equal = t.sgn[0] == t.sgn[1] && t.sgn[1] == t.sgn[2];
  const Fe r = all_equal ? 0 : k.r0();

  Genus3Curve curve;
  if (ta_ok) {
    const Fe a = k.div(k.mul(s1, s3), s2) ^ r;
    const Fe c = k.div(k.mul(s3, s2), s1);
    const Fe e = k.div(k.mul(s1, s2), s3) ^ k.div(k.mul(s2, s3), s1) ^ k.div(k.mul(s1, s3), s2);
    curve = NHypA{a, c, e, r};
  } else {
    // T_b defined forces s1 + s2 + s3 != 0.
    const Fe sigma = s1 ^ s2 ^ s3;
    if (sigma == 0) throw std::logic_error("T_b defined but s1+s2+s3 = 0");
    const Fe d = k.div(s1, sigma);
    const Fe c = k.div(s2, sigma);
    curve = NHypB{static_cast<Fe>(sigma ^ k.mul(d, r)), c, d, r};
  }
  return CoverWitness{curve, match_quotients(k, curve, t)};
}

SsSearchResult exists_ss_cover(const Field& k, std::array<long long, 3> traces,
                               std::uint64_t max_candidates) {
  if (k.degree() > 13)
    throw std::invalid_argument("exists_ss_cover: search budget capped at n <= 13");
  std::array<long long, 3> target = traces;
  std::sort(target.begin(), target.end());

  const std::uint64_t q = k.order();
  // Memoized per-curve traces, keyed by (lambda, d, e): flat for small q.
  const bool flat = k.degree() <= 7;
  std::vector<std::int32_t> memo_flat;
  if (flat) memo_flat.assign(q * q * q, INT32_MIN);
  std::unordered_map<std::uint64_t, long long> memo_map;
  auto trace_memo = [&](Fe lambda, Fe d, Fe e) -> long long {
    const std::uint64_t key = (static_cast<std::uint64_t>(lambda) * q + d) * q + e;
    if (flat) {
      if (memo_flat[key] == INT32_MIN)
        memo_flat[key] = static_cast<std::int32_t>(trace_of(k, SupersingularEC{lambda, d, e}));
      return memo_flat[key];
    }
    auto it = memo_map.find(key);
    if (it == memo_map.end())
      it = memo_map.emplace(key, trace_of(k, SupersingularEC{lambda, d, e})).first;
    return it->second;
  };

  SsSearchResult res;
  for (std::uint64_t fv = 0; fv < q; ++fv)
    for (std::uint64_t gv = 1; gv < q; ++gv) {
      const Fe f = static_cast<Fe>(fv), g = static_cast<Fe>(gv);
      const auto roots = k.cubic_roots(f, g);
      if (roots.size() != 3) continue;
      const std::array<Fe, 3> lam = {k.div(g, roots[0]), k.div(g, roots[1]),
                                     k.div(g, roots[2])};
      for (std::uint64_t dv = 0; dv < q; ++dv)
        for (std::uint64_t ev = 0; ev < q; ++ev) {
          if (++res.tried > max_candidates) {
            res.status = SearchStatus::exhausted;
            return res;
          }
          const Fe d = static_cast<Fe>(dv), e = static_cast<Fe>(ev);
          std::array<long long, 3> got = {trace_memo(lam[0], d, e), trace_memo(lam[1], d, e),
                                          trace_memo(lam[2], d, e)};
          std::array<long long, 3> sorted = got;
          std::sort(sorted.begin(), sorted.end());
          if (sorted != target) continue;

          // Match each quotient slot to an input slot of equal trace.
          std::array<int, 3> perm{-1, -1, -1};
          std::array<bool, 3> used{};
          for (int i = 0; i < 3; ++i)
            for (int p = 0; p < 3; ++p)
              if (!used[p] && traces[p] == got[i]) {
                perm[i] = p;
                used[p] = true;
                break;
              }
          res.status = SearchStatus::found;
          res.witness = CoverWitness{SSQuartic{d, e, f, g}, perm};
          return res;
        }
    }
  res.status = SearchStatus::none;
  return res;
}

}  // namespace g3
