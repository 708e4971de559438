#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "g3/elliptic.hpp"
#include "g3/genus3.hpp"

namespace g3 {

/// Invariants of an ordered triple of ordinary elliptic curves, together
/// with the two obstruction elements
///   T_a = (j1+j2+j3)^2 / (j1 j2 j3)
///   T_b = j1 j2 j3^2 / (j1j2 + j1j3 + j2j3)^2   (only when defined).
struct TripleInvariants {
  std::array<Fe, 3> j{};
  std::array<Fe, 3> sgn{};
  Fe sgn_sum{};
  Fe ta{};
  std::optional<Fe> tb;  // nullopt when j1j2 + j1j3 + j2j3 = 0
};

TripleInvariants triple_invariants(const Field& k, const WeierstrassOrd& e1,
                                   const WeierstrassOrd& e2, const WeierstrassOrd& e3);
/// From raw (j, sgn) data; validates j != 0 and sgn in {0, r0}.
TripleInvariants make_triple_invariants(const Field& k, std::array<Fe, 3> j,
                                        std::array<Fe, 3> sgn);

/// 1/j1 + 1/j2 + 1/j3 = 0: the hyperelliptic cover criterion.
bool hyp_cover_condition(const Field& k, const TripleInvariants& t);
/// T_a or T_b lies in sgn_sum + AS(k): the non-hyperelliptic criterion.
/// T_b in sgn_sum + AS(k) requires T_b defined, equivalently s1+s2+s3 != 0
/// for s_i = j_i^(-1/4).
bool nonhyp_cover_condition(const Field& k, const TripleInvariants& t);

/// A genus-3 curve whose elliptic quotients reproduce a requested triple.
/// permutation[i] is the input slot matched by quotient i, so that the i-th
/// quotient has the invariants of input permutation[i].
struct CoverWitness {
  Genus3Curve curve;
  std::array<int, 3> permutation{0, 1, 2};
};

/// Construct a hyperelliptic cover (HypA when all signature classes agree,
/// HypB otherwise), or nullopt when the criterion fails. The witness is
/// round-trip checked against quotients_of before being returned.
std::optional<CoverWitness> exists_hyp_cover(const Field& k, const TripleInvariants& t);

/// Construct a non-hyperelliptic cover: NHypA from the T_a branch, NHypB
/// from the T_b branch (T_a preferred when both apply).
std::optional<CoverWitness> exists_nonhyp_cover(const Field& k, const TripleInvariants& t);

enum class SearchStatus { found, none, exhausted };

struct SsSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<CoverWitness> witness;
  std::uint64_t tried = 0;
};

/// Brute-force search for an SS-family curve whose quotient trace multiset
/// equals `traces`: (f, g) with split cubic in lexicographic order, then
/// (d, e), first match wins. Requires n <= 13. `exhausted` (budget hit) is
/// distinct from `none` (space exhausted without a match).
SsSearchResult exists_ss_cover(const Field& k, std::array<long long, 3> traces,
                               std::uint64_t max_candidates = 200000000);

}  // namespace g3
