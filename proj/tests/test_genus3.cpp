#include <algorithm>
#include <random>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "g3/genus3.hpp"
#include "helpers.hpp"

using namespace g3;

namespace {

// Oracle: projective count as (# nonzero solutions in k^3) / (q - 1).
long long triple_scan_count(const Field& k, const Quartic& q) {
  long long nonzero = 0;
  for (Fe x = 0; x < k.order(); ++x)
    for (Fe y = 0; y < k.order(); ++y)
      for (Fe z = 0; z < k.order(); ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (q.eval(k, x, y, z) == 0) ++nonzero;
      }
  CHECK(nonzero % (k.order() - 1) == 0);
  return nonzero / static_cast<long long>(k.order() - 1);
}

std::vector<ProjPoint> quartic_points(const Field& k, const Genus3Curve& c) {
  const Quartic q = quartic_of(k, c);
  std::vector<ProjPoint> pts;
  for (Fe x = 0; x < k.order(); ++x)
    for (Fe y = 0; y < k.order(); ++y)
      if (q.eval(k, x, y, 1) == 0) pts.push_back({x, y, 1});
  for (Fe x = 0; x < k.order(); ++x)
    if (q.eval(k, x, 1, 0) == 0) pts.push_back({x, 1, 0});
  if (q.eval(k, 1, 0, 0) == 0) pts.push_back({1, 0, 0});
  return pts;
}

// Affine chart points of a hyperelliptic model, poles excluded.
template <class Fam>
std::vector<std::pair<Fe, Fe>> hyp_affine_points(const Field& k, const Fam& c) {
  std::vector<std::pair<Fe, Fe>> pts;
  for (Fe x = 0; x < k.order(); ++x) {
    if constexpr (std::is_same_v<Fam, HypA>) {
      if (x == 0 || x == 1 || x == c.t) continue;
    }
    for (Fe y = 0; y < k.order(); ++y)
      if ((k.sqr(y) ^ y) == hyp_rhs(k, c, x)) pts.push_back({x, y});
  }
  return pts;
}

}  // namespace

TEST_CASE("validate names each violated constraint") {
  const Field k(3);
  {
    const auto v = validate(k, HypA{1, 0, 1});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "t != 1");
  }
  {
    const auto v = validate(k, NHypB{1, 1, 0, 0});
    REQUIRE(!v.empty());
    CHECK(v[0] == "cd != 0");
  }
  CHECK(is_valid(k, NHypB{1, 1, 1, 0}));  // c+d = 0 != 1, a+dr = 1 != 0
  {
    const auto v = validate(k, HypB{1, 0, k.r0(), k.r0()});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "s != t");
  }
  {
    const auto v = validate(k, NHypA{1, 1, 0, k.r0()});  // a = r
    CHECK(std::find(v.begin(), v.end(), "a != r") != v.end());
  }
  {
    const Field k4(4);
    const auto v = validate(k4, HypA{1, 3, 2});  // r = 3 is neither 0 nor r0
    CHECK(std::find(v.begin(), v.end(), "r in {0, r0}") != v.end());
  }
  // SS needs a split cubic
  CHECK(!is_valid(k, SSQuartic{0, 0, 0, 1}));  // y^3 + 1 = (y+1)(y^2+y+1)
  CHECK(is_valid(k, SSQuartic{0, 0, 1, 0}) == false);  // g = 0
}

TEST_CASE("quartic counts match the all-triples oracle") {
  for (int n : {2, 3}) {
    const Field k(n);
    for (int family : {2, 3, 4}) {
      const auto curves = g3::testing::all_valid_curves(k, family);
      REQUIRE(!curves.empty());
      for (const auto& c : curves) {
        const long long cnt = count_points(k, c);
        CHECK(cnt == triple_scan_count(k, quartic_of(k, c)));
      }
    }
  }
}

TEST_CASE("hyperelliptic counts: affine y-scan plus the boundary rule") {
  for (int n : {2, 3, 4}) {
    const Field k(n);
    for (const auto& c : g3::testing::all_valid_curves(k, 0)) {
      const auto& h = std::get<HypA>(c);
      const long long affine = static_cast<long long>(hyp_affine_points(k, h).size());
      CHECK(count_points(k, c) == affine + 4);
    }
    for (const auto& c : g3::testing::all_valid_curves(k, 1)) {
      const auto& h = std::get<HypB>(c);
      const long long affine = static_cast<long long>(hyp_affine_points(k, h).size());
      CHECK(count_points(k, c) == affine + (k.trace(h.r) == 0 ? 2 : 0));
    }
  }
}

TEST_CASE("Serre-Weil bound on every valid tuple over GF(4) and GF(8)") {
  for (int n : {2, 3}) {
    const Field k(n);
    const long long q = static_cast<long long>(k.order());
    long long m = 0;
    while ((m + 1) * (m + 1) <= 4 * q) ++m;
    for (int family = 0; family < 5; ++family)
      for (const auto& c : g3::testing::all_valid_curves(k, family)) {
        const long long cnt = count_points(k, c);
        CHECK(std::abs(cnt - (q + 1)) <= 3 * m);
      }
  }
}

TEST_CASE("HypB denominators have no rational roots") {
  const Field k(3);
  for (Fe s = 0; s < 8; ++s) {
    if (k.in_as(s)) continue;
    for (Fe x = 0; x < 8; ++x) CHECK((k.sqr(x) ^ x ^ s) != 0);
  }
}

TEST_CASE("hyperelliptic involutions preserve the model and are involutive") {
  const Field k(3);
  std::mt19937_64 rng(37);
  for (const auto& c : g3::testing::all_valid_curves(k, 0)) {
    const auto& h = std::get<HypA>(c);
    const auto pts = hyp_affine_points(k, h);
    if (pts.empty()) continue;
    for (int which = 1; which <= 3; ++which) {
      std::set<std::pair<Fe, Fe>> image;
      for (const auto& p : pts) {
        const auto q = apply_involution(k, h, which, p);
        CHECK((k.sqr(q.second) ^ q.second) == hyp_rhs(k, h, q.first));  // stays on the curve
        CHECK(apply_involution(k, h, which, q) == p);
        image.insert(q);
      }
      CHECK(image.size() == pts.size());  // bijective on rational points
    }
    for (int i = 0; i < 50; ++i) {
      const auto& p = pts[rng() % pts.size()];
      CHECK(apply_involution(k, h, 1, apply_involution(k, h, 1, p)) == p);
    }
  }
  for (const auto& c : g3::testing::all_valid_curves(k, 1)) {
    const auto& h = std::get<HypB>(c);
    const auto pts = hyp_affine_points(k, h);
    for (int which = 1; which <= 3; ++which)
      for (const auto& p : pts) {
        const auto q = apply_involution(k, h, which, p);
        CHECK((k.sqr(q.second) ^ q.second) == hyp_rhs(k, h, q.first));
        CHECK(apply_involution(k, h, which, q) == p);
      }
  }
}

TEST_CASE("quartic involutions permute the rational points") {
  for (int n : {2, 3}) {
    const Field k(n);
    for (int family : {2, 3, 4}) {
      for (const auto& c : g3::testing::all_valid_curves(k, family)) {
        const auto pts = quartic_points(k, c);
        std::set<std::tuple<Fe, Fe, Fe>> ptset;
        for (const auto& p : pts) ptset.insert({p.x, p.y, p.z});
        for (int which = 1; which <= 3; ++which) {
          std::set<std::tuple<Fe, Fe, Fe>> image;
          for (const auto& p : pts) {
            const ProjPoint q = std::visit(
                [&](const auto& fam) {
                  using T = std::decay_t<decltype(fam)>;
                  if constexpr (std::is_same_v<T, HypA> || std::is_same_v<T, HypB>)
                    return ProjPoint{};
                  else
                    return apply_involution(k, fam, which, p);
                },
                c);
            CHECK(ptset.count({q.x, q.y, q.z}) == 1);
            image.insert({q.x, q.y, q.z});
          }
          CHECK(image.size() == ptset.size());
        }
      }
    }
  }
}

TEST_CASE("involutions permute rational points: 500 random tuples over GF(16), GF(32)") {
  for (int n : {4, 5}) {
    const Field k(n);
    std::mt19937_64 rng(4000 + n);
    for (int family = 0; family < 5; ++family)
      for (int i = 0; i < 500; ++i) {
        const auto c = g3::testing::random_valid_curve(k, family, rng);
        if (family < 2) {
          // model preservation and involutivity on a handful of points
          for (int which = 1; which <= 3; ++which)
            for (int tries = 0; tries < 10; ++tries) {
              const Fe x = static_cast<Fe>(rng() % k.order());
              if (auto* h = std::get_if<HypA>(&c)) {
                if (x == 0 || x == 1 || x == h->t) continue;
                if (k.trace(hyp_rhs(k, *h, x)) != 0) continue;
                const Fe y = *k.solve_as(hyp_rhs(k, *h, x));
                const auto q = apply_involution(k, *h, which, {x, y});
                CHECK((k.sqr(q.second) ^ q.second) == hyp_rhs(k, *h, q.first));
                CHECK(apply_involution(k, *h, which, q) == std::pair<Fe, Fe>{x, y});
              } else {
                const auto& hb = std::get<HypB>(c);
                if (k.trace(hyp_rhs(k, hb, x)) != 0) continue;
                const Fe y = *k.solve_as(hyp_rhs(k, hb, x));
                const auto q = apply_involution(k, hb, which, {x, y});
                CHECK((k.sqr(q.second) ^ q.second) == hyp_rhs(k, hb, q.first));
                CHECK(apply_involution(k, hb, which, q) == std::pair<Fe, Fe>{x, y});
              }
            }
        } else {
          const auto pts = quartic_points(k, c);
          std::set<std::tuple<Fe, Fe, Fe>> ptset;
          for (const auto& p : pts) ptset.insert({p.x, p.y, p.z});
          for (int which = 1; which <= 3; ++which) {
            std::set<std::tuple<Fe, Fe, Fe>> image;
            for (const auto& p : pts) {
              const ProjPoint q = std::visit(
                  [&](const auto& fam) {
                    using T = std::decay_t<decltype(fam)>;
                    if constexpr (std::is_same_v<T, HypA> || std::is_same_v<T, HypB>)
                      return ProjPoint{};
                    else
                      return apply_involution(k, fam, which, p);
                  },
                  c);
              CHECK(ptset.count({q.x, q.y, q.z}) == 1);
              image.insert({q.x, q.y, q.z});
            }
            CHECK(image.size() == ptset.size());
          }
        }
      }
  }
}

TEST_CASE("fixed points match a brute-force scan") {
  for (int n : {2, 3}) {
    const Field k(n);
    for (int family : {2, 3, 4}) {
      for (const auto& c : g3::testing::all_valid_curves(k, family)) {
        const auto pts = quartic_points(k, c);
        const auto rep = fixed_point_report(k, c);
        for (int which = 1; which <= 3; ++which) {
          std::set<std::tuple<Fe, Fe, Fe>> brute;
          for (const auto& p : pts) {
            const ProjPoint q = std::visit(
                [&](const auto& fam) {
                  using T = std::decay_t<decltype(fam)>;
                  if constexpr (std::is_same_v<T, HypA> || std::is_same_v<T, HypB>)
                    return ProjPoint{};
                  else
                    return apply_involution(k, fam, which, p);
                },
                c);
            if (q == p) brute.insert({p.x, p.y, p.z});
          }
          std::set<std::tuple<Fe, Fe, Fe>> reported;
          for (const auto& p : rep.fixed[which - 1].points) {
            const ProjPoint np = normalize(k, p);
            reported.insert({np.x, np.y, np.z});
          }
          CHECK(brute == reported);
        }
      }
    }
  }
}

TEST_CASE("fixed points of the hyperelliptic families") {
  const Field k(3);
  for (const auto& c : g3::testing::all_valid_curves(k, 0)) {
    const auto& h = std::get<HypA>(c);
    const auto rep = fixed_point_report(k, c);
    const Fe xs = k.sqrt(h.t);
    for (int i = 0; i < 3; ++i) {
      const auto& fx = rep.fixed[i];
      // brute-force the fixed affine points
      std::set<std::pair<Fe, Fe>> brute;
      for (const auto& p : hyp_affine_points(k, h))
        if (apply_involution(k, h, i + 1, p) == p) brute.insert(p);
      std::set<std::pair<Fe, Fe>> reported(fx.affine.begin(), fx.affine.end());
      CHECK(brute == reported);
      for (const auto& p : fx.affine) CHECK(p.first == xs);
    }
  }
  for (const auto& c : g3::testing::all_valid_curves(k, 1)) {
    const auto& h = std::get<HypB>(c);
    const auto rep = fixed_point_report(k, c);
    for (int i = 0; i < 3; ++i) {
      CHECK(rep.fixed[i].affine.empty());
      CHECK(rep.fixed[i].at_infinity == (k.trace(h.r) == 0 ? 2 : 0));
      // no affine point is fixed: the x-shifts are fixed-point free on A^1
      for (const auto& p : hyp_affine_points(k, h))
        CHECK(apply_involution(k, h, i + 1, p) != p);
    }
  }
}

TEST_CASE("NHypB shared fixed 2-set satisfies (dx)^2 + dx = cd") {
  const Field k(3);
  for (const auto& c : g3::testing::all_valid_curves(k, 4)) {
    const auto& b = std::get<NHypB>(c);
    const auto rep = fixed_point_report(k, c);
    const Fe cd = k.mul(b.c, b.d);
    for (int i = 0; i < 3; ++i) {
      if (k.trace(cd) != 0) {
        CHECK(rep.fixed[i].points.empty());
        continue;
      }
      REQUIRE(rep.fixed[i].points.size() == 2);
      for (const auto& p : rep.fixed[i].points) {
        CHECK(p.x == p.y);
        CHECK(p.z == 1);
        const Fe u = k.mul(b.d, p.x);
        CHECK((k.sqr(u) ^ u) == cd);
      }
      // literal x^2 + x = cd form when d = 1
      if (b.d == 1)
        for (const auto& p : rep.fixed[i].points) CHECK((k.sqr(p.x) ^ p.x) == cd);
    }
    // all three involutions share the set
    CHECK(rep.fixed[0].points == rep.fixed[1].points);
    CHECK(rep.fixed[1].points == rep.fixed[2].points);
  }
}

TEST_CASE("smoothness spot-check") {
  const Field k8(3);
  // Klein's quartic sits in the NHypA/NHypB overlap with c = a = 1, r = 0
  CHECK(!smoothness_spotcheck(k8, NHypA{1, 1, 1, 0}, 1).has_value());
  CHECK_THROWS_AS(smoothness_spotcheck(k8, NHypA{k8.r0(), 1, 0, k8.r0()}, 1),
                  std::invalid_argument);  // invalid (a = r) is rejected by validate
  CHECK_THROWS_AS(smoothness_spotcheck(k8, HypA{1, 0, 2}, 1), std::invalid_argument);

  const Field k4(2);
  std::mt19937_64 rng(41);
  const auto curves = g3::testing::all_valid_curves(k4, 4);
  for (int i = 0; i < 5; ++i) {
    const auto& c = curves[rng() % curves.size()];
    CHECK(!smoothness_spotcheck(k4, c, 2).has_value());
  }
  // every valid quartic over GF(4) and GF(8) is smooth at rational points
  for (int n : {2, 3}) {
    const Field k(n);
    for (int family : {2, 3, 4})
      for (const auto& c : g3::testing::all_valid_curves(k, family))
        CHECK(!smoothness_spotcheck(k, c, 1).has_value());
  }
}

TEST_CASE("NHypA/NHypB overlap curves count the same both ways") {
  const Field k(3);
  for (Fe r : {Fe{0}, k.r0()})
    for (Fe c = 1; c < 8; ++c)
      for (Fe a = 0; a < 8; ++a) {
        const NHypA via_a{a, c, c, r};  // e = c
        const NHypB via_b{a, c, 1, r};  // d = 1
        if (!is_valid(k, Genus3Curve{via_a}) || !is_valid(k, Genus3Curve{via_b})) {
          // the two validity systems coincide on the overlap
          CHECK(!is_valid(k, Genus3Curve{via_a}));
          CHECK(!is_valid(k, Genus3Curve{via_b}));
          continue;
        }
        CHECK(quartic_of(k, Genus3Curve{via_a}).coeff ==
              quartic_of(k, Genus3Curve{via_b}).coeff);
        CHECK(count_points(k, Genus3Curve{via_a}) == count_points(k, Genus3Curve{via_b}));
      }
}

TEST_CASE("tuple enumeration agrees with the validity predicate") {
  for (int n : {2, 3}) {
    const Field k(n);
    const Fe q = static_cast<Fe>(k.order());
    long long brute[5] = {0, 0, 0, 0, 0};
    for (Fe p1 = 0; p1 < q; ++p1)
      for (Fe p2 = 0; p2 < q; ++p2)
        for (Fe p3 = 0; p3 < q; ++p3) {
          if (is_valid(k, HypA{p1, p2, p3})) ++brute[0];
          for (Fe p4 = 0; p4 < q; ++p4) {
            if (is_valid(k, HypB{p1, p2, p3, p4})) ++brute[1];
            if (is_valid(k, SSQuartic{p1, p2, p3, p4})) ++brute[2];
            if (is_valid(k, NHypA{p1, p2, p3, p4})) ++brute[3];
            if (is_valid(k, NHypB{p1, p2, p3, p4})) ++brute[4];
          }
        }
    for (int family = 0; family < 5; ++family) {
      const auto tuples = g3::testing::all_valid_curves(k, family);
      CHECK(static_cast<long long>(tuples.size()) == brute[family]);
      for (const auto& c : tuples) CHECK(is_valid(k, c));
    }
    if (n == 3) CHECK(g3::testing::all_valid_curves(k, 0).size() == 84);  // 2 * 7 * 6
  }
}

TEST_CASE("count_points rejects invalid parameters") {
  const Field k(3);
  CHECK_THROWS_AS(count_points(k, HypA{0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(count_points(k, SSQuartic{0, 0, 0, 1}), std::invalid_argument);
}
