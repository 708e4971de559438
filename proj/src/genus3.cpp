#include "g3/genus3.hpp"

#include <stdexcept>

namespace g3 {

namespace {

// Quadratic form over the coordinate monomials of degree 2.
struct QuadForm {
  Fe x2{}, y2{}, z2{}, xy{}, xz{}, yz{};
};

// coeff grid c[i][j] for x^i y^j z^(2-i-j)
std::array<std::array<Fe, 3>, 3> grid(const QuadForm& q) {
  std::array<std::array<Fe, 3>, 3> c{};
  c[2][0] = q.x2;
  c[0][2] = q.y2;
  c[0][0] = q.z2;
  c[1][1] = q.xy;
  c[1][0] = q.xz;
  c[0][1] = q.yz;
  return c;
}

Quartic square(const Field& k, const QuadForm& q) {
  Quartic out;
  const auto c = grid(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j + i < 3; ++j) out.coeff[2 * i][2 * j] ^= k.sqr(c[i][j]);
  return out;
}

Quartic product(const Field& k, const QuadForm& a, const QuadForm& b) {
  Quartic out;
  const auto ca = grid(a), cb = grid(b);
  for (int i1 = 0; i1 < 3; ++i1)
    for (int j1 = 0; j1 + i1 < 3; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 + i2 < 3; ++j2)
          out.coeff[i1 + i2][j1 + j2] ^= k.mul(ca[i1][j1], cb[i2][j2]);
  return out;
}

Quartic add(const Quartic& a, const Quartic& b) {
  Quartic out;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out.coeff[i][j] = a.coeff[i][j] ^ b.coeff[i][j];
  return out;
}

// Right-hand side (r(x^2+y^2) + xy) * z(x+y+z), shared by NHypA and NHypB.
Quartic nhyp_rhs_quartic(const Field& k, Fe r) {
  const QuadForm h1{r, r, 0, 1, 0, 0};
  const QuadForm h2{0, 0, 1, 0, 1, 1};
  return product(k, h1, h2);
}

void require_valid(const Field& k, const Genus3Curve& c) {
  const auto v = validate(k, c);
  if (v.empty()) return;
  std::string msg = "invalid curve parameters:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw std::invalid_argument(msg);
}

template <class Ops>
typename Ops::E eval_impl(const Ops& o, const Quartic& q, typename Ops::E x, typename Ops::E y,
                          typename Ops::E z) {
  using E = typename Ops::E;
  std::array<E, 5> xp, yp, zp;
  xp[0] = yp[0] = zp[0] = o.embed(1);
  for (int i = 1; i < 5; ++i) {
    xp[i] = o.mul(xp[i - 1], x);
    yp[i] = o.mul(yp[i - 1], y);
    zp[i] = o.mul(zp[i - 1], z);
  }
  E acc = o.embed(0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j + i < 5; ++j) {
      if (!q.coeff[i][j]) continue;
      acc = o.add(acc, o.mul(o.embed(q.coeff[i][j]), o.mul(xp[i], o.mul(yp[j], zp[4 - i - j]))));
    }
  return acc;
}

template <class Ops>
typename Ops::E partial_impl(const Ops& o, const Quartic& q, int axis, typename Ops::E x,
                             typename Ops::E y, typename Ops::E z) {
  using E = typename Ops::E;
  std::array<E, 5> xp, yp, zp;
  xp[0] = yp[0] = zp[0] = o.embed(1);
  for (int i = 1; i < 5; ++i) {
    xp[i] = o.mul(xp[i - 1], x);
    yp[i] = o.mul(yp[i - 1], y);
    zp[i] = o.mul(zp[i - 1], z);
  }
  E acc = o.embed(0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j + i < 5; ++j) {
      if (!q.coeff[i][j]) continue;
      int e[3] = {i, j, 4 - i - j};
      if (e[axis] % 2 == 0) continue;  // d/dv of v^(2m) vanishes in char 2
      --e[axis];
      acc = o.add(acc,
                  o.mul(o.embed(q.coeff[i][j]), o.mul(xp[e[0]], o.mul(yp[e[1]], zp[e[2]]))));
    }
  return acc;
}

struct BaseOps {
  const Field& k;
  using E = Fe;
  E embed(Fe a) const { return a; }
  E add(E a, E b) const { return a ^ b; }
  E mul(E a, E b) const { return k.mul(a, b); }
};

struct Ext2Ops {
  const Ext2& x;
  using E = Fe2;
  E embed(Fe a) const { return x.embed(a); }
  E add(E a, E b) const { return x.add(a, b); }
  E mul(E a, E b) const { return x.mul(a, b); }
};

}  // namespace

const char* family_tag(const Genus3Curve& c) {
  switch (c.index()) {
    case 0: return "hypa";
    case 1: return "hypb";
    case 2: return "ss";
    case 3: return "nhypa";
    default: return "nhypb";
  }
}

bool is_hyperelliptic_family(const Genus3Curve& c) { return c.index() < 2; }

int family_index(std::string_view tag) {
  if (tag == "hypa") return 0;
  if (tag == "hypb") return 1;
  if (tag == "ss") return 2;
  if (tag == "nhypa") return 3;
  if (tag == "nhypb") return 4;
  return -1;
}

void for_each_valid_tuple(const Field& k, std::string_view family,
                          const std::function<void(const Genus3Curve&)>& fn) {
  const int idx = family_index(family);
  if (idx < 0) throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  const Fe q = static_cast<Fe>(k.order());
  const std::array<Fe, 2> rs{0, k.r0()};
  switch (idx) {
    case 0:
      for (Fe r : rs)
        for (Fe a = 1; a < q; ++a)
          for (Fe t = 2; t < q; ++t) fn(HypA{a, r, t});
      break;
    case 1:
      for (Fe r : rs)
        for (Fe b = 1; b < q; ++b)
          for (Fe s = 0; s < q; ++s) {
            if (k.in_as(s)) continue;
            for (Fe t = 0; t < q; ++t)
              if (!k.in_as(t) && s != t) fn(HypB{b, r, s, t});
          }
      break;
    case 2:
      for (Fe f = 0; f < q; ++f)
        for (Fe g = 1; g < q; ++g)
          if (k.cubic_roots(f, g).size() == 3)
            for (Fe d = 0; d < q; ++d)
              for (Fe e = 0; e < q; ++e) fn(SSQuartic{d, e, f, g});
      break;
    case 3:
      for (Fe r : rs)
        for (Fe c = 1; c < q; ++c)
          for (Fe a = 0; a < q; ++a) {
            if (a == r) continue;
            for (Fe e = 0; e < q; ++e)
              if ((r ^ a ^ e ^ c) != 0) fn(NHypA{a, c, e, r});
          }
      break;
    default:
      for (Fe r : rs)
        for (Fe c = 1; c < q; ++c)
          for (Fe d = 1; d < q; ++d) {
            if ((c ^ d) == 1) continue;
            for (Fe a = 0; a < q; ++a)
              if ((a ^ k.mul(d, r)) != 0) fn(NHypB{a, c, d, r});
          }
      break;
  }
}

std::vector<Genus3Curve> all_valid_tuples(const Field& k, std::string_view family) {
  std::vector<Genus3Curve> out;
  for_each_valid_tuple(k, family, [&](const Genus3Curve& c) { out.push_back(c); });
  return out;
}

Genus3Curve random_valid_tuple(const Field& k, std::string_view family, std::mt19937_64& rng) {
  const int idx = family_index(family);
  if (idx < 0) throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  const auto pick = [&] { return static_cast<Fe>(rng() % k.order()); };
  const auto pick_r = [&] { return (rng() & 1) ? k.r0() : Fe{0}; };
  for (;;) {
    Genus3Curve c;
    switch (idx) {
      case 0: c = HypA{pick(), pick_r(), pick()}; break;
      case 1: c = HypB{pick(), pick_r(), pick(), pick()}; break;
      case 2: c = SSQuartic{pick(), pick(), pick(), pick()}; break;
      case 3: c = NHypA{pick(), pick(), pick(), pick_r()}; break;
      default: c = NHypB{pick(), pick(), pick(), pick_r()}; break;
    }
    if (is_valid(k, c)) return c;
  }
}

double estimated_tuple_count(const Field& k, std::string_view family) {
  const double q = static_cast<double>(k.order());
  switch (family_index(family)) {
    case 0: return 2 * (q - 1) * (q - 2);
    case 1: return 2 * (q - 1) * (q / 2) * (q / 2 - 1);
    case 2: return q * q / 6 * q * q;  // ~q^2/6 split cubics, q^2 tuples each
    case 3: return 2 * (q - 1) * (q - 1) * (q - 1);
    case 4: return 2 * (q - 1) * (q - 1) * (q - 1);
    default: throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  }
}

std::vector<std::string> validate(const Field& k, const Genus3Curve& c) {
  std::vector<std::string> v;
  auto check_r = [&](Fe r) {
    if (r != 0 && r != k.r0()) v.push_back("r in {0, r0}");
  };
  if (auto* h = std::get_if<HypA>(&c)) {
    if (h->a == 0) v.push_back("a != 0");
    if (h->t == 0) v.push_back("t != 0");
    if (h->t == 1) v.push_back("t != 1");
    check_r(h->r);
  } else if (auto* h = std::get_if<HypB>(&c)) {
    if (h->b == 0) v.push_back("b != 0");
    if (k.in_as(h->s)) v.push_back("s not in AS(k)");
    if (k.in_as(h->t)) v.push_back("t not in AS(k)");
    if (h->s == h->t) v.push_back("s != t");
    check_r(h->r);
  } else if (auto* s = std::get_if<SSQuartic>(&c)) {
    if (s->g == 0) v.push_back("g != 0");
    if (k.cubic_roots(s->f, s->g).size() != 3)
      v.push_back("y^3 + f*y + g has three roots in k");
  } else if (auto* a = std::get_if<NHypA>(&c)) {
    if (a->c == 0) v.push_back("c != 0");
    if (a->a == a->r) v.push_back("a != r");
    if ((a->r ^ a->a ^ a->e ^ a->c) == 0) v.push_back("r+a+e+c != 0");
    check_r(a->r);
  } else if (auto* b = std::get_if<NHypB>(&c)) {
    if (b->c == 0 || b->d == 0) v.push_back("cd != 0");
    if ((b->c ^ b->d) == 1) v.push_back("c+d != 1");
    if ((b->a ^ k.mul(b->d, b->r)) == 0) v.push_back("a+dr != 0");
    check_r(b->r);
  }
  return v;
}

bool is_valid(const Field& k, const Genus3Curve& c) { return validate(k, c).empty(); }

ProjPoint normalize(const Field& k, ProjPoint p) {
  if (p.z != 0) {
    const Fe s = k.inv(p.z);
    return {k.mul(p.x, s), k.mul(p.y, s), 1};
  }
  if (p.y != 0) {
    const Fe s = k.inv(p.y);
    return {k.mul(p.x, s), 1, 0};
  }
  if (p.x != 0) return {1, 0, 0};
  throw std::invalid_argument("normalize: (0:0:0) is not a projective point");
}

Fe Quartic::eval(const Field& k, Fe x, Fe y, Fe z) const {
  return eval_impl(BaseOps{k}, *this, x, y, z);
}

Fe Quartic::partial(const Field& k, int axis, Fe x, Fe y, Fe z) const {
  return partial_impl(BaseOps{k}, *this, axis, x, y, z);
}

Quartic quartic_of(const Field& k, const Genus3Curve& c) {
  if (auto* s = std::get_if<SSQuartic>(&c)) {
    // y^4 + f y^2 z^2 + g y z^3 = x^3 z + d x^2 z^2 + e z^4: the affine model
    // y^4 + f y^2 + g y = x^3 + d x^2 + e whose kernel translations are the
    // three involutions. (The e-term rides on z^4; an x^4 placement would
    // contradict the quotient curves, see the counting identity tests.)
    Quartic q;
    q.coeff[0][4] = 1;
    q.coeff[0][2] ^= s->f;
    q.coeff[0][1] ^= s->g;
    q.coeff[3][0] ^= 1;
    q.coeff[2][0] ^= s->d;
    q.coeff[0][0] ^= s->e;
    return q;
  }
  if (auto* a = std::get_if<NHypA>(&c)) {
    const QuadForm g{a->a, a->a, a->c, 1, a->e, a->e};
    return add(square(k, g), nhyp_rhs_quartic(k, a->r));
  }
  if (auto* b = std::get_if<NHypB>(&c)) {
    const QuadForm g{b->a, b->a, b->c, b->d, b->c, b->c};
    return add(square(k, g), nhyp_rhs_quartic(k, b->r));
  }
  throw std::invalid_argument("quartic_of: hyperelliptic family has no plane quartic model");
}

Fe hyp_rhs(const Field& k, const HypA& c, Fe x) {
  if (x == 0 || x == 1 || x == c.t)
    throw std::invalid_argument("hyp_rhs: x is a pole of the HypA right-hand side");
  const Fe at1 = k.mul(c.a, c.t ^ 1);
  Fe v = k.mul(c.a, x ^ k.mul(c.t, k.inv(x)));
  v ^= k.mul(at1, k.inv(x ^ 1) ^ k.mul(c.t, k.inv(x ^ c.t)));
  return v ^ c.r;
}

Fe hyp_rhs(const Field& k, const HypB& c, Fe x) {
  const Fe x2x = k.sqr(x) ^ x;
  return k.mul(c.b, k.inv(x2x ^ c.s) ^ k.inv(x2x ^ c.t)) ^ c.r;
}

namespace {

long long count_quartic(const Field& k, const Quartic& q) {
  long long cnt = 0;
  const std::uint64_t qsize = k.order();
  // chart z = 1: for fixed x collapse to a univariate quartic in y
  for (std::uint64_t xv = 0; xv < qsize; ++xv) {
    const Fe x = static_cast<Fe>(xv);
    Fe xp = 1;
    std::array<Fe, 5> py{};
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j + i < 5; ++j) py[j] ^= k.mul(q.coeff[i][j], xp);
      if (i < 4) xp = k.mul(xp, x);
    }
    for (std::uint64_t yv = 0; yv < qsize; ++yv) {
      const Fe y = static_cast<Fe>(yv);
      Fe acc = py[4];
      acc = k.mul(acc, y) ^ py[3];
      acc = k.mul(acc, y) ^ py[2];
      acc = k.mul(acc, y) ^ py[1];
      acc = k.mul(acc, y) ^ py[0];
      if (acc == 0) ++cnt;
    }
  }
  // chart z = 0, y = 1: monomials with j = 4 - i
  for (std::uint64_t xv = 0; xv < qsize; ++xv) {
    const Fe x = static_cast<Fe>(xv);
    Fe acc = 0, xp = 1;
    for (int i = 0; i < 5; ++i) {
      acc ^= k.mul(q.coeff[i][4 - i], xp);
      if (i < 4) xp = k.mul(xp, x);
    }
    if (acc == 0) ++cnt;
  }
  if (q.coeff[4][0] == 0) ++cnt;  // (1 : 0 : 0)
  return cnt;
}

}  // namespace

long long count_points(const Field& k, const Genus3Curve& c) {
  require_valid(k, c);
  if (auto* h = std::get_if<HypA>(&c)) {
    long long cnt = 4;  // one ramified point over each of x = 0, 1, t, infinity
    for (std::uint64_t xv = 0; xv < k.order(); ++xv) {
      const Fe x = static_cast<Fe>(xv);
      if (x == 0 || x == 1 || x == h->t) continue;
      if (k.trace(hyp_rhs(k, *h, x)) == 0) cnt += 2;
    }
    return cnt;
  }
  if (auto* h = std::get_if<HypB>(&c)) {
    long long cnt = k.trace(h->r) == 0 ? 2 : 0;  // the two points over x = infinity
    for (std::uint64_t xv = 0; xv < k.order(); ++xv)
      if (k.trace(hyp_rhs(k, *h, static_cast<Fe>(xv))) == 0) cnt += 2;
    return cnt;
  }
  return count_quartic(k, quartic_of(k, c));
}

std::pair<Fe, Fe> apply_involution(const Field& k, const HypA& c, int which,
                                   std::pair<Fe, Fe> p) {
  const auto [x, y] = p;
  if (x == 0 || x == 1 || x == c.t)
    throw std::invalid_argument("involution undefined at a pole of the model");
  switch (which) {
    case 1: return {k.div(c.t, x), y};
    case 2: return {k.div(x ^ c.t, x ^ 1), y};
    case 3: return {k.div(k.mul(c.t, x ^ 1), x ^ c.t), y};
    default: throw std::invalid_argument("involution index must be 1, 2 or 3");
  }
}

std::pair<Fe, Fe> apply_involution(const Field& k, const HypB& c, int which,
                                   std::pair<Fe, Fe> p) {
  const Fe u = *k.solve_as(c.s ^ c.t);  // exists: tr(s+t) = 1+1 = 0
  const auto [x, y] = p;
  switch (which) {
    case 1: return {x ^ 1, y};
    case 2: return {x ^ u, y};
    case 3: return {x ^ u ^ 1, y};
    default: throw std::invalid_argument("involution index must be 1, 2 or 3");
  }
}

ProjPoint apply_involution(const Field& k, const SSQuartic& c, int which, ProjPoint p) {
  if (which < 1 || which > 3) throw std::invalid_argument("involution index must be 1, 2 or 3");
  const auto roots = k.cubic_roots(c.f, c.g);
  if (roots.size() != 3) throw std::invalid_argument("SS involutions need a split cubic");
  return normalize(k, {p.x, p.y ^ k.mul(roots[which - 1], p.z), p.z});
}

ProjPoint apply_involution(const Field& k, const NHypA&, int which, ProjPoint p) {
  switch (which) {
    case 1: return normalize(k, {p.y, p.x, p.z});
    case 2: return normalize(k, {p.x ^ p.z, p.y ^ p.z, p.z});
    case 3: return normalize(k, {p.y ^ p.z, p.x ^ p.z, p.z});
    default: throw std::invalid_argument("involution index must be 1, 2 or 3");
  }
}

ProjPoint apply_involution(const Field& k, const NHypB&, int which, ProjPoint p) {
  switch (which) {
    case 1: return normalize(k, {p.y, p.x, p.z});
    case 2: return normalize(k, {p.x, p.y, p.x ^ p.y ^ p.z});
    case 3: return normalize(k, {p.y, p.x, p.x ^ p.y ^ p.z});
    default: throw std::invalid_argument("involution index must be 1, 2 or 3");
  }
}

InvolutionReport fixed_point_report(const Field& k, const Genus3Curve& c) {
  require_valid(k, c);
  InvolutionReport rep;
  if (auto* h = std::get_if<HypA>(&c)) {
    // All three involutions fix x = sqrt(t); there y^2 + y = a(t+1) + r.
    const Fe xs = k.sqrt(h->t);
    const Fe c0 = hyp_rhs(k, *h, xs);
    for (auto& f : rep.fixed) {
      f.description = "x = sqrt(t)";
      if (auto y0 = k.solve_as(c0)) {
        f.affine.push_back({xs, *y0});
        f.affine.push_back({xs, *y0 ^ 1});
      }
    }
  } else if (auto* h = std::get_if<HypB>(&c)) {
    const int at_inf = k.trace(h->r) == 0 ? 2 : 0;
    for (auto& f : rep.fixed) {
      f.description = "the two points over x = infinity";
      f.at_infinity = at_inf;
    }
  } else if (std::get_if<SSQuartic>(&c)) {
    // z = 0 cuts the curve in y^4 = 0: the single point (1:0:0), fixed by
    // all three translations.
    for (auto& f : rep.fixed) {
      f.description = "the point at z = 0";
      f.points.push_back({1, 0, 0});
    }
  } else if (auto* a = std::get_if<NHypA>(&c)) {
    rep.fixed[0].description = "diagonal points with x^2 + x = c";
    if (auto u = k.solve_as(a->c)) {
      rep.fixed[0].points.push_back({*u, *u, 1});
      rep.fixed[0].points.push_back({*u ^ 1, *u ^ 1, 1});
    }
    rep.fixed[1].description = "points at z = 0";
    if (a->a == 0) {
      rep.fixed[1].points.push_back({1, 0, 0});
      rep.fixed[1].points.push_back({0, 1, 0});
    } else if (auto w = k.solve_as(k.sqr(a->a))) {
      rep.fixed[1].points.push_back({k.div(*w, a->a), 1, 0});
      rep.fixed[1].points.push_back({k.div(*w ^ 1, a->a), 1, 0});
    }
    rep.fixed[2].description = "points on x+y+z = 0 with x^2 + x = a+c+e";
    if (auto u = k.solve_as(a->a ^ a->c ^ a->e)) {
      rep.fixed[2].points.push_back({*u, *u ^ 1, 1});
      rep.fixed[2].points.push_back({*u ^ 1, *u, 1});
    }
  } else if (auto* b = std::get_if<NHypB>(&c)) {
    // Shared 2-set: diagonal points (x, x, 1) with (dx)^2 + dx = cd.
    std::vector<ProjPoint> pts;
    if (auto u = k.solve_as(k.mul(b->c, b->d))) {
      pts.push_back({k.div(*u, b->d), k.div(*u, b->d), 1});
      pts.push_back({k.div(*u ^ 1, b->d), k.div(*u ^ 1, b->d), 1});
    }
    for (auto& f : rep.fixed) {
      f.description = "diagonal points with (dx)^2 + dx = cd";
      f.points = pts;
    }
  }
  return rep;
}

Fe2 Ext2::mul(Fe2 a, Fe2 b) const {
  // w^2 = w + r0
  const Fe hh = k_.mul(a.hi, b.hi);
  return {k_.mul(a.lo, b.lo) ^ k_.mul(hh, k_.r0()),
          k_.mul(a.lo, b.hi) ^ k_.mul(a.hi, b.lo) ^ hh};
}

std::optional<std::array<Fe2, 3>> smoothness_spotcheck(const Field& k, const Genus3Curve& c,
                                                       int degree) {
  require_valid(k, c);
  if (is_hyperelliptic_family(c))
    throw std::invalid_argument("smoothness_spotcheck: quartic families only");
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("smoothness_spotcheck: degree must be 1 or 2");
  if (2 * degree * k.degree() > 26)
    throw std::invalid_argument("smoothness_spotcheck: q^(2*degree) budget exceeded");

  const Quartic q = quartic_of(k, c);
  const Ext2 ext(k);
  const Ext2Ops ops{ext};
  const std::uint64_t npts = degree == 1 ? k.order() : k.order() * k.order();
  auto elem = [&](std::uint64_t i) -> Fe2 {
    if (degree == 1) return {static_cast<Fe>(i), 0};
    return {static_cast<Fe>(i % k.order()), static_cast<Fe>(i / k.order())};
  };
  auto singular_at = [&](Fe2 x, Fe2 y, Fe2 z) {
    if (eval_impl(ops, q, x, y, z) != Fe2{}) return false;
    for (int axis = 0; axis < 3; ++axis)
      if (partial_impl(ops, q, axis, x, y, z) != Fe2{}) return false;
    return true;
  };
  const Fe2 zero{}, one{1, 0};
  for (std::uint64_t xv = 0; xv < npts; ++xv)
    for (std::uint64_t yv = 0; yv < npts; ++yv)
      if (singular_at(elem(xv), elem(yv), one))
        return std::array<Fe2, 3>{elem(xv), elem(yv), one};
  for (std::uint64_t xv = 0; xv < npts; ++xv)
    if (singular_at(elem(xv), one, zero)) return std::array<Fe2, 3>{elem(xv), one, zero};
  if (singular_at(one, zero, zero)) return std::array<Fe2, 3>{one, zero, zero};
  return std::nullopt;
}

}  // namespace g3
