#include "g3/quotients.hpp"

#include <stdexcept>

namespace g3 {

namespace {

Fe pow4(const Field& k, Fe a) { return k.sqr(k.sqr(a)); }

void require_valid(const Field& k, const Genus3Curve& c) {
  const auto v = validate(k, c);
  if (v.empty()) return;
  std::string msg = "invalid curve parameters:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw std::invalid_argument(msg);
}

}  // namespace

EllipticTriple quotients_of(const Field& k, const Genus3Curve& c) {
  require_valid(k, c);
  if (auto* h = std::get_if<HypA>(&c)) {
    const Fe at1 = k.mul(h->a, h->t ^ 1);
    const Fe rr = h->r ^ at1;
    return {std::array<WeierstrassOrd, 3>{
        WeierstrassOrd{rr, pow4(k, at1)},
        WeierstrassOrd{rr, pow4(k, k.mul(h->a, h->t))},
        WeierstrassOrd{rr, pow4(k, h->a)},
    }};
  }
  if (auto* h = std::get_if<HypB>(&c)) {
    const auto u = k.solve_as(h->s ^ h->t);
    if (!u)
      throw std::logic_error("quotients_of: no u with u(u+1) = s+t despite valid parameters");
    const Fe b4 = pow4(k, h->b);
    const Fe u4 = pow4(k, *u);
    const Fe u14 = pow4(k, *u ^ 1);
    return {std::array<WeierstrassOrd, 3>{
        WeierstrassOrd{h->r, k.div(b4, k.mul(u4, u14))},
        WeierstrassOrd{static_cast<Fe>(h->r ^ k.r0()), k.div(k.mul(b4, u4), u14)},
        WeierstrassOrd{static_cast<Fe>(h->r ^ k.r0()), k.div(k.mul(b4, u14), u4)},
    }};
  }
  if (auto* s = std::get_if<SSQuartic>(&c)) {
    const auto roots = k.cubic_roots(s->f, s->g);
    return {std::array<SupersingularEC, 3>{
        SupersingularEC{k.div(s->g, roots[0]), s->d, s->e},
        SupersingularEC{k.div(s->g, roots[1]), s->d, s->e},
        SupersingularEC{k.div(s->g, roots[2]), s->d, s->e},
    }};
  }
  if (auto* a = std::get_if<NHypA>(&c)) {
    const Fe ar = a->a ^ a->r;
    const Fe acer = a->a ^ a->c ^ a->e ^ a->r;
    return {std::array<WeierstrassOrd, 3>{
        WeierstrassOrd{a->e, k.sqr(k.mul(ar, acer))},
        WeierstrassOrd{static_cast<Fe>(a->e ^ a->r), k.sqr(k.mul(a->c, acer))},
        WeierstrassOrd{static_cast<Fe>(a->e ^ a->r), k.sqr(k.mul(a->c, ar))},
    }};
  }
  const auto& b = std::get<NHypB>(c);
  const Fe cd2 = k.sqr(k.mul(b.c, b.d));
  const Fe adr = b.a ^ k.mul(b.d, b.r);
  return {std::array<WeierstrassOrd, 3>{
      WeierstrassOrd{cd2, pow4(k, k.mul(b.d, adr))},
      WeierstrassOrd{static_cast<Fe>(cd2 ^ b.r), pow4(k, k.mul(b.c, adr))},
      WeierstrassOrd{static_cast<Fe>(cd2 ^ b.r), pow4(k, k.mul(b.c ^ b.d ^ 1, adr))},
  }};
}

std::array<long long, 3> traces_of(const Field& k, const EllipticTriple& t) {
  std::array<long long, 3> tr{};
  if (t.ordinary()) {
    for (int i = 0; i < 3; ++i) tr[i] = trace_of(k, t.ord()[i]);
  } else {
    for (int i = 0; i < 3; ++i) tr[i] = trace_of(k, t.ss()[i]);
  }
  return tr;
}

IsogenyReport verify_isogeny(const Field& k, const Genus3Curve& c) {
  IsogenyReport rep;
  rep.triple = quotients_of(k, c);
  rep.count = count_points(k, c);
  rep.traces = traces_of(k, rep.triple);
  rep.trace_sum = rep.traces[0] + rep.traces[1] + rep.traces[2];
  rep.expected = static_cast<long long>(k.order()) + 1 - rep.trace_sum;
  rep.ok = rep.count == rep.expected;
  return rep;
}

}  // namespace g3
