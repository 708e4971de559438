#include "g3/serialize.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace g3 {

namespace {

std::map<std::string, std::string, std::less<>> parse_kv(std::string_view body) {
  std::map<std::string, std::string, std::less<>> kv;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    const std::string_view item = body.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument("curve string: expected key=value, got '" +
                                  std::string(item) + "'");
    kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    pos = comma + 1;
  }
  return kv;
}

struct Fields {
  const Field& k;
  std::map<std::string, std::string, std::less<>> kv;
  std::string tag;

  Fe get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("curve string '" + tag + "': missing field '" + key + "'");
    return fe_from_hex(k, it->second);
  }
  void expect_keys(std::initializer_list<const char*> keys) const {
    if (kv.size() != keys.size())
      throw std::invalid_argument("curve string '" + tag + "': wrong number of fields");
    for (const char* key : keys)
      if (kv.find(key) == kv.end())
        throw std::invalid_argument("curve string '" + tag + "': missing field '" +
                                    std::string(key) + "'");
  }
};

std::pair<std::string, Fields> split(const Field& k, std::string_view s) {
  const size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("curve string: expected '<family>:<k=v,...>'");
  std::string tag(s.substr(0, colon));
  return {tag, Fields{k, parse_kv(s.substr(colon + 1)), tag}};
}

}  // namespace

std::string to_hex(Fe v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

Fe fe_from_hex(const Field& k, std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty hex field element");
  std::uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
    v = v * 16 + d;
    if (v >= k.order())
      throw std::invalid_argument("element " + std::string(s) + " is out of range for GF(2^" +
                                  std::to_string(k.degree()) + ")");
  }
  return static_cast<Fe>(v);
}

std::string serialize(const Field&, const WeierstrassOrd& e) {
  return "ord:r=" + to_hex(e.r) + ",a=" + to_hex(e.a);
}

std::string serialize(const Field&, const SupersingularEC& e) {
  return "ss:l=" + to_hex(e.lambda) + ",d=" + to_hex(e.d) + ",e=" + to_hex(e.e);
}

std::string serialize(const Field& k, const EllipticCurve& e) {
  if (auto* o = std::get_if<WeierstrassOrd>(&e)) return serialize(k, *o);
  return serialize(k, std::get<SupersingularEC>(e));
}

std::string serialize(const Field&, const Genus3Curve& c) {
  if (auto* h = std::get_if<HypA>(&c))
    return "hypa:a=" + to_hex(h->a) + ",r=" + to_hex(h->r) + ",t=" + to_hex(h->t);
  if (auto* h = std::get_if<HypB>(&c))
    return "hypb:b=" + to_hex(h->b) + ",r=" + to_hex(h->r) + ",s=" + to_hex(h->s) +
           ",t=" + to_hex(h->t);
  if (auto* s = std::get_if<SSQuartic>(&c))
    return "ss:d=" + to_hex(s->d) + ",e=" + to_hex(s->e) + ",f=" + to_hex(s->f) +
           ",g=" + to_hex(s->g);
  if (auto* a = std::get_if<NHypA>(&c))
    return "nhypa:a=" + to_hex(a->a) + ",c=" + to_hex(a->c) + ",e=" + to_hex(a->e) +
           ",r=" + to_hex(a->r);
  const auto& b = std::get<NHypB>(c);
  return "nhypb:a=" + to_hex(b.a) + ",c=" + to_hex(b.c) + ",d=" + to_hex(b.d) +
         ",r=" + to_hex(b.r);
}

EllipticCurve parse_elliptic(const Field& k, std::string_view s) {
  auto [tag, f] = split(k, s);
  if (tag == "ord") {
    f.expect_keys({"r", "a"});
    return WeierstrassOrd{f.get("r"), f.get("a")};
  }
  if (tag == "ss") {
    f.expect_keys({"l", "d", "e"});
    return SupersingularEC{f.get("l"), f.get("d"), f.get("e")};
  }
  throw std::invalid_argument("unknown elliptic curve family '" + tag +
                              "' (expected ord or ss)");
}

Genus3Curve parse_genus3(const Field& k, std::string_view s) {
  auto [tag, f] = split(k, s);
  if (tag == "hypa") {
    f.expect_keys({"a", "r", "t"});
    return HypA{f.get("a"), f.get("r"), f.get("t")};
  }
  if (tag == "hypb") {
    f.expect_keys({"b", "r", "s", "t"});
    return HypB{f.get("b"), f.get("r"), f.get("s"), f.get("t")};
  }
  if (tag == "ss") {
    f.expect_keys({"d", "e", "f", "g"});
    return SSQuartic{f.get("d"), f.get("e"), f.get("f"), f.get("g")};
  }
  if (tag == "nhypa") {
    f.expect_keys({"a", "c", "e", "r"});
    return NHypA{f.get("a"), f.get("c"), f.get("e"), f.get("r")};
  }
  if (tag == "nhypb") {
    f.expect_keys({"a", "c", "d", "r"});
    return NHypB{f.get("a"), f.get("c"), f.get("d"), f.get("r")};
  }
  throw std::invalid_argument("unknown genus-3 family '" + tag +
                              "' (expected hypa, hypb, ss, nhypa or nhypb)");
}

}  // namespace g3
