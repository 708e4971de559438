#pragma once

#include <string>
#include <string_view>

#include "g3/elliptic.hpp"
#include "g3/genus3.hpp"

namespace g3 {

/// Lowercase hex of the coefficient bitmask (bit i <-> x^i), no prefix.
std::string to_hex(Fe v);
/// Parse a hex bitmask and range-check it against the field order.
Fe fe_from_hex(const Field& k, std::string_view s);

// Curve string forms:
//   ord:r=<hex>,a=<hex>        ss:l=<hex>,d=<hex>,e=<hex>      (elliptic)
//   hypa:a=,r=,t=   hypb:b=,r=,s=,t=   ss:d=,e=,f=,g=
//   nhypa:a=,c=,e=,r=   nhypb:a=,c=,d=,r=                      (genus 3)
std::string serialize(const Field& k, const WeierstrassOrd& e);
std::string serialize(const Field& k, const SupersingularEC& e);
std::string serialize(const Field& k, const EllipticCurve& e);
std::string serialize(const Field& k, const Genus3Curve& c);

EllipticCurve parse_elliptic(const Field& k, std::string_view s);
Genus3Curve parse_genus3(const Field& k, std::string_view s);

}  // namespace g3
