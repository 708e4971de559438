#pragma once

#include <random>
#include <vector>

#include "g3/genus3.hpp"

namespace g3::testing {

inline const char* kFamilies[5] = {"hypa", "hypb", "ss", "nhypa", "nhypb"};

inline std::vector<Genus3Curve> all_valid_curves(const Field& k, int family) {
  return all_valid_tuples(k, kFamilies[family]);
}

inline Genus3Curve random_valid_curve(const Field& k, int family, std::mt19937_64& rng) {
  return random_valid_tuple(k, kFamilies[family], rng);
}

}  // namespace g3::testing
