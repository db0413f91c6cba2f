#pragma once

#include <optional>
#include <random>

#include "jchi/stability.hpp"

namespace fx {

// A random rational polarization of total degree d, or nullopt if it is degenerate.
inline std::optional<jchi::Polarization> random_polarization(const jchi::StableGraph& g, std::int64_t degree,
                                                             std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 7);
  jchi::Polarization phi;
  jchi::Rational rest(degree);
  for (int v = 0; v + 1 < g.num_vertices(); ++v) {
    phi.emplace_back(jchi::BigInt(num(rng)), jchi::BigInt(den(rng)));
    rest -= phi.back();
  }
  phi.push_back(rest);
  if (!jchi::is_nondegenerate(g, phi, degree)) return std::nullopt;
  return phi;
}

}  // namespace fx
