// Copyright 2026 The Quatinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUATINV_SAMPLING_HPP_
#define QUATINV_SAMPLING_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "quatinv/involution.hpp"
#include "quatinv/quaternion.hpp"
#include "quatinv/vector3.hpp"

namespace quatinv {

/// Deterministic random inputs for law verification. The mapping from engine
/// output to doubles is spelled out bit by bit rather than delegated to
/// std::uniform_real_distribution, so a given seed reproduces the same
/// stream on any standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  Vector3 vector(double lo = -10.0, double hi = 10.0) {
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return Vector3(x, y, z);
  }

  /// Vector guaranteed to be usefully far from zero.
  Vector3 nonzero_vector(double lo = -10.0, double hi = 10.0) {
    for (;;) {
      const Vector3 v = vector(lo, hi);
      if (length(v) > 1e-6) return v;
    }
  }

  Quaternion quaternion(double lo = -10.0, double hi = 10.0) {
    const double w = uniform(lo, hi);
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return Quaternion(w, x, y, z);
  }

  /// Uniform direction, by rejection sampling inside the unit ball.
  UnitVector3 unit_vector() {
    for (;;) {
      const Vector3 v = vector(-1.0, 1.0);
      const double len = length(v);
      if (len > 0.1 && len <= 1.0) return UnitVector3::normalize(v);
    }
  }

  /// Right-handed orthonormal triad with uniformly random orientation:
  /// a random first axis, completed and then spun about it by a random
  /// angle.
  OrthonormalTriad triad() {
    const UnitVector3 nu1 = unit_vector();
    const OrthonormalTriad base = complete_triad(nu1);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const Vector3 spun = std::cos(phi) * base.nu2().direction() +
                         std::sin(phi) * base.nu3().direction();
    const UnitVector3 nu2 = UnitVector3::normalize(spun);
    const UnitVector3 nu3 =
        UnitVector3::normalize(cross(nu1.direction(), nu2.direction()));
    return OrthonormalTriad(nu1, nu2, nu3);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quatinv

#endif  // QUATINV_SAMPLING_HPP_
