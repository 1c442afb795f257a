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

#ifndef QUATINV_VECTOR3_HPP_
#define QUATINV_VECTOR3_HPP_

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "quatinv/tolerances.hpp"

namespace quatinv {

/// Cartesian 3-vector. Immutable value type; constructors reject non-finite
/// components so every downstream invariant stays assertable.
struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vector3() = default;

  Vector3(double x_in, double y_in, double z_in) : x(x_in), y(y_in), z(z_in) {
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z))) {
      throw std::invalid_argument("Vector3: components must be finite");
    }
  }

  friend bool operator==(const Vector3&, const Vector3&) = default;
};

inline Vector3 operator+(const Vector3& a, const Vector3& b) {
  return Vector3(a.x + b.x, a.y + b.y, a.z + b.z);
}

inline Vector3 operator-(const Vector3& a, const Vector3& b) {
  return Vector3(a.x - b.x, a.y - b.y, a.z - b.z);
}

inline Vector3 operator-(const Vector3& v) { return Vector3(-v.x, -v.y, -v.z); }

inline Vector3 operator*(const Vector3& v, double s) {
  return Vector3(v.x * s, v.y * s, v.z * s);
}

inline Vector3 operator*(double s, const Vector3& v) { return v * s; }

inline double dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vector3 cross(const Vector3& a, const Vector3& b) {
  return Vector3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
                 a.x * b.y - a.y * b.x);
}

inline double length_squared(const Vector3& v) { return dot(v, v); }

inline double length(const Vector3& v) { return std::sqrt(length_squared(v)); }

inline std::ostream& operator<<(std::ostream& os, const Vector3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Unit-norm 3-vector. | |v| - 1 | <= kUnitTolerance is enforced on
/// construction; use normalize() to admit a vector of arbitrary nonzero
/// length.
class UnitVector3 {
 public:
  explicit UnitVector3(const Vector3& v) : direction_(v) {
    if (std::abs(length(v) - 1.0) > kUnitTolerance) {
      throw std::invalid_argument("UnitVector3: vector is not unit length");
    }
  }

  static UnitVector3 normalize(const Vector3& v) {
    const double len = length(v);
    if (len <= kZeroTolerance) {
      throw std::domain_error("UnitVector3: cannot normalize a zero vector");
    }
    return UnitVector3(Vector3(v.x / len, v.y / len, v.z / len));
  }

  const Vector3& direction() const { return direction_; }

  friend bool operator==(const UnitVector3&, const UnitVector3&) = default;

 private:
  Vector3 direction_;
};

inline UnitVector3 x_axis() { return UnitVector3(Vector3(1.0, 0.0, 0.0)); }
inline UnitVector3 y_axis() { return UnitVector3(Vector3(0.0, 1.0, 0.0)); }
inline UnitVector3 z_axis() { return UnitVector3(Vector3(0.0, 0.0, 1.0)); }

}  // namespace quatinv

#endif  // QUATINV_VECTOR3_HPP_
