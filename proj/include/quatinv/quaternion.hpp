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

#ifndef QUATINV_QUATERNION_HPP_
#define QUATINV_QUATERNION_HPP_

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "quatinv/tolerances.hpp"
#include "quatinv/vector3.hpp"

namespace quatinv {

/// Quaternion in Cartesian form w + ix + jy + kz. Immutable value type;
/// constructors reject non-finite components.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Quaternion() = default;

  Quaternion(double w_in, double x_in, double y_in, double z_in)
      : w(w_in), x(x_in), y(y_in), z(z_in) {
    if (!(std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
          std::isfinite(z))) {
      throw std::invalid_argument("Quaternion: components must be finite");
    }
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Embeds a 3-vector as a pure quaternion (zero scalar part). The embedding
/// round-trips exactly with vector_part().
inline Quaternion embed(const Vector3& v) {
  return Quaternion(0.0, v.x, v.y, v.z);
}

inline double scalar_part(const Quaternion& q) { return q.w; }

inline Vector3 vector_part(const Quaternion& q) {
  return Vector3(q.x, q.y, q.z);
}

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z);
}

inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z);
}

inline Quaternion operator-(const Quaternion& q) {
  return Quaternion(-q.w, -q.x, -q.y, -q.z);
}

inline Quaternion operator*(const Quaternion& q, double s) {
  return Quaternion(q.w * s, q.x * s, q.y * s, q.z * s);
}

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Hamilton product, expanded from the basis rules
/// i^2 = j^2 = k^2 = ijk = -1.
inline Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                    p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                    p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                    p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
}

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return mul(p, q);
}

/// Conjugate: negates the vector part, fixes the scalar part.
inline Quaternion conjugate(const Quaternion& q) {
  return Quaternion(q.w, -q.x, -q.y, -q.z);
}

/// Sum of squared components (the square of the modulus).
inline double norm(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double modulus(const Quaternion& q) { return std::sqrt(norm(q)); }

/// Multiplicative inverse, conjugate over norm. Throws std::domain_error for
/// the (numerically) zero quaternion, which has no inverse.
inline Quaternion inverse(const Quaternion& q) {
  const double n = norm(q);
  if (n <= kZeroTolerance) {
    throw std::domain_error("inverse: zero quaternion is not invertible");
  }
  return Quaternion(q.w / n, -q.x / n, -q.y / n, -q.z / n);
}

/// The a + mu*b representation: real scalar part a, vector-part modulus
/// b >= 0 and, when b is nonzero, the unit direction mu of the vector part.
/// The direction is absent exactly when b <= kZeroTolerance; no canonical
/// direction is invented for the degenerate case.
class ScalarVectorForm {
 public:
  ScalarVectorForm(double scalar, double vector_modulus,
                   std::optional<UnitVector3> direction)
      : a_(scalar), b_(vector_modulus), mu_(std::move(direction)) {
    if (!std::isfinite(a_) || !std::isfinite(b_) || b_ < 0.0) {
      throw std::invalid_argument(
          "ScalarVectorForm: scalar must be finite and modulus finite and "
          "nonnegative");
    }
    if ((b_ > kZeroTolerance) != mu_.has_value()) {
      throw std::invalid_argument(
          "ScalarVectorForm: direction must be present exactly when the "
          "vector modulus is nonzero");
    }
  }

  double scalar() const { return a_; }
  double vector_modulus() const { return b_; }
  const std::optional<UnitVector3>& direction() const { return mu_; }

 private:
  double a_;
  double b_;
  std::optional<UnitVector3> mu_;
};

inline ScalarVectorForm to_scalar_vector(const Quaternion& q) {
  const double b = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (b <= kZeroTolerance) {
    return ScalarVectorForm(q.w, b, std::nullopt);
  }
  return ScalarVectorForm(q.w, b,
                          UnitVector3(Vector3(q.x / b, q.y / b, q.z / b)));
}

inline Quaternion from_scalar_vector(const ScalarVectorForm& f) {
  if (!f.direction().has_value()) {
    return Quaternion(f.scalar(), 0.0, 0.0, 0.0);
  }
  const Vector3& d = f.direction()->direction();
  const double b = f.vector_modulus();
  return Quaternion(f.scalar(), d.x * b, d.y * b, d.z * b);
}

/// Quaternion product of two 3-vectors embedded as pure quaternions. The
/// scalar part equals minus the dot product and the vector part equals the
/// cross product; swapping the arguments conjugates the result.
inline Quaternion vector_product_decomposition(const Vector3& u,
                                               const Vector3& v) {
  return mul(embed(u), embed(v));
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace quatinv

#endif  // QUATINV_QUATERNION_HPP_
