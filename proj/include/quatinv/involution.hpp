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

#ifndef QUATINV_INVOLUTION_HPP_
#define QUATINV_INVOLUTION_HPP_

#include <cmath>
#include <stdexcept>

#include "quatinv/quaternion.hpp"
#include "quatinv/tolerances.hpp"
#include "quatinv/vector3.hpp"

namespace quatinv {

/// Unit direction nu defining the self-inverse mapping q -> -nu q nu.
struct InvolutionAxis {
  InvolutionAxis(const UnitVector3& a) : axis(a) {}  // implicit wrap intended

  UnitVector3 axis;
};

/// Three mutually perpendicular unit vectors nu1, nu2, nu3 with
/// nu1 * nu2 = nu3 (right-handed). Construction validates both conditions.
class OrthonormalTriad {
 public:
  OrthonormalTriad(const UnitVector3& nu1, const UnitVector3& nu2,
                   const UnitVector3& nu3)
      : nu1_(nu1), nu2_(nu2), nu3_(nu3) {
    const Vector3& d1 = nu1_.direction();
    const Vector3& d2 = nu2_.direction();
    const Vector3& d3 = nu3_.direction();
    if (std::abs(dot(d1, d2)) > kUnitTolerance ||
        std::abs(dot(d1, d3)) > kUnitTolerance ||
        std::abs(dot(d2, d3)) > kUnitTolerance) {
      throw std::domain_error(
          "OrthonormalTriad: axes must be mutually perpendicular");
    }
    const Quaternion product = mul(embed(d1), embed(d2));
    if (length(vector_part(product) - d3) > kLawTolerance) {
      throw std::domain_error(
          "OrthonormalTriad: nu1 * nu2 must equal nu3 (right-handed)");
    }
  }

  const UnitVector3& nu1() const { return nu1_; }
  const UnitVector3& nu2() const { return nu2_; }
  const UnitVector3& nu3() const { return nu3_; }

 private:
  UnitVector3 nu1_;
  UnitVector3 nu2_;
  UnitVector3 nu3_;
};

/// The involution about nu: returns -nu q nu, evaluated as the direct triple
/// product. Preserves the scalar part and the modulus, and is its own
/// inverse. The reflection closed form 2(v.nu)nu - v is deliberately not
/// used here; it serves as an independent check elsewhere.
inline Quaternion involute(const Quaternion& q, const InvolutionAxis& nu) {
  const Quaternion n = embed(nu.axis.direction());
  return -mul(mul(n, q), n);
}

/// Involutions about the coordinate axes i, j, k. For these axes the sign
/// flips are exact in binary64:
///   alpha: w + ix - jy - kz, beta: w - ix + jy - kz, gamma: w - ix - jy + kz.
inline Quaternion involution_alpha(const Quaternion& q) {
  return involute(q, x_axis());
}

inline Quaternion involution_beta(const Quaternion& q) {
  return involute(q, y_axis());
}

inline Quaternion involution_gamma(const Quaternion& q) {
  return involute(q, z_axis());
}

/// Applies the involution about nu_a first, then the one about nu_b. The
/// scalar part is unchanged; the vector part is rotated about the normal of
/// the plane spanned by the two axes by twice the angle between them.
inline Quaternion compose_involutions(const Quaternion& q,
                                      const InvolutionAxis& nu_a,
                                      const InvolutionAxis& nu_b) {
  return involute(involute(q, nu_a), nu_b);
}

/// Sequential involution about all three triad axes. Algebraically the
/// identity map; exposed so the closure of a perpendicular involution set
/// under composition can be exercised directly.
inline Quaternion involute_about_triad_product(const Quaternion& q,
                                               const OrthonormalTriad& t) {
  return involute(involute(involute(q, t.nu1()), t.nu2()), t.nu3());
}

/// The conjugate expressed through three mutually perpendicular involutions:
/// half the sum of the three axis involutions of q, minus q.
inline Quaternion conjugate_via_involutions(const Quaternion& q,
                                            const OrthonormalTriad& t) {
  return 0.5 * (((involute(q, t.nu1()) + involute(q, t.nu2())) +
                 involute(q, t.nu3())) -
                q);
}

/// Deterministic completion of a single unit vector to a right-handed triad.
/// The second axis is the coordinate direction least aligned with nu1 (ties
/// broken x -> y -> z), orthogonalized against nu1 and normalized; the third
/// is the product of the first two.
inline OrthonormalTriad complete_triad(const UnitVector3& nu1) {
  const Vector3& d = nu1.direction();
  Vector3 seed(1.0, 0.0, 0.0);
  double smallest = std::abs(d.x);
  if (std::abs(d.y) < smallest) {
    seed = Vector3(0.0, 1.0, 0.0);
    smallest = std::abs(d.y);
  }
  if (std::abs(d.z) < smallest) {
    seed = Vector3(0.0, 0.0, 1.0);
  }
  const UnitVector3 nu2 = UnitVector3::normalize(seed - dot(seed, d) * d);
  const UnitVector3 nu3 = UnitVector3::normalize(cross(d, nu2.direction()));
  return OrthonormalTriad(nu1, nu2, nu3);
}

/// Reflection of v across the line spanned by the axis: the vector part of
/// the involution applied to the embedded vector. Length preserving.
inline Vector3 reflect_vector(const Vector3& v, const InvolutionAxis& nu) {
  return vector_part(involute(embed(v), nu));
}

}  // namespace quatinv

#endif  // QUATINV_INVOLUTION_HPP_
