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

#ifndef QUATINV_PROJECTION_HPP_
#define QUATINV_PROJECTION_HPP_

#include <utility>

#include "quatinv/involution.hpp"
#include "quatinv/quaternion.hpp"
#include "quatinv/vector3.hpp"

namespace quatinv {

/// Resolution of a vector into the component along an axis and the component
/// across it. parallel + perpendicular reconstructs the input.
struct ParallelPerpSplit {
  Vector3 parallel;
  Vector3 perpendicular;
};

/// Quaternion split against an axis. The parallel part carries the scalar
/// part plus the vector component along the axis; the perpendicular part is
/// a pure vector (the subtraction cancels the scalar part, so the type says
/// so).
struct QuaternionSplit {
  Quaternion parallel;
  Vector3 perpendicular;
};

/// Coefficients of q over the basis {1, nu1, nu2, nu3}:
/// q = a + nu1*alpha + nu2*beta + nu3*gamma.
struct BasisDecomposition {
  double a;
  double alpha;
  double beta;
  double gamma;
  OrthonormalTriad triad;
};

/// Half-sum / half-difference of v with its involution about nu.
inline ParallelPerpSplit split(const Vector3& v, const InvolutionAxis& nu) {
  const Vector3 reflected = reflect_vector(v, nu);
  return ParallelPerpSplit{0.5 * (v + reflected), 0.5 * (v - reflected)};
}

inline QuaternionSplit split_quaternion(const Quaternion& q,
                                        const InvolutionAxis& nu) {
  const Quaternion involuted = involute(q, nu);
  return QuaternionSplit{0.5 * (q + involuted),
                         vector_part(0.5 * (q - involuted))};
}

/// Scalar and vector parts via the conjugate: a = (q + conj q)/2,
/// b = (q - conj q)/2. Agrees exactly with reading the fields.
inline std::pair<double, Vector3> scalar_and_vector_parts(
    const Quaternion& q) {
  const Quaternion c = conjugate(q);
  return {scalar_part(0.5 * (q + c)), vector_part(0.5 * (q - c))};
}

/// Resolves q over a triad: the vector part is produced by the conjugate
/// formula, each basis component by the involution projection, and the
/// coefficients are the signed magnitudes along the axes (possibly
/// negative, which keeps the decomposition linear).
inline BasisDecomposition decompose(const Quaternion& q,
                                    const OrthonormalTriad& t) {
  const auto [a, b] = scalar_and_vector_parts(q);
  const Vector3 b1 = split(b, t.nu1()).parallel;
  const Vector3 b2 = split(b, t.nu2()).parallel;
  const Vector3 b3 = split(b, t.nu3()).parallel;
  return BasisDecomposition{a, dot(b1, t.nu1().direction()),
                            dot(b2, t.nu2().direction()),
                            dot(b3, t.nu3().direction()), t};
}

inline Quaternion reconstruct(const BasisDecomposition& d) {
  const Vector3 v = d.alpha * d.triad.nu1().direction() +
                    d.beta * d.triad.nu2().direction() +
                    d.gamma * d.triad.nu3().direction();
  return Quaternion(d.a, v.x, v.y, v.z);
}

}  // namespace quatinv

#endif  // QUATINV_PROJECTION_HPP_
