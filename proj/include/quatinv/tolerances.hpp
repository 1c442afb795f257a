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

#ifndef QUATINV_TOLERANCES_HPP_
#define QUATINV_TOLERANCES_HPP_

namespace quatinv {

// All arithmetic is binary64. The tolerances leave a few ulps of headroom
// over double rounding across short product chains.

/// Admission tolerance on | |v| - 1 | for unit vectors.
inline constexpr double kUnitTolerance = 1e-10;

/// Threshold below which a magnitude is treated as zero (degeneracy tests).
inline constexpr double kZeroTolerance = 1e-12;

/// Relative residual bound for algebraic law checks.
inline constexpr double kLawTolerance = 1e-9;

/// Absolute per-component bound for reconstruction round trips.
inline constexpr double kReconTolerance = 1e-12;

}  // namespace quatinv

#endif  // QUATINV_TOLERANCES_HPP_
