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

#ifndef QUATINV_LAWS_HPP_
#define QUATINV_LAWS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quatinv/projection.hpp"
#include "quatinv/record_io.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/tolerances.hpp"

namespace quatinv {
namespace laws {

namespace detail {

// Componentwise oracles, kept independent of the quaternion product so the
// laws are checked against a second route, not against themselves.

inline double oracle_dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vector3 oracle_cross(const Vector3& a, const Vector3& b) {
  return Vector3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
                 a.x * b.y - a.y * b.x);
}

/// Reflection of v across the line spanned by unit n: 2(v.n)n - v.
inline Vector3 oracle_reflect(const Vector3& v, const Vector3& n) {
  const double twice_along = 2.0 * oracle_dot(v, n);
  return Vector3(twice_along * n.x - v.x, twice_along * n.y - v.y,
                 twice_along * n.z - v.z);
}

/// Axis-angle rotation of v about unit n (Rodrigues form).
inline Vector3 oracle_rotate(const Vector3& v, const Vector3& n,
                             double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Vector3 nxv = oracle_cross(n, v);
  const double along = oracle_dot(n, v) * (1.0 - c);
  return Vector3(v.x * c + nxv.x * s + n.x * along,
                 v.y * c + nxv.y * s + n.y * along,
                 v.z * c + nxv.z * s + n.z * along);
}

/// Mixed relative/absolute residual: distance scaled by the larger operand
/// magnitude, floored at 1 so comparisons near zero stay absolute.
inline double residual(const Quaternion& lhs, const Quaternion& rhs) {
  const double scale = std::max({1.0, modulus(lhs), modulus(rhs)});
  return modulus(lhs - rhs) / scale;
}

inline double residual(const Vector3& lhs, const Vector3& rhs) {
  const double scale = std::max({1.0, length(lhs), length(rhs)});
  return length(lhs - rhs) / scale;
}

inline double max_abs_component_diff(const Quaternion& lhs,
                                     const Quaternion& rhs) {
  return std::max({std::abs(lhs.w - rhs.w), std::abs(lhs.x - rhs.x),
                   std::abs(lhs.y - rhs.y), std::abs(lhs.z - rhs.z)});
}

inline double max_abs_component_diff(const Vector3& lhs, const Vector3& rhs) {
  return std::max({std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y),
                   std::abs(lhs.z - rhs.z)});
}

inline std::string describe(const Vector3& v) {
  return "(" + format_double(v.x) + "," + format_double(v.y) + "," +
         format_double(v.z) + ")";
}

inline std::string describe(const Quaternion& q) {
  return "(" + format_double(q.w) + "," + format_double(q.x) + "," +
         format_double(q.y) + "," + format_double(q.z) + ")";
}

}  // namespace detail

/// Outcome of one verified law.
struct LawResult {
  std::string name;
  bool passed = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  /// True for laws whose claim is that a counterexample exists; they pass
  /// when a witness is found.
  bool expects_counterexample = false;
  std::string witness;
};

struct LawReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool all_passed() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawResult& r) { return r.passed; });
  }
};

namespace detail {

// Per-law engine seeding keeps every law's input stream independent of the
// list order the laws run in.
inline Sampler sampler_for(std::uint64_t seed, std::size_t law_index) {
  return Sampler(seed ^ (0x9E3779B97F4A7C15ULL * (law_index + 1)));
}

template <typename Body>
void check_law(LawReport& report, std::string name, double tolerance,
               Body&& body) {
  Sampler sampler = sampler_for(report.seed, report.laws.size());
  LawResult result;
  result.name = std::move(name);
  result.tolerance = tolerance;
  double worst = 0.0;
  for (int i = 0; i < report.trials; ++i) {
    worst = std::max(worst, body(sampler));
  }
  result.worst_residual = worst;
  result.passed = worst <= tolerance;
  report.laws.push_back(std::move(result));
}

template <typename Search>
void check_counterexample(LawReport& report, std::string name,
                          Search&& search) {
  Sampler sampler = sampler_for(report.seed, report.laws.size());
  LawResult result;
  result.name = std::move(name);
  result.expects_counterexample = true;
  result.tolerance = 1e-3;  // a witness must violate by at least this much
  for (int i = 0; i < report.trials && !result.passed; ++i) {
    auto [violation, witness] = search(sampler);
    if (violation > result.tolerance) {
      result.passed = true;
      result.worst_residual = violation;
      result.witness = std::move(witness);
    }
  }
  report.laws.push_back(std::move(result));
}

}  // namespace detail

/// Runs the randomized law suite: every algebraic property of the quaternion
/// core, the involution family, and the projection operators, each checked
/// against an independent componentwise oracle where one exists. Trials and
/// seed fully determine the report.
inline LawReport run_laws(int trials, std::uint64_t seed) {
  using namespace detail;
  if (trials < 1) {
    throw std::invalid_argument("run_laws: trials must be >= 1");
  }
  LawReport report;
  report.trials = trials;
  report.seed = seed;

  check_law(report, "unit-vector square equals -1", kLawTolerance,
            [](Sampler& s) {
              const Quaternion nu = embed(s.unit_vector().direction());
              return residual(mul(nu, nu), Quaternion(-1.0, 0.0, 0.0, 0.0));
            });

  check_law(report, "vector product splits into -dot and cross",
            kLawTolerance, [](Sampler& s) {
              const Vector3 u = s.vector();
              const Vector3 v = s.vector();
              const Vector3 c = oracle_cross(u, v);
              const Quaternion expected(-oracle_dot(u, v), c.x, c.y, c.z);
              return residual(vector_product_decomposition(u, v), expected);
            });

  check_law(report, "swapping a vector product conjugates it", kLawTolerance,
            [](Sampler& s) {
              const Vector3 u = s.vector();
              const Vector3 v = s.vector();
              return residual(vector_product_decomposition(v, u),
                              conjugate(vector_product_decomposition(u, v)));
            });

  check_law(report, "perpendicular vectors anticommute", kLawTolerance,
            [](Sampler& s) {
              const Vector3 u = s.nonzero_vector();
              Vector3 v(1.0, 0.0, 0.0);
              for (;;) {
                const Vector3 w = s.nonzero_vector();
                const Vector3 candidate =
                    w - (oracle_dot(w, u) / oracle_dot(u, u)) * u;
                if (length(candidate) > 1e-6) {
                  v = candidate;
                  break;
                }
              }
              return residual(vector_product_decomposition(u, v),
                              -vector_product_decomposition(v, u));
            });

  check_law(report, "modulus is multiplicative", kLawTolerance,
            [](Sampler& s) {
              const Quaternion p = s.quaternion();
              const Quaternion q = s.quaternion();
              const double expected = modulus(p) * modulus(q);
              return std::abs(modulus(mul(p, q)) - expected) /
                     std::max(1.0, expected);
            });

  check_law(report, "inverse is a right inverse", kLawTolerance,
            [](Sampler& s) {
              Quaternion q = s.quaternion();
              while (modulus(q) < 1e-6) q = s.quaternion();
              return residual(mul(q, inverse(q)),
                              Quaternion(1.0, 0.0, 0.0, 0.0));
            });

  check_law(report, "scalar-vector form round-trips", kReconTolerance,
            [](Sampler& s) {
              const Quaternion q = s.quaternion();
              return max_abs_component_diff(
                  from_scalar_vector(to_scalar_vector(q)), q);
            });

  check_law(report, "unit-vector product encodes the axis angle",
            kLawTolerance, [](Sampler& s) {
              for (;;) {
                const UnitVector3 u = s.unit_vector();
                const UnitVector3 v = s.unit_vector();
                const Vector3 c =
                    oracle_cross(u.direction(), v.direction());
                const double sine = length(c);
                if (sine < 1e-3) continue;  // angle ill-conditioned
                const double cosine =
                    oracle_dot(u.direction(), v.direction());
                const Vector3 n = (1.0 / sine) * c;
                const Quaternion expected(-cosine, n.x * sine, n.y * sine,
                                          n.z * sine);
                return residual(
                    vector_product_decomposition(u.direction(),
                                                 v.direction()),
                    expected);
              }
            });

  check_law(report, "involution is its own inverse", kLawTolerance,
            [](Sampler& s) {
              const Quaternion q = s.quaternion();
              const InvolutionAxis nu(s.unit_vector());
              return residual(involute(involute(q, nu), nu), q);
            });

  check_law(report, "involution is linear", kLawTolerance, [](Sampler& s) {
    const Quaternion q1 = s.quaternion();
    const Quaternion q2 = s.quaternion();
    const double lambda = s.uniform(-10.0, 10.0);
    const InvolutionAxis nu(s.unit_vector());
    const double additive = residual(involute(q1 + q2, nu),
                                     involute(q1, nu) + involute(q2, nu));
    const double homogeneous =
        residual(involute(lambda * q1, nu), lambda * involute(q1, nu));
    return std::max(additive, homogeneous);
  });

  check_law(report, "involution is multiplicative in the same order",
            kLawTolerance, [](Sampler& s) {
              const Quaternion q1 = s.quaternion();
              const Quaternion q2 = s.quaternion();
              const InvolutionAxis nu(s.unit_vector());
              return residual(involute(mul(q1, q2), nu),
                              mul(involute(q1, nu), involute(q2, nu)));
            });

  check_counterexample(
      report, "q -> nu1 q nu2 multiplicativity", [](Sampler& s) {
        const UnitVector3 nu1 = s.unit_vector();
        const UnitVector3 nu2 = s.unit_vector();
        if (length(nu1.direction() - nu2.direction()) < 1e-6) {
          return std::pair<double, std::string>(0.0, "");
        }
        const Quaternion q1 = s.quaternion();
        const Quaternion q2 = s.quaternion();
        const auto sandwich = [&](const Quaternion& q) {
          return mul(mul(embed(nu1.direction()), q), embed(nu2.direction()));
        };
        const double violation =
            residual(sandwich(mul(q1, q2)), mul(sandwich(q1), sandwich(q2)));
        std::string witness = "nu1=" + describe(nu1.direction()) +
                              " nu2=" + describe(nu2.direction()) +
                              " q1=" + describe(q1) + " q2=" + describe(q2);
        return std::pair<double, std::string>(violation, std::move(witness));
      });

  check_law(report, "conjugate reverses products", kLawTolerance,
            [](Sampler& s) {
              const Quaternion q1 = s.quaternion();
              const Quaternion q2 = s.quaternion();
              return residual(conjugate(mul(q1, q2)),
                              mul(conjugate(q2), conjugate(q1)));
            });

  check_counterexample(
      report, "conjugate same-order multiplicativity", [](Sampler& s) {
        const Quaternion q1 = s.quaternion();
        const Quaternion q2 = s.quaternion();
        const double violation = residual(conjugate(mul(q1, q2)),
                                          mul(conjugate(q1), conjugate(q2)));
        std::string witness = "q1=" + describe(q1) + " q2=" + describe(q2);
        return std::pair<double, std::string>(violation, std::move(witness));
      });

  check_law(report, "perpendicular involutions commute", kLawTolerance,
            [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion q = s.quaternion();
              return residual(compose_involutions(q, t.nu1(), t.nu2()),
                              compose_involutions(q, t.nu2(), t.nu1()));
            });

  check_law(report, "double composition collapses to the third axis",
            kLawTolerance, [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion q = s.quaternion();
              return residual(compose_involutions(q, t.nu1(), t.nu2()),
                              involute(q, t.nu3()));
            });

  check_law(report, "triple composition is the identity", kLawTolerance,
            [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion q = s.quaternion();
              return residual(involute_about_triad_product(q, t), q);
            });

  check_law(report, "conjugate equals the three-involution half sum",
            kLawTolerance, [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion q = s.quaternion();
              return residual(conjugate_via_involutions(q, t), conjugate(q));
            });

  check_law(report, "involution fixes scalar part and modulus", kLawTolerance,
            [](Sampler& s) {
              const Quaternion q = s.quaternion();
              const InvolutionAxis nu(s.unit_vector());
              const Quaternion r = involute(q, nu);
              const double scalar_drift =
                  std::abs(scalar_part(r) - scalar_part(q)) /
                  std::max(1.0, std::abs(scalar_part(q)));
              const double modulus_drift = std::abs(modulus(r) - modulus(q)) /
                                           std::max(1.0, modulus(q));
              return std::max(scalar_drift, modulus_drift);
            });

  check_law(report, "three perpendicular involutions negate a vector",
            kLawTolerance, [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion mu = embed(s.vector());
              const Quaternion total =
                  (involute(mu, t.nu1()) + involute(mu, t.nu2())) +
                  involute(mu, t.nu3());
              return residual(total, -mu);
            });

  check_law(report, "composed involutions rotate by twice the axis angle",
            1e-8, [](Sampler& s) {
              for (;;) {
                const UnitVector3 a = s.unit_vector();
                const UnitVector3 b = s.unit_vector();
                const Vector3 c =
                    oracle_cross(a.direction(), b.direction());
                const double sine = length(c);
                if (sine < 1e-3) continue;  // rotation axis ill-conditioned
                const double theta =
                    std::atan2(sine, oracle_dot(a.direction(), b.direction()));
                const Vector3 n = (1.0 / sine) * c;
                const Vector3 v = s.vector();
                const Vector3 expected = oracle_rotate(v, n, 2.0 * theta);
                const Quaternion actual =
                    compose_involutions(embed(v), a, b);
                return residual(
                    actual, Quaternion(0.0, expected.x, expected.y,
                                       expected.z));
              }
            });

  check_law(report, "split reconstructs the vector", kReconTolerance,
            [](Sampler& s) {
              const Vector3 v = s.vector();
              const InvolutionAxis nu(s.unit_vector());
              const ParallelPerpSplit parts = split(v, nu);
              return max_abs_component_diff(
                  parts.parallel + parts.perpendicular, v);
            });

  check_law(report, "split separates along and across the axis",
            kLawTolerance, [](Sampler& s) {
              const Vector3 v = s.vector();
              const InvolutionAxis nu(s.unit_vector());
              const Vector3 d = nu.axis.direction();
              const ParallelPerpSplit parts = split(v, nu);
              const double misaligned =
                  length(oracle_cross(parts.parallel, d)) /
                  std::max(1.0, length(parts.parallel));
              const double leaking = std::abs(oracle_dot(
                                         parts.perpendicular, d)) /
                                     std::max(1.0, length(parts.perpendicular));
              return std::max(misaligned, leaking);
            });

  check_law(report, "split matches the classical projection", kLawTolerance,
            [](Sampler& s) {
              const Vector3 v = s.vector();
              const InvolutionAxis nu(s.unit_vector());
              const Vector3 d = nu.axis.direction();
              const Vector3 along = oracle_dot(v, d) * d;
              const ParallelPerpSplit parts = split(v, nu);
              return std::max(residual(parts.parallel, along),
                              residual(parts.perpendicular, v - along));
            });

  check_law(report, "splitting the parallel part again is idempotent",
            kLawTolerance, [](Sampler& s) {
              const Vector3 v = s.vector();
              const InvolutionAxis nu(s.unit_vector());
              const Vector3 parallel = split(v, nu).parallel;
              const ParallelPerpSplit again = split(parallel, nu);
              const double leftover = length(again.perpendicular) /
                                      std::max(1.0, length(parallel));
              const double drift = max_abs_component_diff(again.parallel,
                                                          parallel) /
                                   std::max(1.0, length(parallel));
              return std::max(leftover, drift);
            });

  check_law(report, "quaternion split reconstructs and drops the scalar",
            kLawTolerance, [](Sampler& s) {
              const Quaternion q = s.quaternion();
              const InvolutionAxis nu(s.unit_vector());
              const QuaternionSplit parts = split_quaternion(q, nu);
              const Quaternion sum =
                  parts.parallel + embed(parts.perpendicular);
              const double rebuilt = residual(sum, q);
              const double leak = std::abs(oracle_dot(
                                      parts.perpendicular,
                                      nu.axis.direction())) /
                                  std::max(1.0, length(parts.perpendicular));
              return std::max(rebuilt, leak);
            });

  check_law(report, "basis decomposition reconstructs", kReconTolerance,
            [](Sampler& s) {
              const OrthonormalTriad t = s.triad();
              const Quaternion q = s.quaternion();
              return max_abs_component_diff(reconstruct(decompose(q, t)), q);
            });

  check_law(report, "scalar and vector parts match the fields", 0.0,
            [](Sampler& s) {
              const Quaternion q = s.quaternion();
              const auto [a, v] = scalar_and_vector_parts(q);
              return std::max(std::abs(a - q.w),
                              max_abs_component_diff(v, vector_part(q)));
            });

  return report;
}

/// One line per law: PASS/FAIL, the law, and the worst residual observed.
/// Counterexample laws pass by exhibiting a witness and say so.
inline void print_report(const LawReport& report, std::ostream& out) {
  char line[256];
  for (const LawResult& law : report.laws) {
    if (law.expects_counterexample) {
      if (law.passed) {
        std::snprintf(line, sizeof(line),
                      "PASS  %s: counterexample found (expected), violation "
                      "%.3e",
                      law.name.c_str(), law.worst_residual);
        out << line << "\n";
        out << "      witness: " << law.witness << "\n";
      } else {
        std::snprintf(line, sizeof(line), "FAIL  %s: no counterexample found",
                      law.name.c_str());
        out << line << "\n";
      }
      continue;
    }
    std::snprintf(line, sizeof(line),
                  "%s  %-52s  worst residual %.3e  (tolerance %.0e)",
                  law.passed ? "PASS" : "FAIL", law.name.c_str(),
                  law.worst_residual, law.tolerance);
    out << line << "\n";
  }
  std::size_t passed = 0;
  for (const LawResult& law : report.laws) {
    if (law.passed) ++passed;
  }
  out << "laws passed: " << passed << "/" << report.laws.size()
      << " (trials=" << report.trials << ", seed=" << report.seed << ")\n";
}

}  // namespace laws
}  // namespace quatinv

#endif  // QUATINV_LAWS_HPP_
