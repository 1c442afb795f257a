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
//
// Acceptance suite. Every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Generators and oracles here are
// written independently of the library paths they check.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quatinv/quatinv.hpp"

namespace {

namespace fs = std::filesystem;

using quatinv::InvolutionAxis;
using quatinv::OrthonormalTriad;
using quatinv::Quaternion;
using quatinv::UnitVector3;
using quatinv::Vector3;

int criteria_run = 0;
int criteria_failed = 0;

void report(int number, bool passed, const std::string& label,
            const std::string& detail) {
  ++criteria_run;
  if (!passed) ++criteria_failed;
  std::printf("criterion %2d %s  %s  [%s]\n", number,
              passed ? "PASS" : "FAIL", label.c_str(), detail.c_str());
}

std::string residual_text(double worst) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "max residual %.3e", worst);
  return buffer;
}

// ---------------------------------------------------------------------------
// Independent generator and oracles.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }

  Vector3 vector(double lo = -10.0, double hi = 10.0) {
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return Vector3(x, y, z);
  }

  Quaternion quaternion(double lo = -10.0, double hi = 10.0) {
    const double w = uniform(lo, hi);
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return Quaternion(w, x, y, z);
  }

 private:
  std::mt19937_64 engine_;
};

double oracle_dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vector3 oracle_cross(const Vector3& a, const Vector3& b) {
  return Vector3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
                 a.x * b.y - a.y * b.x);
}

Vector3 oracle_rotate(const Vector3& v, const Vector3& n, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Vector3 nxv = oracle_cross(n, v);
  const double along = oracle_dot(n, v) * (1.0 - c);
  return Vector3(v.x * c + nxv.x * s + n.x * along,
                 v.y * c + nxv.y * s + n.y * along,
                 v.z * c + nxv.z * s + n.z * along);
}

double residual(const Quaternion& lhs, const Quaternion& rhs) {
  const double scale =
      std::max({1.0, quatinv::modulus(lhs), quatinv::modulus(rhs)});
  return quatinv::modulus(lhs - rhs) / scale;
}

double max_abs_diff(const Quaternion& lhs, const Quaternion& rhs) {
  return std::max({std::abs(lhs.w - rhs.w), std::abs(lhs.x - rhs.x),
                   std::abs(lhs.y - rhs.y), std::abs(lhs.z - rhs.z)});
}

UnitVector3 random_unit(Rng& rng) {
  for (;;) {
    const Vector3 v = rng.vector(-1.0, 1.0);
    const double len = quatinv::length(v);
    if (len > 0.1 && len <= 1.0) {
      return UnitVector3(Vector3(v.x / len, v.y / len, v.z / len));
    }
  }
}

// Gram-Schmidt from two random vectors; does not reuse the library's triad
// completion.
OrthonormalTriad random_triad(Rng& rng) {
  for (;;) {
    const Vector3 v1 = rng.vector(-1.0, 1.0);
    const Vector3 v2 = rng.vector(-1.0, 1.0);
    const double len1 = quatinv::length(v1);
    if (len1 < 0.1) continue;
    const Vector3 n1(v1.x / len1, v1.y / len1, v1.z / len1);
    const Vector3 u = v2 - oracle_dot(v2, n1) * n1;
    const double len2 = quatinv::length(u);
    if (len2 < 0.1) continue;
    const Vector3 n2(u.x / len2, u.y / len2, u.z / len2);
    const Vector3 c = oracle_cross(n1, n2);
    const double len3 = quatinv::length(c);
    return OrthonormalTriad(UnitVector3(n1), UnitVector3(n2),
                            UnitVector3(Vector3(c.x / len3, c.y / len3,
                                                c.z / len3)));
  }
}

// Unit vector at a prescribed angle from a.
UnitVector3 unit_at_angle(Rng& rng, const UnitVector3& a, double theta) {
  for (;;) {
    const Vector3 v = rng.vector(-1.0, 1.0);
    const Vector3 u = v - oracle_dot(v, a.direction()) * a.direction();
    const double len = quatinv::length(u);
    if (len < 0.1) continue;
    const Vector3 p(u.x / len, u.y / len, u.z / len);
    const Vector3 b = std::cos(theta) * a.direction() + std::sin(theta) * p;
    return UnitVector3::normalize(b);
  }
}

// ---------------------------------------------------------------------------
// Criteria 1-9: algebraic gates.

void criterion_1_involution_axioms() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q1 = rng.quaternion();
    const Quaternion q2 = rng.quaternion();
    const double lambda = rng.uniform(-10.0, 10.0);
    const InvolutionAxis nu(random_unit(rng));
    worst = std::max(
        worst, residual(involute(involute(q1, nu), nu), q1));
    worst = std::max(worst, residual(involute(q1 + q2, nu),
                                     involute(q1, nu) + involute(q2, nu)));
    worst = std::max(worst, residual(involute(lambda * q1, nu),
                                     lambda * involute(q1, nu)));
    worst = std::max(worst,
                     residual(involute(mul(q1, q2), nu),
                              mul(involute(q1, nu), involute(q2, nu))));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char detail[96];
  std::snprintf(detail, sizeof(detail), "max residual %.3e, %.2f s", worst,
                seconds);
  report(1, worst < 1e-9 && seconds < 5.0,
         "involution axioms over 10000 random (q, axis) draws", detail);
}

void criterion_2_coordinate_involutions_exact() {
  Rng rng(102);
  bool exact = true;
  for (int i = 0; i < 1000 && exact; ++i) {
    const Quaternion q = rng.quaternion();
    exact =
        involution_alpha(q) == Quaternion(q.w, q.x, -q.y, -q.z) &&
        involution_beta(q) == Quaternion(q.w, -q.x, q.y, -q.z) &&
        involution_gamma(q) == Quaternion(q.w, -q.x, -q.y, q.z);
  }
  report(2, exact, "coordinate-axis involutions equal their closed forms",
         exact ? "exact over 1000 random quaternions" : "mismatch found");
}

void criterion_3_double_and_triple_composition() {
  Rng rng(103);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const OrthonormalTriad triad = random_triad(rng);
    for (int i = 0; i < 10; ++i) {
      const Quaternion q = rng.quaternion();
      worst = std::max(
          worst, residual(compose_involutions(q, triad.nu1(), triad.nu2()),
                          involute(q, triad.nu3())));
      worst = std::max(
          worst, residual(involute_about_triad_product(q, triad), q));
    }
  }
  report(3, worst < 1e-9,
         "double composition collapses and triple composition is identity",
         residual_text(worst));
}

void criterion_4_conjugate_identity() {
  Rng rng(104);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const OrthonormalTriad triad = random_triad(rng);
    const Quaternion q = rng.quaternion();
    worst = std::max(
        worst, residual(conjugate_via_involutions(q, triad), conjugate(q)));
  }
  // With the coordinate triad the identity reduces to the half-sum of the
  // three coordinate involutions, bit for bit.
  const OrthonormalTriad canonical(quatinv::x_axis(), quatinv::y_axis(),
                                   quatinv::z_axis());
  bool exact = true;
  for (int i = 0; i < 1000 && exact; ++i) {
    const Quaternion q = rng.quaternion();
    const Quaternion direct =
        0.5 *
        (((involution_alpha(q) + involution_beta(q)) + involution_gamma(q)) -
         q);
    exact = conjugate_via_involutions(q, canonical) == direct;
  }
  report(4, worst < 1e-9 && exact,
         "conjugate equals the three-involution half sum",
         residual_text(worst) + std::string(exact ? ", canonical case exact"
                                                  : ", canonical mismatch"));
}

void criterion_5_rotation_law() {
  Rng rng(105);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const UnitVector3 a = random_unit(rng);
    const double theta =
        rng.uniform(0.01, std::numbers::pi - 0.01);
    const UnitVector3 b = unit_at_angle(rng, a, theta);
    const Vector3 c = oracle_cross(a.direction(), b.direction());
    const double sine = quatinv::length(c);
    const Vector3 n(c.x / sine, c.y / sine, c.z / sine);
    const Vector3 v = rng.vector();
    const Vector3 expected = oracle_rotate(v, n, 2.0 * theta);
    const Quaternion actual =
        compose_involutions(quatinv::embed(v), a, b);
    worst = std::max(
        worst,
        residual(actual, Quaternion(0.0, expected.x, expected.y, expected.z)));
  }
  report(5, worst < 1e-8,
         "composed involutions match the axis-angle rotation oracle",
         residual_text(worst));
}

void criterion_6_projection() {
  Rng rng(106);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vector3 v = rng.vector();
    const UnitVector3 nu = random_unit(rng);
    const quatinv::ParallelPerpSplit parts = split(v, nu);
    const Vector3 along = oracle_dot(v, nu.direction()) * nu.direction();
    const Vector3 rest = v - along;
    const Vector3 sum = parts.parallel + parts.perpendicular;
    worst = std::max({worst,
                      quatinv::length(parts.parallel - along) /
                          std::max(1.0, quatinv::length(along)),
                      quatinv::length(parts.perpendicular - rest) /
                          std::max(1.0, quatinv::length(rest)),
                      std::abs(sum.x - v.x), std::abs(sum.y - v.y),
                      std::abs(sum.z - v.z)});
  }
  for (int i = 0; i < 1000; ++i) {
    const OrthonormalTriad triad = random_triad(rng);
    const Quaternion q = rng.quaternion();
    worst =
        std::max(worst, max_abs_diff(reconstruct(decompose(q, triad)), q));
  }
  report(6, worst < 1e-10,
         "splits match the dot-product oracle and decompositions rebuild",
         residual_text(worst));
}

void criterion_7_anti_involution() {
  Rng rng(107);
  double worst = 0.0;
  double biggest_same_order = 0.0;
  std::string witness;
  for (int i = 0; i < 10000; ++i) {
    const Quaternion q1 = rng.quaternion();
    const Quaternion q2 = rng.quaternion();
    worst = std::max(worst, residual(conjugate(mul(q1, q2)),
                                     mul(conjugate(q2), conjugate(q1))));
    const double same_order = residual(conjugate(mul(q1, q2)),
                                       mul(conjugate(q1), conjugate(q2)));
    if (same_order > biggest_same_order) {
      biggest_same_order = same_order;
      witness = "q1=" + quatinv::format_double(q1.w) + ",... q2=" +
                quatinv::format_double(q2.w) + ",...";
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "max residual %.3e; same-order violation %.3e observed",
                worst, biggest_same_order);
  report(7, worst < 1e-9 && biggest_same_order > 1e-3,
         "conjugate reverses products and fails in the same order", detail);
}

void criterion_8_two_axis_sandwich_counterexample() {
  Rng rng(108);
  bool found = false;
  int trials_used = 0;
  std::string witness;
  for (int i = 0; i < 100 && !found; ++i) {
    ++trials_used;
    const UnitVector3 nu1 = random_unit(rng);
    const UnitVector3 nu2 = random_unit(rng);
    if (quatinv::length(nu1.direction() - nu2.direction()) < 1e-6) continue;
    const Quaternion q1 = rng.quaternion();
    const Quaternion q2 = rng.quaternion();
    const auto sandwich = [&](const Quaternion& q) {
      return mul(mul(quatinv::embed(nu1.direction()), q),
                 quatinv::embed(nu2.direction()));
    };
    const double violation =
        residual(sandwich(mul(q1, q2)), mul(sandwich(q1), sandwich(q2)));
    if (violation > 1e-3) {
      found = true;
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "violation %.3e (trial %d)",
                    violation, trials_used);
      witness = buffer;
    }
  }
  report(8, found,
         "two-axis sandwich map violates multiplicativity (witness found)",
         found ? witness : "no witness in 100 trials");
}

void criterion_9_vector_product_identities() {
  Rng rng(109);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vector3 mu = random_unit(rng).direction();
    worst = std::max(worst,
                     residual(quatinv::vector_product_decomposition(mu, mu),
                              Quaternion(-1.0, 0.0, 0.0, 0.0)));

    const Vector3 u = rng.vector();
    const Vector3 v = rng.vector();
    const Vector3 c = oracle_cross(u, v);
    worst = std::max(worst,
                     residual(quatinv::vector_product_decomposition(u, v),
                              Quaternion(-oracle_dot(u, v), c.x, c.y, c.z)));

    Vector3 perp(0.0, 0.0, 0.0);
    do {
      const Vector3 w = rng.vector();
      perp = w - (oracle_dot(w, u) / oracle_dot(u, u)) * u;
    } while (quatinv::length(perp) <= 1e-6);
    worst = std::max(worst,
                     residual(quatinv::vector_product_decomposition(u, perp),
                              -quatinv::vector_product_decomposition(perp, u)));

    const OrthonormalTriad triad = random_triad(rng);
    const Quaternion mu_q = quatinv::embed(rng.vector());
    const Quaternion total = (involute(mu_q, triad.nu1()) +
                              involute(mu_q, triad.nu2())) +
                             involute(mu_q, triad.nu3());
    worst = std::max(worst, residual(total, -mu_q));
  }
  report(9, worst < 1e-9,
         "unit squares, product split, anticommutation, triple negation",
         residual_text(worst));
}

// ---------------------------------------------------------------------------
// Criterion 10: the command-line tool end to end.

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

RunResult run_cli(const fs::path& dir, const std::string& args,
                  const std::string& stdin_text = "") {
  static int invocation = 0;
  const fs::path base = dir / ("cli" + std::to_string(invocation++));
  const fs::path in_path = base.string() + ".in";
  const fs::path out_path = base.string() + ".out";
  const fs::path err_path = base.string() + ".err";
  write_file(in_path, stdin_text);
  const std::string command = std::string(QUATINV_CLI_PATH) + " " + args +
                              " < " + in_path.string() + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

bool rows_match(const std::string& text, std::size_t fields,
                const std::vector<std::vector<double>>& expected,
                double tolerance) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (quatinv::is_comment_or_blank(line)) continue;
    const auto row = quatinv::parse_csv_doubles(line, fields);
    if (!row.has_value()) return false;
    rows.push_back(*row);
  }
  if (rows.size() != expected.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < fields; ++c) {
      if (std::abs(rows[i][c] - expected[i][c]) > tolerance) return false;
    }
  }
  return true;
}

void criterion_10_cli_end_to_end() {
  std::string templ = (fs::temp_directory_path() / "quatinv_accXXXXXX").string();
  char* made = mkdtemp(templ.data());
  if (made == nullptr) {
    report(10, false, "command-line tool end to end", "mkdtemp failed");
    return;
  }
  const fs::path dir(made);
  std::vector<std::string> failures;

  // verify with the documented flags exits cleanly.
  {
    const RunResult r = run_cli(dir, "verify --trials 1000 --seed 42");
    if (r.exit_code != 0) failures.push_back("verify exit code");
    if (r.out.find("laws passed: 28/28") == std::string::npos) {
      failures.push_back("verify report");
    }
  }
  {
    const RunResult r = run_cli(dir, "verify --trials 0 --seed 42");
    if (r.exit_code != 2) failures.push_back("verify --trials 0 exit code");
  }

  // A 1000-row file involutes back to itself when the involution is applied
  // twice.
  {
    Rng rng(110);
    std::ostringstream input;
    std::vector<std::vector<double>> original;
    for (int i = 0; i < 1000; ++i) {
      const Quaternion q = rng.quaternion();
      original.push_back({q.w, q.x, q.y, q.z});
      input << quatinv::format_row(original.back()) << "\n";
    }
    const fs::path f1 = dir / "a.csv";
    const fs::path f2 = dir / "b.csv";
    const fs::path f3 = dir / "c.csv";
    write_file(f1, input.str());
    const std::string axis =
        "--axis 0.26726124191242438,0.53452248382484877,0.80178372573727319";
    const RunResult first =
        run_cli(dir, "involute " + axis + " --kind quaternion --input " +
                         f1.string() + " --output " + f2.string());
    const RunResult second =
        run_cli(dir, "involute " + axis + " --kind quaternion --input " +
                         f2.string() + " --output " + f3.string());
    if (first.exit_code != 0 || second.exit_code != 0) {
      failures.push_back("involute exit codes");
    } else if (!rows_match(read_file(f3), 4, original, 1e-12)) {
      failures.push_back("involute round trip");
    }
  }

  // Documented example rows.
  {
    const RunResult r =
        run_cli(dir, "involute --axis 1,0,0 --kind quaternion", "1,2,3,4\n");
    if (r.exit_code != 0 || r.out != "1,2,-3,-4\n") {
      failures.push_back("involute quaternion example");
    }
  }
  {
    const RunResult r =
        run_cli(dir, "involute --axis 1,0,0", "1,2,3\n1,0,0\n");
    if (r.exit_code != 0 || r.out != "1,-2,-3\n1,0,0\n") {
      failures.push_back("involute vector examples");
    }
  }
  {
    const RunResult r = run_cli(
        dir,
        "rotate --axis 1,0,0 --axis-b "
        "0.7071067811865476,0.7071067811865476,0",
        "1,0,0\n");
    if (r.exit_code != 0 ||
        !rows_match(r.out, 3, {{0.0, 1.0, 0.0}}, 1e-9)) {
      failures.push_back("rotate quarter-turn example");
    }
  }
  {
    const RunResult r =
        run_cli(dir, "rotate --axis 0,1,0 --axis-b 0,1,0", "3,-4,5\n");
    if (r.exit_code != 0 || !rows_match(r.out, 3, {{3.0, -4.0, 5.0}}, 1e-9) ||
        r.err.find("nearly parallel") == std::string::npos) {
      failures.push_back("rotate equal-axes example");
    }
  }
  {
    const RunResult r =
        run_cli(dir, "rotate --axis 1,0,0 --axis-b 0,1,0", "0,0,1\n");
    if (r.exit_code != 0 || !rows_match(r.out, 3, {{0.0, 0.0, 1.0}}, 1e-12)) {
      failures.push_back("rotate fixed-axis example");
    }
  }
  {
    const RunResult r = run_cli(dir, "project --axis 1,0,0", "1,2,0\n");
    if (r.exit_code != 0 || r.out != "1,0,0,0,2,0\n") {
      failures.push_back("project example");
    }
  }
  {
    const RunResult r = run_cli(dir, "decompose --axis 1,0,0 --check",
                                "1,2,3,4\n7,0,0,0\n");
    if (r.exit_code != 0 ||
        !rows_match(r.out, 4, {{1.0, 2.0, 3.0, 4.0}, {7.0, 0.0, 0.0, 0.0}},
                    1e-12)) {
      failures.push_back("decompose examples");
    }
  }

  std::string detail = "verify, round trip, and documented example rows";
  if (!failures.empty()) {
    detail = "failed: ";
    for (std::size_t i = 0; i < failures.size(); ++i) {
      if (i != 0) detail += ", ";
      detail += failures[i];
    }
  }
  report(10, failures.empty(), "command-line tool end to end", detail);
}

}  // namespace

int main() {
  criterion_1_involution_axioms();
  criterion_2_coordinate_involutions_exact();
  criterion_3_double_and_triple_composition();
  criterion_4_conjugate_identity();
  criterion_5_rotation_law();
  criterion_6_projection();
  criterion_7_anti_involution();
  criterion_8_two_axis_sandwich_counterexample();
  criterion_9_vector_product_identities();
  criterion_10_cli_end_to_end();

  std::printf("%d criteria run, %d failed\n", criteria_run, criteria_failed);
  return criteria_failed == 0 ? 0 : 1;
}
