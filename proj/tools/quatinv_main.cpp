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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatinv/quatinv.hpp"

namespace {

using quatinv::InvolutionAxis;
using quatinv::OrthonormalTriad;
using quatinv::Quaternion;
using quatinv::UnitVector3;
using quatinv::Vector3;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

/// Axes given on the command line must already be unit length up to this
/// slack; they are then normalized exactly. Larger deviations are rejected
/// to catch unit-mismatch mistakes.
constexpr double kAxisAdmission = 1e-6;

/// Below this sine of the axis angle the rotation axis report is
/// ill-conditioned and the composed rotation is close to the identity.
constexpr double kParallelAxisWarning = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

UnitVector3 parse_axis(const std::string& text) {
  const auto fields = quatinv::parse_csv_doubles(text, 3);
  if (!fields.has_value()) {
    throw UsageError("axis '" + text +
                     "' must be three comma-separated finite numbers");
  }
  const Vector3 v((*fields)[0], (*fields)[1], (*fields)[2]);
  const double len = quatinv::length(v);
  if (std::abs(len - 1.0) > kAxisAdmission) {
    throw UsageError("axis '" + text + "' has length " +
                     quatinv::format_double(len) +
                     "; it must be unit length within 1e-6");
  }
  return UnitVector3::normalize(v);
}

std::string describe(const Vector3& v) {
  return "(" + quatinv::format_double(v.x) + "," + quatinv::format_double(v.y) +
         "," + quatinv::format_double(v.z) + ")";
}

struct IoOptions {
  std::string input = "-";
  std::string output = "-";
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input,
                  "input file; '-' reads standard input (default)");
  cmd->add_option("--output", io.output,
                  "output file; '-' writes standard output (default)");
}

/// Streams data rows through fn, one output row per input row. Comment
/// ('#'-prefixed) and blank lines are skipped; any other line must hold
/// exactly field_count comma-separated finite numbers.
template <typename RowFn>
void transform_rows(std::istream& in, std::ostream& out,
                    std::size_t field_count, RowFn&& fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (quatinv::is_comment_or_blank(line)) continue;
    const auto fields = quatinv::parse_csv_doubles(line, field_count);
    if (!fields.has_value()) {
      throw UsageError("line " + std::to_string(line_number) +
                       ": malformed row '" + line + "' (expected " +
                       std::to_string(field_count) +
                       " comma-separated finite numbers)");
    }
    out << quatinv::format_row(fn(*fields, line_number)) << '\n';
  }
}

template <typename Body>
int with_streams(const IoOptions& io, Body&& body) {
  std::ifstream file_in;
  std::istream* in = &std::cin;
  if (io.input != "-") {
    file_in.open(io.input);
    if (!file_in) throw UsageError("cannot open input file '" + io.input + "'");
    in = &file_in;
  }
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (io.output != "-") {
    file_out.open(io.output);
    if (!file_out) {
      throw UsageError("cannot open output file '" + io.output + "'");
    }
    out = &file_out;
  }
  const int code = body(*in, *out);
  out->flush();
  if (!out->good()) throw UsageError("failed writing output");
  return code;
}

int run_involute(const IoOptions& io, const std::string& axis_text,
                 const std::string& kind) {
  const InvolutionAxis axis(parse_axis(axis_text));
  return with_streams(io, [&](std::istream& in, std::ostream& out) {
    if (kind == "vector") {
      transform_rows(in, out, 3, [&](const std::vector<double>& f,
                                     std::size_t) -> std::vector<double> {
        const Vector3 r = quatinv::reflect_vector(Vector3(f[0], f[1], f[2]),
                                                  axis);
        return {r.x, r.y, r.z};
      });
    } else {
      transform_rows(in, out, 4, [&](const std::vector<double>& f,
                                     std::size_t) -> std::vector<double> {
        const Quaternion r =
            quatinv::involute(Quaternion(f[0], f[1], f[2], f[3]), axis);
        return {r.w, r.x, r.y, r.z};
      });
    }
    return kExitSuccess;
  });
}

int run_rotate(const IoOptions& io, const std::string& axis_a_text,
               const std::string& axis_b_text) {
  const InvolutionAxis axis_a(parse_axis(axis_a_text));
  const InvolutionAxis axis_b(parse_axis(axis_b_text));
  const Vector3 plane_normal =
      cross(axis_a.axis.direction(), axis_b.axis.direction());
  const double sine = quatinv::length(plane_normal);
  if (sine < kParallelAxisWarning) {
    std::cerr << "warning: involution axes are nearly parallel; the composed "
                 "rotation is close to the identity\n";
  } else {
    const double theta =
        std::atan2(sine, dot(axis_a.axis.direction(), axis_b.axis.direction()));
    std::cerr << "rotation axis=" << describe((1.0 / sine) * plane_normal)
              << " angle=" << quatinv::format_double(2.0 * theta) << "\n";
  }
  return with_streams(io, [&](std::istream& in, std::ostream& out) {
    transform_rows(in, out, 3, [&](const std::vector<double>& f,
                                   std::size_t) -> std::vector<double> {
      const Quaternion rotated = quatinv::compose_involutions(
          quatinv::embed(Vector3(f[0], f[1], f[2])), axis_a, axis_b);
      const Vector3 r = quatinv::vector_part(rotated);
      return {r.x, r.y, r.z};
    });
    return kExitSuccess;
  });
}

int run_project(const IoOptions& io, const std::string& axis_text) {
  const InvolutionAxis axis(parse_axis(axis_text));
  return with_streams(io, [&](std::istream& in, std::ostream& out) {
    transform_rows(in, out, 3, [&](const std::vector<double>& f,
                                   std::size_t) -> std::vector<double> {
      const auto parts = quatinv::split(Vector3(f[0], f[1], f[2]), axis);
      return {parts.parallel.x,      parts.parallel.y,
              parts.parallel.z,      parts.perpendicular.x,
              parts.perpendicular.y, parts.perpendicular.z};
    });
    return kExitSuccess;
  });
}

int run_decompose(const IoOptions& io, const std::string& seed_text,
                  bool check) {
  const OrthonormalTriad triad =
      quatinv::complete_triad(parse_axis(seed_text));
  const std::string triad_line = "triad nu1=" + describe(triad.nu1().direction()) +
                                 " nu2=" + describe(triad.nu2().direction()) +
                                 " nu3=" + describe(triad.nu3().direction());
  std::cerr << triad_line << "\n";
  return with_streams(io, [&](std::istream& in, std::ostream& out) {
    out << "# " << triad_line << "\n";
    transform_rows(in, out, 4, [&](const std::vector<double>& f,
                                   std::size_t line) -> std::vector<double> {
      const Quaternion q(f[0], f[1], f[2], f[3]);
      const quatinv::BasisDecomposition d = quatinv::decompose(q, triad);
      if (check) {
        const Quaternion rebuilt = quatinv::reconstruct(d);
        const double worst = std::max(
            {std::abs(rebuilt.w - q.w), std::abs(rebuilt.x - q.x),
             std::abs(rebuilt.y - q.y), std::abs(rebuilt.z - q.z)});
        if (worst > quatinv::kReconTolerance) {
          throw CheckError("line " + std::to_string(line) +
                           ": reconstruction residual " +
                           quatinv::format_double(worst) +
                           " exceeds tolerance");
        }
      }
      return {d.a, d.alpha, d.beta, d.gamma};
    });
    return kExitSuccess;
  });
}

int run_verify(const IoOptions& io, int trials, std::uint64_t seed) {
  return with_streams(io, [&](std::istream&, std::ostream& out) {
    const quatinv::laws::LawReport report = quatinv::laws::run_laws(trials,
                                                                    seed);
    quatinv::laws::print_report(report, out);
    return report.all_passed() ? kExitSuccess : kExitVerificationFailure;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quaternion involution transforms and algebraic law checks over CSV "
      "record streams.\nVectors are rows 'x,y,z', quaternions 'w,x,y,z'; "
      "'#'-prefixed lines are comments."};
  app.require_subcommand(1);

  IoOptions involute_io;
  std::string involute_axis;
  std::string involute_kind = "vector";
  CLI::App* involute_cmd = app.add_subcommand(
      "involute", "apply the involution about an axis to every row");
  involute_cmd->add_option("--axis", involute_axis,
                           "involution axis X,Y,Z (unit length within 1e-6)")
      ->required();
  involute_cmd
      ->add_option("--kind", involute_kind,
                   "record kind: vector (3 fields) or quaternion (4 fields)")
      ->check(CLI::IsMember({"vector", "quaternion"}));
  add_io_options(involute_cmd, involute_io);

  IoOptions rotate_io;
  std::string rotate_axis_a;
  std::string rotate_axis_b;
  CLI::App* rotate_cmd = app.add_subcommand(
      "rotate",
      "compose the involutions about two axes (a rotation of each vector row "
      "by twice the angle between the axes)");
  rotate_cmd->add_option("--axis", rotate_axis_a, "first involution axis X,Y,Z")
      ->required();
  rotate_cmd
      ->add_option("--axis-b", rotate_axis_b, "second involution axis X,Y,Z")
      ->required();
  add_io_options(rotate_cmd, rotate_io);

  IoOptions project_io;
  std::string project_axis;
  CLI::App* project_cmd = app.add_subcommand(
      "project",
      "split every vector row into components parallel and perpendicular to "
      "an axis (six output columns)");
  project_cmd->add_option("--axis", project_axis, "projection axis X,Y,Z")
      ->required();
  add_io_options(project_cmd, project_io);

  IoOptions decompose_io;
  std::string decompose_seed;
  bool decompose_check = false;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose",
      "resolve every quaternion row over the triad completed from a seed "
      "axis; outputs a,alpha,beta,gamma");
  decompose_cmd
      ->add_option("--axis", decompose_seed,
                   "first triad axis X,Y,Z; the other two are completed "
                   "deterministically")
      ->required();
  decompose_cmd->add_flag("--check", decompose_check,
                          "re-assemble each row from its coefficients and "
                          "fail if it does not reconstruct");
  add_io_options(decompose_cmd, decompose_io);

  IoOptions verify_io;
  int verify_trials = 1000;
  std::uint64_t verify_seed = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the randomized algebraic law suite and report per law");
  verify_cmd->add_option("--trials", verify_trials, "random trials per law")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  add_io_options(verify_cmd, verify_io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (involute_cmd->parsed()) {
      return run_involute(involute_io, involute_axis, involute_kind);
    }
    if (rotate_cmd->parsed()) {
      return run_rotate(rotate_io, rotate_axis_a, rotate_axis_b);
    }
    if (project_cmd->parsed()) {
      return run_project(project_io, project_axis);
    }
    if (decompose_cmd->parsed()) {
      return run_decompose(decompose_io, decompose_seed, decompose_check);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_io, verify_trials, verify_seed);
    }
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
