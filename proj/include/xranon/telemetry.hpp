//
// Copyright 2026 The xranon Authors
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

#ifndef XRANON_TELEMETRY_HPP_
#define XRANON_TELEMETRY_HPP_

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace xranon {

// Angle conventions: y is up, z is forward. Gaze yaw rotates about +y
// (positive to the right) and lives in (-180, 180]; pitch is positive up
// and lives in [-90, 90]. Timestamps are seconds relative to stream start.

constexpr double kDegToRad = M_PI / 180.0;
constexpr double kRadToDeg = 180.0 / M_PI;

// Wraps an angle in degrees to (-180, 180].
double wrap_yaw_deg(double deg);

// Unit direction vector for a yaw/pitch pair in degrees.
Eigen::Vector3d gaze_direction(double yaw_deg, double pitch_deg);

// Great-circle angle in degrees between two direction vectors. The dot
// product is clamped to [-1, 1] before acos.
double angle_between_deg(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

// Shortest-arc spherical interpolation; hemispheres are sign-aligned before
// interpolating and the result is renormalized.
Eigen::Quaterniond slerp_shortest(const Eigen::Quaterniond& a,
                                  const Eigen::Quaterniond& b, double alpha);

struct GazeSample {
  double t = 0.0;
  double yaw_deg = 0.0;
  double pitch_deg = 0.0;

  Eigen::Vector3d direction() const { return gaze_direction(yaw_deg, pitch_deg); }
};

struct Pose {
  Eigen::Vector3d position{0.0, 0.0, 0.0};
  Eigen::Quaterniond orientation{1.0, 0.0, 0.0, 0.0};  // (w, x, y, z)
};

struct BodySample {
  double t = 0.0;
  Pose head;
  Pose left;
  Pose right;
};

template <typename S>
struct Trace {
  std::vector<S> samples;
  double nominal_rate = 0.0;  // Hz

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  double start_time() const { return samples.front().t; }
  double end_time() const { return samples.back().t; }
  double duration() const { return empty() ? 0.0 : end_time() - start_time(); }
};

using GazeTrace = Trace<GazeSample>;
using BodyTrace = Trace<BodySample>;

struct Session {
  std::string identity;
  int session_index = 1;
  std::optional<GazeTrace> gaze;
  std::optional<BodyTrace> body;
};

struct Dataset {
  std::vector<Session> sessions;

  // Sorted unique identity labels.
  std::vector<std::string> identities() const;
  // Sessions of one identity, sorted by session index.
  std::vector<const Session*> sessions_of(const std::string& identity) const;
  const Session* find(const std::string& identity, int session_index) const;
};

struct Violation {
  std::size_t index = 0;  // sample index the violation was detected at
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Report-style validation; never throws, the trace is not modified.
// Checks: t >= 0, strictly increasing timestamps, finite values, yaw/pitch
// ranges for gaze, unit quaternions (1e-9) for body.
ValidationReport validate_trace(const GazeTrace& trace);
ValidationReport validate_trace(const BodyTrace& trace);
ValidationReport validate_session(const Session& session);

// Resamples onto the uniform grid t0 + k/target_rate covering the input
// span. Positions and pitch interpolate linearly, yaw wrap-aware, and
// quaternions along the shorter great-circle arc. Throws
// std::invalid_argument for traces with fewer than 2 samples or a
// non-positive rate.
GazeTrace resample(const GazeTrace& trace, double target_rate);
BodyTrace resample(const BodyTrace& trace, double target_rate);

// Cuts windows [k*stride, k*stride + duration) relative to the trace start.
// Windows holding fewer than duration * nominal_rate / 2 samples are
// dropped. Sample timestamps are kept as-is.
std::vector<GazeTrace> window(const GazeTrace& trace, double duration_s,
                              double stride_s);
std::vector<BodyTrace> window(const BodyTrace& trace, double duration_s,
                              double stride_s);

}  // namespace xranon

#endif  // XRANON_TELEMETRY_HPP_
