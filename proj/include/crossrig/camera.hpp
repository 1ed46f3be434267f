#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Core>

#include "crossrig/error.hpp"
#include "crossrig/pose.hpp"

namespace crossrig {

// Points with z <= this are rejected by project_point.
inline constexpr double kMinProjectionDepth = 1e-6;

/// Ideal pinhole intrinsics. Camera frame convention throughout the library:
/// +z forward (viewing direction), +x image right, +y image down.
struct CameraIntrinsics {
  double fx = 0.0;  // pixels
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
};

inline void validate(const CameraIntrinsics& k, const std::string& where = "intrinsics") {
  if (k.width <= 0 || k.height <= 0) {
    throw ValidationError(where + ": width and height must be positive");
  }
  if (!(k.fx > 0.0) || !(k.fy > 0.0)) {
    throw ValidationError(where + ": focal lengths must be positive");
  }
  if (!(k.cx >= 0.0 && k.cx < k.width) || !(k.cy >= 0.0 && k.cy < k.height)) {
    throw ValidationError(where + ": principal point outside the image");
  }
}

/// Pinhole projection of a camera-frame point to pixel coordinates.
inline Eigen::Vector2d project_point(const Eigen::Vector3d& p_cam, const CameraIntrinsics& k) {
  if (p_cam.z() <= kMinProjectionDepth) {
    throw PointBehindCameraError("project_point: point at or behind the camera plane");
  }
  const double inv_z = 1.0 / p_cam.z();
  return {k.fx * p_cam.x() * inv_z + k.cx, k.fy * p_cam.y() * inv_z + k.cy};
}

/// One camera of a rig: intrinsics plus camera-to-vehicle extrinsic.
struct CameraDef {
  std::string name;
  CameraIntrinsics intrinsics;
  Posed extrinsic;  // camera-to-vehicle
};

/// Auxiliary non-camera sensor mount (the packaged dataset's virtual lidar).
struct SensorDef {
  std::string name;
  Posed extrinsic;  // sensor-to-vehicle
};

/// A vehicle's full camera set plus its vehicle-frame description.
struct RigConfig {
  std::string rig_name;
  std::vector<CameraDef> cameras;
  std::string frame_note;
  std::optional<SensorDef> lidar;
};

inline void validate(const RigConfig& rig) {
  if (rig.cameras.empty()) {
    throw ValidationError("rig '" + rig.rig_name + "': needs at least one camera");
  }
  std::unordered_set<std::string> names;
  for (const CameraDef& cam : rig.cameras) {
    if (!names.insert(cam.name).second) {
      throw ValidationError("rig '" + rig.rig_name + "': duplicate camera name '" + cam.name + "'");
    }
    validate(cam.intrinsics, rig.rig_name + "/" + cam.name);
  }
}

/// Maps target-vehicle coordinates into source-vehicle coordinates. Needed
/// because vehicle frames differ across datasets (e.g. rear axle on the
/// ground vs ~33 cm above it); identity when both rigs share a frame.
struct RigOffset {
  Posed transform;
};

/// World pose of the target vehicle given the source vehicle pose at the same
/// instant: chain the source pose with the inter-vehicle offset.
inline Posed target_vehicle_pose(const Posed& source_vehicle, const RigOffset& offset) {
  return compose(source_vehicle, offset.transform);
}

/// Camera-to-world pose of one target camera.
inline Posed target_camera_pose(const Posed& target_vehicle, const CameraDef& camera) {
  return compose(target_vehicle, camera.extrinsic);
}

}  // namespace crossrig
