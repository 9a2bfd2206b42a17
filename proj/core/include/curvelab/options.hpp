#pragma once

namespace curvelab {

/// Engine limits shared by every module.
struct EngineOptions {
  /// Largest degree [Q(a):Q] of the single extension the engine may build.
  int max_extension_degree = 6;
  /// Deepest chain of blow-ups before resolution gives up.
  int depth_cap = 64;
};

}  // namespace curvelab
