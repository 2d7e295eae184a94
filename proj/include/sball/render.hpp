// Copyright 2026 The sball Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBALL_RENDER_HPP_
#define SBALL_RENDER_HPP_

#include <string>

#include "sball/body.hpp"
#include "sball/sphere.hpp"

namespace sball {

struct PlanePoint {
  double u = 0.0;
  double v = 0.0;
};

// Orthographic projection into the tangent frame at view_pole. Requires
// x . view_pole >= 0, else kBackHemisphere. |result| = sin(distance).
PlanePoint project_orthographic(const SpherePoint& x,
                                const SpherePoint& view_pole);

struct RenderSpec {
  SpherePoint view_pole{0.0, 0.0, 0.0};  // zero: use the body's witness pole
  int image_size = 800;                  // pixels, square
  double stroke_width = 2.0;
  std::string stroke = "#1a5fb4";
  std::string fill = "#99c1f1";
  bool draw_vertices = true;
};

// SVG figure of the body seen from view_pole; boundary arcs are drawn as
// polylines sampled at h/2. The whole body must lie on the visible
// hemisphere (support_min(body, view_pole) > 0), else kBackHemisphere.
std::string render_svg(const BallPolygon& body, const RenderSpec& spec = {});

}  // namespace sball

#endif  // SBALL_RENDER_HPP_
