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

#include "sball/render.hpp"

#include <cmath>
#include <cstdio>

namespace sball {

PlanePoint project_orthographic(const SpherePoint& x,
                                const SpherePoint& view_pole) {
  if (dot(x, view_pole) < -1e-12) {
    throw Error(ErrorKind::kBackHemisphere,
                "point lies behind the projection plane");
  }
  const auto [e1, e2] = frame_perp(view_pole);
  return {dot(x, e1), dot(x, e2)};
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const BallPolygon& body, const RenderSpec& spec) {
  SpherePoint pole = spec.view_pole;
  if (pole.norm2() < 0.5) {
    pole = body.witness_pole;
  } else {
    pole = normalized(pole);
  }
  if (support_min(body, pole).value <= 0.0) {
    throw Error(ErrorKind::kBackHemisphere,
                "body is not fully on the visible hemisphere");
  }

  const double size = spec.image_size;
  const double scale = size / 2.2;  // plane [-1.1, 1.1] -> image
  auto map = [&](const PlanePoint& p) {
    return PlanePoint{size / 2 + scale * p.u, size / 2 - scale * p.v};
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.image_size) + "\" height=\"" +
         std::to_string(spec.image_size) + "\" viewBox=\"0 0 " +
         std::to_string(spec.image_size) + " " + std::to_string(spec.image_size) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Sphere silhouette.
  svg += "<circle cx=\"" + fmt(size / 2) + "\" cy=\"" + fmt(size / 2) +
         "\" r=\"" + fmt(scale) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  std::string path;
  bool first = true;
  for (const CircleArc& arc : body.arcs) {
    const int n = std::max(
        8, static_cast<int>(std::ceil(arc.arc_length() / (body.tol.h / 2))));
    const int from = first ? 0 : 1;
    for (int k = from; k <= n; ++k) {
      const SpherePoint x = arc.point_at(arc.phi_start + arc.phi_extent * k / n);
      const PlanePoint p = map(project_orthographic(x, pole));
      path += (first && k == from) ? "M " : "L ";
      path += fmt(p.u) + " " + fmt(p.v) + " ";
    }
    first = false;
  }
  path += "Z";
  svg += "<path d=\"" + path + "\" fill=\"" + spec.fill +
         "\" fill-opacity=\"0.35\" stroke=\"" + spec.stroke +
         "\" stroke-width=\"" + fmt(spec.stroke_width) + "\"/>\n";

  if (spec.draw_vertices) {
    for (const SpherePoint& v : body.vertices) {
      const PlanePoint p = map(project_orthographic(v, pole));
      svg += "<circle cx=\"" + fmt(p.u) + "\" cy=\"" + fmt(p.v) +
             "\" r=\"3\" fill=\"" + spec.stroke + "\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace sball
