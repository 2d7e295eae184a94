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

#include "sball/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sball/kernels.hpp"

namespace sball {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double phi) {
  double a = std::fmod(phi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

SpherePoint CircleArc::point_at(double phi) const {
  const double cr = std::cos(radius);
  const double sr = std::sin(radius);
  return normalized(center * cr +
                    (e1 * std::cos(phi) + e2 * std::sin(phi)) * sr);
}

double CircleArc::angle_of(const SpherePoint& x) const {
  return wrap_angle(std::atan2(dot(x, e2), dot(x, e1)));
}

bool CircleArc::angle_in_range(double phi, double slack) const {
  if (phi_extent >= kTwoPi) return true;
  const double d = wrap_angle(phi - phi_start);
  return d <= phi_extent + slack || d >= kTwoPi - slack;
}

CircleArc CircleArc::on_circle(int ball_index, const SpherePoint& center,
                               double radius) {
  CircleArc arc;
  arc.ball_index = ball_index;
  arc.center = center;
  arc.radius = radius;
  const auto [e1, e2] = frame_perp(center);
  arc.e1 = e1;
  arc.e2 = e2;
  arc.phi_start = 0.0;
  arc.phi_extent = kTwoPi;
  return arc;
}

namespace {

// Membership context over a fixed ball list: x is inside every ball within
// slack iff dot(x, c_k) >= cos(r_k + slack) for all k.
struct Membership {
  kern::PointsSoA centers;
  std::vector<double> thresholds;

  Membership(const std::vector<Ball>& balls, double slack) {
    centers.reserve(balls.size());
    thresholds.reserve(balls.size());
    for (const Ball& b : balls) {
      centers.push_back(b.center);
      thresholds.push_back(std::cos(std::min(b.radius + slack, kPi)));
    }
  }

  bool inside_all(const SpherePoint& x) const {
    return kern::all_dots_at_least(centers, x, thresholds.data());
  }
};

struct BoundaryData {
  std::vector<SpherePoint> vertices;
  std::vector<CircleArc> arcs;  // in cyclic chain order
};

// Assembles the boundary of the intersection of `balls`. Intersection points
// closer than `weld_chord` (Euclidean) are merged into one vertex. Throws
// kEmptyBody when no boundary exists and kDegenerateBoundary when the arcs
// do not close into a single chain.
BoundaryData build_boundary(const std::vector<Ball>& balls,
                            const Tolerances& tol, double weld_chord) {
  const int n = static_cast<int>(balls.size());
  const Membership memb(balls, tol.eps_geo);

  // Candidate vertices: pairwise transversal circle intersections that lie
  // in every ball. Tangency points are contacts, not vertices.
  std::vector<SpherePoint> verts;
  const double weld2 = weld_chord * weld_chord;
  auto add_vertex = [&](const SpherePoint& p) {
    for (const SpherePoint& q : verts) {
      if ((p - q).norm2() <= weld2) return;
    }
    verts.push_back(p);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<SpherePoint> pts;
      try {
        pts = circle_intersections(balls[i], balls[j], tol);
      } catch (const Error&) {
        continue;  // coincident circles are handled by deduplication
      }
      if (pts.size() != 2) continue;
      for (const SpherePoint& p : pts) {
        if (memb.inside_all(p)) add_vertex(p);
      }
    }
  }

  // Assign vertices to every circle they lie on (within the weld scale), so
  // near-concurrent circles are split consistently.
  const int nv = static_cast<int>(verts.size());
  std::vector<std::vector<std::pair<double, int>>> on_circle(n);
  const double weld_ang = weld_chord;  // chord and angle agree at this scale
  for (int vi = 0; vi < nv; ++vi) {
    for (int bi = 0; bi < n; ++bi) {
      if (std::abs(distance(verts[vi], balls[bi].center) - balls[bi].radius) <=
          weld_ang) {
        CircleArc frame = CircleArc::on_circle(bi, balls[bi].center,
                                               balls[bi].radius);
        on_circle[bi].push_back({frame.angle_of(verts[vi]), vi});
      }
    }
  }

  BoundaryData out;
  out.vertices = verts;
  std::vector<CircleArc> arcs;
  for (int bi = 0; bi < n; ++bi) {
    CircleArc base = CircleArc::on_circle(bi, balls[bi].center,
                                          balls[bi].radius);
    auto& vlist = on_circle[bi];
    if (vlist.empty()) {
      // Whole circle is either boundary or irrelevant; one sample decides.
      if (memb.inside_all(base.point_at(0.0))) arcs.push_back(base);
      continue;
    }
    std::sort(vlist.begin(), vlist.end());
    const int m = static_cast<int>(vlist.size());
    for (int k = 0; k < m; ++k) {
      const auto& [phi_a, va] = vlist[k];
      const auto& [phi_b, vb] = vlist[(k + 1) % m];
      double extent = wrap_angle(phi_b - phi_a);
      if (m == 1) extent = kTwoPi;  // single vertex: the loop back to itself
      if (extent <= 0.0) continue;
      CircleArc arc = base;
      arc.phi_start = phi_a;
      arc.phi_extent = extent;
      arc.v_start = va;
      arc.v_end = vb;
      if (memb.inside_all(arc.point_at(phi_a + extent / 2.0))) {
        arcs.push_back(arc);
      }
    }
  }

  if (arcs.empty()) {
    throw Error(ErrorKind::kEmptyBody, "ball intersection has empty interior");
  }

  // Full-circle boundary: only consistent as the sole component.
  bool has_full = false;
  for (const CircleArc& a : arcs) has_full = has_full || a.v_start < 0;
  if (has_full) {
    if (arcs.size() != 1) {
      throw Error(ErrorKind::kDegenerateBoundary,
                  "full circle mixed with boundary arcs");
    }
    out.vertices.clear();
    out.arcs = arcs;
    return out;
  }

  // Chain the arcs: each used vertex needs exactly one outgoing and one
  // incoming arc. Vertices touched by no arc are tangency contacts; drop.
  std::sort(arcs.begin(), arcs.end(), [](const CircleArc& a, const CircleArc& b) {
    if (a.ball_index != b.ball_index) return a.ball_index < b.ball_index;
    return a.phi_start < b.phi_start;
  });
  std::vector<int> out_arc(nv, -1), in_deg(nv, 0);
  for (int ai = 0; ai < static_cast<int>(arcs.size()); ++ai) {
    const CircleArc& a = arcs[ai];
    if (out_arc[a.v_start] != -1) {
      throw Error(ErrorKind::kDegenerateBoundary, "vertex with two outgoing arcs");
    }
    out_arc[a.v_start] = ai;
    in_deg[a.v_end]++;
  }
  for (const CircleArc& a : arcs) {
    if (in_deg[a.v_start] != 1 || out_arc[a.v_end] == -1) {
      throw Error(ErrorKind::kDegenerateBoundary, "boundary chain is broken");
    }
  }

  std::vector<CircleArc> chain;
  chain.reserve(arcs.size());
  int cur = 0;
  do {
    chain.push_back(arcs[cur]);
    cur = out_arc[arcs[cur].v_end];
  } while (cur != 0 && chain.size() <= arcs.size());
  if (chain.size() != arcs.size()) {
    throw Error(ErrorKind::kDegenerateBoundary,
                "boundary has more than one component");
  }

  // Keep only vertices used by the chain, in first-use order.
  std::vector<int> remap(nv, -1);
  std::vector<SpherePoint> used;
  for (CircleArc& a : chain) {
    for (int* v : {&a.v_start, &a.v_end}) {
      if (remap[*v] == -1) {
        remap[*v] = static_cast<int>(used.size());
        used.push_back(verts[*v]);
      }
      *v = remap[*v];
    }
  }
  out.vertices = std::move(used);
  out.arcs = std::move(chain);
  return out;
}

// Candidate boundary points extremal for distance to `q` on one arc: the
// point of the circle farthest from q, when it lies on the arc.
void far_critical_point(const CircleArc& arc, const SpherePoint& q,
                        std::vector<SpherePoint>* out) {
  const double a = dot(arc.e1, q);
  const double b = dot(arc.e2, q);
  const double m = std::hypot(a, b);
  if (m <= 1e-15) {
    out->push_back(arc.point_at(arc.phi_start));
    return;
  }
  const double phi = wrap_angle(std::atan2(-b, -a));
  if (arc.angle_in_range(phi, 1e-9)) out->push_back(arc.point_at(phi));
}

}  // namespace

double contains(const BallPolygon& body, const SpherePoint& x) {
  double margin = std::numeric_limits<double>::infinity();
  for (const Ball& b : body.balls) {
    margin = std::min(margin, b.radius - distance(x, b.center));
  }
  return margin;
}

SupportResult support_min(const BallPolygon& body, const SpherePoint& u) {
  SupportResult best{std::numeric_limits<double>::infinity(), {}};
  auto consider = [&](const SpherePoint& p) {
    const double f = dot(p, u);
    if (f < best.value) {
      best.value = f;
      best.argmin = p;
    }
  };
  if (!body.vertex_cloud.empty()) {
    const kern::MinDot md = kern::min_dot(body.vertex_cloud, u);
    best.value = md.value;
    best.argmin = body.vertices[md.index];
  }
  for (const CircleArc& arc : body.arcs) {
    const double a = dot(arc.e1, u);
    const double b = dot(arc.e2, u);
    const double m = std::hypot(a, b);
    if (m <= 1e-15) {
      consider(arc.point_at(arc.phi_start + arc.phi_extent / 2.0));
      continue;
    }
    const double phi = wrap_angle(std::atan2(-b, -a));
    if (arc.angle_in_range(phi)) consider(arc.point_at(phi));
  }
  // Interior critical point: the functional's global minimum on the sphere.
  const SpherePoint au = antipode(u);
  if (contains(body, au) >= 0.0) consider(au);
  return best;
}

FarthestResult farthest_distance(const BallPolygon& body, const SpherePoint& x) {
  const SupportResult s = support_min(body, x);
  return {std::acos(std::clamp(s.value, -1.0, 1.0)), s.argmin};
}

DiameterResult diameter(const BallPolygon& body) {
  DiameterResult best;
  best.value = -1.0;
  auto consider = [&](const SpherePoint& p, const SpherePoint& q) {
    const double d = distance(p, q);
    if (d > best.value) {
      best.value = d;
      best.a = p;
      best.b = q;
    }
  };

  const auto& vs = body.vertices;
  const auto& arcs = body.arcs;

  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) consider(vs[i], vs[j]);
  }

  for (const SpherePoint& v : vs) {
    for (const CircleArc& arc : arcs) {
      std::vector<SpherePoint> far;
      far_critical_point(arc, v, &far);
      for (const SpherePoint& p : far) consider(v, p);
    }
  }

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i; j < arcs.size(); ++j) {
      const CircleArc& a1 = arcs[i];
      const CircleArc& a2 = arcs[j];
      if (a1.ball_index == a2.ball_index) {
        // Antipodal parameters on one circle realize distance 2r; feasible
        // iff some phi lies on a1 with phi+pi on a2.
        const double cand[] = {a1.phi_start, a1.phi_start + a1.phi_extent,
                               a1.phi_start + a1.phi_extent / 2.0,
                               a2.phi_start - kPi, a2.phi_start + a2.phi_extent - kPi,
                               a2.phi_start + a2.phi_extent / 2.0 - kPi};
        for (double phi : cand) {
          if (a1.angle_in_range(wrap_angle(phi)) &&
              a2.angle_in_range(wrap_angle(phi + kPi))) {
            consider(a1.point_at(phi), a1.point_at(phi + kPi));
            break;
          }
        }
        continue;
      }
      const Vec3 n = cross(a1.center, a2.center);
      if (n.norm2() <= 1e-24) continue;  // concentric circles are deduplicated
      const Ball cut(normalized(n), kPi / 2);
      std::vector<SpherePoint> p1, p2;
      try {
        for (const SpherePoint& p :
             circle_intersections(Ball(a1.center, a1.radius), cut, body.tol)) {
          if (a1.angle_in_range(a1.angle_of(p), 1e-9)) p1.push_back(p);
        }
        for (const SpherePoint& p :
             circle_intersections(Ball(a2.center, a2.radius), cut, body.tol)) {
          if (a2.angle_in_range(a2.angle_of(p), 1e-9)) p2.push_back(p);
        }
      } catch (const Error&) {
        continue;
      }
      for (const SpherePoint& p : p1) {
        for (const SpherePoint& q : p2) consider(p, q);
      }
    }
  }
  return best;
}

HemisphereResult enclosing_hemisphere(const BallPolygon& body) {
  Vec3 sum{0.0, 0.0, 0.0};
  for (const Ball& b : body.balls) sum = sum + b.center;
  SpherePoint u = sum.norm() > 1e-12 ? normalized(sum) : body.balls[0].center;

  SupportResult s = support_min(body, u);
  double step = 0.5;
  for (int it = 0; it < 200 && s.value < kHemisphereMarginMin; ++it) {
    if (step < 1e-10) break;
    const SpherePoint cand = normalized(u + s.argmin * step);
    const SupportResult cs = support_min(body, cand);
    if (cs.value > s.value) {
      u = cand;
      s = cs;
    } else {
      step *= 0.5;
    }
  }
  if (s.value < kHemisphereMarginMin) {
    throw Error(ErrorKind::kNoEnclosingHemisphere,
                "support margin below minimum for every tested pole");
  }
  return {u, s.value};
}

std::vector<SpherePoint> sample_boundary(const BallPolygon& body,
                                         double spacing) {
  if (!(spacing > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "spacing must be positive");
  }
  std::vector<SpherePoint> out;
  for (const CircleArc& arc : body.arcs) {
    const double len = arc.arc_length();
    const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int k = 0; k < n; ++k) {
      out.push_back(arc.point_at(arc.phi_start + arc.phi_extent * k / n));
    }
  }
  return out;
}

BallPolygon make_body(std::vector<Ball> balls, const Tolerances& tol,
                      double delta_tag) {
  tol.validate();
  if (balls.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "ball list must be nonempty");
  }
  for (Ball& b : balls) {
    if (std::abs(b.center.norm() - 1.0) > 1e-6) {
      throw Error(ErrorKind::kInvalidArgument, "ball center is not a unit vector");
    }
    b.center = normalized(b.center);
    if (!(b.radius > 0.0 && b.radius <= kPi / 2 + tol.eps_alg)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "ball radius must lie in (0, pi/2]");
    }
    b.radius = std::min(b.radius, kPi / 2);
  }

  // Deduplicate concentric balls: keep the smallest.
  const std::size_t n0 = balls.size();
  std::vector<char> dropped(n0, 0);
  for (std::size_t i = 0; i < n0; ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = i + 1; j < n0; ++j) {
      if (dropped[j]) continue;
      if (distance(balls[i].center, balls[j].center) <= tol.eps_geo) {
        if (balls[i].radius <= balls[j].radius) {
          dropped[j] = 1;
        } else {
          dropped[i] = 1;
          break;
        }
      }
    }
  }
  std::vector<Ball> kept;
  kept.reserve(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    if (!dropped[i]) kept.push_back(balls[i]);
  }

  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (distance(kept[i].center, kept[j].center) >=
          kept[i].radius + kept[j].radius - tol.eps_geo) {
        throw Error(ErrorKind::kEmptyBody, "two caps are disjoint or touching");
      }
    }
  }

  // Near-concurrent circles can defeat a fixed weld; widen and retry.
  BoundaryData bd;
  bool built = false;
  for (double weld : {3e-6, 1e-5, 3e-5}) {
    try {
      bd = build_boundary(kept, tol, weld);
      built = true;
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateBoundary) throw;
    }
  }
  if (!built) {
    throw Error(ErrorKind::kDegenerateBoundary,
                "could not assemble a consistent boundary chain");
  }

  // Drop balls that contribute no arc and clear the boundary by more than
  // eps_geo; those are redundant for the intersection.
  std::vector<char> contributes(kept.size(), 0);
  for (const CircleArc& a : bd.arcs) contributes[a.ball_index] = 1;
  std::vector<int> remap(kept.size(), -1);
  std::vector<Ball> final_balls;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!contributes[i]) {
      double max_dist = 0.0;
      for (const SpherePoint& v : bd.vertices) {
        max_dist = std::max(max_dist, distance(v, kept[i].center));
      }
      std::vector<SpherePoint> crit;
      for (const CircleArc& a : bd.arcs) far_critical_point(a, kept[i].center, &crit);
      for (const SpherePoint& p : crit) {
        max_dist = std::max(max_dist, distance(p, kept[i].center));
      }
      if (kept[i].radius - max_dist > tol.eps_geo) continue;  // redundant
    }
    remap[i] = static_cast<int>(final_balls.size());
    final_balls.push_back(kept[i]);
  }
  for (CircleArc& a : bd.arcs) a.ball_index = remap[a.ball_index];

  BallPolygon body;
  body.balls = std::move(final_balls);
  body.delta = delta_tag;
  body.vertices = std::move(bd.vertices);
  body.arcs = std::move(bd.arcs);
  body.vertex_cloud = kern::PointsSoA(body.vertices);
  body.tol = tol;
  const HemisphereResult hemi = enclosing_hemisphere(body);
  body.witness_pole = hemi.pole;
  return body;
}

}  // namespace sball
