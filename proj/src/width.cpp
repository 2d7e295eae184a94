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

#include "sball/width.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sball {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void check_lune(const Lune& lune, const Tolerances& tol) {
  const double ang = distance(lune.pole_g, lune.pole_h);
  if (ang < tol.eps_geo || ang > kPi - tol.eps_geo) {
    throw Error(ErrorKind::kDegenerateLune, "lune poles equal or antipodal");
  }
}

// Outward supporting pole at the arc point with angle phi: the point at
// distance pi/2 from the touch point along the great circle through the
// arc's center.
SpherePoint arc_pole(const CircleArc& arc, double phi) {
  const SpherePoint x = arc.point_at(phi);
  return normalized(arc.center - x * std::cos(arc.radius));
}

struct Wedge {
  SpherePoint vertex;
  SpherePoint u_a;   // pole at the end of the incoming arc
  Vec3 w;            // rotation direction, unit, perpendicular to vertex and u_a
  double omega = 0;  // swept angle to the outgoing arc's start pole

  SpherePoint pole_at(double theta) const {
    return normalized(u_a * std::cos(theta) + w * std::sin(theta));
  }
};

Wedge wedge_after(const BallPolygon& body, std::size_t arc_index) {
  const std::size_t n = body.arcs.size();
  const CircleArc& a = body.arcs[arc_index];
  const CircleArc& b = body.arcs[(arc_index + 1) % n];
  Wedge wd;
  wd.vertex = body.vertices[a.v_end];
  wd.u_a = arc_pole(a, a.phi_start + a.phi_extent);
  const SpherePoint u_b = arc_pole(b, b.phi_start);
  Vec3 w = cross(wd.vertex, wd.u_a);
  if (dot(w, u_b) < 0.0) w = -w;
  wd.w = normalized(w);
  wd.omega = distance(wd.u_a, u_b);
  return wd;
}

// Piecewise parametrization of the fan: segment s < #arcs is the arc s with
// param = phi; segment s >= #arcs is the wedge after arc (s - #arcs) with
// param = theta in [0, omega].
struct FanParam {
  const BallPolygon& body;

  bool is_arc(int segment) const {
    return segment < static_cast<int>(body.arcs.size());
  }
  double lo(int segment) const {
    if (is_arc(segment)) return body.arcs[segment].phi_start;
    return 0.0;
  }
  double hi(int segment) const {
    if (is_arc(segment)) {
      return body.arcs[segment].phi_start + body.arcs[segment].phi_extent;
    }
    return wedge_after(body, segment - body.arcs.size()).omega;
  }
  SpherePoint pole(int segment, double param) const {
    if (is_arc(segment)) return arc_pole(body.arcs[segment], param);
    return wedge_after(body, segment - body.arcs.size()).pole_at(param);
  }
  SpherePoint touch(int segment, double param) const {
    if (is_arc(segment)) return body.arcs[segment].point_at(param);
    return wedge_after(body, segment - body.arcs.size()).vertex;
  }
};

double golden_min(double lo, double hi, const auto& f, double* arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  *arg = xm;
  return fm;
}

}  // namespace

std::pair<SpherePoint, SpherePoint> semicircle_centers(const Lune& lune,
                                                       const Tolerances& tol) {
  check_lune(lune, tol);
  const double c = dot(lune.pole_g, lune.pole_h);
  const SpherePoint m_g = normalized(lune.pole_h - lune.pole_g * c);
  const SpherePoint m_h = normalized(lune.pole_g - lune.pole_h * c);
  return {m_g, m_h};
}

double lune_thickness(const Lune& lune, const Tolerances& tol) {
  const auto [m_g, m_h] = semicircle_centers(lune, tol);
  return distance(m_g, m_h);
}

std::vector<FanEntry> supporting_pole_fan(const BallPolygon& body,
                                          double spacing) {
  if (!(spacing > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "fan spacing must be positive");
  }
  std::vector<FanEntry> fan;
  const std::size_t n = body.arcs.size();
  const bool closed_circle = n == 1 && body.arcs[0].v_start < 0;
  for (std::size_t i = 0; i < n; ++i) {
    const CircleArc& arc = body.arcs[i];
    const int steps =
        std::max(1, static_cast<int>(std::ceil(arc.arc_length() / spacing)));
    for (int k = 0; k < steps; ++k) {
      const double phi = arc.phi_start + arc.phi_extent * k / steps;
      fan.push_back({arc_pole(arc, phi), arc.point_at(phi),
                     static_cast<int>(i), phi});
    }
    if (closed_circle) continue;
    const Wedge wd = wedge_after(body, i);
    const int wsteps = std::max(1, static_cast<int>(std::ceil(wd.omega / spacing)));
    for (int k = 0; k < wsteps; ++k) {
      const double theta = wd.omega * k / wsteps;
      fan.push_back({wd.pole_at(theta), wd.vertex,
                     static_cast<int>(n + i), theta});
    }
  }
  return fan;
}

WidthResult width_at(const BallPolygon& body, const SpherePoint& u,
                     const std::vector<FanEntry>& fan) {
  const SupportResult sup = support_min(body, u);
  if (std::abs(sup.value) > body.tol.eps_geo) {
    throw Error(ErrorKind::kNotSupporting,
                "pole does not support the body (support margin nonzero)");
  }
  if (fan.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty supporting fan");
  }

  // Dense scan over the sampled supporting poles: the lune (u, u') is
  // thinnest where the poles are farthest apart, i.e. dot(u, u') minimal.
  std::size_t best = 0;
  double best_dot = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const double d = dot(u, fan[i].pole);
    if (d < best_dot) {
      best_dot = d;
      best = i;
    }
  }
  SpherePoint best_pole = fan[best].pole;

  // Golden-section refinement in the windows adjacent to the best sample.
  const FanParam fp{body};
  const std::size_t nf = fan.size();
  const FanEntry& e = fan[best];
  const FanEntry& prev = fan[(best + nf - 1) % nf];
  const FanEntry& next = fan[(best + 1) % nf];
  auto refine = [&](int segment, double lo, double hi) {
    if (!(hi - lo > 1e-14)) return;
    const auto f = [&](double p) { return dot(u, fp.pole(segment, p)); };
    double arg = lo;
    const double val = golden_min(lo, hi, f, &arg);
    if (val < best_dot) {
      best_dot = val;
      best_pole = fp.pole(segment, arg);
    }
  };
  if (nf >= 2) {
    const double lo =
        prev.segment == e.segment ? prev.param : fp.lo(e.segment);
    const double hi =
        next.segment == e.segment ? next.param : fp.hi(e.segment);
    refine(e.segment, lo, hi);
    if (prev.segment != e.segment) {
      refine(prev.segment, prev.param, fp.hi(prev.segment));
    }
    if (next.segment != e.segment) {
      refine(next.segment, fp.lo(next.segment), next.param);
    }
  } else {
    refine(e.segment, fp.lo(e.segment), fp.hi(e.segment));
  }

  WidthResult res;
  res.width = kPi - std::acos(std::clamp(best_dot, -1.0, 1.0));
  res.opposite_pole = best_pole;
  return res;
}

WidthResult width_at(const BallPolygon& body, const SpherePoint& u) {
  return width_at(body, u, supporting_pole_fan(body, body.tol.h));
}

MinWidthResult min_width(const BallPolygon& body) {
  const std::vector<FanEntry> fan = supporting_pole_fan(body, body.tol.h);
  std::size_t best = 0;
  WidthResult best_w;
  best_w.width = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const WidthResult w = width_at(body, fan[i].pole, fan);
    if (w.width < best_w.width) {
      best_w = w;
      best = i;
    }
  }

  // Local refinement of the outer pole around the best sample.
  const FanParam fp{body};
  const std::size_t nf = fan.size();
  const FanEntry& e = fan[best];
  const FanEntry& prev = fan[(best + nf - 1) % nf];
  const FanEntry& next = fan[(best + 1) % nf];
  SpherePoint best_pole = e.pole;
  auto refine = [&](int segment, double lo, double hi) {
    if (!(hi - lo > 1e-10)) return;
    const auto f = [&](double p) {
      return width_at(body, fp.pole(segment, p), fan).width;
    };
    double arg = lo;
    const double val = golden_min(lo, hi, f, &arg);
    if (val < best_w.width) {
      const SpherePoint pole = fp.pole(segment, arg);
      best_w = width_at(body, pole, fan);
      best_pole = pole;
    }
  };
  if (nf >= 2) {
    const double lo = prev.segment == e.segment ? prev.param : fp.lo(e.segment);
    const double hi = next.segment == e.segment ? next.param : fp.hi(e.segment);
    refine(e.segment, lo, hi);
  }

  MinWidthResult res;
  res.width = best_w.width;
  res.lune = Lune{best_pole, best_w.opposite_pole};
  return res;
}

WidthProfile width_profile(const BallPolygon& body, double spacing) {
  const double s = spacing > 0.0 ? spacing : body.tol.h;
  const std::vector<FanEntry> fan = supporting_pole_fan(body, s);
  WidthProfile profile;
  profile.entries.reserve(fan.size());
  for (const FanEntry& e : fan) {
    const WidthResult w = width_at(body, e.pole, fan);
    profile.entries.push_back({e.pole, e.touch, w.width});
  }
  return profile;
}

VerificationReport is_constant_width(const BallPolygon& body, double delta,
                                     double tol_width) {
  if (!(delta > 0.0 && delta < kPi / 2)) {
    throw Error(ErrorKind::kDeltaOutOfRange, "delta must lie in (0, pi/2)");
  }
  const WidthProfile profile = width_profile(body, body.tol.h);
  VerificationReport rep;
  rep.check = "width";
  rep.tol = tol_width;
  rep.n_samples = profile.entries.size();
  rep.worst.margin = std::numeric_limits<double>::infinity();
  for (const WidthProfileEntry& e : profile.entries) {
    const double margin = tol_width - std::abs(e.width - delta);
    if (margin < rep.worst.margin) rep.worst = {e.pole, margin};
    if (margin < 0.0) rep.violations.push_back({e.pole, margin});
  }
  rep.passed = rep.worst.margin >= 0.0;
  return rep;
}

VerificationReport check_claim2(const BallPolygon& body, double tol_margin) {
  const MinWidthResult mw = min_width(body);
  const auto [m_g, m_h] = semicircle_centers(mw.lune, body.tol);
  VerificationReport rep;
  rep.check = "claim2";
  rep.tol = tol_margin;
  rep.n_samples = 2;
  rep.worst.margin = std::numeric_limits<double>::infinity();
  for (const SpherePoint& m : {m_g, m_h}) {
    const double margin = contains(body, m) + tol_margin;
    if (margin < rep.worst.margin) rep.worst = {m, margin};
    if (margin < 0.0) rep.violations.push_back({m, margin});
  }
  rep.passed = rep.worst.margin >= 0.0;
  return rep;
}

}  // namespace sball
