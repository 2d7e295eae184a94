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
//
// Command-line surface: generators, completion, verification, width
// profiles and SVG rendering for spherical convex bodies.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sball/completeness.hpp"
#include "sball/generators.hpp"
#include "sball/io.hpp"
#include "sball/render.hpp"
#include "sball/width.hpp"

namespace {

using namespace sball;

SpherePoint parse_pole(const std::string& text, const char* what) {
  double x = 0, y = 0, z = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " must be given as X,Y,Z");
  }
  return normalized(Vec3{x, y, z});
}

void print_report(const VerificationReport& r) {
  std::printf("[%s] check=%-8s tol=%g worst_margin=% .6g n_samples=%zu\n",
              r.passed ? "PASS" : "FAIL", r.check.c_str(), r.tol,
              r.worst.margin, r.n_samples);
}

int cmd_verify(const std::string& body_file, double delta,
               const std::string& checks_csv, double tol_check,
               const std::string& report_file, double grid_h, int n_triples,
               std::uint64_t rng_seed) {
  const BallPolygon body = read_body_file(body_file);
  std::vector<VerificationReport> reports;
  std::string item;
  std::stringstream ss(checks_csv);
  while (std::getline(ss, item, ',')) {
    if (item == "complete") {
      reports.push_back(is_complete(body, delta, tol_check, grid_h));
    } else if (item == "width") {
      reports.push_back(is_constant_width(body, delta, tol_check));
    } else if (item == "diameter") {
      reports.push_back(is_constant_diameter(body, delta, tol_check));
    } else if (item == "claim2") {
      reports.push_back(check_claim2(body, tol_check));
    } else if (item == "piece") {
      reports.push_back(
          check_pieces_random(body, delta, tol_check, n_triples, rng_seed));
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unknown check: " + item);
    }
  }
  bool all_passed = true;
  for (const VerificationReport& r : reports) {
    print_report(r);
    all_passed = all_passed && r.passed;
  }
  if (!report_file.empty()) {
    write_file_atomic(report_file, reports_to_string(reports));
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical convex bodies: completion, constant width, verification"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate bodies and seed sets");
  gen->require_subcommand(1);

  auto* gen_reuleaux = gen->add_subcommand("reuleaux", "Reuleaux odd-gon");
  int k = 3;
  double delta = 1.0;
  std::string pole_str = "0,0,1";
  std::string out_file;
  gen_reuleaux->add_option("--k", k, "number of vertices (odd, >= 3)")->required();
  gen_reuleaux->add_option("--delta", delta, "width, radians")->required();
  gen_reuleaux->add_option("--pole", pole_str, "center pole X,Y,Z");
  gen_reuleaux->add_option("-o,--out", out_file, "output body file")->required();

  auto* gen_seeds = gen->add_subcommand("seeds", "random seed point set");
  int n_seeds = 3;
  double cap_radius = 0.1;
  std::uint64_t rng_seed = 1;
  std::string cap_pole_str = "0,0,1";
  gen_seeds->add_option("--n", n_seeds, "number of points")->required();
  gen_seeds->add_option("--delta", delta, "max pairwise distance")->required();
  gen_seeds->add_option("--cap-radius", cap_radius, "sampling cap radius")->required();
  gen_seeds->add_option("--rng-seed", rng_seed, "random seed")->required();
  gen_seeds->add_option("--cap-pole", cap_pole_str, "cap pole X,Y,Z");
  gen_seeds->add_option("-o,--out", out_file, "output seeds file")->required();

  // complete
  auto* cmd_complete = app.add_subcommand("complete", "complete a seed set");
  std::string seeds_file;
  double resolution = 0.01;
  std::string cpole_str;
  std::uint64_t seed_order = 0;
  cmd_complete->add_option("--seeds", seeds_file, "spts-1 seed file")->required();
  cmd_complete->add_option("--delta", delta, "target diameter")->required();
  cmd_complete->add_option("--resolution", resolution, "grid spacing")->required();
  cmd_complete->add_option("--cap-pole", cpole_str,
                           "working cap pole X,Y,Z (default: from seeds file)");
  cmd_complete->add_option("--seed-order", seed_order, "lattice start offset");
  cmd_complete->add_option("-o,--out", out_file, "output body file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::string body_file, checks = "complete,width,diameter", report_file;
  double tol_check = 0.03, grid_h = 0.0;
  int n_triples = 50;
  std::uint64_t verify_seed = 12345;
  verify->add_option("--body", body_file, "sball-1 body file")->required();
  verify->add_option("--delta", delta, "nominal diameter")->required();
  verify->add_option("--checks", checks,
                     "comma list: complete,width,diameter,claim2,piece");
  verify->add_option("--tol", tol_check, "verification tolerance");
  verify->add_option("--report", report_file, "write JSON report here");
  verify->add_option("--grid", grid_h, "completeness grid spacing");
  verify->add_option("--triples", n_triples, "piece check triple count");
  verify->add_option("--rng-seed", verify_seed, "piece check sampling seed");

  // profile
  auto* profile = app.add_subcommand("profile", "width profile CSV");
  int n_samples = 500;
  profile->add_option("--body", body_file, "sball-1 body file")->required();
  profile->add_option("--samples", n_samples, "approximate profile size");
  profile->add_option("-o,--out", out_file, "output CSV file")->required();

  // render
  auto* render = app.add_subcommand("render", "SVG figure");
  std::string view_pole_str;
  int image_size = 800;
  render->add_option("--body", body_file, "sball-1 body file")->required();
  render->add_option("--view-pole", view_pole_str, "view pole X,Y,Z");
  render->add_option("--size", image_size, "image size, pixels");
  render->add_option("-o,--out", out_file, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_reuleaux->parsed()) {
      const BallPolygon body =
          reuleaux_odd_gon(k, delta, parse_pole(pole_str, "--pole"));
      write_body_file(out_file, body);
      std::printf("wrote %s (%zu balls, %zu vertices)\n", out_file.c_str(),
                  body.balls.size(), body.vertices.size());
      return 0;
    }
    if (gen_seeds->parsed()) {
      SeedSet s;
      s.delta = delta;
      s.cap_pole = parse_pole(cap_pole_str, "--cap-pole");
      s.points = random_cap_points(n_seeds, s.cap_pole, cap_radius, delta, rng_seed);
      write_seeds_file(out_file, s);
      std::printf("wrote %s (%zu points)\n", out_file.c_str(), s.points.size());
      return 0;
    }
    if (cmd_complete->parsed()) {
      const SeedSet s = read_seeds_file(seeds_file);
      CompletionConfig cfg;
      cfg.delta = delta;
      cfg.resolution = resolution;
      cfg.cap_pole = cpole_str.empty() ? s.cap_pole
                                       : parse_pole(cpole_str, "--cap-pole");
      cfg.seed_order = seed_order;
      const BallPolygon body = complete(s.points, cfg);
      write_body_file(out_file, body);
      std::printf("wrote %s (%zu balls, diameter %.6f)\n", out_file.c_str(),
                  body.balls.size(), diameter(body).value);
      return 0;
    }
    if (verify->parsed()) {
      return cmd_verify(body_file, delta, checks, tol_check, report_file,
                        grid_h, n_triples, verify_seed);
    }
    if (profile->parsed()) {
      const BallPolygon body = read_body_file(body_file);
      const std::size_t n0 = supporting_pole_fan(body, body.tol.h).size();
      const double spacing =
          body.tol.h * static_cast<double>(n0) / std::max(1, n_samples);
      const WidthProfile prof = width_profile(body, spacing);
      write_file_atomic(out_file, profile_to_csv(prof));
      std::printf("wrote %s (%zu entries)\n", out_file.c_str(),
                  prof.entries.size());
      return 0;
    }
    if (render->parsed()) {
      const BallPolygon body = read_body_file(body_file);
      RenderSpec spec;
      if (!view_pole_str.empty()) {
        spec.view_pole = parse_pole(view_pole_str, "--view-pole");
      }
      spec.image_size = image_size;
      write_file_atomic(out_file, render_svg(body, spec));
      std::printf("wrote %s\n", out_file.c_str());
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
