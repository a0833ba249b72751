// Command line driver: compute a Dirichlet domain from a fundamental
// polygon, generate example inputs, or just validate an input file.
//
// Exit codes: 0 success, 1 input/schema problem, 2 validation failure,
// 3 numeric/algorithmic failure.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hypdom/pipeline.hpp"
#include "hypdom/svg.hpp"

namespace {

constexpr std::uint64_t kSampleSeed = 0x51ab7e5eedULL;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    hypdom::write_file(out_path, text);
  }
}

int run_compute(const std::string& in_path, const std::string& out_path,
                const std::string& svg_path, const std::string& dump_dir,
                double tol_scale, std::uint64_t flip_cap, int samples) {
  hypdom::PipelineOptions opts;
  opts.tol = hypdom::Tolerances{}.scaled(tol_scale / 1e-9);
  opts.flip_cap = flip_cap;

  hypdom::PolygonInput in = hypdom::read_polygon_file(in_path);
  hypdom::PipelineResult R = hypdom::run_pipeline(in, opts);

  emit(hypdom::to_json(R.dirichlet), out_path);
  if (!svg_path.empty()) {
    hypdom::write_file(svg_path, hypdom::render_svg(R));
  }
  if (!dump_dir.empty()) {
    hypdom::write_file(dump_dir + "/stage1_loops.json",
                       hypdom::loops_json(R.loops));
    hypdom::write_file(dump_dir + "/stage2_convex.json",
                       hypdom::convex_json(R.convex));
    hypdom::write_file(dump_dir + "/stage3_delaunay.json",
                       hypdom::delaunay_json(R.delaunay, R.flip_stats));
  }

  std::cerr << "genus " << R.dirichlet.genus << ", "
            << R.dirichlet.vertices.size() << " sides, area "
            << R.dirichlet.area << ", " << R.flip_stats.flips << " flips\n";

  if (samples > 0) {
    hypdom::SampleCheck chk = hypdom::sample_check(
        R.dirichlet, samples, 10.0 * opts.tol.geom, kSampleSeed);
    std::cerr << "sampled " << chk.samples << " interior points: "
              << chk.violations << " violations, worst excess "
              << chk.worst_excess << "\n";
    if (chk.violations > 0) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet domains of closed hyperbolic surfaces"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path, dump_dir;
  double tol = 1e-9;
  std::uint64_t flip_cap = 10'000'000;
  int samples = 0;

  CLI::App* compute = app.add_subcommand(
      "compute", "compute the Dirichlet domain of an input polygon");
  compute->add_option("input", in_path, "input JSON file")->required();
  compute->add_option("--out", out_path, "output JSON file (default stdout)");
  compute->add_option("--svg", svg_path, "write an SVG picture of all stages");
  compute->add_option("--dump-stages", dump_dir,
                      "directory for per-stage JSON dumps");
  compute->add_option("--tol", tol, "geometric tolerance (default 1e-9)");
  compute->add_option("--flip-cap", flip_cap, "edge flip budget");
  compute->add_option("--samples", samples,
                      "verify with this many random interior samples");

  int genus = 2;
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "generate example inputs");
  generate->require_subcommand(1);
  CLI::App* regular = generate->add_subcommand(
      "regular", "regular 4g-gon with opposite sides identified");
  regular->add_option("--genus", genus, "genus (>= 2)")->required();
  regular->add_option("--out", gen_out, "output JSON file (default stdout)");

  std::string val_path;
  double val_tol = 1e-9;
  CLI::App* validate =
      app.add_subcommand("validate", "validate an input polygon");
  validate->add_option("input", val_path, "input JSON file")->required();
  validate->add_option("--tol", val_tol, "geometric tolerance (default 1e-9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      return run_compute(in_path, out_path, svg_path, dump_dir, tol, flip_cap,
                         samples);
    }
    if (generate->parsed()) {
      hypdom::Tolerances t;
      hypdom::GeneratedPolygon G = hypdom::regular_polygon(genus, t);
      emit(hypdom::to_json(G), gen_out);
      return 0;
    }
    if (validate->parsed()) {
      hypdom::PolygonInput in = hypdom::read_polygon_file(val_path);
      hypdom::Tolerances t = hypdom::Tolerances{}.scaled(val_tol / 1e-9);
      hypdom::FundamentalPolygon P = hypdom::validate_input(in, t);
      std::cout << "ok: genus " << P.genus() << ", " << P.num_sides()
                << " sides, " << P.num_pairings() << " pairings, "
                << P.num_orbits() << " vertex orbits, area "
                << P.polygon().area() << "\n";
      return 0;
    }
  } catch (const hypdom::Error& e) {
    std::cerr << "error (" << hypdom::to_string(e.kind()) << "): " << e.what()
              << "\n";
    return hypdom::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
