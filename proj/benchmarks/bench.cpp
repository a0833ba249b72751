#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hypdom/generate.hpp"
#include "hypdom/geometry.hpp"
#include "hypdom/io.hpp"
#include "hypdom/pipeline.hpp"

using namespace hypdom;

namespace {

std::vector<DiskPoint> sample_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<DiskPoint> out;
  while (out.size() < n) {
    double x = u(rng), y = u(rng);
    if (x * x + y * y < 0.64) out.emplace_back(x, y);
  }
  return out;
}

std::vector<Isometry> sample_isometries(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> rad(0.0, 2.0);
  std::vector<Isometry> out;
  for (std::size_t i = 0; i < n; ++i) {
    double t = ang(rng), d = rad(rng);
    Isometry translate(Complex(std::cosh(d / 2), 0),
                       std::polar(std::sinh(d / 2), t));
    Isometry rotate(std::polar(1.0, ang(rng) / 2), Complex(0, 0));
    out.push_back(rotate * translate);
  }
  return out;
}

void BM_Dist(benchmark::State& state) {
  auto pts = sample_points(1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist(pts[i % 1024], pts[(i + 7) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Dist);

void BM_Compose(benchmark::State& state) {
  auto gs = sample_isometries(256, 2);
  Isometry acc;
  std::size_t i = 0;
  for (auto _ : state) {
    acc = gs[i % 256] * acc;
    benchmark::DoNotOptimize(acc);
    ++i;
  }
}
BENCHMARK(BM_Compose);

void BM_Apply(benchmark::State& state) {
  auto gs = sample_isometries(256, 3);
  auto pts = sample_points(256, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gs[i % 256].apply(pts[(i + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_Apply);

void BM_InCircle(benchmark::State& state) {
  auto pts = sample_points(1024, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_circle_det(pts[i % 1024], pts[(i + 1) % 1024],
                                           pts[(i + 2) % 1024],
                                           pts[(i + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_InCircle);

void BM_Circumcenter(benchmark::State& state) {
  // synthesized concyclic triples so the call never throws
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<std::array<DiskPoint, 3>> triples;
  for (int k = 0; k < 256; ++k) {
    double cx = u(rng), cy = u(rng);
    Isometry frame = Isometry::point_to_origin(DiskPoint(cx, cy)).inverse();
    double r = 0.3;
    triples.push_back({frame.apply(DiskPoint(r, 0)),
                       frame.apply(DiskPoint(-r / 2, r * 0.866)),
                       frame.apply(DiskPoint(-r / 2, -r * 0.866))});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& t = triples[i % 256];
    benchmark::DoNotOptimize(circumcenter(t[0], t[1], t[2]));
    ++i;
  }
}
BENCHMARK(BM_Circumcenter);

void BM_GenerateRegular(benchmark::State& state) {
  int genus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(regular_polygon(genus, Tolerances{}));
  }
}
BENCHMARK(BM_GenerateRegular)->Arg(2)->Arg(3)->Arg(5);

void BM_Pipeline(benchmark::State& state) {
  int genus = static_cast<int>(state.range(0));
  GeneratedPolygon G = regular_polygon(genus, Tolerances{});
  PolygonInput in;
  in.vertices = G.vertices;
  in.pairings = G.pairings;
  in.generators = G.generators;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(in, PipelineOptions{}));
  }
}
BENCHMARK(BM_Pipeline)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
