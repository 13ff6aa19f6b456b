#include <benchmark/benchmark.h>

#include "bilist/canonical.hpp"
#include "bilist/choosability.hpp"
#include "bilist/colorability.hpp"
#include "bilist/constructions.hpp"
#include "bilist/hypergraph.hpp"
#include "bilist/steiner.hpp"

using namespace bilist;

namespace {

Hypergraph line_complements() {
  Hypergraph h{7, {}};
  for (int s = 0; s < 7; ++s) {
    std::uint64_t line = (1ULL << (s % 7)) | (1ULL << ((s + 1) % 7)) | (1ULL << ((s + 3) % 7));
    h.edges.push_back(~line & 0x7f);
  }
  return h;
}

void SeparatorUnsat(benchmark::State& state) {
  auto cert = construct::construct_steiner(
      [] {
        std::vector<std::vector<int>> blocks;
        for (int a = 0; a < 7; ++a)
          for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) blocks.push_back({a, b, c});
        return SetFamily::create(7, 3, blocks);
      }(),
      [] {
        std::vector<std::uint64_t> comps;
        for (int s = 0; s < 7; ++s) {
          std::uint64_t line =
              (1ULL << (s % 7)) | (1ULL << ((s + 1) % 7)) | (1ULL << ((s + 3) % 7));
          comps.push_back(~line & 0x7f);
        }
        return SetFamily::from_masks(7, 4, comps).normalized();
      }());
  auto query = SeparatorQuery::from(cert.assignment);
  for (auto _ : state) {
    auto result = separator_exists(query);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(SeparatorUnsat);

void Dualization(benchmark::State& state) {
  auto h = line_complements();
  for (auto _ : state) {
    auto t = minimal_transversals(h);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(Dualization);

void CoverLineComplements(benchmark::State& state) {
  auto t = *minimal_transversals(line_complements());
  for (auto _ : state) {
    auto cover = search::transversal_cover_number(t, 3);
    benchmark::DoNotOptimize(cover);
  }
}
BENCHMARK(CoverLineComplements);

void ThresholdClassic(benchmark::State& state) {
  for (auto _ : state) {
    auto res = search::threshold_a(2, 2, int(state.range(0)), 0);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(ThresholdClassic)->Arg(2)->Arg(3);

void ExtremalFamilySevenPoints(benchmark::State& state) {
  for (auto _ : state) {
    auto res = steiner::mbar_exact(2, 4, 7);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(ExtremalFamilySevenPoints);

void CanonicalizeClassic(benchmark::State& state) {
  auto l = ListAssignment::create(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 1}, {2, 3}});
  for (auto _ : state) {
    auto c = canonicalize_assignment(l);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(CanonicalizeClassic);

void GadgetVerification(benchmark::State& state) {
  auto cert = construct::construct_gadget(2, 3);
  for (auto _ : state) {
    auto v = verify_certificate(cert);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(GadgetVerification);

} // namespace

BENCHMARK_MAIN();
