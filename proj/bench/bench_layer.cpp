#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "mspike/network.hpp"
#include "mspike/reference.hpp"
#include "mspike/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mspike;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// Times one hidden layer walk: optimized kernel (optionally OpenMP) vs the
// plain serial reference, after checking they produce the same spikes.
int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 50;
  const int32_t n_pre = 784, n_post = 400, n_events = 600;
  NeuronParams p = NeuronParams::from_tau_i(0.8);
  EngineConfig cfg = EngineConfig::for_time(1.0, p);
  Rng rng(42);

  LayerSpec layer;
  layer.n_pre = n_pre;
  layer.n_post = n_post;
  layer.w.resize(static_cast<size_t>(n_pre) * n_post);
  for (double& w : layer.w) w = rng.gaussian(0.03, 0.3);

  std::vector<double> z;
  std::vector<int32_t> src;
  for (int32_t e = 0; e < n_events; ++e) {
    z.push_back(time_to_z(rng.uniform() * 0.95, p));
    src.push_back(static_cast<int32_t>(rng.below(n_pre)));
  }
  SpikeTrain presyn = make_train(n_pre, std::move(z), std::move(src));

  Network net;
  net.params = p;
  net.layers.push_back(layer);
  ForwardTables tables;
  tables.rebuild(net);
  const double* w_pre = tables.w_pre[0].data();

  // Parity first: the benchmark is meaningless if the two disagree.
  EngineWorkspace ws;
  LayerOutput fast = layer_forward(presyn, layer, p, cfg, w_pre, &ws);
  LayerOutput ref = reference_layer_forward(presyn, layer, p, cfg);
  if (fast.spikes.size() != ref.spikes.size()) {
    std::fprintf(stderr, "spike count mismatch: %zu vs %zu\n",
                 fast.spikes.size(), ref.spikes.size());
    return 1;
  }
  double worst = 0.0;
  for (size_t e = 0; e < fast.spikes.size(); ++e) {
    worst = std::max(worst, std::fabs(fast.spikes.z[e] - ref.spikes.z[e]));
  }
  if (worst > 1e-9) {
    std::fprintf(stderr, "spike time mismatch: %g\n", worst);
    return 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) {
    layer_forward(presyn, layer, p, cfg, w_pre, &ws);
  }
  double fast_ms = ms_since(t0) / reps;

  int ref_reps = std::max(1, reps / 10);
  t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < ref_reps; ++r) {
    reference_layer_forward(presyn, layer, p, cfg);
  }
  double ref_ms = ms_since(t0) / ref_reps;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("layer %dx%d, %d events, %zu spikes, max |dz| %.2e\n", n_pre,
              n_post, n_events, fast.spikes.size(), worst);
  std::printf("kernel   %8.3f ms  (%d threads)\n", fast_ms, threads);
  std::printf("reference %7.3f ms  (serial)\n", ref_ms);
  std::printf("speedup  %8.2fx\n", ref_ms / fast_ms);
  return 0;
}
