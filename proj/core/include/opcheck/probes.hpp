#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opcheck/local_operator.hpp"
#include "opcheck/rng.hpp"

namespace opcheck {

/// Deterministic probe recipe: identical config => identical probe sequence.
/// Probes are complex standard-Gaussian vectors on uniformly sampled
/// size-support_size subsets of the label window (subset indices drawn
/// first, entries second, in draw order).
struct ProbeConfig {
  std::uint64_t seed = 1;
  int num_probes = 200;
  int support_size = 6;
  std::vector<Label> window;
};

SparseVec random_probe(Rng& rng, std::span<const Label> window, int support_size);
std::vector<SparseVec> make_probes(const ProbeConfig& cfg);

/// Max column norm of the compression of a to the window: max_l ||A e_l||.
double window_column_norm(const LocalOperator& a, std::span<const Label> window);

std::vector<Label> nat_window(std::int64_t n);

}  // namespace opcheck
