#include "opcheck/probes.hpp"

#include <algorithm>
#include <stdexcept>

namespace opcheck {

SparseVec random_probe(Rng& rng, std::span<const Label> window, int support_size) {
  if (window.empty()) throw std::invalid_argument("random_probe: empty label window");
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(support_size), window.size());
  // partial Fisher-Yates over window indices
  std::vector<std::size_t> idx(window.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SparseVec out;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(idx.size() - i));
    std::swap(idx[i], idx[j]);
    out.set(window[idx[i]], rng.complex_gaussian());
  }
  return out;
}

std::vector<SparseVec> make_probes(const ProbeConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<SparseVec> out;
  out.reserve(static_cast<std::size_t>(std::max(0, cfg.num_probes)));
  for (int i = 0; i < cfg.num_probes; ++i)
    out.push_back(random_probe(rng, cfg.window, cfg.support_size));
  return out;
}

double window_column_norm(const LocalOperator& a, std::span<const Label> window) {
  double best = 0.0;
  for (const Label& l : window) best = std::max(best, norm(a.apply(SparseVec::basis(l))));
  return best;
}

std::vector<Label> nat_window(std::int64_t n) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(Label::nat(i));
  return out;
}

}  // namespace opcheck
