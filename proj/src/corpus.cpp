#include "hyperlab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hyperlab {

System cycle_type_system(const std::vector<std::size_t>& cycle_lengths) {
  const auto n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), std::size_t{0});
  std::vector<std::size_t> images(n);
  std::size_t start = 0;
  for (auto len : cycle_lengths) {
    for (std::size_t k = 0; k < len; ++k) images[start + k] = start + (k + 1) % len;
    start += len;
  }
  return from_permutation(n, images, DistanceTable::discrete(n));
}

System random_permutation_system(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);

  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<std::pair<double, double>> pos;
  while (pos.size() < n) {
    const std::pair<double, double> p{coord(rng), coord(rng)};
    const bool apart = std::all_of(pos.begin(), pos.end(), [&](const auto& q) {
      return std::hypot(p.first - q.first, p.second - q.second) > 1e-3;
    });
    if (apart) pos.push_back(p);
  }
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = std::hypot(pos[i].first - pos[j].first, pos[i].second - pos[j].second);
  return from_permutation(n, images, DistanceTable::make(n, std::move(entries)));
}

std::vector<NamedSystem> permutation_corpus(std::uint64_t seed) {
  std::vector<NamedSystem> out;
  const std::vector<std::vector<std::size_t>> types{
      {1}, {1, 1, 1}, {2}, {5}, {10}, {2, 2}, {3, 1}, {4, 2, 1}, {3, 3, 3, 1}, {2, 2, 2, 2, 2}, {6, 4}, {1, 2, 3, 4}};
  for (const auto& t : types) {
    std::string name = "cycles";
    for (auto len : t) name += "-" + std::to_string(len);
    out.push_back({name, cycle_type_system(t)});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(3, 10);
  for (int i = 0; i < 12; ++i) {
    const auto n = size(rng);
    const auto s = rng();
    out.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n), random_permutation_system(n, s)});
  }
  return out;
}

}  // namespace hyperlab
