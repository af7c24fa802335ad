#include "mwall/max_clique.hpp"

#include <bit>

#include "mwall/errors.hpp"

namespace mwall {

namespace {

struct Search {
  const std::vector<std::uint64_t>& adj;
  std::uint64_t best = 0;
  int best_size = 0;

  void expand(std::uint64_t chosen, int size, std::uint64_t candidates) {
    if (candidates == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    while (candidates) {
      if (size + std::popcount(candidates) <= best_size) return;
      int v = std::countr_zero(candidates);
      std::uint64_t bit = std::uint64_t{1} << v;
      expand(chosen | bit, size + 1, candidates & adj[static_cast<std::size_t>(v)]);
      candidates &= ~bit;
    }
  }
};

}  // namespace

std::vector<std::size_t> max_clique(const std::vector<std::uint64_t>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > 64) fail(ErrorCode::TableTooLarge, "clique search supports at most 64 vertices");
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (adjacency[i] & (std::uint64_t{1} << i)) fail(ErrorCode::InvalidArgument, "clique graph has a loop");
  Search s{adjacency};
  s.expand(0, 0, all);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.best & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

}  // namespace mwall
