#include "owb/subsets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace owb {

namespace {
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}
}  // namespace

bool is_perm_subset(const Subset& E, std::size_t n, long i) {
  if (E.size() != n) return false;
  std::set<std::size_t> in(E.begin(), E.end());
  if (in.size() != n) return false;
  for (auto j : in)
    if (j < 1 || j > 2 * n) return false;
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t js = 2 * n + 1 - j;
    bool a_pair = static_cast<long>(j) <= i;  // else the pair sits in the middle block
    bool inj = in.count(j), injs = in.count(js);
    if (a_pair && inj && injs) return false;
    if (!a_pair && !inj && !injs) return false;
  }
  return true;
}

std::vector<Subset> enumerate_perm_subsets(std::size_t n, long i) {
  if (i < 0 || static_cast<std::size_t>(i) > n) throw std::invalid_argument("level out of range");
  std::vector<Subset> out;
  const std::size_t m = 2 * n;
  std::vector<std::size_t> idx(n);
  // iterate all n-subsets of [1,2n] in lexicographic order
  for (std::size_t k = 0; k < n; ++k) idx[k] = k + 1;
  while (true) {
    if (is_perm_subset(idx, n, i)) out.push_back(idx);
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == m - (n - k)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < n; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::uint64_t perm_subset_count_formula(std::size_t n, long i) {
  std::uint64_t total = 0;
  long lo = std::max(0L, 2 * i - static_cast<long>(n));
  for (long l = lo; l <= i; ++l) {
    std::uint64_t a = binom(i, l) << l;
    std::uint64_t b = binom(n - i, i - l);
    std::uint64_t c = 1ull << (n - 2 * i + l);
    total += a * b * c;
  }
  return total;
}

long orbit_invariant(const Subset& E, std::size_t n, long i) {
  std::set<std::size_t> in(E.begin(), E.end());
  long l = 0;
  for (long j = 1; j <= i; ++j) {
    std::size_t js = 2 * n + 1 - j;
    if (in.count(j) + in.count(js) == 1) ++l;
  }
  return l;
}

Subset representative_subset(std::size_t n, long i, long l) {
  Subset E;
  for (long j = i + 1 - l; j <= static_cast<long>(n) + i - l; ++j)
    E.push_back(static_cast<std::size_t>(j));
  return E;
}

std::vector<std::vector<Subset>> subset_orbits(std::size_t n, long i) {
  auto all = enumerate_perm_subsets(n, i);
  std::map<Subset, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index[all[k]] = k;

  // generators of the two stabilizer factors acting on [1,2n]
  std::vector<std::size_t> outer, inner;
  for (long j = 1; j <= i; ++j) {
    outer.push_back(j);
    outer.push_back(2 * n + 1 - j);
  }
  for (long j = i + 1; j <= static_cast<long>(n); ++j) {
    inner.push_back(j);
    inner.push_back(2 * n + 1 - j);
  }
  std::vector<SignedPerm> gens;
  auto add_factor = [&](const std::vector<std::size_t>& blk) {
    for (std::size_t a = 0; a < blk.size(); ++a) {
      gens.push_back(SignedPerm::tau_star(2 * n, blk[a]));
      for (std::size_t b = a + 1; b < blk.size(); ++b) {
        if (blk[a] + blk[b] == 2 * n + 1) continue;  // that swap is tau_star^2 territory
        gens.push_back(SignedPerm::tau_pair(2 * n, blk[a], blk[b]));
      }
    }
  };
  add_factor(outer);
  add_factor(inner);

  std::vector<int> orbit_of(all.size(), -1);
  std::vector<std::vector<Subset>> orbits;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<std::size_t> queue = {start};
    orbit_of[start] = id;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      orbits[id].push_back(all[cur]);
      for (const auto& g : gens) {
        Subset img;
        img.reserve(n);
        for (auto j : all[cur]) img.push_back(g.apply(j));
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end()) throw std::logic_error("stabilizer left the subset family");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(orbits[id].begin(), orbits[id].end());
  }
  return orbits;
}

std::size_t orbit_count(std::size_t n, long i) { return subset_orbits(n, i).size(); }

}  // namespace owb
