#include "owb/parahoric.hpp"

#include <stdexcept>

namespace owb {

LevelSet reflect_levels(const LevelSet& I, std::size_t n) {
  LevelSet out;
  for (long i : I) out.insert(static_cast<long>(n) - i);
  return out;
}

LevelSet canonical_parahoric(const LevelSet& I, std::size_t n) {
  if (I.empty()) throw std::invalid_argument("level set must be non-empty");
  for (long i : I)
    if (i < 0 || i > static_cast<long>(n)) throw std::invalid_argument("level out of range");
  LevelSet R = reflect_levels(I, n);
  std::vector<long> a(I.begin(), I.end()), b(R.begin(), R.end());
  return a <= b ? I : R;
}

std::size_t maximal_class_count(std::size_t n) { return n / 2 + 1; }

std::size_t maximal_class_count_by_canonicalization(std::size_t n) {
  std::set<LevelSet> classes;
  for (long i = 0; i <= static_cast<long>(n); ++i)
    classes.insert(canonical_parahoric({i}, n));
  return classes.size();
}

}  // namespace owb
