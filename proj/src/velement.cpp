#include "forestlab/velement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace forestlab {

bool VElement::maps_forest_onto(const DAryForest& m1,
                                const DAryForest& m2) const {
  if (m1.d() != d() || m1.r() != r() || m2.d() != d() || m2.r() != r()) {
    return false;
  }
  if (!canon_.domain.is_subforest_of(m1)) return false;
  return canon_.expand_to_domain(m1).range == m2;
}

VElement VElement::random_element(std::mt19937_64& rng, int d, int r,
                                  int max_carets) {
  if (max_carets < 0) throw std::invalid_argument("max_carets must be >= 0");
  std::uniform_int_distribution<int> count_dist(0, max_carets);
  int carets = count_dist(rng);
  auto grow = [&]() {
    DAryForest f(d, r, {});
    for (int i = 0; i < carets; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, f.leaf_count() - 1);
      f = f.add_caret(f.leaves()[pick(rng)]);
    }
    return f;
  };
  DAryForest domain = grow();
  DAryForest range = grow();
  LeafPermutation perm(domain.leaf_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return VElement(PairedForestDiagram(domain, range, perm));
}

VElement multiply(const VElement& a, const VElement& b) {
  if (a.d() != b.d() || a.r() != b.r()) {
    throw std::invalid_argument("product needs matching (d,r)");
  }
  DAryForest middle =
      DAryForest::forest_union(a.diagram().range, b.diagram().domain);
  PairedForestDiagram left = a.diagram().expand_to_range(middle);
  PairedForestDiagram right = b.diagram().expand_to_domain(middle);
  LeafPermutation composed(left.perm.size());
  for (std::size_t i = 0; i < composed.size(); ++i) {
    composed[i] = right.perm[left.perm[i]];
  }
  return VElement(
      PairedForestDiagram(left.domain, right.range, std::move(composed)));
}

}  // namespace forestlab
