#include "simplexft/indices.hpp"

namespace simplexft {

std::vector<MultiIndex> multi_indices_box(std::size_t r, unsigned max_entry) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> idx(r, 0);
  while (true) {
    out.emplace_back(idx);
    std::size_t k = r;
    while (true) {
      if (k == 0) {
        return out;
      }
      --k;
      if (idx[k] < max_entry) {
        ++idx[k];
        break;
      }
      idx[k] = 0;
    }
  }
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t r, unsigned max_degree) {
  std::vector<MultiIndex> out;
  const std::vector<MultiIndex> box = multi_indices_box(r, max_degree);
  for (unsigned degree = 0; degree <= max_degree; ++degree) {
    for (const MultiIndex& n : box) {
      if (n.total() == degree) {
        out.push_back(n);
      }
    }
  }
  return out;
}

} // namespace simplexft
