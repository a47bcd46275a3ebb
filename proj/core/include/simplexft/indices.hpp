#ifndef SIMPLEXFT_INDICES_HPP
#define SIMPLEXFT_INDICES_HPP

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace simplexft {

/// Multi-index n = (n_1, ..., n_r). Positions are 0-based: entry k is n_{k+1}.
class MultiIndex {
public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  unsigned operator[](std::size_t k) const noexcept { return entries_[k]; }
  unsigned& operator[](std::size_t k) noexcept { return entries_[k]; }
  const std::vector<unsigned>& entries() const noexcept { return entries_; }

  /// n_{k+1} + ... + n_r for 0 <= k <= r (zero at k = r).
  unsigned tail(std::size_t k) const noexcept {
    unsigned s = 0;
    for (std::size_t i = k; i < entries_.size(); ++i) {
      s += entries_[i];
    }
    return s;
  }
  unsigned total() const noexcept { return tail(0); }

  bool operator==(const MultiIndex&) const = default;

private:
  std::vector<unsigned> entries_;
};

/// Real parameter vector such as a = (a_1, ..., a_{r+1}) or alpha; 0-based.
class ParamVector {
public:
  ParamVector() = default;
  ParamVector(std::initializer_list<double> entries) : entries_(entries) {}
  explicit ParamVector(std::vector<double> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const noexcept { return entries_[k]; }
  double& operator[](std::size_t k) noexcept { return entries_[k]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  /// Sum of entries k, k+1, ..., size()-1 (zero past the end).
  double tail(std::size_t k) const noexcept {
    double s = 0.0;
    for (std::size_t i = k; i < entries_.size(); ++i) {
      s += entries_[i];
    }
    return s;
  }
  double total() const noexcept { return tail(0); }

  bool operator==(const ParamVector&) const = default;

private:
  std::vector<double> entries_;
};

using AlphaVector = ParamVector;

/// All multi-indices of length r with total degree <= max_degree, graded then
/// lexicographic.
std::vector<MultiIndex> multi_indices_up_to(std::size_t r, unsigned max_degree);

/// All multi-indices of length r with every entry <= max_entry.
std::vector<MultiIndex> multi_indices_box(std::size_t r, unsigned max_entry);

} // namespace simplexft

#endif // SIMPLEXFT_INDICES_HPP
