#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hskein/laurent.hpp"

namespace hskein {

/// Weakly decreasing list of positive integers; the empty list is the empty
/// partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws BadParams unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts the parts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  static Partition row(int n);  // (n), or () for n = 0

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool is_single_row() const { return parts_.size() <= 1; }

  Partition conjugate() const;
  /// Multiset union of the parts.
  Partition merged(const Partition& other) const;
  /// Partition without its first (largest) part.
  Partition tail() const;

  /// `[3,1,1]`, `[]`.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Output order used everywhere: by size, then descending lexicographic.
struct PartitionOrder {
  bool operator()(const Partition& x, const Partition& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.parts() > y.parts();
  }
};

/// All partitions of n in descending lexicographic order.
const std::vector<Partition>& partitions_of(int n);

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
  int hook;
  int content;  // col - row
};

std::vector<Cell> hooks_and_contents(const Partition& lambda);
/// Sum of contents over all cells.
int content_sum(const Partition& lambda);
/// z_mu = prod_k k^{m_k} m_k!.
BigInt z_const(const Partition& mu);
/// (-1)^{|mu| - l(mu)}.
int cycle_sign(const Partition& mu);

}  // namespace hskein
