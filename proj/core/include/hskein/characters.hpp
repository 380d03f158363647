#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hskein/partition.hpp"

namespace hskein {

/// Character table of S_n. Rows are irreducible characters chi^lambda,
/// columns conjugacy classes mu, both in descending lexicographic order.
class CharTable {
 public:
  CharTable(int n, std::vector<std::int64_t> values);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_of(n_); }
  std::size_t index(const Partition& p) const;
  std::int64_t value(std::size_t lambda, std::size_t mu) const { return values_[lambda * dim_ + mu]; }
  /// chi^lambda(mu); SizeMismatch if either size differs from n.
  std::int64_t value(const Partition& lambda, const Partition& mu) const;
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  int n_;
  std::size_t dim_;
  std::vector<std::int64_t> values_;
  std::map<Partition, std::size_t> index_;
};

/// Shared, lazily filled table for S_n. Filling is serialized; returned
/// references stay valid for the lifetime of the process. If the environment
/// variable HSKEIN_CACHE_DIR names a directory, tables are read from and written
/// to `chartable_<n>.json` there.
const CharTable& char_table(int n);

/// chi^lambda(mu) by Murnaghan-Nakayama; SizeMismatch if |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

}  // namespace hskein
