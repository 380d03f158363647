#include "hskein/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>

#include "hskein/error.hpp"

namespace hskein {

CharTable::CharTable(int n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {
  const auto& parts = partitions_of(n);
  dim_ = parts.size();
  if (values_.size() != dim_ * dim_) throw Error(ErrorCode::SizeMismatch, "character table has the wrong shape");
  for (std::size_t i = 0; i < parts.size(); ++i) index_.emplace(parts[i], i);
}

std::size_t CharTable::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(ErrorCode::SizeMismatch, p.to_string() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

std::int64_t CharTable::value(const Partition& lambda, const Partition& mu) const {
  return value(index(lambda), index(mu));
}

namespace {

// Removes every rim hook of length r from lambda via beta numbers and calls
// visit(remaining partition, sign).
template <class Visit>
void for_each_rim_hook(const Partition& lambda, int r, Visit&& visit) {
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (x > nb && x < b) ++height;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) parts[static_cast<std::size_t>(k)] = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
    visit(Partition::from_unsorted(std::move(parts)), height % 2 == 0 ? 1 : -1);
  }
}

std::unique_ptr<CharTable> build_table(int n, const std::vector<std::unique_ptr<CharTable>>& smaller) {
  const auto& parts = partitions_of(n);
  const std::size_t dim = parts.size();
  std::vector<std::int64_t> values(dim * dim, 0);
  if (n == 0) {
    values[0] = 1;
    return std::make_unique<CharTable>(0, std::move(values));
  }
  for (std::size_t mi = 0; mi < dim; ++mi) {
    const Partition& mu = parts[mi];
    const int r = mu[0];
    const Partition rest = mu.tail();
    const CharTable& sub = *smaller[static_cast<std::size_t>(n - r)];
    const std::size_t rest_index = sub.index(rest);
    for (std::size_t li = 0; li < dim; ++li) {
      std::int64_t acc = 0;
      for_each_rim_hook(parts[li], r, [&](const Partition& nu, int sign) {
        acc += sign * sub.value(sub.index(nu), rest_index);
      });
      values[li * dim + mi] = acc;
    }
  }
  return std::make_unique<CharTable>(n, std::move(values));
}

std::filesystem::path cache_file(int n) {
  const char* dir = std::getenv("HSKEIN_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / ("chartable_" + std::to_string(n) + ".json");
}

std::unique_ptr<CharTable> load_cached(int n) {
  const auto path = cache_file(n);
  if (path.empty()) return nullptr;
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    const auto j = nlohmann::json::parse(in);
    const auto& parts = partitions_of(n);
    if (j.at("n").get<int>() != n || j.at("partitions").size() != parts.size()) return nullptr;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (Partition(j.at("partitions")[i].get<std::vector<int>>()) != parts[i]) return nullptr;
    std::vector<std::int64_t> values;
    for (const auto& row : j.at("values"))
      for (const auto& v : row) values.push_back(v.get<std::int64_t>());
    return std::make_unique<CharTable>(n, std::move(values));
  } catch (const std::exception&) {
    return nullptr;  // unreadable cache: recompute
  }
}

void store_cached(const CharTable& t) {
  const auto path = cache_file(t.n());
  if (path.empty()) return;
  nlohmann::json j;
  j["n"] = t.n();
  const auto& parts = t.partitions();
  j["partitions"] = nlohmann::json::array();
  j["values"] = nlohmann::json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    j["partitions"].push_back(parts[i].parts());
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < parts.size(); ++k) row.push_back(t.value(i, k));
    j["values"].push_back(row);
  }
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  std::ofstream out(tmp);
  if (!out) return;
  out << j.dump() << '\n';
  out.close();
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

const CharTable& char_table(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "char_table needs n >= 0");
  static std::mutex mu;
  static std::vector<std::unique_ptr<CharTable>> tables;
  std::lock_guard lock(mu);
  if (tables.size() <= static_cast<std::size_t>(n)) tables.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto& slot = tables[static_cast<std::size_t>(k)];
    if (slot) continue;
    slot = load_cached(k);
    if (!slot) {
      slot = build_table(k, tables);
      store_cached(*slot);
    }
  }
  return *tables[static_cast<std::size_t>(n)];
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch, "character needs |lambda| = |mu|, got " + lambda.to_string() + " and " + mu.to_string());
  return char_table(lambda.size()).value(lambda, mu);
}

}  // namespace hskein
