#include "hskein/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "hskein/error.hpp"

namespace hskein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::BadParams, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::BadParams, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  Partition r;
  r.parts_ = std::move(out);
  r.size_ = size_ + other.size_;
  return r;
}

Partition Partition::tail() const {
  Partition r;
  if (parts_.empty()) return r;
  r.parts_.assign(parts_.begin() + 1, parts_.end());
  r.size_ = size_ - parts_[0];
  return r;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'"); };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') fail();
  ++i;
  std::vector<int> parts;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || i - start > 6) fail();
      parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail();
    }
  }
  skip();
  if (i != text.size()) fail();
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    fail();
  }
  return {};
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "partitions_of needs n >= 0");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

std::vector<Cell> hooks_and_contents(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i - 1)] - j;
      const int leg = conj[static_cast<std::size_t>(j - 1)] - i;
      cells.push_back({i, j, arm + leg + 1, j - i});
    }
  }
  return cells;
}

int content_sum(const Partition& lambda) {
  int total = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    const int p = lambda[static_cast<std::size_t>(i)];
    total += p * (p - 1) / 2 - i * p;
  }
  return total;
}

BigInt z_const(const Partition& mu) {
  BigInt z = 1;
  std::size_t i = 0;
  const auto& parts = mu.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), m);
    BigInt k;
    mpz_ui_pow_ui(k.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= f * k;
    i = j;
  }
  return z;
}

int cycle_sign(const Partition& mu) { return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1; }

}  // namespace hskein
