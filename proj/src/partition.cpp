#include "skewsign/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "skewsign/errors.hpp"

namespace skewsign {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw MalformedPartition("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw MalformedPartition("partition parts must be weakly decreasing");
  }
  for (int p : parts_) size_ += p;
}

Partition Partition::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw MalformedPartition("expected bracketed form like [3,2,1], got '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = comma == std::string_view::npos
                                 ? body.substr(pos)
                                 : body.substr(pos, comma - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw MalformedPartition("bad partition entry '" + std::string(tok) + "' in '" + std::string(text) + "'");
      if (tok.size() > 1 && tok.front() == '0')
        throw MalformedPartition("leading zero in partition entry '" + std::string(tok) + "'");
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw MalformedPartition("unparseable partition entry '" + std::string(tok) + "'");
      if (value < 1)
        throw MalformedPartition("partition entries must be positive, got '" + std::string(tok) + "'");
      if (!parts.empty() && parts.back() < value)
        throw MalformedPartition("partition entries must be weakly decreasing in '" + std::string(text) + "'");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Partition(std::move(parts));
}

int Partition::part(int row) const {
  if (row >= 1 && row <= rows()) return parts_[static_cast<std::size_t>(row) - 1];
  return 0;
}

bool Partition::contains(const Partition& inner) const {
  for (int r = 1; r <= inner.rows(); ++r)
    if (inner.part(r) > part(r)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

int v_statistic(const Partition& p) {
  int total = 0;
  for (int r = 2; r <= p.rows(); r += 2) total += p.part(r);
  return total;
}

std::vector<Partition> enumerate_outer_extensions(const Partition& alpha, int n, int row_bound) {
  if (row_bound < alpha.rows())
    throw BoundTooSmall("row_bound " + std::to_string(row_bound) + " is below the " +
                        std::to_string(alpha.rows()) + " rows of " + alpha.to_string());
  std::vector<Partition> out;
  if (n < 0) return out;

  const int total = alpha.size() + n;
  // suffix[r] = cells of alpha in rows >= r
  std::vector<int> suffix(static_cast<std::size_t>(row_bound) + 2, 0);
  for (int r = row_bound; r >= 1; --r) suffix[r] = suffix[r + 1] + alpha.part(r);

  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int prev, int rem) -> void {
    if (rem == 0 && suffix[row] == 0) {
      out.emplace_back(cur);
      return;
    }
    if (row > row_bound) return;
    const int hi = std::min(prev, rem - suffix[row + 1]);
    const int lo = std::max(alpha.part(row), 1);
    for (int v = hi; v >= lo; --v) {
      const int rest = rem - v;
      if (rest > v * (row_bound - row)) continue;  // rows below cannot absorb the rest
      cur.push_back(v);
      self(self, row + 1, v, rest);
      cur.pop_back();
    }
  };
  rec(rec, 1, std::numeric_limits<int>::max(), total);
  return out;
}

std::vector<Partition> enumerate_inner_restrictions(const Partition& alpha, int n) {
  std::vector<Partition> out;
  if (n < 0 || n > alpha.size()) return out;
  const int target = alpha.size() - n;
  const int len = alpha.rows();

  auto capacity = [&](int row, int bound) {
    int c = 0;
    for (int r = row; r <= len; ++r) c += std::min(alpha.part(r), bound);
    return c;
  };

  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int prev, int rem) -> void {
    if (row > len) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    const int hi = std::min({prev, alpha.part(row), rem});
    for (int v = hi; v >= 0; --v) {
      if (rem - v > capacity(row + 1, v)) continue;
      cur.push_back(v);
      self(self, row + 1, v, rem - v);
      cur.pop_back();
    }
  };
  rec(rec, 1, std::numeric_limits<int>::max(), target);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  return enumerate_outer_extensions(Partition{}, n, n < 0 ? 0 : n);
}

Partition rowwise_max(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  const int rows = std::max(a.rows(), b.rows());
  for (int r = 1; r <= rows; ++r) parts.push_back(std::max(a.part(r), b.part(r)));
  return Partition(std::move(parts));
}

Partition rowwise_min(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  const int rows = std::min(a.rows(), b.rows());
  for (int r = 1; r <= rows; ++r) parts.push_back(std::min(a.part(r), b.part(r)));
  return Partition(std::move(parts));
}

}  // namespace skewsign
