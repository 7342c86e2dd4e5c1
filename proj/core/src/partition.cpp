#include "cylbij/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "cylbij/error.hpp"

namespace cylbij {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_partition: return "invalid partition";
    case ErrorKind::invalid_profile: return "invalid profile";
    case ErrorKind::incomparable_profiles: return "incomparable profiles";
    case ErrorKind::invalid_coordinate: return "invalid coordinate";
    case ErrorKind::not_inside_corner: return "not an inside corner";
    case ErrorKind::cannot_add_inversion: return "cannot add inversion here";
    case ErrorKind::local_rule_domain: return "local rule domain";
    case ErrorKind::invalid_cpp: return "invalid cylindric plane partition";
    case ErrorKind::invalid_alcd: return "invalid labelled cylindric diagram";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::internal: return "internal error";
  }
  return "unknown";
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw Error(ErrorKind::invalid_partition, "negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::invalid_partition,
                  "parts must be weakly decreasing, got " + to_string(*this));
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::from_columns(std::span<const int> columns) {
  std::vector<int> cols(columns.begin(), columns.end());
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  for (std::size_t j = 1; j < cols.size(); ++j)
    if (cols[j] > cols[j - 1] || cols[j] < 0)
      throw Error(ErrorKind::invalid_partition,
                  "column heights must be weakly decreasing");
  return Partition(cols).conjugate();
}

Partition Partition::conjugate() const { return Partition(columns()); }

std::vector<int> Partition::columns() const {
  std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[j];
  return cols;
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.part(i));
  }
  out += ']';
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']')
      throw Error(ErrorKind::parse_error, "unterminated partition '" +
                                              std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc() || ptr != s.data() + end || end == pos)
      throw Error(ErrorKind::parse_error,
                  "bad partition part in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = end + 1;
    if (end + 1 == s.size())
      throw Error(ErrorKind::parse_error,
                  "trailing comma in '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  const auto outer_cols = outer.columns();
  const auto inner_cols = inner.columns();
  for (std::size_t j = 0; j < outer_cols.size(); ++j) {
    const int in = j < inner_cols.size() ? inner_cols[j] : 0;
    if (outer_cols[j] - in > 1) return false;
  }
  return true;
}

namespace {

bool weight_then_parts(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a < b;
}

// λ/μ is a horizontal strip iff μ_i ≤ λ_i ≤ μ_{i-1} (interlacing).
void grow(const Partition& mu, std::size_t row, long budget,
          std::vector<int>& current, std::vector<Partition>& out) {
  if (row > mu.length()) {
    out.emplace_back(current);
    return;
  }
  const int lo = mu.part(row);
  const long hi = row == 0 ? lo + budget
                           : std::min<long>(mu.part(row - 1), lo + budget);
  for (long v = lo; v <= hi; ++v) {
    current.push_back(static_cast<int>(v));
    grow(mu, row + 1, budget - (v - lo), current, out);
    current.pop_back();
  }
}

void shrink(const Partition& lambda, std::size_t row, std::vector<int>& current,
            std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(current);
    return;
  }
  for (int v = lambda.part(row + 1); v <= lambda.part(row); ++v) {
    current.push_back(v);
    shrink(lambda, row + 1, current, out);
    current.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& mu,
                                             long max_size) {
  std::vector<Partition> out;
  if (max_size < 0) return out;
  std::vector<int> current;
  grow(mu, 0, max_size, current, out);
  std::sort(out.begin(), out.end(), weight_then_parts);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current;
  shrink(lambda, 0, current, out);
  std::sort(out.begin(), out.end(), weight_then_parts);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace cylbij
