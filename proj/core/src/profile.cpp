#include "cylbij/profile.hpp"

#include <algorithm>

#include "cylbij/error.hpp"

namespace cylbij {

Profile::Profile(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1)
      throw Error(ErrorKind::invalid_profile, "profile bits must be 0 or 1");
    if (b == 0) ++zeros_;
  }
}

Profile Profile::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::parse_error,
                  "profile must be a 0/1 string, got '" + std::string(text) +
                      "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Profile(std::move(bits));
}

Profile Profile::parse_cylindric(std::string_view text) {
  Profile p = parse(text);
  require_cylindric(p);
  return p;
}

Profile Profile::min_for(int zeros, int ones) {
  std::vector<std::uint8_t> bits(zeros, 0);
  bits.insert(bits.end(), ones, 1);
  return Profile(std::move(bits));
}

Profile Profile::max_for(int zeros, int ones) {
  std::vector<std::uint8_t> bits(ones, 1);
  bits.insert(bits.end(), zeros, 0);
  return Profile(std::move(bits));
}

int Profile::at(int i) const {
  if (i < 1 || i > length())
    throw Error(ErrorKind::invalid_profile,
                "profile position " + std::to_string(i) + " outside 1.." +
                    std::to_string(length()));
  return bits_[i - 1];
}

int Profile::bit(long t) const noexcept {
  const long T = length();
  long r = (t - 1) % T;
  if (r < 0) r += T;
  return bits_[r];
}

long Profile::zeros_through(long t) const noexcept {
  const long T = length();
  long full = t / T;
  if (t % T != 0 && t < 0) --full;
  long count = full * zeros_;
  for (long s = full * T + 1; s <= t; ++s)
    if (bits_[s - full * T - 1] == 0) ++count;
  return count;
}

std::vector<int> Profile::one_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    if (bits_[i - 1] == 1) out.push_back(i);
  return out;
}

std::vector<int> Profile::zero_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    if (bits_[i - 1] == 0) out.push_back(i);
  return out;
}

Profile Profile::swapped(int i) const {
  auto bits = bits_;
  const int T = length();
  std::swap(bits[i - 1], bits[i % T]);
  return Profile(std::move(bits));
}

std::string to_string(const Profile& p) {
  std::string out;
  for (int i = 1; i <= p.length(); ++i) out += static_cast<char>('0' + p.at(i));
  return out;
}

void require_cylindric(const Profile& p) {
  if (!p.is_cylindric())
    throw Error(ErrorKind::invalid_profile,
                "profile '" + to_string(p) +
                    "' needs at least one 0 and one 1 to define a cylinder");
}

std::vector<std::pair<int, int>> inversions(const Profile& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.at(i) != 1) continue;
    for (int j = i + 1; j <= p.length(); ++j)
      if (p.at(j) == 0) out.emplace_back(i, j);
  }
  return out;
}

bool profile_covers(const Profile& lower, const Profile& upper) {
  if (lower.length() != upper.length() || lower.ones() != upper.ones())
    throw Error(ErrorKind::incomparable_profiles,
                "profiles '" + to_string(lower) + "' and '" + to_string(upper) +
                    "' have different length or number of ones");
  int differing = 0;
  int first = 0;
  for (int k = 1; k <= lower.length(); ++k) {
    if (lower.at(k) != upper.at(k)) {
      if (differing++ == 0) first = k;
    }
  }
  if (differing != 2 || first == lower.length()) return false;
  return lower.at(first) == 0 && lower.at(first + 1) == 1 &&
         upper.at(first) == 1 && upper.at(first + 1) == 0;
}

Profile rotate_profile(const Profile& p) {
  std::vector<std::uint8_t> bits;
  bits.reserve(p.length());
  for (int i = 1; i <= p.length(); ++i)
    bits.push_back(static_cast<std::uint8_t>(p.at(i % p.length() + 1)));
  return Profile(std::move(bits));
}

Profile partition_to_profile(const Partition& lambda) {
  std::vector<std::uint8_t> bits;
  int previous = 0;
  // Shortest row first: its horizontal steps, then the vertical step.
  for (std::size_t r = lambda.length(); r-- > 0;) {
    bits.insert(bits.end(), lambda.part(r) - previous, 1);
    bits.push_back(0);
    previous = lambda.part(r);
  }
  return Profile(std::move(bits));
}

Partition profile_to_partition(const Profile& p) {
  std::vector<int> rows;
  int ones_so_far = 0;
  for (int t = 1; t <= p.length(); ++t) {
    if (p.at(t) == 1)
      ++ones_so_far;
    else
      rows.push_back(ones_so_far);
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

}  // namespace cylbij
