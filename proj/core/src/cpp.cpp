#include "cylbij/cpp.hpp"

#include "cylbij/error.hpp"

namespace cylbij {

std::string check_cpp(const Profile& profile,
                      const std::vector<Partition>& slices) {
  const int T = profile.length();
  if (T == 0) return "empty profile";
  if (static_cast<int>(slices.size()) != T + 1)
    return "expected " + std::to_string(T + 1) + " slices, got " +
           std::to_string(slices.size());
  if (slices.front() != slices.back())
    return "first and last slice differ: " + to_string(slices.front()) +
           " vs " + to_string(slices.back());
  for (int k = 1; k <= T; ++k) {
    const auto& prev = slices[k - 1];
    const auto& next = slices[k];
    const bool ok = profile.at(k) == 1 ? is_horizontal_strip(next, prev)
                                       : is_horizontal_strip(prev, next);
    if (!ok)
      return "step " + std::to_string(k) + " (bit " +
             std::to_string(profile.at(k)) + "): " + to_string(prev) +
             " -> " + to_string(next) + " is not a horizontal strip";
  }
  return {};
}

CylindricPlanePartition::CylindricPlanePartition(Profile profile,
                                                 std::vector<Partition> slices)
    : profile_(std::move(profile)), slices_(std::move(slices)) {
  if (auto msg = check_cpp(profile_, slices_); !msg.empty())
    throw Error(ErrorKind::invalid_cpp, msg);
}

CylindricPlanePartition CylindricPlanePartition::constant(
    const Profile& profile, const Partition& gamma) {
  return {profile, std::vector<Partition>(profile.length() + 1, gamma)};
}

long cpp_weight(const CylindricPlanePartition& c) {
  long w = 0;
  for (std::size_t k = 1; k < c.slices().size(); ++k) w += c.slices()[k].weight();
  return w;
}

std::vector<long> cpp_refined_weight(const CylindricPlanePartition& c) {
  std::vector<long> out;
  for (std::size_t k = 1; k < c.slices().size(); ++k)
    out.push_back(c.slices()[k].weight());
  return out;
}

CylindricPlanePartition rotate_cpp(const CylindricPlanePartition& c) {
  std::vector<Partition> slices(c.slices().begin() + 1, c.slices().end());
  slices.push_back(c.slices()[1]);
  return {rotate_profile(c.profile()), std::move(slices)};
}

std::string to_string(const CylindricPlanePartition& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.slices().size(); ++k) {
    if (k) out += ',';
    out += to_string(c.slices()[k]);
  }
  return out + "]";
}

}  // namespace cylbij
