#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cylbij/cpp.hpp"
#include "cylbij/cylindric_diagram.hpp"

namespace cylbij {

using Coefficient = boost::multiprecision::cpp_int;

/// Power series in z modulo z^{N+1} with exact integer coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Coefficient> coeffs);
  static TruncatedSeries one(int order);

  int order() const noexcept { return order_; }
  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }
  const Coefficient& operator[](int i) const { return coeffs_.at(i); }
  Coefficient& operator[](int i) { return coeffs_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  /// Multiply by 1/(1 − zʰ), h ≥ 1.
  TruncatedSeries& mul_geometric(int h);
  /// Multiply by (1 − zʰ), h ≥ 1.
  TruncatedSeries& mul_binomial(int h);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) {
    return a *= b;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_;
  std::vector<Coefficient> coeffs_;
};

/// "1,1,2,3,5".
std::string to_string(const TruncatedSeries& s);
/// Index of the first differing coefficient, or -1 when equal.
int first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/// Σ over CPPs of profile π of z^{|𝔠|}, by a transfer matrix over
/// partitions of size ≤ N. Start partitions are split across `threads`
/// workers (0 = hardware concurrency); the result does not depend on it.
TruncatedSeries enumerate_cpp_series(const Profile& p, int order,
                                     unsigned threads = 0);
/// Σ over pairs (γ, 𝔡) of z^{T|γ| + |𝔡|}, by direct generation.
TruncatedSeries enumerate_pairs_series(const Profile& p, int order);
/// Π_{n≥1} 1/(1 − z^{nT}) · Π_{boxes} 1/(1 − z^{hook}).
TruncatedSeries borodin_rhs_series(const Profile& p, int order);

/// Sequences (μ⁰, …, μᵀ) with μ⁰ = μᵀ = ∅ and the CPP strip conditions.
TruncatedSeries enumerate_rpp_series(const Profile& p, int order);
/// Π over inversions (i,j) of 1/(1 − z^{j−i}).
TruncatedSeries stanley_rhs_series(const Profile& p, int order);

/// Every CPP of profile π and weight ≤ max_weight.
void for_each_cpp(const Profile& p, long max_weight,
                  const std::function<void(const CylindricPlanePartition&)>& f);
/// Every ALCD of profile π and weight ≤ max_weight.
void for_each_alcd(const Profile& p, long max_weight,
                   const std::function<void(const LabelledCylindricDiagram&)>& f);
/// Every pair (γ, 𝔡) with T|γ| + |𝔡| ≤ max_weight.
void for_each_pair(
    const Profile& p, long max_weight,
    const std::function<void(const Partition&, const LabelledCylindricDiagram&)>& f);

/// Multiset of refined weights (|μ¹|, …, |μᵀ|) of CPPs of weight ≤ max_weight.
std::map<std::vector<long>, long> cpp_refined_weights(const Profile& p,
                                                      long max_weight);
/// Multiset of (|γ| + |diag(k)|)_k over pairs of weight ≤ max_weight.
std::map<std::vector<long>, long> pair_refined_weights(const Profile& p,
                                                       long max_weight);

}  // namespace cylbij
