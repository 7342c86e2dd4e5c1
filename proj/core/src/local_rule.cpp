#include "cylbij/local_rule.hpp"

#include <algorithm>
#include <set>

#include "cylbij/error.hpp"

namespace cylbij {

namespace {

// Column height c (1-based) of a conjugate vector; 0 past the end.
int height(const std::vector<int>& cols, long c) {
  return c >= 1 && c <= static_cast<long>(cols.size()) ? cols[c - 1] : 0;
}

Partition shift_columns(std::vector<int> cols, const std::set<long>& which,
                        int delta) {
  for (long c : which) {
    if (c > static_cast<long>(cols.size())) cols.resize(c, 0);
    cols[c - 1] += delta;
  }
  try {
    return Partition::from_columns(cols);
  } catch (const Error& e) {
    throw Error(ErrorKind::internal,
                std::string("local rule produced a non-partition: ") + e.what());
  }
}

void check_weight_conditions(const Partition& alpha, const Partition& beta,
                             const Partition& lambda, long label,
                             const Partition& nu) {
  const bool strips = is_horizontal_strip(lambda, alpha) &&
                      is_horizontal_strip(lambda, beta) &&
                      is_horizontal_strip(alpha, nu) &&
                      is_horizontal_strip(beta, nu);
  const bool weights =
      lambda.weight() - alpha.weight() == beta.weight() - nu.weight() + label &&
      lambda.weight() - beta.weight() == alpha.weight() - nu.weight() + label;
  if (!strips || !weights)
    throw Error(ErrorKind::internal,
                "local rule broke its invariants at alpha=" + to_string(alpha) +
                    " beta=" + to_string(beta) + " lambda=" +
                    to_string(lambda) + " label=" + std::to_string(label) +
                    " nu=" + to_string(nu));
}

}  // namespace

LabelledPartition burge_down(const Partition& alpha, const Partition& beta,
                             const Partition& lambda) {
  if (!is_horizontal_strip(lambda, alpha) || !is_horizontal_strip(lambda, beta))
    throw Error(ErrorKind::local_rule_domain,
                "not in U(alpha) ∩ U(beta): lambda=" + to_string(lambda) +
                    " alpha=" + to_string(alpha) + " beta=" + to_string(beta));
  const auto l = lambda.columns();
  const auto a = alpha.columns();
  const auto b = beta.columns();
  std::set<long> a_bar, b_bar;
  for (long c = 1; c <= static_cast<long>(l.size()); ++c) {
    if (height(l, c) > height(a, c)) a_bar.insert(c);
    if (height(l, c) > height(b, c)) b_bar.insert(c);
  }
  std::set<long> removed;
  std::set_union(a_bar.begin(), a_bar.end(), b_bar.begin(), b_bar.end(),
                 std::inserter(removed, removed.end()));
  std::vector<long> both;
  std::set_intersection(a_bar.begin(), a_bar.end(), b_bar.begin(), b_bar.end(),
                        std::back_inserter(both));
  const std::set<long> blocked = removed;
  std::set<long> used;
  long label = 0;
  for (auto it = both.rbegin(); it != both.rend(); ++it) {
    long delta = *it - 1;
    while (blocked.count(delta) || used.count(delta)) --delta;
    used.insert(delta);
    if (delta > 0)
      removed.insert(delta);
    else
      ++label;
  }
  Partition nu = shift_columns(l, removed, -1);
  check_weight_conditions(alpha, beta, lambda, label, nu);
  return {label, std::move(nu)};
}

Partition burge_up(const Partition& alpha, const Partition& beta, long label,
                   const Partition& nu) {
  if (!is_horizontal_strip(alpha, nu) || !is_horizontal_strip(beta, nu))
    throw Error(ErrorKind::local_rule_domain,
                "not in D(alpha) ∩ D(beta): nu=" + to_string(nu) +
                    " alpha=" + to_string(alpha) + " beta=" + to_string(beta));
  if (label < 0)
    throw Error(ErrorKind::local_rule_domain,
                "negative face label " + std::to_string(label));
  const auto n = nu.columns();
  const auto a = alpha.columns();
  const auto b = beta.columns();
  std::set<long> a_set, b_set;
  for (long c = 1; c <= static_cast<long>(a.size()); ++c)
    if (height(a, c) > height(n, c)) a_set.insert(c);
  for (long c = 1; c <= static_cast<long>(b.size()); ++c)
    if (height(b, c) > height(n, c)) b_set.insert(c);
  std::set<long> added;
  std::set_union(a_set.begin(), a_set.end(), b_set.begin(), b_set.end(),
                 std::inserter(added, added.end()));
  std::vector<long> both;
  std::set_intersection(a_set.begin(), a_set.end(), b_set.begin(), b_set.end(),
                        std::back_inserter(both));
  const std::set<long> blocked = added;
  for (long i : both) {
    long eps = i + 1;
    while (blocked.count(eps) || added.count(eps)) ++eps;
    added.insert(eps);
  }
  for (long c = 1, left = label; left > 0; ++c) {
    if (added.count(c)) continue;
    added.insert(c);
    --left;
  }
  Partition lambda = shift_columns(n, added, +1);
  check_weight_conditions(alpha, beta, lambda, label, nu);
  return lambda;
}

}  // namespace cylbij
