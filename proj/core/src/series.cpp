#include "cylbij/series.hpp"

#include <algorithm>
#include <thread>

#include "cylbij/error.hpp"

namespace cylbij {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0)
    throw Error(ErrorKind::parse_error, "truncation order must be ≥ 0");
  coeffs_.assign(order + 1, 0);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Coefficient> coeffs)
    : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i)
    coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order_ != order_)
    throw Error(ErrorKind::internal, "series orders differ");
  for (int i = 0; i <= order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  if (other.order_ != order_)
    throw Error(ErrorKind::internal, "series orders differ");
  std::vector<Coefficient> out(order_ + 1, 0);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_geometric(int h) {
  if (h < 1) throw Error(ErrorKind::internal, "geometric factor needs h ≥ 1");
  for (int i = h; i <= order_; ++i) coeffs_[i] += coeffs_[i - h];
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_binomial(int h) {
  if (h < 1) throw Error(ErrorKind::internal, "binomial factor needs h ≥ 1");
  for (int i = order_; i >= h; --i) coeffs_[i] -= coeffs_[i - h];
  return *this;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ',';
    out += s[i].str();
  }
  return out;
}

int first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return a.order() == b.order() ? -1 : n + 1;
}

namespace {

// Partitions of size ≤ N with their horizontal-strip neighbours.
struct StripGraph {
  std::vector<Partition> states;
  std::vector<std::vector<int>> up;    // λ ⊇ μ, λ/μ a strip, |λ| ≤ N
  std::vector<std::vector<int>> down;  // ν ⊆ μ, μ/ν a strip

  explicit StripGraph(int order) : states(partitions_up_to(order)) {
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
    up.resize(states.size());
    down.resize(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (const auto& lam : add_horizontal_strips(states[i], order - states[i].weight()))
        up[i].push_back(index.at(lam));
      for (const auto& nu : remove_horizontal_strips(states[i]))
        down[i].push_back(index.at(nu));
    }
  }
};

using Poly = std::vector<Coefficient>;

// Paths from `start` along the profile back to `start`, each slice after the
// first contributing its size.
Poly closed_walks(const StripGraph& g, const Profile& p, int start, int order) {
  std::map<int, Poly> cur;
  cur[start] = Poly(order + 1, 0);
  cur[start][0] = 1;
  for (int t = 1; t <= p.length(); ++t) {
    std::map<int, Poly> next;
    const auto& adj = p.at(t) == 1 ? g.up : g.down;
    for (const auto& [from, poly] : cur) {
      for (int to : adj[from]) {
        const int w = static_cast<int>(g.states[to].weight());
        if (w > order) continue;
        auto [it, fresh] = next.try_emplace(to);
        if (fresh) it->second.assign(order + 1, 0);
        for (int d = 0; d + w <= order; ++d)
          if (poly[d] != 0) it->second[d + w] += poly[d];
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(start);
  return it == cur.end() ? Poly(order + 1, 0) : it->second;
}

void dfs_labels(const Profile& p, const std::vector<CylCoord>& boxes,
                std::size_t at, long budget, LabelledCylindricDiagram& d,
                const std::function<void(const LabelledCylindricDiagram&)>& f) {
  if (at == boxes.size()) {
    f(d);
    return;
  }
  const long h = hook(p, boxes[at]);
  for (long lab = 0; lab * h <= budget; ++lab) {
    d.set_label(boxes[at], lab);
    dfs_labels(p, boxes, at + 1, budget - lab * h, d, f);
  }
  d.set_label(boxes[at], 0);
}

void count_labels(const std::vector<long>& hooks, std::size_t at, long budget,
                  long order, std::vector<long>& counts) {
  if (at == hooks.size()) {
    ++counts[order - budget];
    return;
  }
  for (long used = 0; used <= budget; used += hooks[at])
    count_labels(hooks, at + 1, budget - used, order, counts);
}

}  // namespace

TruncatedSeries enumerate_cpp_series(const Profile& p, int order,
                                     unsigned threads) {
  require_cylindric(p);
  const StripGraph g(order);
  const int starts = static_cast<int>(g.states.size());
  std::vector<Poly> results(starts);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, starts);
  auto work = [&](unsigned id) {
    for (int s = static_cast<int>(id); s < starts; s += static_cast<int>(threads))
      results[s] = closed_walks(g, p, s, order);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  TruncatedSeries out(order);
  for (const auto& poly : results) out += TruncatedSeries(order, poly);
  return out;
}

TruncatedSeries enumerate_pairs_series(const Profile& p, int order) {
  require_cylindric(p);
  const long T = p.length();
  std::vector<long> hooks;
  for (const auto& c : boxes_up_to_hook(p, order)) hooks.push_back(hook(p, c));
  TruncatedSeries out(order);
  for (long g = 0; g * T <= order; ++g) {
    const auto gammas = partitions_of(static_cast<int>(g));
    const long budget = order - g * T;
    std::vector<long> counts(budget + 1, 0);
    count_labels(hooks, 0, budget, budget, counts);
    for (long w = 0; w <= budget; ++w)
      out[static_cast<int>(g * T + w)] += Coefficient(counts[w]) * gammas.size();
  }
  return out;
}

TruncatedSeries borodin_rhs_series(const Profile& p, int order) {
  require_cylindric(p);
  auto out = TruncatedSeries::one(order);
  for (int h = p.length(); h <= order; h += p.length()) out.mul_geometric(h);
  for (const auto& c : boxes_up_to_hook(p, order))
    out.mul_geometric(static_cast<int>(hook(p, c)));
  return out;
}

TruncatedSeries enumerate_rpp_series(const Profile& p, int order) {
  if (p.length() == 0) return TruncatedSeries::one(order);
  const StripGraph g(order);
  return TruncatedSeries(order, closed_walks(g, p, 0, order));
}

TruncatedSeries stanley_rhs_series(const Profile& p, int order) {
  auto out = TruncatedSeries::one(order);
  for (auto [i, j] : inversions(p))
    if (j - i <= order) out.mul_geometric(j - i);
  return out;
}

void for_each_cpp(const Profile& p, long max_weight,
                  const std::function<void(const CylindricPlanePartition&)>& f) {
  require_cylindric(p);
  const int T = p.length();
  std::vector<Partition> slices(T + 1);
  std::function<void(int, long)> rec = [&](int t, long used) {
    const Partition& start = slices[0];
    if (t == T) {
      if (p.at(T) == 1 ? is_horizontal_strip(start, slices[T - 1])
                       : is_horizontal_strip(slices[T - 1], start)) {
        slices[T] = start;
        f(CylindricPlanePartition(p, slices));
      }
      return;
    }
    const auto& prev = slices[t - 1];
    const long room = max_weight - used - start.weight() - prev.weight();
    if (p.at(t) == 1 && room < 0) return;
    const auto next = p.at(t) == 1 ? add_horizontal_strips(prev, room)
                                   : remove_horizontal_strips(prev);
    for (const auto& q : next) {
      if (used + q.weight() + start.weight() > max_weight) continue;
      slices[t] = q;
      rec(t + 1, used + q.weight());
    }
  };
  for (const auto& start : partitions_up_to(static_cast<int>(max_weight))) {
    slices[0] = start;
    rec(1, 0);
  }
}

void for_each_alcd(const Profile& p, long max_weight,
                   const std::function<void(const LabelledCylindricDiagram&)>& f) {
  const auto boxes = boxes_up_to_hook(p, max_weight);
  LabelledCylindricDiagram d(p);
  dfs_labels(p, boxes, 0, max_weight, d, f);
}

void for_each_pair(
    const Profile& p, long max_weight,
    const std::function<void(const Partition&, const LabelledCylindricDiagram&)>& f) {
  const long T = p.length();
  for (long g = 0; g * T <= max_weight; ++g)
    for (const auto& gamma : partitions_of(static_cast<int>(g)))
      for_each_alcd(p, max_weight - g * T,
                    [&](const LabelledCylindricDiagram& d) { f(gamma, d); });
}

std::map<std::vector<long>, long> cpp_refined_weights(const Profile& p,
                                                      long max_weight) {
  std::map<std::vector<long>, long> out;
  for_each_cpp(p, max_weight, [&](const CylindricPlanePartition& c) {
    ++out[cpp_refined_weight(c)];
  });
  return out;
}

std::map<std::vector<long>, long> pair_refined_weights(const Profile& p,
                                                       long max_weight) {
  std::map<std::vector<long>, long> out;
  for_each_pair(p, max_weight,
                [&](const Partition& gamma, const LabelledCylindricDiagram& d) {
                  auto w = diag_weights(d);
                  for (auto& v : w) v += gamma.weight();
                  ++out[w];
                });
  return out;
}

}  // namespace cylbij
