#include "cylbij/bijection.hpp"

#include "cylbij/error.hpp"
#include "cylbij/growth_diagram.hpp"

namespace cylbij {

std::string StrongWeightReport::message() const {
  if (!k) return "strong weight preserved";
  return "strong weight fails at k=" + std::to_string(*k) + ": |mu^k| = " +
         std::to_string(slice_size) + " but |gamma| + |diag(k)| = " +
         std::to_string(expected);
}

StrongWeightReport check_strong_weight(const Partition& gamma,
                                       const LabelledCylindricDiagram& d,
                                       const CylindricPlanePartition& c) {
  if (d.profile() != c.profile())
    throw Error(ErrorKind::incomparable_profiles,
                "diagram profile " + to_string(d.profile()) +
                    " differs from CPP profile " + to_string(c.profile()));
  const auto diag = diag_weights(d);
  for (int k = 1; k <= c.profile().length(); ++k) {
    const long lhs = c.slice(k).weight();
    const long rhs = gamma.weight() + diag[k - 1];
    if (lhs != rhs) return {k, lhs, rhs};
  }
  return {};
}

namespace {

void require_strong_weight(const Partition& gamma,
                           const LabelledCylindricDiagram& d,
                           const CylindricPlanePartition& c) {
  if (auto report = check_strong_weight(gamma, d, c); !report)
    throw Error(ErrorKind::internal,
                report.message() + " for " + to_string(c));
}

}  // namespace

CylindricPlanePartition psi(const Partition& gamma,
                            const LabelledCylindricDiagram& d) {
  auto c = read_cpp(CylindricGrowthDiagram::from_pair(gamma, d));
  require_strong_weight(gamma, d, c);
  return c;
}

std::pair<Partition, LabelledCylindricDiagram> phi(
    const CylindricPlanePartition& c) {
  auto pair = read_pair(CylindricGrowthDiagram::from_cpp(c));
  require_strong_weight(pair.first, pair.second, c);
  return pair;
}

}  // namespace cylbij
