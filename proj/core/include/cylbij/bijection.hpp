#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cylbij/cpp.hpp"
#include "cylbij/cylindric_diagram.hpp"

namespace cylbij {

/// Outcome of comparing |μᵏ| with |γ| + |diag(k)| for k = 1..T.
struct StrongWeightReport {
  /// First diagonal where the two sides differ, if any.
  std::optional<int> k;
  long slice_size = 0;
  long expected = 0;

  explicit operator bool() const noexcept { return !k.has_value(); }
  std::string message() const;
};

StrongWeightReport check_strong_weight(const Partition& gamma,
                                       const LabelledCylindricDiagram& d,
                                       const CylindricPlanePartition& c);

/// ψ_π(γ, 𝔡): the upper boundary of the growth diagram filled up from the
/// pair. Throws ErrorKind::internal if strong weight preservation fails.
CylindricPlanePartition psi(const Partition& gamma,
                            const LabelledCylindricDiagram& d);

/// φ_π(𝔠) = ψ_π⁻¹(𝔠). Throws ErrorKind::internal if strong weight
/// preservation fails.
std::pair<Partition, LabelledCylindricDiagram> phi(
    const CylindricPlanePartition& c);

}  // namespace cylbij
