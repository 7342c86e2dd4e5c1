#pragma once

#include "cylbij/partition.hpp"

namespace cylbij {

/// Result of the forward Burge rule: face label ℓ and bottom vertex ν.
struct LabelledPartition {
  long label = 0;
  Partition nu;
  friend bool operator==(const LabelledPartition&,
                         const LabelledPartition&) = default;
};

/// Forward Burge rule 𝔇_{α,β}(λ). Requires λ/α and λ/β to be horizontal
/// strips; throws ErrorKind::local_rule_domain otherwise.
LabelledPartition burge_down(const Partition& alpha, const Partition& beta,
                             const Partition& lambda);

/// Inverse Burge rule 𝔘_{α,β}(ℓ, ν). Requires α/ν and β/ν to be horizontal
/// strips and ℓ ≥ 0; throws ErrorKind::local_rule_domain otherwise.
Partition burge_up(const Partition& alpha, const Partition& beta, long label,
                   const Partition& nu);

}  // namespace cylbij
