#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "cylbij/cpp.hpp"
#include "cylbij/cylindric_diagram.hpp"
#include "cylbij/series.hpp"

namespace cylbij {

/// (γ, 𝔡) as consumed by ψ.
struct PairInput {
  Partition gamma;
  LabelledCylindricDiagram alcd;
};

/// {"profile":"11010","slices":[[3,2,2],…]}
std::string cpp_to_json(const CylindricPlanePartition& c);
/// {"profile":"11010","labels":[[i,j,k,label],…]}, ordered by (k,i,j).
std::string alcd_to_json(const LabelledCylindricDiagram& d);
/// {"profile":"11010","gamma":[3,2],"alcd":[[i,j,k,label],…]}
std::string pair_to_json(const Partition& gamma,
                         const LabelledCylindricDiagram& d);
/// [1,1,2,3]
std::string series_to_json(const TruncatedSeries& s);

/// A JSON string literal with the text escaped.
std::string json_quote(std::string_view text);

/// Each parser throws ErrorKind::parse_error naming the offending field, or
/// the validation error of the object it builds.
CylindricPlanePartition cpp_from_json(std::string_view text);
LabelledCylindricDiagram alcd_from_json(std::string_view text);
PairInput pair_from_json(std::string_view text);

/// Picks the shape by its keys: "slices", "gamma" or "labels".
std::variant<CylindricPlanePartition, PairInput, LabelledCylindricDiagram>
object_from_json(std::string_view text);

/// Slices with the step bits between them.
std::string render_cpp(const CylindricPlanePartition& c);
/// One block per winding number k: rows i (ones), columns j (zeros).
std::string render_alcd(const LabelledCylindricDiagram& d);
/// Lines "i j k hook" for every box with hook ≤ max_hook, sorted by (k,i,j).
std::string render_hooks(const Profile& p, long max_hook);

}  // namespace cylbij
