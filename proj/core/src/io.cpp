#include "cylbij/io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "cylbij/error.hpp"

namespace cylbij {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) {
  return json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

json labels_json(const LabelledCylindricDiagram& d) {
  json out = json::array();
  for (const auto& [c, lab] : d.labels()) out.push_back({c.i, c.j, c.k, lab});
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object())
    throw Error(ErrorKind::parse_error, "expected a JSON object at top level");
  auto it = j.find(name);
  if (it == j.end())
    throw Error(ErrorKind::parse_error, std::string("missing field \"") + name + "\"");
  return *it;
}

Profile read_profile(const json& j) {
  const auto& f = field(j, "profile");
  if (!f.is_string())
    throw Error(ErrorKind::parse_error, "field \"profile\" must be a 0/1 string");
  return Profile::parse_cylindric(f.get<std::string>());
}

Partition read_partition(const json& j, const std::string& where) {
  if (!j.is_array())
    throw Error(ErrorKind::parse_error, where + " must be an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorKind::parse_error, where + " must contain integers only");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, where + ": " + e.what());
  }
}

LabelledCylindricDiagram read_labels(const Profile& p, const json& j,
                                     const std::string& name) {
  if (!j.is_array())
    throw Error(ErrorKind::parse_error,
                "field \"" + name + "\" must be an array of [i,j,k,label]");
  LabelledCylindricDiagram::Labels labels;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    const auto where = name + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorKind::parse_error, where + " must be [i,j,k,label]");
    for (const auto& v : row)
      if (!v.is_number_integer())
        throw Error(ErrorKind::parse_error, where + " must contain integers only");
    const CylCoord c{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()};
    if (labels.count(c))
      throw Error(ErrorKind::parse_error, where + " repeats box " + to_string(c));
    labels[c] = row[3].get<long>();
  }
  try {
    return LabelledCylindricDiagram(p, std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, "field \"" + name + "\": " + e.what());
  }
}

CylindricPlanePartition read_cpp(const json& j) {
  const Profile p = read_profile(j);
  const auto& s = field(j, "slices");
  if (!s.is_array())
    throw Error(ErrorKind::parse_error, "field \"slices\" must be an array");
  std::vector<Partition> slices;
  for (std::size_t k = 0; k < s.size(); ++k)
    slices.push_back(read_partition(s[k], "slices[" + std::to_string(k) + "]"));
  return {p, std::move(slices)};
}

PairInput read_pair(const json& j) {
  const Profile p = read_profile(j);
  return {read_partition(field(j, "gamma"), "field \"gamma\""),
          read_labels(p, field(j, "alcd"), "alcd")};
}

}  // namespace

std::string cpp_to_json(const CylindricPlanePartition& c) {
  json slices = json::array();
  for (const auto& s : c.slices()) slices.push_back(partition_json(s));
  return json{{"profile", to_string(c.profile())}, {"slices", slices}}.dump();
}

std::string alcd_to_json(const LabelledCylindricDiagram& d) {
  return json{{"profile", to_string(d.profile())}, {"labels", labels_json(d)}}
      .dump();
}

std::string pair_to_json(const Partition& gamma,
                         const LabelledCylindricDiagram& d) {
  // nlohmann orders object keys alphabetically; keep the documented order.
  return "{\"profile\":" + json(to_string(d.profile())).dump() +
         ",\"gamma\":" + partition_json(gamma).dump() +
         ",\"alcd\":" + labels_json(d).dump() + "}";
}

std::string series_to_json(const TruncatedSeries& s) {
  // Coefficients can exceed 64 bits, so they are written as bare digits.
  return "[" + to_string(s) + "]";
}

std::string json_quote(std::string_view text) {
  return json(std::string(text)).dump();
}

CylindricPlanePartition cpp_from_json(std::string_view text) {
  return read_cpp(parse(text));
}

LabelledCylindricDiagram alcd_from_json(std::string_view text) {
  const auto j = parse(text);
  return read_labels(read_profile(j), field(j, "labels"), "labels");
}

PairInput pair_from_json(std::string_view text) { return read_pair(parse(text)); }

std::variant<CylindricPlanePartition, PairInput, LabelledCylindricDiagram>
object_from_json(std::string_view text) {
  const auto j = parse(text);
  if (!j.is_object())
    throw Error(ErrorKind::parse_error, "expected a JSON object at top level");
  if (j.contains("slices")) return read_cpp(j);
  if (j.contains("gamma")) return read_pair(j);
  if (j.contains("labels"))
    return read_labels(read_profile(j), j.at("labels"), "labels");
  throw Error(ErrorKind::parse_error,
              "object has none of the fields \"slices\", \"gamma\", \"labels\"");
}

std::string render_cpp(const CylindricPlanePartition& c) {
  std::ostringstream os;
  os << "profile " << to_string(c.profile()) << ", weight " << cpp_weight(c)
     << '\n';
  for (int k = 0; k <= c.profile().length(); ++k) {
    if (k > 0)
      os << "  " << (c.profile().at(k) == 1 ? "grow  " : "shrink") << " (bit "
         << c.profile().at(k) << ")\n";
    os << "mu" << k << " = " << to_string(c.slice(k)) << "  |" << c.slice(k).weight()
       << "|\n";
  }
  return os.str();
}

std::string render_alcd(const LabelledCylindricDiagram& d) {
  const auto& p = d.profile();
  std::ostringstream os;
  os << "profile " << to_string(p) << ", weight " << alcd_weight(d) << ", depth "
     << depth(d) << '\n';
  std::size_t width = 2;
  for (const auto& [c, lab] : d.labels())
    width = std::max(width, std::to_string(lab).size() + 1);
  for (int k = 0; k < std::max(depth(d), 1); ++k) {
    os << "k=" << k << "    j:";
    for (int j : p.zero_positions()) os << std::setw(static_cast<int>(width)) << j;
    os << '\n';
    for (int i : p.one_positions()) {
      os << "  i=" << std::setw(2) << i << "    ";
      for (int j : p.zero_positions()) {
        std::string cell = ".";
        if (j < i && k == 0)
          cell = " ";
        else if (long lab = d.label({i, j, k}); lab != 0)
          cell = std::to_string(lab);
        os << std::setw(static_cast<int>(width)) << cell;
      }
      os << '\n';
    }
  }
  const auto diag = diag_weights(d);
  os << "diagonal weights:";
  for (long v : diag) os << ' ' << v;
  os << '\n';
  return os.str();
}

std::string render_hooks(const Profile& p, long max_hook) {
  std::ostringstream os;
  os << "  i  j  k  hook\n";
  for (const auto& c : boxes_up_to_hook(p, max_hook))
    os << std::setw(3) << c.i << std::setw(3) << c.j << std::setw(3) << c.k
       << std::setw(6) << hook(p, c) << '\n';
  return os.str();
}

}  // namespace cylbij
