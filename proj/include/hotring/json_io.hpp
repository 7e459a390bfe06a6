#pragma once

// JSON forms of rings, homomorphisms, polynomials and certificates.
//   ring: {"label": str, "orders": [int], "mul": [[[int]]], "unit": [int] | null}
//   hom:  {"source": label, "target": label, "images": [[int]]}
//   poly: [{"monomial": {"x": 2}, "coeff": [int]}]
//   diagram: {"rings": [ring], "homs": [{"name": str, ...hom}]}

#include "hotring/homotopy.hpp"
#include "hotring/ring.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace hotring {

using Json = nlohmann::ordered_json;

/// Parses text; malformed input raises InvalidInput naming the byte position.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

RawRing raw_ring_from_json(const Json& j);
RingPtr ring_from_json(const Json& j);
RingPtr load_ring(const std::filesystem::path& path);
Json ring_to_json(const FiniteRing& r);

Json elem_to_json(const RingElem& a);
RingElem elem_from_json(const FiniteRing& r, const Json& j);

Json hom_to_json(const RingHom& f);
RingHom hom_from_json(const Json& j, const RingPtr& source, const RingPtr& target);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const RingPtr& r, const Json& j);

Json certificate_to_json(const HomotopyCertificate& c);
HomotopyCertificate certificate_from_json(const Json& j, const RingPtr& source, const RingPtr& target);

/// Named rings and homs of a diagram file.
struct Diagram {
  std::map<std::string, RingPtr> rings;
  std::vector<std::pair<std::string, RingHom>> homs;
  const RingHom& hom(const std::string& name) const;
};
Diagram diagram_from_json(const Json& j);
Json diagram_to_json(const Diagram& d);

}  // namespace hotring
