#include "hotring/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hotring {

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

namespace {

template <class T>
T field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(what + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(what + ": field \"" + key + "\" has the wrong type: " + e.what());
  }
}

}  // namespace

RawRing raw_ring_from_json(const Json& j) {
  RawRing raw;
  raw.label = j.is_object() && j.contains("label") ? field<std::string>(j, "label", "ring") : "";
  raw.orders = field<std::vector<Coord>>(j, "orders", "ring " + raw.label);
  raw.mul = field<std::vector<std::vector<std::vector<Coord>>>>(j, "mul", "ring " + raw.label);
  if (j.contains("unit") && !j.at("unit").is_null()) raw.unit = field<std::vector<Coord>>(j, "unit", "ring " + raw.label);
  return raw;
}

RingPtr ring_from_json(const Json& j) { return validate_ring(raw_ring_from_json(j)); }

RingPtr load_ring(const std::filesystem::path& path) { return ring_from_json(read_json_file(path)); }

Json ring_to_json(const FiniteRing& r) {
  RawRing raw = r.raw();
  Json j;
  j["label"] = raw.label;
  j["orders"] = raw.orders;
  j["mul"] = raw.mul;
  j["unit"] = raw.unit ? Json(*raw.unit) : Json(nullptr);
  return j;
}

Json elem_to_json(const RingElem& a) { return Json(a.coords); }

RingElem elem_from_json(const FiniteRing& r, const Json& j) {
  std::vector<Coord> coords;
  try {
    coords = j.get<std::vector<Coord>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("element of " + r.label() + ": " + e.what());
  }
  if (coords.size() != r.rank()) throw InvalidInput("element of " + r.label() + " needs " + std::to_string(r.rank()) + " coordinates");
  return r.reduce(coords);
}

Json hom_to_json(const RingHom& f) {
  Json j;
  j["source"] = f.source()->label();
  j["target"] = f.target()->label();
  Json images = Json::array();
  for (const RingElem& a : f.images()) images.push_back(elem_to_json(a));
  j["images"] = images;
  return j;
}

RingHom hom_from_json(const Json& j, const RingPtr& source, const RingPtr& target) {
  if (!j.contains("images") || !j.at("images").is_array()) throw InvalidInput("hom: missing images");
  std::vector<RingElem> images;
  for (const Json& e : j.at("images")) images.push_back(elem_from_json(*target, e));
  if (images.size() != source->rank()) throw InvalidInput("hom: one image per generator of " + source->label() + " expected");
  return RingHom(source, target, std::move(images));
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (VarId v : m.vars()) mono[var_name(v)] = m.degree(v);
    out.push_back(Json{{"monomial", mono}, {"coeff", elem_to_json(c)}});
  }
  return out;
}

Poly poly_from_json(const RingPtr& r, const Json& j) {
  Poly p(r);
  if (!j.is_array()) throw InvalidInput("polynomial: expected a term list");
  for (const Json& t : j) {
    Monomial m;
    const Json mono = field<Json>(t, "monomial", "term");
    if (!mono.is_object()) throw InvalidInput("term: monomial must be an object");
    for (const auto& [name, e] : mono.items()) {
      if (!e.is_number_unsigned()) throw InvalidInput("term: exponent of " + name + " must be a non-negative integer");
      m = m.with(var(name), e.get<unsigned>());
    }
    p += Poly::term(r, elem_from_json(*r, field<Json>(t, "coeff", "term")), m);
  }
  return p;
}

Json certificate_to_json(const HomotopyCertificate& c) {
  Json j;
  j["variable"] = var_name(c.var);
  j["f0"] = hom_to_json(c.f0);
  j["f1"] = hom_to_json(c.f1);
  Json images = Json::array();
  for (const Poly& p : c.images) images.push_back(poly_to_json(p));
  j["images"] = images;
  return j;
}

HomotopyCertificate certificate_from_json(const Json& j, const RingPtr& source, const RingPtr& target) {
  VarId v = var(field<std::string>(j, "variable", "certificate"));
  RingHom f0 = hom_from_json(field<Json>(j, "f0", "certificate"), source, target);
  RingHom f1 = hom_from_json(field<Json>(j, "f1", "certificate"), source, target);
  std::vector<Poly> images;
  for (const Json& p : field<Json>(j, "images", "certificate")) images.push_back(poly_from_json(target, p));
  return HomotopyCertificate{f0, f1, v, std::move(images)};
}

const RingHom& Diagram::hom(const std::string& name) const {
  for (const auto& [n, f] : homs)
    if (n == name) return f;
  throw InvalidInput("diagram has no hom named " + name);
}

Diagram diagram_from_json(const Json& j) {
  Diagram d;
  for (const Json& r : field<Json>(j, "rings", "diagram")) {
    RingPtr ring = ring_from_json(r);
    if (!d.rings.emplace(ring->label(), ring).second) throw InvalidInput("diagram: duplicate ring " + ring->label());
  }
  auto ring_named = [&](const std::string& label) {
    auto it = d.rings.find(label);
    if (it == d.rings.end()) throw InvalidInput("diagram: unknown ring label " + label);
    return it->second;
  };
  if (j.contains("homs"))
    for (const Json& h : j.at("homs")) {
      std::string name = field<std::string>(h, "name", "diagram hom");
      RingPtr s = ring_named(field<std::string>(h, "source", "hom " + name));
      RingPtr t = ring_named(field<std::string>(h, "target", "hom " + name));
      d.homs.emplace_back(name, hom_from_json(h, s, t));
    }
  return d;
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["rings"] = Json::array();
  for (const auto& [label, r] : d.rings) j["rings"].push_back(ring_to_json(*r));
  j["homs"] = Json::array();
  for (const auto& [name, f] : d.homs) {
    Json h = hom_to_json(f);
    h["name"] = name;
    j["homs"].push_back(h);
  }
  return j;
}

}  // namespace hotring
