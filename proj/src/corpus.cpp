#include "hotring/corpus.hpp"

namespace hotring {

namespace {

using Table = std::vector<std::vector<std::vector<Coord>>>;

RawRing square_zero(std::string label, std::vector<Coord> orders) {
  const std::size_t k = orders.size();
  return RawRing{std::move(label), std::move(orders), Table(k, std::vector<std::vector<Coord>>(k, std::vector<Coord>(k, 0))),
                 std::nullopt};
}

RawRing cyclic_unital(std::string label, Coord n) { return RawRing{std::move(label), {n}, Table{{{1}}}, std::vector<Coord>{1}}; }

}  // namespace

const std::vector<std::string>& corpus_labels() {
  static const std::vector<std::string> labels{"sq0_z2",    "sq0_z3",    "two_z8",    "upper3_z2",   "f2_unital",
                                               "f3_unital", "z4_unital", "graded_f2eps", "zero"};
  return labels;
}

RawRing corpus_raw(const std::string& label) {
  if (label == "sq0_z2") return square_zero(label, {2});
  if (label == "sq0_z3") return square_zero(label, {3});
  if (label == "two_z8") return RawRing{label, {4}, Table{{{2}}}, std::nullopt};  // g = 2 in Z/8, g^2 = 2g
  if (label == "upper3_z2") {
    // e12, e23, e13 with e12 e23 = e13
    RawRing r = square_zero(label, {2, 2, 2});
    r.mul[0][1] = {0, 0, 1};
    return r;
  }
  if (label == "f2_unital") return cyclic_unital(label, 2);
  if (label == "f3_unital") return cyclic_unital(label, 3);
  if (label == "z4_unital") return cyclic_unital(label, 4);
  if (label == "graded_f2eps") {
    // e in degree 0, n in degree 1: e^2 = e, en = ne = n, n^2 = 0
    return RawRing{label, {2, 2}, Table{{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, std::vector<Coord>{1, 0}};
  }
  if (label == "zero") return RawRing{label, {}, {}, std::nullopt};
  throw InvalidInput("unknown corpus ring " + label);
}

RingPtr corpus_ring(const std::string& label) { return validate_ring(corpus_raw(label)); }

std::vector<RingPtr> corpus_rings() {
  std::vector<RingPtr> out;
  for (const std::string& l : corpus_labels()) out.push_back(corpus_ring(l));
  return out;
}

Tower corpus_tower() {
  RingPtr top = validate_ring(square_zero("tower3", {2, 2, 2}));
  RingPtr middle = validate_ring(square_zero("tower2", {2, 2}));
  RingPtr bottom = validate_ring(square_zero("tower1", {2}));
  RingHom h(top, middle, {RingElem{{1, 0}}, RingElem{{0, 1}}, RingElem{{0, 0}}});
  RingHom k(middle, bottom, {RingElem{{1}}, RingElem{{0}}});
  return Tower{top, middle, bottom, h, k};
}

}  // namespace hotring
