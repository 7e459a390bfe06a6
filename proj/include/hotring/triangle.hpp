#pragma once

// Mapping paths, Puppe sequences, left triangles with rotation, the
// octahedron for a pair of surjections, the path factorization of a map,
// fibration families and the K0 presentation of a small diagram.

#include "hotring/homotopy.hpp"
#include "hotring/intmatrix.hpp"
#include "hotring/json_io.hpp"
#include "hotring/loops.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hotring {

// ---------------------------------------------------------------- mapping path

/// A map X -> Y[y] with y = 0 giving 0 and y = 1 giving a fixed composite.
/// An empty h means the composite is zero on the nose.
struct NullHomotopy {
  std::optional<VirtualHom> h;
  VarId var = 0;
  bool strict() const { return !h.has_value(); }
};

/// P(g) = X x_Y EY for g: X -> Y, with g1 = pr1, g' = pr2 and j(c) = (0, c).
struct MappingPath {
  VirtualHom g;
  VRing ring;
  VRing path;   // EY
  VRing loops;  // Omega Y, same variable as path
  VirtualHom g1, gprime, j;
  NullHomotopy composite;  // g o g1 ~ 0 through (x, p) |-> p(y)
};
MappingPath mapping_path(const VirtualHom& g, const std::string& label = "");
MappingPath mapping_path(const RingHom& g);

/// (c, p(x)) |-> (p(y), p(xy)): P(id) contracts onto 0.
VirtualCertificate identity_path_contraction(const MappingPath& p);

// ---------------------------------------------------------------- Puppe

/// ... -> P(g1) -> P(g) -> B -> C. objects[0] = C, objects[1] = B and
/// maps[k]: objects[k+1] -> objects[k]; stages[k] = mapping_path(maps[k]).
struct PuppeSequence {
  std::vector<VRing> objects;
  std::vector<VirtualHom> maps;
  std::vector<MappingPath> stages;
};
/// Throws DepthExceeded when length exceeds depth_cap.
PuppeSequence puppe(const RingHom& g, int length, int depth_cap = 4);

/// Checks of a Puppe sequence on finite models (reduction modulo (x^2 - x)^level).
/// The reduced maps are themselves verified homomorphisms. Class counts and
/// class exactness are for [T, -] with T the test ring and homotopies of
/// polynomial degree <= 1 inside the finite models.
struct PuppeReport {
  int level = 0;
  std::vector<std::size_t> sizes;             // finite model orders, objects[0] first
  std::uint64_t composites_checked = 0, composite_failures = 0;
  std::uint64_t lifts_checked = 0, lift_failures = 0;
  std::vector<std::size_t> class_counts;      // |[T, objects[k]]|
  bool class_exact = true;
  std::string first_failure;
  bool ok() const { return composite_failures == 0 && lift_failures == 0 && class_exact; }
};
PuppeReport check_puppe(const PuppeSequence& seq, const RingPtr& test_ring, int level);

// ---------------------------------------------------------------- triangles

/// Omega C -> A -> B -> C. composites[k] witnesses maps[k+1] o maps[k] ~ 0.
/// pending is the last composite of the triangle before the latest rotation;
/// its loop witnesses the new first composite at the next rotation.
struct LeftTriangle {
  std::vector<VRing> objects;
  std::vector<VirtualHom> maps;
  std::vector<NullHomotopy> composites;
  NullHomotopy pending;
  std::string provenance;
  int rotations = 0;
  std::optional<VirtualCertificate> rotation_square;
};

/// Omega C -j-> P(g) -g1-> B -g-> C.
LeftTriangle standard_triangle(const RingHom& g);
/// (Omega C -f-> A -g-> B -h-> C) |-> (Omega B -(-Omega h)-> Omega C -f-> A -g-> B),
/// with -Omega h = Omega h o sigma. Rotating a standard triangle also records
/// the homotopy kappa ~ nu o Omega g o sigma into P(g1).
LeftTriangle rotate(const LeftTriangle& t);

struct TriangleReport {
  std::uint64_t probes = 0, failures = 0;
  std::string first_failure;
  bool rotation_square_ok = true;
  bool ok() const { return failures == 0 && rotation_square_ok; }
};
TriangleReport check_triangle(const LeftTriangle& t, std::size_t probes_per_map, Rng& rng);

// ---------------------------------------------------------------- octahedron

/// For surjections h: B -> C, k: C -> D with A = ker h, F = ker kh, E = ker k:
/// the exact column A -alpha-> F -beta-> E and psi: P(beta) -> P(h),
/// (f, e) |-> (m f, l e), with psi gamma = j Omega l and psi delta = i.
struct Octahedron {
  RingHom h, k;
  Subring a, f, e;  // kernels of h, kh, k
  RingHom alpha, beta;
  MappingPath ph, pbeta;
  VRing loop_e;
  VirtualHom i, delta, gamma, loop_l, psi;
  std::vector<LeftTriangle> rows;  // standard triangles of h, kh, k
};
/// Throws NotSurjective when h or k is not onto.
Octahedron octahedron(const RingHom& h, const RingHom& k);

struct OctahedronReport {
  bool column_exact = false;
  std::uint64_t probes = 0, failures = 0;
  std::string first_failure;
  bool exhaustive = false;  // probes were every element of the level-2 finite models
  bool ok() const { return column_exact && failures == 0; }
};
OctahedronReport check_octahedron(const Octahedron& o, int level = 2);

// ---------------------------------------------------------------- factorization

/// u = p o i with A' = A x_B B[x] (over u and x = 0), i(a) = (a, u(a)),
/// p(a, q) = q(1), retraction r = pr1 with r i = id and i r ~ id through
/// (a, q(x)) |-> (a, q(xy)).
struct Factorization {
  RingHom u;
  VRing source, target, ring;
  VirtualHom i, p, iota1, iota2;
  VirtualCertificate splitting;  // i o iota2 ~ id
  VElem preimage(const RingElem& b) const;  // (0, b x)
};
Factorization factorize(const RingHom& u);

struct FactorizationReport {
  bool factors = true, surjective = true, retraction = true, splitting = true, homs = true;
  std::string failure;
  bool ok() const { return factors && surjective && retraction && splitting && homs; }
};
FactorizationReport check_factorization(const Factorization& f, std::size_t probe_count, Rng& rng);

// ---------------------------------------------------------------- fibrations

/// A class of maps in a diagram: either every surjection, or the marked homs
/// (which must be surjective).
struct FibrationFamily {
  Diagram diagram;
  bool all_surjective = true;
  std::vector<std::string> marked;

  static FibrationFamily surjections(Diagram d);
  /// Throws NotSurjective when a marked hom is not onto.
  static FibrationFamily of_marked(Diagram d, std::vector<std::string> names);
  bool contains(const RingHom& f) const;
};

struct AxiomResult {
  std::string axiom;
  bool holds = true;
  std::vector<std::string> violations;
};
std::vector<AxiomResult> check_axioms(const FibrationFamily& family, std::size_t probes, Rng& rng);

/// Whether GL_n(E_m g): GL_n(E_m B) -> GL_n(E_m C) is onto for a surjection g.
/// Verified only speaks for the given truncation level and matrix size.
struct GlFibrationFlag {
  enum class Status { Verified, Counterexample, Unknown };
  Status status = Status::Unknown;
  int level = 0;
  std::size_t size = 0;
  std::string note;
};
GlFibrationFlag gl_fibration(const RingHom& g, int level, std::size_t size, std::uint64_t cap = 1u << 16);

// ---------------------------------------------------------------- K0

/// Objects with weak-equivalence pairs and fibre sequences F -> E -> B.
/// An object named "0" is the zero ring and gets the relation [0] = 0.
struct K0Diagram {
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> weq;
  std::vector<std::array<std::string, 3>> fib_seq;  // (F, E, B)
};
K0Diagram k0_diagram_from_json(const Json& j);
Json k0_diagram_to_json(const K0Diagram& d);

/// Z^objects modulo the relations [A] = [B] and [E] = [F] + [B], as
/// Z^rank + sum Z/d_i. class_of[k] are coordinates of object k: torsion
/// coordinates first (reduced mod d_i), then free ones.
struct K0Presentation {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  std::vector<std::vector<BigInt>> class_of;
  IntMatrix relations;  // one row per relation, one column per object
  std::vector<std::string> objects;
};
K0Presentation k0_presentation(const K0Diagram& d);
/// Same presentation from an explicit relation matrix.
K0Presentation k0_from_relations(const IntMatrix& relations, std::vector<std::string> objects);
/// Whether a combination of object classes is zero in the group.
bool k0_vanishes(const K0Presentation& p, const std::vector<BigInt>& combination);
Json k0_to_json(const K0Presentation& p);

}  // namespace hotring
