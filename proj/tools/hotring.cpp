// hotring: command-line front end with a content-addressed result store.

#include "hotring/checks.hpp"
#include "hotring/corpus.hpp"
#include "hotring/glk.hpp"
#include "hotring/homotopy.hpp"
#include "hotring/homs.hpp"
#include "hotring/json_io.hpp"
#include "hotring/triangle.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#ifndef HOTRING_VERSION
#define HOTRING_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace hotring;

namespace {

constexpr int kOk = 0, kBadInput = 1, kVerification = 2, kBudget = 3;
constexpr int kSchemaVersion = 1;  // bump with any payload change

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path store_root(const std::string& out) {
  if (!out.empty()) return out;
  if (const char* home = std::getenv("HOTRING_HOME"); home && *home) return home;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".hotring";
  return ".hotring";
}

void write_atomic(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

// ---------------------------------------------------------------- inputs

struct Input {
  Json json;          // canonical content, hashed into the record key
  RingPtr ring;       // validated ring (rings only)
};

Json read_input_json(const std::string& arg) {
  if (fs::exists(arg)) return read_json_file(arg);
  throw UsageError("no such file: " + arg);
}

// A ring given as a JSON file or as the label of a bundled ring.
Input ring_input(const std::string& arg) {
  Input in;
  if (fs::exists(arg)) {
    in.json = read_json_file(arg);
    in.ring = ring_from_json(in.json);
  } else {
    const auto& labels = corpus_labels();
    if (std::find(labels.begin(), labels.end(), arg) == labels.end())
      throw UsageError("unknown ring label or missing file: " + arg);
    in.ring = corpus_ring(arg);
  }
  in.json = ring_to_json(*in.ring);
  return in;
}

// "id", "zero", or an index into the lexicographic enumeration.
RingHom pick_hom(const RingPtr& s, const RingPtr& t, const std::string& which, std::uint64_t cap) {
  if (which == "id") {
    if (!same_ring(*s, *t)) throw UsageError("id needs equal source and target");
    return RingHom::identity(s);
  }
  if (which == "zero") return RingHom::zero(s, t);
  std::size_t idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoul(which, &used);
    if (used != which.size()) throw std::invalid_argument(which);
  } catch (const std::exception&) {
    throw UsageError("hom must be id, zero or an index: " + which);
  }
  auto homs = enumerate_homs(s, t, cap);
  if (idx >= homs.size())
    throw UsageError("hom index " + which + " out of range (" + std::to_string(homs.size()) + " homs)");
  return homs[idx];
}

Json hom_json(const RingHom& f) { return Json(hom_to_json(f)["images"]); }

Json big(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

Json tally_json(const std::vector<IdentityTally>& ts) {
  Json out = Json::array();
  for (const IdentityTally& t : ts)
    out.push_back({{"family", t.family}, {"probes", t.probes}, {"failures", t.failures}, {"first_failure", t.first_failure}});
  return out;
}

// ---------------------------------------------------------------- runs

struct Outcome {
  Json payload;
  int code = kOk;
};

struct Run {
  std::string command;
  Json inputs = Json::object();  // name -> content hash
  Json params = Json::object();
  std::function<Outcome()> compute;
  bool cacheable = true;
};

struct Globals {
  std::string out;
  bool compact = false;
  std::uint64_t seed = 1;
};

int execute(const Run& run, const Globals& g) {
  Json key_doc = {{"command", run.command}, {"inputs", run.inputs}, {"parameters", run.params}, {"tool_version", HOTRING_VERSION}};
  const std::string key = sha256_hex(key_doc.dump());
  const fs::path path = store_root(g.out) / key.substr(0, 2) / (key + ".json");
  auto emit = [&](const Json& payload) { std::cout << (g.compact ? payload.dump() : payload.dump(2)) << "\n"; };

  if (run.cacheable && fs::exists(path)) {
    try {
      Json record = read_json_file(path);
      std::cerr << "cache hit " << key << "\n";
      emit(record.at("payload"));
      return record.at("exit_code").get<int>();
    } catch (const std::exception& e) {
      std::cerr << "ignoring unreadable record " << path.string() << ": " << e.what() << "\n";
    }
  }
  Outcome o = run.compute();
  Json tagged = {{"schema", run.command + "/" + std::to_string(kSchemaVersion)}};
  tagged.update(o.payload);
  o.payload = tagged;
  if (run.cacheable) {
    Json record = key_doc;
    record["key"] = key;
    record["payload"] = o.payload;
    record["exit_code"] = o.code;
    record["timestamp"] = utc_timestamp();
    write_atomic(path, record.dump(2) + "\n");
    std::cerr << "stored " << key << "\n";
  }
  emit(o.payload);
  return o.code;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e) || dynamic_cast<const DepthExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const NotAssociative*>(&e) || dynamic_cast<const IllDefined*>(&e) ||
      dynamic_cast<const VerificationFailure*>(&e) || dynamic_cast<const MembershipViolation*>(&e))
    return kVerification;
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hotring: homotopy theory of finite associative rings"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "result store directory (default: $HOTRING_HOME, then ~/.hotring)");
  app.add_flag("--json", g.compact, "compact single-line JSON output");
  app.add_option("--seed", g.seed, "seed for random probes")->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", HOTRING_VERSION);

  std::string ring, source, target, hom = "", f0, f1, diagram, export_dir, test_ring = "sq0_z2";
  unsigned degree = 1;
  std::size_t size = 0, probes_count = 0;
  std::uint64_t budget = 0;
  int length = 3, level = 2, depth_cap = 4, rotations = 2;

  auto ring_opts = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("ring_path,--ring", ring, "ring JSON file or bundled label");
    if (required) o->required();
  };
  auto pair_opts = [&](CLI::App* c, bool required) {
    auto* s = c->add_option("--source", source, "source ring JSON file or bundled label");
    auto* t = c->add_option("--target", target, "target ring JSON file or bundled label");
    if (required) {
      s->required();
      t->required();
    }
  };
  auto budget_opt = [&](CLI::App* c) { c->add_option("--budget", budget, "candidate cap")->check(CLI::PositiveNumber); };
  auto probe_opt = [&](CLI::App* c) { c->add_option("--probes", probes_count, "probe count")->check(CLI::PositiveNumber); };
  auto global_opts = [&](CLI::App* c) {
    c->add_option("--out", g.out, "result store directory");
    c->add_flag("--json", g.compact, "compact single-line JSON output");
    c->add_option("--seed", g.seed, "seed for random probes");
  };

  CLI::App* check_ring = app.add_subcommand("check-ring", "validate a ring presentation");
  ring_opts(check_ring, true);
  CLI::App* homs = app.add_subcommand("homs", "enumerate homomorphisms in lexicographic order");
  pair_opts(homs, true);
  budget_opt(homs);
  CLI::App* homotopy = app.add_subcommand("homotopy", "search an elementary homotopy between two homs");
  pair_opts(homotopy, true);
  homotopy->add_option("--degree", degree, "polynomial degree bound");
  homotopy->add_option("--f0", f0, "hom at x = 0: id, zero or an index");
  homotopy->add_option("--f1", f1, "hom at x = 1: id, zero or an index");
  budget_opt(homotopy);
  CLI::App* classes = app.add_subcommand("classes", "homotopy classes of homs at a degree bound");
  pair_opts(classes, true);
  classes->add_option("--degree", degree, "polynomial degree bound");
  budget_opt(classes);
  CLI::App* kv1 = app.add_subcommand("kv1", "level-(n, d) approximation of KV1");
  ring_opts(kv1, true);
  kv1->add_option("--size", size, "matrix size n")->required()->check(CLI::PositiveNumber);
  kv1->add_option("--degree", degree, "polynomial degree d");
  budget_opt(kv1);
  CLI::App* factor = app.add_subcommand("factorize", "path factorization u = p i of homs");
  pair_opts(factor, true);
  factor->add_option("--hom", hom, "id, zero or an index (default: every hom, at most 200)");
  probe_opt(factor);
  CLI::App* puppe_cmd = app.add_subcommand("puppe", "Puppe sequence with finite-level exactness checks");
  pair_opts(puppe_cmd, false);
  puppe_cmd->add_option("--hom", hom, "id, zero or an index (default: the bundled tower map)");
  puppe_cmd->add_option("--length", length, "number of mapping-path stages");
  puppe_cmd->add_option("--level", level, "truncation level of the finite models");
  puppe_cmd->add_option("--depth-cap", depth_cap, "maximum length");
  puppe_cmd->add_option("--test-ring", test_ring, "ring T for [T, -]");
  CLI::App* triangle = app.add_subcommand("triangle", "standard left triangle and its rotations");
  pair_opts(triangle, false);
  triangle->add_option("--hom", hom, "id, zero or an index (default: the bundled tower map)");
  triangle->add_option("--rotations", rotations, "number of rotations")->check(CLI::Range(0, 4));
  probe_opt(triangle);
  CLI::App* octa = app.add_subcommand("octahedron", "octahedron for two composable surjections");
  octa->add_option("--diagram", diagram, "diagram JSON with homs named h and k (default: the bundled tower)");
  CLI::App* k0 = app.add_subcommand("k0", "K0 presentation of a diagram");
  k0->add_option("diagram_path,--diagram", diagram, "K0 diagram JSON")->required();
  CLI::App* simplicial = app.add_subcommand("simplicial-check", "simplicial identities and vertex homotopies");
  ring_opts(simplicial, true);
  simplicial->add_option("--size", size, "maximum simplicial level (default 4)");
  probe_opt(simplicial);
  CLI::App* corpus = app.add_subcommand("corpus", "list, validate and export the bundled rings");
  corpus->add_option("--export", export_dir, "write one JSON file per ring plus tower.json");
  for (CLI::App* c : app.get_subcommands([](CLI::App*) { return true; })) global_opts(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    Run run;
    run.command = app.get_subcommands().front()->get_name();
    const std::uint64_t seed = g.seed;
    run.params["seed"] = seed;

    if (*check_ring) {
      // Hash the raw document so invalid rings are cached as well.
      Json raw;
      if (fs::exists(ring)) {
        raw = read_json_file(ring);
        raw_ring_from_json(raw);
      } else {
        raw = ring_to_json(*ring_input(ring).ring);
      }
      run.inputs["ring"] = sha256_hex(raw.dump());
      run.compute = [raw]() {
        Outcome o;
        try {
          RingPtr r = ring_from_json(raw);
          auto nil = nilpotency_class(*r);
          o.payload = {{"label", r->label()},      {"valid", true},
                       {"orders", r->raw().orders}, {"size", r->size()},
                       {"rank", r->rank()},         {"unital", r->unit().has_value()},
                       {"commutative", is_commutative(*r)},
                       {"nilpotency_class", nil ? Json(*nil) : Json(nullptr)}};
        } catch (const NotAssociative& e) {
          o = {{{"valid", false}, {"error", e.what()}}, kVerification};
        } catch (const IllDefined& e) {
          o = {{{"valid", false}, {"error", e.what()}}, kVerification};
        }
        return o;
      };
    } else if (*homs) {
      Input s = ring_input(source), t = ring_input(target);
      run.inputs = {{"source", sha256_hex(s.json.dump())}, {"target", sha256_hex(t.json.dump())}};
      const std::uint64_t cap = budget ? budget : (1u << 24);
      run.params["budget"] = cap;
      run.compute = [s, t, cap]() {
        Json list = Json::array();
        for (const RingHom& f : enumerate_homs(s.ring, t.ring, cap)) list.push_back(hom_json(f));
        return Outcome{{{"source", s.ring->label()}, {"target", t.ring->label()}, {"count", list.size()}, {"homs", list}}};
      };
    } else if (*homotopy) {
      Input s = ring_input(source), t = ring_input(target);
      const bool endo = same_ring(*s.ring, *t.ring);
      if (f0.empty()) f0 = endo ? "id" : "0";
      if (f1.empty()) f1 = "zero";
      const std::uint64_t cap = budget ? budget : (1u << 22);
      run.inputs = {{"source", sha256_hex(s.json.dump())}, {"target", sha256_hex(t.json.dump())}};
      run.params.update({{"degree", degree}, {"f0", f0}, {"f1", f1}, {"budget", cap}});
      run.compute = [s, t, degree, f0, f1, cap]() {
        RingHom a = pick_hom(s.ring, t.ring, f0, 1u << 24), b = pick_hom(s.ring, t.ring, f1, 1u << 24);
        SearchResult r = search_elementary(a, b, degree, cap);
        Outcome o;
        o.payload = {{"f0", hom_json(a)}, {"f1", hom_json(b)}, {"degree_bound", degree}, {"searched", r.searched}};
        if (r.certificate) {
          CertificateCheck c = verify_certificate(*r.certificate);
          o.payload["verdict"] = "found";
          o.payload["verified"] = c.ok;
          o.payload["certificate"] = certificate_to_json(*r.certificate);
          if (!c.ok) o.code = kVerification;
        } else {
          o.payload["verdict"] = "not_found_at_bound";
        }
        return o;
      };
    } else if (*classes) {
      Input s = ring_input(source), t = ring_input(target);
      const std::uint64_t cap = budget ? budget : (1u << 20);
      run.inputs = {{"source", sha256_hex(s.json.dump())}, {"target", sha256_hex(t.json.dump())}};
      run.params.update({{"degree", degree}, {"budget", cap}});
      run.compute = [s, t, degree, cap]() {
        HomotopyClasses c = homotopy_classes(s.ring, t.ring, degree, cap);
        Outcome o;
        std::size_t merges_ok = 0, chains_ok = 0;
        Json merges = Json::array();
        for (const Merge& m : c.merges) {
          bool ok = verify_certificate(m.certificate).ok && m.certificate.f0.images() == c.homs[m.from].images() &&
                    m.certificate.f1.images() == c.homs[m.to].images();
          merges_ok += ok;
          merges.push_back({{"from", m.from}, {"to", m.to}, {"certificate", certificate_to_json(m.certificate)}});
        }
        // Every hom is chained to the smallest member of its class.
        std::vector<std::size_t> root(c.class_count, SIZE_MAX);
        for (std::size_t i = 0; i < c.homs.size(); ++i)
          if (root[c.label[i]] == SIZE_MAX) root[c.label[i]] = i;
        for (std::size_t i = 0; i < c.homs.size(); ++i) {
          auto chain = c.chain(i, root[c.label[i]]);
          chains_ok += chain && verify_chain(*chain, c.homs[i], c.homs[root[c.label[i]]]).ok;
        }
        Json homs_json = Json::array();
        for (const RingHom& f : c.homs) homs_json.push_back(hom_json(f));
        o.payload = {{"degree_bound", degree},         {"homs", homs_json},
                     {"labels", c.label},              {"class_count", c.class_count},
                     {"all_pairs", c.all_pairs},       {"searched", c.searched},
                     {"merges", merges},               {"merges_reverified", merges_ok},
                     {"chains_reverified", chains_ok}};
        if (merges_ok != c.merges.size() || chains_ok != c.homs.size()) o.code = kVerification;
        return o;
      };
    } else if (*kv1) {
      Input a = ring_input(ring);
      Kv1Options opts;
      if (budget) opts.gl_cap = opts.candidate_cap = budget;
      run.inputs = {{"ring", sha256_hex(a.json.dump())}};
      run.params.update({{"size", size}, {"degree", degree}, {"budget", budget}});
      run.compute = [a, size, degree, opts]() {
        Pi0Presentation p = kv1_approx(a.ring, size, degree, opts);
        Json inv = Json::array();
        for (const BigInt& d : p.invariant_factors) inv.push_back(big(d));
        Json payload = {{"level", {{"n", size}, {"d", degree}}},
                        {"approximation", "level-(" + std::to_string(size) + "," + std::to_string(degree) + ")"},
                        {"group_order", p.group_order},
                        {"subgroup_order", p.subgroup_order},
                        {"order", p.order},
                        {"classes", p.class_of},
                        {"invariant_factors", inv},
                        {"normal", p.normal},
                        {"abelian", p.abelian},
                        {"monotone_history", p.monotone_history},
                        {"monotone", p.monotone},
                        {"determinant",
                         {{"applicable", p.determinant.applicable},
                          {"image_order", p.determinant.image_order},
                          {"exact", p.determinant.exact}}}};
        return Outcome{payload};
      };
    } else if (*factor) {
      Input s = ring_input(source), t = ring_input(target);
      const std::size_t n = probes_count ? probes_count : 40;
      run.inputs = {{"source", sha256_hex(s.json.dump())}, {"target", sha256_hex(t.json.dump())}};
      run.params.update({{"hom", hom}, {"probes", n}});
      run.compute = [s, t, hom, n, seed]() {
        Rng rng(seed);
        std::vector<RingHom> us;
        if (!hom.empty()) us.push_back(pick_hom(s.ring, t.ring, hom, 1u << 24));
        else
          for (const RingHom& u : enumerate_homs(s.ring, t.ring))
            if (us.size() < 200) us.push_back(u);
        Outcome o;
        Json results = Json::array();
        std::size_t failures = 0;
        for (const RingHom& u : us) {
          FactorizationReport r = check_factorization(factorize(u), n, rng);
          failures += !r.ok();
          results.push_back({{"hom", hom_json(u)},
                             {"p_i_equals_u", r.factors},
                             {"preimage_witness", r.surjective},
                             {"retraction", r.retraction},
                             {"splitting_certificate", r.splitting},
                             {"homomorphisms", r.homs},
                             {"failure", r.failure}});
        }
        o.payload = {{"checked", us.size()}, {"failures", failures}, {"results", results}};
        if (failures) o.code = kVerification;
        return o;
      };
    } else if (*puppe_cmd || *triangle) {
      RingHom g = corpus_tower().k;
      if (!source.empty() || !target.empty()) {
        if (source.empty() || target.empty()) throw UsageError("--source and --target go together");
        Input s = ring_input(source), t = ring_input(target);
        g = pick_hom(s.ring, t.ring, hom.empty() ? "0" : hom, 1u << 24);
        run.inputs = {{"source", sha256_hex(s.json.dump())}, {"target", sha256_hex(t.json.dump())}};
      } else {
        run.inputs = {{"tower", sha256_hex(diagram_to_json(Diagram{{{"top", corpus_tower().top},
                                                                    {"middle", corpus_tower().middle},
                                                                    {"bottom", corpus_tower().bottom}},
                                                                   {}})
                                               .dump())}};
      }
      run.params["hom"] = hom_json(g);
      if (*puppe_cmd) {
        Input tr = ring_input(test_ring);
        run.inputs["test_ring"] = sha256_hex(tr.json.dump());
        run.params.update({{"length", length}, {"level", level}, {"depth_cap", depth_cap}});
        run.compute = [g, tr, length, level, depth_cap]() {
          PuppeSequence seq = puppe(g, length, depth_cap);
          PuppeReport r = check_puppe(seq, tr.ring, level);
          Json names = Json::array();
          for (const VRing& obj : seq.objects) names.push_back(obj->label());
          Outcome o{{{"objects", names},
                     {"level", r.level},
                     {"finite_model_sizes", r.sizes},
                     {"composites_checked", r.composites_checked},
                     {"composite_failures", r.composite_failures},
                     {"lifts_checked", r.lifts_checked},
                     {"lift_failures", r.lift_failures},
                     {"class_counts", r.class_counts},
                     {"class_exact", r.class_exact},
                     {"first_failure", r.first_failure}}};
          if (!r.ok()) o.code = kVerification;
          return o;
        };
      } else {
        const std::size_t n = probes_count ? probes_count : 1000;
        run.params.update({{"rotations", rotations}, {"probes", n}});
        run.compute = [g, rotations, n, seed]() {
          Rng rng(seed);
          LeftTriangle t = standard_triangle(g);
          Json stages = Json::array();
          bool ok = true;
          for (int k = 0; k <= rotations; ++k) {
            if (k > 0) t = rotate(t);
            TriangleReport r = check_triangle(t, n, rng);
            ok = ok && r.ok();
            Json maps = Json::array();
            for (const VirtualHom& m : t.maps) maps.push_back(m.name());
            stages.push_back({{"rotation", k},
                              {"maps", maps},
                              {"probes", r.probes},
                              {"failures", r.failures},
                              {"rotation_square", t.rotation_square ? Json(r.rotation_square_ok) : Json(nullptr)},
                              {"first_failure", r.first_failure}});
          }
          return Outcome{{{"triangles", stages}}, ok ? kOk : kVerification};
        };
      }
    } else if (*octa) {
      RingHom h = corpus_tower().h, k = corpus_tower().k;
      Json doc;
      if (!diagram.empty()) {
        doc = read_input_json(diagram);
        Diagram d = diagram_from_json(doc);
        h = d.hom("h");
        k = d.hom("k");
      } else {
        Tower t = corpus_tower();
        doc = diagram_to_json(Diagram{{{"top", t.top}, {"middle", t.middle}, {"bottom", t.bottom}}, {{"h", h}, {"k", k}}});
      }
      run.inputs = {{"diagram", sha256_hex(doc.dump())}};
      run.compute = [h, k]() {
        Octahedron o = octahedron(h, k);
        OctahedronReport r = check_octahedron(o);
        Outcome out{{{"kernel_orders", {{"A", o.a.ring->size()}, {"F", o.f.ring->size()}, {"E", o.e.ring->size()}}},
                     {"column_exact", r.column_exact},
                     {"probes", r.probes},
                     {"failures", r.failures},
                     {"exhaustive", r.exhaustive},
                     {"first_failure", r.first_failure}}};
        if (!r.ok()) out.code = kVerification;
        return out;
      };
    } else if (*k0) {
      Json doc = read_input_json(diagram);
      K0Diagram d = k0_diagram_from_json(doc);
      run.inputs = {{"diagram", sha256_hex(k0_diagram_to_json(d).dump())}};
      run.compute = [d]() { return Outcome{k0_to_json(k0_presentation(d))}; };
    } else if (*simplicial) {
      Input a = ring_input(ring);
      const int max_level = size ? int(size) : 4;
      const std::size_t n = probes_count ? probes_count : 1000;
      run.inputs = {{"ring", sha256_hex(a.json.dump())}};
      run.params.update({{"size", max_level}, {"probes", n}});
      run.compute = [a, max_level, n, seed]() {
        Rng rng(seed);
        SimplicialReport ids = simplicial_identities(a.ring, max_level, n, rng);
        SimplicialReport hv = vertex_homotopies(a.ring, std::min(max_level, 3), n, rng);
        Outcome o{{{"ring", a.ring->label()},
                   {"max_level", max_level},
                   {"identities", tally_json(ids.families)},
                   {"vertex_homotopies", tally_json(hv.families)}}};
        if (!ids.ok() || !hv.ok()) o.code = kVerification;
        return o;
      };
    } else if (*corpus) {
      run.cacheable = false;
      run.compute = [export_dir]() {
        Json rings = Json::array();
        for (const std::string& label : corpus_labels()) {
          RingPtr r = corpus_ring(label);
          rings.push_back({{"label", label}, {"size", r->size()}, {"rank", r->rank()}, {"unital", r->unit().has_value()}, {"valid", true}});
          if (!export_dir.empty()) write_atomic(fs::path(export_dir) / (label + ".json"), ring_to_json(*r).dump(2) + "\n");
        }
        Tower t = corpus_tower();
        Diagram d{{{t.top->label(), t.top}, {t.middle->label(), t.middle}, {t.bottom->label(), t.bottom}},
                  {{"h", t.h}, {"k", t.k}}};
        if (!export_dir.empty()) write_atomic(fs::path(export_dir) / "tower.json", diagram_to_json(d).dump(2) + "\n");
        return Outcome{{{"rings", rings}, {"tower", {{"objects", {t.top->label(), t.middle->label(), t.bottom->label()}}, {"maps", {"h", "k"}}}}}};
      };
    }
    return execute(run, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
