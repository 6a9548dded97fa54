#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gorhom/functors.hpp>
#include <gorhom/json_io.hpp>

#include <cstdio>
#include <fstream>

using namespace gorhom;

namespace {

bool same_complex(const ChainComplex& a, const ChainComplex& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  if (a.lower().kind != b.lower().kind || a.lower().period != b.lower().period) return false;
  if (a.upper().kind != b.upper().kind || a.upper().period != b.upper().period) return false;
  for (long i = a.lo(); i <= a.hi(); ++i) {
    if (!modules_equal(a.term(i), b.term(i))) return false;
    if (i > a.lo() && !(a.dif(i) == b.dif(i))) return false;
  }
  return true;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin corpus contents") {
  Corpus c = builtin_corpus();
  CHECK(c.rings.size() == 5);
  for (const char* id : {"k", "k2", "k3", "R", "R+k", "kl", "k2l", "k3l", "Rl", "R+kl"})
    REQUIRE(c.modules.count(id) == 1);
  for (const char* id : {"c2.k", "c2.kl", "c2.R", "zt", "ztl", "zt2", "z2", "zfree", "q1"})
    REQUIRE(c.modules.count(id) == 1);
  CHECK(c.complexes.size() >= 10);
  REQUIRE(c.complexes.count("intro") == 1);
  const ChainComplex& intro = c.complexes.at("intro");
  CHECK(intro.lo() == -1);
  CHECK(intro.hi() == 0);
  CHECK(homology_group(intro, 0).is_zero());
  CHECK(homology_group(intro, -1).is_zero());
  CHECK(c.modules.at("k3").gens == 3);
  CHECK(c.modules.at("R+k").gens == 3);
  // dimension survey probes pair right complexes with left injective probes
  for (const auto& kv : c.complexes) CHECK(kv.second.side() == Side::Right);
}

TEST_CASE("matrix serialization round trip") {
  ExactMatrix m = ExactMatrix::from_strings(CoefficientDomain::rationals(), 2, 2,
                                            {"1/2", "-3", "0", "7/5"});
  ExactMatrix back = matrix_from_json(matrix_json(m), m.domain(), "t");
  CHECK(back == m);
  ExactMatrix empty(CoefficientDomain::integers(), 0, 3);
  CHECK(matrix_from_json(matrix_json(empty), empty.domain(), "t").cols() == 3);

  auto bad = matrix_json(m);
  bad["entries"].erase(3);
  CHECK_THROWS_WITH_AS(matrix_from_json(bad, m.domain(), "doc.m"),
                       doctest::Contains("doc.m.entries"), InputError);
}

TEST_CASE("corpus survives a save and load cycle") {
  Corpus c = builtin_corpus();
  TempFile f("corpus_roundtrip.json");
  save_corpus(c, f.path);
  Corpus back = load_corpus({f.path});
  REQUIRE(back.rings.size() == c.rings.size());
  for (const auto& kv : c.rings) {
    REQUIRE(back.rings.count(kv.first) == 1);
    CHECK(algebras_equal(*back.rings.at(kv.first), *kv.second));
    CHECK(back.rings.at(kv.first)->known_local == kv.second->known_local);
    CHECK(back.rings.at(kv.first)->frobenius.has_value() == kv.second->frobenius.has_value());
  }
  REQUIRE(back.modules.size() == c.modules.size());
  for (const auto& kv : c.modules) {
    REQUIRE(back.modules.count(kv.first) == 1);
    CHECK(modules_equal(back.modules.at(kv.first), kv.second));
  }
  REQUIRE(back.complexes.size() == c.complexes.size());
  for (const auto& kv : c.complexes) {
    REQUIRE(back.complexes.count(kv.first) == 1);
    CHECK(same_complex(back.complexes.at(kv.first), kv.second));
  }
  // serialization is deterministic
  CHECK(corpus_json(c).dump() == corpus_json(back).dump());
}

TEST_CASE("complete resolutions serialize by reference") {
  Corpus c = builtin_corpus();
  CompleteResolutionData cr = complete_resolution_frobenius(c.modules.at("k"));
  corpus_add_resolution(c, "res.k", cr);
  TempFile f("corpus_res_roundtrip.json");
  save_corpus(c, f.path);
  Corpus back = load_corpus({f.path});
  REQUIRE(back.resolutions.count("res.k") == 1);
  const CompleteResolutionData& r = back.resolutions.at("res.k");
  CHECK(r.g == cr.g);
  CHECK(same_complex(r.t, cr.t));
  CHECK(same_complex(r.approx.cx, cr.approx.cx));
  for (long i = r.tau.mlo; i <= r.tau.mhi; ++i) CHECK(r.tau.at(i) == cr.tau.at(i));
  const ChainComplex probe = one_term_complex(c.modules.at("kl"), 0);
  for (long i = -2; i <= 2; ++i)
    CHECK(tate_tor(r, probe, i).str() == tate_tor(cr, probe, i).str());
}

TEST_CASE("schema version is mandatory") {
  Corpus c;
  nlohmann::json doc{{"algebras", nlohmann::json::array()}};
  CHECK_THROWS_WITH_AS(merge_corpus_json(c, doc, "doc"), doctest::Contains("schema_version"),
                       InputError);
  doc["schema_version"] = 99;
  CHECK_THROWS_WITH_AS(merge_corpus_json(c, doc, "doc"), doctest::Contains("schema_version"),
                       InputError);
}

TEST_CASE("loading rejects a corrupted differential and names the degree") {
  Corpus c = builtin_corpus();
  nlohmann::json doc = corpus_json(c);
  bool doctored = false;
  for (auto& cx : doc["complexes"]) {
    if (cx["id"] != "c.xx") continue;
    for (auto& entry : cx["window"]) {
      if (entry["degree"] != 1) continue;
      entry["differential_matrix"]["entries"] = {"1", "0", "0", "1"};
      doctored = true;
    }
  }
  REQUIRE(doctored);
  Corpus fresh;
  CHECK_THROWS_WITH_AS(merge_corpus_json(fresh, doc, "doc"), doctest::Contains("dif(1)"),
                       InputError);
}

TEST_CASE("referential integrity failures carry the offending path") {
  Corpus c = builtin_corpus();
  nlohmann::json doc = corpus_json(c);
  for (auto& cx : doc["complexes"]) {
    if (cx["id"] != "c.k0") continue;
    cx["window"][0]["module_id"] = "nope";
  }
  Corpus fresh;
  CHECK_THROWS_WITH_AS(merge_corpus_json(fresh, doc, "doc"), doctest::Contains("nope"), InputError);

  nlohmann::json doc2 = corpus_json(c);
  doc2["modules"][0]["algebra_id"] = "missing-ring";
  Corpus fresh2;
  CHECK_THROWS_WITH_AS(merge_corpus_json(fresh2, doc2, "doc"), doctest::Contains("missing-ring"),
                       InputError);
}

TEST_CASE("duplicate ids across documents are rejected") {
  Corpus c = builtin_corpus();
  nlohmann::json doc = corpus_json(c);
  merge_corpus_json(c, nlohmann::json{{"schema_version", 1}}, "empty");  // no-op merge is fine
  CHECK_THROWS_WITH_AS(merge_corpus_json(c, doc, "again"), doctest::Contains("already registered"),
                       InputError);
}

TEST_CASE("load_corpus reads files from disk") {
  Corpus c = builtin_corpus();
  TempFile f("corpus_disk.json");
  save_corpus(c, f.path);
  Corpus back = load_corpus({f.path});
  CHECK(back.complexes.size() == c.complexes.size());
  CHECK_THROWS_AS(load_corpus({"no_such_file.json"}), InputError);

  TempFile g("corpus_bad.json");
  {
    std::ofstream out(g.path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_corpus({g.path}), InputError);
}
