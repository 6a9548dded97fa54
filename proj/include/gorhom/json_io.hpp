#pragma once

#include <gorhom/resolution.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace gorhom {

// Every document carries {"schema_version": 1}; loading anything else fails.
inline constexpr int kSchemaVersion = 1;

// Named collection of rings, modules, complexes and complete resolutions.
// Maps are keyed by id, so iteration order (and every serialization derived
// from it) is deterministic.
struct Corpus {
  std::map<std::string, AlgebraPtr> rings;
  std::map<std::string, Module> modules;
  std::map<std::string, ChainComplex> complexes;
  std::map<std::string, CompleteResolutionData> resolutions;
};

void corpus_add_ring(Corpus& c, const std::string& id, AlgebraPtr a);
// keyed by m.id, which must be nonempty
void corpus_add_module(Corpus& c, Module m);
// registers the terms of the window as modules (under their own ids when
// present, else generated ones), so the complex serializes by reference
void corpus_add_complex(Corpus& c, const std::string& id, ChainComplex cx);
void corpus_add_resolution(Corpus& c, const std::string& id, CompleteResolutionData r);

// the id under which an equal ring is registered, or throws InputError
std::string corpus_ring_id(const Corpus& c, const Algebra& a);

// matrices travel as {"rows": r, "cols": c, "entries": [row-major strings]}
nlohmann::json matrix_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j, const CoefficientDomain& d,
                             const std::string& path);

nlohmann::json corpus_json(const Corpus& c);
void save_corpus(const Corpus& c, const std::string& path);

// Parses and validates one document, merging into c; ids must not collide
// with entries already present.  All violations throw InputError carrying the
// offending path inside the document and the reason.
void merge_corpus_json(Corpus& c, const nlohmann::json& doc, const std::string& origin);
void merge_corpus_file(Corpus& c, const std::string& path);
Corpus load_corpus(const std::vector<std::string>& paths);

// The fixture registry: the truncated polynomial and group-algebra rings,
// the module zoo over each, and the bounded complex collection the checks
// and the dimension survey run on.
Corpus builtin_corpus();

}  // namespace gorhom
