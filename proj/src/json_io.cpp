#include <gorhom/json_io.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace gorhom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw InputError(path + ": " + why);
}

const json& get(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

std::string get_string(const json& j, const char* key, const std::string& path) {
  const json& v = get(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

long get_long(const json& j, const char* key, const std::string& path) {
  const json& v = get(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<long>();
}

const json& get_array(const json& j, const char* key, const std::string& path) {
  const json& v = get(j, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::string elem(const std::string& path, const char* key, size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

CoefficientDomain domain_from_name(const std::string& s, const std::string& path) {
  if (s == "Q") return CoefficientDomain::rationals();
  if (s == "Z") return CoefficientDomain::integers();
  if (s.size() > 1 && s[0] == 'F') {
    long p = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail(path, "unknown domain \"" + s + "\"");
      p = p * 10 + (s[i] - '0');
    }
    return CoefficientDomain::fp(p);
  }
  fail(path, "unknown domain \"" + s + "\" (expected Q, Z, or F<p>)");
}

Side side_from_name(const std::string& s, const std::string& path) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  fail(path, "side must be \"left\" or \"right\", got \"" + s + "\"");
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

json tail_json(const Tail& t) {
  if (t.is_zero()) return json{{"kind", "zero"}};
  return json{{"kind", "periodic"}, {"period", t.period}};
}

Tail tail_from_json(const json& j, const std::string& path) {
  std::string kind = get_string(j, "kind", path);
  if (kind == "zero") return Tail::zero();
  if (kind == "periodic") {
    long p = get_long(j, "period", path);
    if (p <= 0) fail(path + ".period", "must be positive");
    return Tail::periodic(p);
  }
  fail(path + ".kind", "must be \"zero\" or \"periodic\", got \"" + kind + "\"");
}

json algebra_json(const std::string& id, const Algebra& a) {
  json labels = json::array();
  for (long i = 0; i < a.dim; ++i) labels.push_back("e" + std::to_string(i));
  json constants = json::array();
  for (const auto& m : a.lmul) constants.push_back(matrix_json(m));
  json unit = json::array();
  for (const auto& s : a.unit.to_strings()) unit.push_back(s);
  json out{{"id", id},          {"domain", a.dom.name()}, {"dim", a.dim},
           {"labels", labels},  {"constants", constants}, {"unit", unit},
           {"name", a.name}};
  if (a.frobenius) out["frobenius_form"] = matrix_json(*a.frobenius);
  if (a.known_local) out["local"] = true;
  if (a.idempotent_basis) out["idempotents"] = *a.idempotent_basis;
  if (a.residue_map) out["residue"] = matrix_json(*a.residue_map);
  return out;
}

AlgebraPtr algebra_from_json(const json& j, const std::string& path) {
  CoefficientDomain d = domain_from_name(get_string(j, "domain", path), path + ".domain");
  long dim = get_long(j, "dim", path);
  if (dim <= 0) fail(path + ".dim", "must be positive");
  const json& labels = get_array(j, "labels", path);
  if (static_cast<long>(labels.size()) != dim) fail(path + ".labels", "expected one label per basis element");
  for (size_t i = 0; i < labels.size(); ++i)
    if (!labels[i].is_string()) fail(elem(path, "labels", i), "expected a string");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                 : get_string(j, "id", path);
  Algebra a(d, dim, name);
  const json& constants = get_array(j, "constants", path);
  if (static_cast<long>(constants.size()) != dim)
    fail(path + ".constants", "expected one multiplication matrix per basis element");
  for (size_t i = 0; i < constants.size(); ++i) {
    ExactMatrix m = matrix_from_json(constants[i], d, elem(path, "constants", i));
    if (m.rows() != dim || m.cols() != dim)
      fail(elem(path, "constants", i), "expected shape " + std::to_string(dim) + "x" + std::to_string(dim));
    a.lmul.push_back(std::move(m));
  }
  const json& unit = get_array(j, "unit", path);
  if (static_cast<long>(unit.size()) != dim) fail(path + ".unit", "expected one coordinate per basis element");
  std::vector<std::string> uc;
  for (size_t i = 0; i < unit.size(); ++i) {
    if (!unit[i].is_string()) fail(elem(path, "unit", i), "expected a string entry");
    uc.push_back(unit[i].get<std::string>());
  }
  try {
    a.unit = ExactMatrix::from_strings(d, dim, 1, uc);
  } catch (const InputError& e) {
    fail(path + ".unit", e.what());
  }
  if (j.contains("frobenius_form"))
    a.frobenius = matrix_from_json(j["frobenius_form"], d, path + ".frobenius_form");
  if (j.contains("local")) {
    if (!j["local"].is_boolean()) fail(path + ".local", "expected a boolean");
    a.known_local = j["local"].get<bool>();
  }
  if (j.contains("idempotents")) {
    if (!j["idempotents"].is_array()) fail(path + ".idempotents", "expected an array");
    std::vector<long> idem;
    for (size_t i = 0; i < j["idempotents"].size(); ++i) {
      if (!j["idempotents"][i].is_number_integer()) fail(elem(path, "idempotents", i), "expected an integer");
      idem.push_back(j["idempotents"][i].get<long>());
    }
    a.idempotent_basis = std::move(idem);
  }
  if (j.contains("residue")) a.residue_map = matrix_from_json(j["residue"], d, path + ".residue");
  try {
    a.validate();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return std::make_shared<const Algebra>(std::move(a));
}

json module_json(const Corpus& c, const Module& m) {
  json action = json::array();
  for (const auto& a : m.act) action.push_back(matrix_json(a));
  json out{{"id", m.id},
           {"algebra_id", corpus_ring_id(c, *m.alg)},
           {"side", side_name(m.side)},
           {"dim", m.gens},
           {"action", action}};
  if (m.rel.cols() != 0) out["relations"] = matrix_json(m.rel);
  return out;
}

Module module_from_json(const Corpus& c, const json& j, const std::string& path) {
  std::string id = get_string(j, "id", path);
  std::string aid = get_string(j, "algebra_id", path);
  auto it = c.rings.find(aid);
  if (it == c.rings.end()) fail(path + ".algebra_id", "unknown algebra \"" + aid + "\"");
  AlgebraPtr a = it->second;
  Side side = side_from_name(get_string(j, "side", path), path + ".side");
  long gens = get_long(j, "dim", path);
  if (gens < 0) fail(path + ".dim", "must be nonnegative");
  const json& action = get_array(j, "action", path);
  if (static_cast<long>(action.size()) != a->dim)
    fail(path + ".action", "expected one matrix per algebra basis element");
  std::vector<ExactMatrix> act;
  for (size_t i = 0; i < action.size(); ++i) {
    ExactMatrix m = matrix_from_json(action[i], a->dom, elem(path, "action", i));
    if (m.rows() != gens || m.cols() != gens)
      fail(elem(path, "action", i), "expected shape " + std::to_string(gens) + "x" + std::to_string(gens));
    act.push_back(std::move(m));
  }
  ExactMatrix rel(a->dom, gens, 0);
  if (j.contains("relations")) {
    rel = matrix_from_json(j["relations"], a->dom, path + ".relations");
    if (rel.rows() != gens) fail(path + ".relations", "expected " + std::to_string(gens) + " rows");
  }
  try {
    return make_module(std::move(a), side, gens, std::move(act), std::move(rel), id);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

json complex_body_json(const Corpus& c, const ChainComplex& cx) {
  json window = json::array();
  for (long i = cx.lo(); i <= cx.hi(); ++i) {
    json entry{{"degree", i}, {"module_id", cx.term(i).id}};
    if (i > cx.lo()) entry["differential_matrix"] = matrix_json(cx.dif(i));
    window.push_back(std::move(entry));
  }
  return json{{"ring_id", corpus_ring_id(c, *cx.ring())},
              {"window", window},
              {"lower_tail", tail_json(cx.lower())},
              {"upper_tail", tail_json(cx.upper())}};
}

ChainComplex complex_body_from_json(const Corpus& c, const json& j, const std::string& path) {
  std::string rid = get_string(j, "ring_id", path);
  auto rit = c.rings.find(rid);
  if (rit == c.rings.end()) fail(path + ".ring_id", "unknown algebra \"" + rid + "\"");
  const json& window = get_array(j, "window", path);
  if (window.empty()) fail(path + ".window", "must not be empty");
  std::map<long, const json*> entries;
  for (size_t i = 0; i < window.size(); ++i) {
    long d = get_long(window[i], "degree", elem(path, "window", i));
    if (!entries.emplace(d, &window[i]).second)
      fail(elem(path, "window", i), "degree " + std::to_string(d) + " listed twice");
  }
  long lo = entries.begin()->first, hi = entries.rbegin()->first;
  if (static_cast<long>(entries.size()) != hi - lo + 1)
    fail(path + ".window", "degrees must form a contiguous range");
  Tail lower = tail_from_json(get(j, "lower_tail", path), path + ".lower_tail");
  Tail upper = tail_from_json(get(j, "upper_tail", path), path + ".upper_tail");

  std::vector<const Module*> terms;
  for (long d = lo; d <= hi; ++d) {
    std::string ep = path + ".window[degree " + std::to_string(d) + "]";
    std::string mid = get_string(*entries.at(d), "module_id", ep);
    auto mit = c.modules.find(mid);
    if (mit == c.modules.end()) fail(ep + ".module_id", "unknown module \"" + mid + "\"");
    terms.push_back(&mit->second);
  }
  Side side = terms.front()->side;
  ChainComplex cx(rit->second, side, lo, hi, lower, upper);
  for (long d = lo; d <= hi; ++d) cx.set_term(d, *terms[static_cast<size_t>(d - lo)]);
  for (long d = lo + 1; d <= hi; ++d) {
    std::string ep = path + ".window[degree " + std::to_string(d) + "]";
    const json& entry = *entries.at(d);
    if (!entry.contains("differential_matrix")) fail(ep + ".differential_matrix", "missing");
    ExactMatrix m =
        matrix_from_json(entry["differential_matrix"], rit->second->dom, ep + ".differential_matrix");
    if (m.rows() != cx.term(d - 1).gens || m.cols() != cx.term(d).gens)
      fail(ep + ".differential_matrix", "expected shape " + std::to_string(cx.term(d - 1).gens) +
                                            "x" + std::to_string(cx.term(d).gens));
    cx.set_dif(d, std::move(m));
  }
  try {
    cx.validate();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return cx;
}

json map_body_json(const ChainMap& f) {
  json window = json::array();
  for (long i = f.mlo; i <= f.mhi; ++i)
    window.push_back(json{{"degree", i}, {"matrix", matrix_json(f.at(i))}});
  return json{{"window", window},
              {"lower_ext", tail_json(f.lower_ext)},
              {"upper_ext", tail_json(f.upper_ext)}};
}

ChainMap map_body_from_json(const ChainComplex& src, const ChainComplex& tgt, const json& j,
                            const std::string& path) {
  const json& window = get_array(j, "window", path);
  if (window.empty()) fail(path + ".window", "must not be empty");
  std::map<long, ExactMatrix> mats;
  long mlo = 0, mhi = 0;
  bool first = true;
  for (size_t i = 0; i < window.size(); ++i) {
    std::string ep = elem(path, "window", i);
    long d = get_long(window[i], "degree", ep);
    ExactMatrix m = matrix_from_json(get(window[i], "matrix", ep), src.dom(), ep + ".matrix");
    if (!mats.emplace(d, std::move(m)).second) fail(ep, "degree " + std::to_string(d) + " listed twice");
    mlo = first ? d : std::min(mlo, d);
    mhi = first ? d : std::max(mhi, d);
    first = false;
  }
  if (static_cast<long>(mats.size()) != mhi - mlo + 1)
    fail(path + ".window", "degrees must form a contiguous range");
  Tail lower = tail_from_json(get(j, "lower_ext", path), path + ".lower_ext");
  Tail upper = tail_from_json(get(j, "upper_ext", path), path + ".upper_ext");
  try {
    return make_chain_map(src, tgt, std::move(mats), mlo, mhi, lower, upper);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

json resolution_json(const Corpus& c, const std::string& id, const CompleteResolutionData& r) {
  json out{{"id", id},
           {"ring_id", corpus_ring_id(c, *r.t.ring())},
           {"target_module_id", r.approx.target.id},
           {"agreement", r.g},
           {"augmentation", matrix_json(r.approx.aug)},
           {"total", complex_body_json(c, r.t)},
           {"approx", complex_body_json(c, r.approx.cx)},
           {"tau", map_body_json(r.tau)}};
  return out;
}

CompleteResolutionData resolution_from_json(const Corpus& c, const json& j, const std::string& path) {
  std::string tid = get_string(j, "target_module_id", path);
  auto tit = c.modules.find(tid);
  if (tit == c.modules.end()) fail(path + ".target_module_id", "unknown module \"" + tid + "\"");
  long g = get_long(j, "agreement", path);
  ChainComplex t = complex_body_from_json(c, get(j, "total", path), path + ".total");
  ChainComplex approx = complex_body_from_json(c, get(j, "approx", path), path + ".approx");
  ExactMatrix aug = matrix_from_json(get(j, "augmentation", path), t.dom(), path + ".augmentation");
  if (aug.rows() != tit->second.gens || aug.cols() != approx.term(approx.lo()).gens)
    fail(path + ".augmentation", "shape does not match the target and the resolution bottom");
  ChainMap tau = map_body_from_json(t, approx, get(j, "tau", path), path + ".tau");
  ProjectiveResolutionData pr{std::move(approx), std::move(aug), tit->second, {}};
  return CompleteResolutionData{std::move(t), std::move(pr), std::move(tau), g};
}

// registration ids for anonymous complex terms
std::string term_id(const std::string& owner, long degree) {
  return owner + ".t" + (degree < 0 ? "m" + std::to_string(-degree) : std::to_string(degree));
}

void register_terms(Corpus& c, const std::string& owner, ChainComplex& cx) {
  for (long i = cx.lo(); i <= cx.hi(); ++i) {
    Module m = cx.term(i);
    if (m.id.empty()) m.id = term_id(owner, i);
    auto it = c.modules.find(m.id);
    if (it == c.modules.end()) {
      cx.set_term(i, m);
      c.modules.emplace(m.id, std::move(m));
      continue;
    }
    if (!modules_equal(it->second, m))
      throw InputError("module id \"" + m.id + "\" already names different data");
    cx.set_term(i, it->second);
  }
}

}  // namespace

void corpus_add_ring(Corpus& c, const std::string& id, AlgebraPtr a) {
  if (id.empty()) throw InputError("ring id must be nonempty");
  if (!c.rings.emplace(id, std::move(a)).second)
    throw InputError("ring id \"" + id + "\" already registered");
}

void corpus_add_module(Corpus& c, Module m) {
  if (m.id.empty()) throw InputError("module id must be nonempty");
  corpus_ring_id(c, *m.alg);
  auto it = c.modules.find(m.id);
  if (it != c.modules.end()) {
    if (!modules_equal(it->second, m))
      throw InputError("module id \"" + m.id + "\" already names different data");
    return;
  }
  c.modules.emplace(m.id, std::move(m));
}

void corpus_add_complex(Corpus& c, const std::string& id, ChainComplex cx) {
  if (id.empty()) throw InputError("complex id must be nonempty");
  if (c.complexes.count(id)) throw InputError("complex id \"" + id + "\" already registered");
  corpus_ring_id(c, *cx.ring());
  register_terms(c, id, cx);
  c.complexes.emplace(id, std::move(cx));
}

void corpus_add_resolution(Corpus& c, const std::string& id, CompleteResolutionData r) {
  if (id.empty()) throw InputError("resolution id must be nonempty");
  if (c.resolutions.count(id)) throw InputError("resolution id \"" + id + "\" already registered");
  corpus_ring_id(c, *r.t.ring());
  if (r.approx.target.id.empty()) r.approx.target.id = id + ".target";
  corpus_add_module(c, r.approx.target);
  register_terms(c, id + ".T", r.t);
  register_terms(c, id + ".P", r.approx.cx);
  // the chain map embeds copies of both complexes; keep them in sync with the
  // registered term ids so serialization references resolve
  register_terms(c, id + ".T", r.tau.src);
  register_terms(c, id + ".P", r.tau.tgt);
  c.resolutions.emplace(id, std::move(r));
}

std::string corpus_ring_id(const Corpus& c, const Algebra& a) {
  for (const auto& [id, ptr] : c.rings)
    if (algebras_equal(*ptr, a)) return id;
  throw InputError("algebra \"" + a.name + "\" is not registered in the corpus");
}

nlohmann::json matrix_json(const ExactMatrix& m) {
  json entries = json::array();
  for (const auto& s : m.to_strings()) entries.push_back(s);
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j, const CoefficientDomain& d,
                             const std::string& path) {
  long rows = get_long(j, "rows", path);
  long cols = get_long(j, "cols", path);
  if (rows < 0 || cols < 0) fail(path, "negative matrix shape");
  const json& entries = get_array(j, "entries", path);
  if (static_cast<long>(entries.size()) != rows * cols)
    fail(path + ".entries", "expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries.size()));
  std::vector<std::string> ss;
  ss.reserve(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_string()) fail(elem(path, "entries", i), "expected a string entry");
    ss.push_back(entries[i].get<std::string>());
  }
  try {
    return ExactMatrix::from_strings(d, rows, cols, ss);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

nlohmann::json corpus_json(const Corpus& c) {
  json doc{{"schema_version", kSchemaVersion}};
  json algebras = json::array();
  for (const auto& [id, a] : c.rings) algebras.push_back(algebra_json(id, *a));
  doc["algebras"] = std::move(algebras);
  json modules = json::array();
  for (const auto& kv : c.modules) modules.push_back(module_json(c, kv.second));
  doc["modules"] = std::move(modules);
  json complexes = json::array();
  for (const auto& [id, cx] : c.complexes) {
    json body = complex_body_json(c, cx);
    body["id"] = id;
    complexes.push_back(std::move(body));
  }
  doc["complexes"] = std::move(complexes);
  json resolutions = json::array();
  for (const auto& [id, r] : c.resolutions) resolutions.push_back(resolution_json(c, id, r));
  doc["resolutions"] = std::move(resolutions);
  return doc;
}

void save_corpus(const Corpus& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << corpus_json(c).dump(2) << "\n";
}

void merge_corpus_json(Corpus& c, const nlohmann::json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "expected a JSON object");
  if (!doc.contains("schema_version")) fail(origin + ".schema_version", "missing");
  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<long>() != kSchemaVersion)
    fail(origin + ".schema_version",
         "expected " + std::to_string(kSchemaVersion) + ", got " + doc["schema_version"].dump());
  static const char* known[] = {"schema_version", "algebras", "modules", "complexes", "resolutions"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) fail(origin + "." + it.key(), "unknown section");
  }
  if (doc.contains("algebras")) {
    const json& arr = doc["algebras"];
    if (!arr.is_array()) fail(origin + ".algebras", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string path = elem(origin, "algebras", i);
      std::string id = get_string(arr[i], "id", path);
      if (c.rings.count(id)) fail(path, "ring id \"" + id + "\" already registered");
      c.rings.emplace(id, algebra_from_json(arr[i], path));
    }
  }
  if (doc.contains("modules")) {
    const json& arr = doc["modules"];
    if (!arr.is_array()) fail(origin + ".modules", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string path = elem(origin, "modules", i);
      Module m = module_from_json(c, arr[i], path);
      if (c.modules.count(m.id)) fail(path, "module id \"" + m.id + "\" already registered");
      c.modules.emplace(m.id, std::move(m));
    }
  }
  if (doc.contains("complexes")) {
    const json& arr = doc["complexes"];
    if (!arr.is_array()) fail(origin + ".complexes", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string path = elem(origin, "complexes", i);
      std::string id = get_string(arr[i], "id", path);
      if (c.complexes.count(id)) fail(path, "complex id \"" + id + "\" already registered");
      c.complexes.emplace(id, complex_body_from_json(c, arr[i], path));
    }
  }
  if (doc.contains("resolutions")) {
    const json& arr = doc["resolutions"];
    if (!arr.is_array()) fail(origin + ".resolutions", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string path = elem(origin, "resolutions", i);
      std::string id = get_string(arr[i], "id", path);
      if (c.resolutions.count(id)) fail(path, "resolution id \"" + id + "\" already registered");
      c.resolutions.emplace(id, resolution_from_json(c, arr[i], path));
    }
  }
}

void merge_corpus_file(Corpus& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  merge_corpus_json(c, doc, path);
}

Corpus load_corpus(const std::vector<std::string>& paths) {
  Corpus c;
  for (const auto& p : paths) merge_corpus_file(c, p);
  return c;
}

namespace {

void add_zoo(Corpus& c, AlgebraPtr a, const std::string& prefix) {
  Module k = simple_module(a, Side::Right);
  Module kl = simple_module(a, Side::Left);
  Module r = regular_module(a, Side::Right);
  Module rl = regular_module(a, Side::Left);
  auto put = [&](Module m, std::string id) {
    m.id = std::move(id);
    corpus_add_module(c, std::move(m));
  };
  put(k, prefix + "k");
  put(direct_sum(k, k), prefix + "k2");
  put(direct_sum(direct_sum(k, k), k), prefix + "k3");
  put(r, prefix + "R");
  put(direct_sum(r, k), prefix + "R+k");
  put(kl, prefix + "kl");
  put(direct_sum(kl, kl), prefix + "k2l");
  put(direct_sum(direct_sum(kl, kl), kl), prefix + "k3l");
  put(rl, prefix + "Rl");
  put(direct_sum(rl, kl), prefix + "R+kl");
}

}  // namespace

Corpus builtin_corpus() {
  Corpus c;
  const CoefficientDomain f2 = CoefficientDomain::fp(2);
  const CoefficientDomain zz = CoefficientDomain::integers();
  const CoefficientDomain qq = CoefficientDomain::rationals();
  AlgebraPtr f2x = make_truncated_poly(f2, 2);
  AlgebraPtr f2c2 = make_group_ring_cyclic(f2, 2);
  AlgebraPtr zc2 = make_group_ring_cyclic(zz, 2);
  AlgebraPtr z = make_trivial_algebra(zz);
  AlgebraPtr q = make_trivial_algebra(qq);
  corpus_add_ring(c, "F2x", f2x);
  corpus_add_ring(c, "F2C2", f2c2);
  corpus_add_ring(c, "ZC2", zc2);
  corpus_add_ring(c, "Z", z);
  corpus_add_ring(c, "Q", q);

  add_zoo(c, f2x, "");
  add_zoo(c, f2c2, "c2.");

  auto put = [&](Module m, std::string id) {
    m.id = std::move(id);
    corpus_add_module(c, std::move(m));
  };
  put(character_module(zc2, Side::Right, 1, ""), "zt");
  put(character_module(zc2, Side::Left, 1, ""), "ztl");
  put(character_quotient_module(zc2, Side::Right, 1, 2, ""), "zt2");
  put(character_quotient_module(zc2, Side::Left, 1, 2, ""), "zt2l");
  put(regular_module(zc2, Side::Right), "zR");
  put(regular_module(zc2, Side::Left), "zRl");
  put(character_quotient_module(z, Side::Right, 1, 2, ""), "z2");
  put(character_quotient_module(z, Side::Left, 1, 2, ""), "z2l");
  put(character_quotient_module(z, Side::Right, 1, 3, ""), "z3");
  put(regular_module(z, Side::Right), "zfree");
  put(regular_module(q, Side::Right), "q1");
  put(regular_module(q, Side::Left), "q1l");

  const Module& k = c.modules.at("k");
  const Module& r = c.modules.at("R");
  const Module& rk = c.modules.at("R+k");
  ExactMatrix idr = ExactMatrix::identity(f2, 2);
  ExactMatrix xr = f2x->left_mult(f2x->basis_element(1));  // right-module map: left multiply by x

  // the strict-inequality example: a contractible two-term pair
  {
    ChainComplex cx(f2x, Side::Right, -1, 0);
    cx.set_term(0, r);
    cx.set_term(-1, r);
    cx.set_dif(0, idr);
    cx.validate();
    corpus_add_complex(c, "intro", std::move(cx));
  }
  corpus_add_complex(c, "c.k0", one_term_complex(k, 0));
  corpus_add_complex(c, "c.k2", one_term_complex(k, 2));
  {
    ChainComplex cx(f2x, Side::Right, 0, 1);
    cx.set_term(0, k);
    cx.set_term(1, k);
    cx.set_dif(1, ExactMatrix(f2, 1, 1));
    cx.validate();
    corpus_add_complex(c, "c.kk", std::move(cx));
  }
  {
    ChainComplex cx(f2x, Side::Right, 0, 1);
    cx.set_term(0, r);
    cx.set_term(1, r);
    cx.set_dif(1, xr);
    cx.validate();
    corpus_add_complex(c, "c.x", std::move(cx));
  }
  {
    ChainComplex cx(f2x, Side::Right, 0, 2);
    cx.set_term(0, r);
    cx.set_term(1, r);
    cx.set_term(2, r);
    cx.set_dif(1, xr);
    cx.set_dif(2, xr);
    cx.validate();
    corpus_add_complex(c, "c.xx", std::move(cx));
  }
  corpus_add_complex(c, "c.R", one_term_complex(r, 0));
  {
    ChainComplex cx(f2x, Side::Right, 0, 1);
    cx.set_term(0, k);
    cx.set_term(1, rk);
    cx.set_dif(1, ExactMatrix::from_ints(f2, {{1, 0, 1}}));
    cx.validate();
    corpus_add_complex(c, "c.mix", std::move(cx));
  }
  const Module& c2k = c.modules.at("c2.k");
  const Module& c2r = c.modules.at("c2.R");
  corpus_add_complex(c, "c.c2k", one_term_complex(c2k, 0));
  corpus_add_complex(c, "c.c2R", one_term_complex(c2r, 0));
  {
    ExactMatrix norm = f2c2->left_mult(f2c2->basis_element(0) + f2c2->basis_element(1));
    ChainComplex cx(f2c2, Side::Right, 0, 1);
    cx.set_term(0, c2r);
    cx.set_term(1, c2r);
    cx.set_dif(1, norm);
    cx.validate();
    corpus_add_complex(c, "c.c2n", std::move(cx));
  }
  {
    const Module& q1 = c.modules.at("q1");
    ChainComplex cx(q, Side::Right, 0, 1);
    cx.set_term(0, q1);
    cx.set_term(1, q1);
    cx.set_dif(1, ExactMatrix(qq, 1, 1));
    cx.validate();
    corpus_add_complex(c, "c.q", std::move(cx));
  }
  return c;
}

}  // namespace gorhom
