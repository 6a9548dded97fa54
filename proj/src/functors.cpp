#include "gorhom/functors.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace gorhom {

namespace {

void fp_matrix(std::ostream& os, const ExactMatrix& x) {
  os << x.rows() << 'x' << x.cols() << ':';
  for (const std::string& s : x.to_strings()) os << s << ',';
}

void fp_module(std::ostream& os, const Module& m) {
  os << m.alg->name << '|' << m.dom().name() << '|' << (m.side == Side::Right ? 'R' : 'L') << '|'
     << m.gens << '|';
  fp_matrix(os, m.rel);
  for (const ExactMatrix& a : m.act) fp_matrix(os, a);
}

class FunctorCache {
 public:
  static FunctorCache& instance() {
    static FunctorCache c;
    return c;
  }
  bool lookup(const std::string& key, HomologyGroup& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const std::string& key, const HomologyGroup& v) {
    std::unique_lock lock(mu_);
    map_.emplace(key, v);
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, HomologyGroup> map_;
};

std::string pair_key(const char* tag, const Module& m, const Module& n, long i) {
  std::ostringstream os;
  os << tag << '#' << i << '#';
  fp_module(os, m);
  os << '#';
  fp_module(os, n);
  return os.str();
}

template <typename F>
HomologyGroup cached(const char* tag, const Module& m, const Module& n, long i, F&& compute) {
  std::string key = pair_key(tag, m, n, i);
  HomologyGroup out;
  if (FunctorCache::instance().lookup(key, out)) return out;
  out = compute();
  FunctorCache::instance().insert(key, out);
  return out;
}

void check_tensor_pair(const Module& m, const Module& n) {
  if (!algebras_equal(*m.alg, *n.alg))
    throw InputError("homology functors need both arguments over the same algebra");
  if (m.side == n.side)
    throw InputError("homology functors pair a right module with a left module");
}

// orient a tensor computation by the side of the resolved complex
HomologyGroup sided_tensor_homology(const ChainComplex& t, const ChainComplex& n, long i) {
  if (t.side() == Side::Right) return tensor_homology(t, n, i);
  return tensor_homology(n, t, i);
}

void require_split(const CompleteResolutionData& cr, const char* who) {
  if (!degreewise_split_surjective(cr.tau))
    throw InputError(std::string(who) +
                     ": the comparison map admits no degreewise section; pad the resolution");
}

}  // namespace

HomologyGroup tor(const Module& m, const Module& n, long i) {
  if (i < 0) throw InputError("tor of modules vanishes in negative degrees; not a valid request");
  check_tensor_pair(m, n);
  return cached("tor", m, n, i, [&] {
    ProjectiveResolutionData p = projective_resolution(m);
    return sided_tensor_homology(p.cx, one_term_complex(n, 0), i);
  });
}

HomologyGroup tor(const ChainComplex& m, const ChainComplex& n, long i) {
  long depth = std::max(i + 2, m.hi() + 1);
  SemiProjectiveData sp = semi_projective_resolution(m, depth);
  return sided_tensor_homology(sp.p, n, i);
}

HomologyGroup tate_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i) {
  return sided_tensor_homology(cr.t, n, i);
}

HomologyGroup tate_tor(const Module& m, const Module& n, long i) {
  check_tensor_pair(m, n);
  return cached("tate", m, n, i, [&] {
    CompleteResolutionData cr = complete_resolution_frobenius(m);
    return sided_tensor_homology(cr.t, one_term_complex(n, 0), i);
  });
}

HomologyGroup stable_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i) {
  require_split(cr, "stable_tor");
  return sided_tensor_homology(cr.t, n, i);
}

HomologyGroup stable_tor(const Module& m, const Module& n, long i) {
  check_tensor_pair(m, n);
  return cached("stor", m, n, i, [&] {
    CompleteResolutionData cr = complete_resolution_frobenius(m);
    return stable_tor(cr, one_term_complex(n, 0), i);
  });
}

HomologyGroup unbounded_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i) {
  require_split(cr, "unbounded_tor");
  TauKernelData tk = tau_kernel(cr, i - 4, i + 2);
  return sided_tensor_homology(tk.k, n, i - 1);
}

HomologyGroup unbounded_tor(const Module& m, const Module& n, long i) {
  check_tensor_pair(m, n);
  return cached("btor", m, n, i, [&] {
    CompleteResolutionData cr = complete_resolution_frobenius(m);
    return unbounded_tor(cr, one_term_complex(n, 0), i);
  });
}

HomologyGroup relative_tor_gp(const Module& m, const Module& n, long i) {
  if (i < 0) throw InputError("relative homology is not defined in negative degrees for modules");
  check_tensor_pair(m, n);
  return cached("gptor", m, n, i, [&] {
    if (m.alg->frobenius) {
      // every module is Gorenstein projective, so m is its own proper resolution
      return sided_tensor_homology(one_term_complex(m, 0), one_term_complex(n, 0), i);
    }
    if (m.alg->dim == 1 || is_projective(m)) {
      // Gorenstein projectives coincide with projectives here, and projective
      // resolutions are proper
      ProjectiveResolutionData p = projective_resolution(m);
      return sided_tensor_homology(p.cx, one_term_complex(n, 0), i);
    }
    throw InputError("relative_tor_gp: no proper Gorenstein projective resolution available");
  });
}

HomologyGroup relative_tor_gf(const Module& m, const Module& n, long i) {
  // Gorenstein flat = Gorenstein projective for the supported finite modules
  return relative_tor_gp(m, n, i);
}

HomologyGroup ext_group(const Module& m, const Module& n, long i) {
  if (i < 0) throw InputError("ext of modules vanishes in negative degrees; not a valid request");
  if (!algebras_equal(*m.alg, *n.alg))
    throw InputError("ext needs both arguments over the same algebra");
  if (m.side != n.side) throw InputError("ext pairs modules on the same side");
  return cached("ext", m, n, i, [&] {
    ProjectiveResolutionData p = projective_resolution(m);
    HomComplexData hd = hom_complex(p.cx, n, -i - 2, -i + 2);
    return homology_group(hd.cx, -i);
  });
}

HomologyGroup ext_group(const ChainComplex& m, const Module& n, long i) {
  long depth = std::max(i + 3, m.hi() + 1);
  SemiProjectiveData sp = semi_projective_resolution(m, depth);
  HomComplexData hd = hom_complex(sp.p, n, -i - 2, -i + 2);
  return homology_group(hd.cx, -i);
}

void clear_functor_cache() { FunctorCache::instance().clear(); }

}  // namespace gorhom
