#include "gorhom/gdim.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace gorhom {

namespace {

HomologyGroup sided_tensor(const ChainComplex& p, const Module& probe, long n) {
  ChainComplex pc = one_term_complex(probe, 0);
  if (p.side() == Side::Right) return tensor_homology(p, pc, n);
  return tensor_homology(pc, p, n);
}

std::string probe_name(const Module& e, std::size_t idx) {
  if (!e.id.empty()) return e.id;
  return "probe#" + std::to_string(idx);
}

// injectives when the ring provides them, else a small faithful pool for
// witness hunting
std::vector<Module> probe_pool(AlgebraPtr a, Side side, bool& injective) {
  try {
    auto v = indecomposable_injectives(a, side);
    injective = true;
    return v;
  } catch (const InputError&) {
  }
  injective = false;
  std::vector<Module> pool;
  pool.push_back(regular_module(a, side));
  try {
    pool.push_back(character_module(a, side, Scalar(1), "triv"));
  } catch (const InputError&) {
  }
  return pool;
}

DimensionReport detect_on_resolution(const ChainComplex& p, DimFlavor flavor, long lo_scan,
                                     long cap, bool capped_by_theorem,
                                     const std::vector<Module>& probes) {
  DimensionReport rep;
  rep.flavor = flavor;
  bool found = false;
  long best = 0;
  std::string best_id;
  for (long n = lo_scan; n <= cap; ++n) {
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (sided_tensor(p, probes[j], n).is_zero()) continue;
      if (!found || n > best) {
        best = n;
        best_id = probe_name(probes[j], j);
      }
      found = true;
    }
  }
  if (!found)
    throw InternalError("gfd_detect: nonzero homology without a torsion witness in range");
  rep.value = best;
  rep.witness_degree = best;
  rep.witness_id = best_id;
  rep.upper_bound = cap - 2;
  rep.exact = capped_by_theorem;
  rep.lower_only = !capped_by_theorem;
  std::ostringstream os;
  os << "torsion scan over " << probes.size() << " injective probe(s) on degrees " << lo_scan << ".."
     << cap;
  rep.method = os.str();
  return rep;
}

}  // namespace

std::string DimensionReport::str() const {
  if (minus_infinity) return "-inf";
  std::string v = std::to_string(value);
  if (upper_only) return "<= " + v;
  if (lower_only) return ">= " + v;
  return v;
}

std::optional<long> module_dimension(const Module& m) {
  if (m.pres().descriptor().is_zero()) return std::nullopt;
  if (is_projective(m)) return 0;
  if (m.alg->frobenius) return 0;
  if (m.alg->dim == 1) return 1;  // torsion over the base ring resolves in one step
  throw InputError("module_dimension: ring class without dimension bookkeeping");
}

SupportBound dimension_bound(const ChainComplex& m, DimFlavor) {
  if (!m.lower().is_zero() || !m.upper().is_zero())
    throw InputError("dimension_bound needs a bounded complex");
  SupportBound out;
  long best = std::numeric_limits<long>::min();
  long sup = std::numeric_limits<long>::min();
  for (long i = m.lo(); i <= m.hi(); ++i) {
    auto d = module_dimension(m.term(i));
    if (!d) continue;
    sup = std::max(sup, i);
    best = std::max(best, *d);
    out.components.emplace_back(i, *d);
  }
  if (best == std::numeric_limits<long>::min()) {
    out.empty = true;
    return out;
  }
  out.sup = sup;
  out.bound = best + sup;
  return out;
}

DimensionReport gfd_detect(const Module& m, long depth_cap) {
  DimensionReport rep;
  rep.flavor = DimFlavor::Gfd;
  if (m.pres().descriptor().is_zero()) {
    rep.minus_infinity = true;
    rep.method = "zero module";
    return rep;
  }
  auto probes = indecomposable_injectives(m.alg, opposite(m.side));
  long cap;
  bool capped = true;
  try {
    cap = *module_dimension(m) + 2;
  } catch (const InputError&) {
    cap = depth_cap;
    capped = false;
  }
  ProjectiveResolutionData p = projective_resolution(m);
  return detect_on_resolution(p.cx, DimFlavor::Gfd, 0, cap, capped, probes);
}

DimensionReport gfd_detect(const ChainComplex& m, long depth_cap) {
  if (!m.lower().is_zero() || !m.upper().is_zero())
    throw InputError("gfd_detect needs a bounded complex");
  DimensionReport rep;
  rep.flavor = DimFlavor::Gfd;
  if (acyclic_on(m, m.lo() - 1, m.hi() + 1).ok) {
    rep.minus_infinity = true;
    rep.method = "acyclic complex";
    return rep;
  }
  auto probes = indecomposable_injectives(m.ring(), opposite(m.side()));
  long cap;
  bool capped = true;
  try {
    SupportBound b = dimension_bound(m, DimFlavor::Gfd);
    cap = (b.empty ? 0 : b.bound) + 2;
  } catch (const InputError&) {
    cap = depth_cap;
    capped = false;
  }
  SemiProjectiveData sp = semi_projective_resolution(m, std::max(cap + 2, m.hi() + 1));
  return detect_on_resolution(sp.p, DimFlavor::Gfd, m.lo(), cap, capped, probes);
}

DimensionReport gpd_from_resolution(const ChainComplex& target, const CompleteResolutionData& cr) {
  if (!algebras_equal(*target.ring(), *cr.t.ring()) || target.side() != cr.t.side())
    throw InputError("gpd_from_resolution: resolution and target do not match");
  DimensionReport rep;
  rep.flavor = DimFlavor::Gpd;
  if (acyclic_on(target, target.lo() - 1, target.hi() + 1).ok) {
    rep.minus_infinity = true;
    rep.method = "acyclic target";
    return rep;
  }
  bool injective = false;
  auto probes = probe_pool(target.ring(), opposite(target.side()), injective);
  rep.value = cr.g;
  rep.upper_bound = cr.g;
  bool found = false;
  for (std::size_t j = 0; j < probes.size() && !found; ++j) {
    if (!tor(target, one_term_complex(probes[j], 0), cr.g).is_zero()) {
      found = true;
      rep.witness_degree = cr.g;
      rep.witness_id = probe_name(probes[j], j);
    }
  }
  rep.exact = found;
  rep.upper_only = !found;
  rep.method = std::string("agreement degree of the complete resolution") +
               (found ? (injective ? " with injective witness" : " with module witness")
                      : ", no witness at the bound");
  return rep;
}

}  // namespace gorhom
