#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gorhom/functors.hpp>

namespace gorhom {

enum class DimFlavor { Gpd, Gfd };

// Dimension verdict with its evidence.  Exactly one of minus_infinity /
// exact / upper_only / lower_only holds: exact values carry both an upper
// certificate (bound or agreement degree) and a lower witness (a probe
// module with nonvanishing torsion at the value).
struct DimensionReport {
  DimFlavor flavor = DimFlavor::Gfd;
  bool minus_infinity = false;
  bool exact = false;
  bool upper_only = false;
  bool lower_only = false;
  long value = 0;
  long witness_degree = 0;
  std::string witness_id;
  long upper_bound = 0;
  std::string method;
  std::string str() const;  // "-inf", "2", "<= 2", ">= 2"
};

// Gorenstein dimension of one module over the supported ring classes: zero
// module -> nullopt (no support); projectives and modules over Frobenius
// algebras -> 0; non-projectives over the rank-one base rings -> 1.
std::optional<long> module_dimension(const Module& m);

// Per-degree dimension table and the resulting upper bound
// max(component dimension) + sup(support) for a bounded complex.
struct SupportBound {
  bool empty = false;  // no nonzero terms; the bound degenerates
  long bound = 0;
  long sup = 0;
  std::vector<std::pair<long, long>> components;  // (degree, dimension), nonzero terms only
};
SupportBound dimension_bound(const ChainComplex& m, DimFlavor flavor);

// Exact detection by scanning torsion against the indecomposable injectives
// up to the certified bound (+2 slack); vanishing beyond that range is a
// theorem over the supported classes, so the scan is complete.  Acyclic
// targets report -inf.  Throws InputError when the injective list is not
// available for the ring.
DimensionReport gfd_detect(const Module& m, long depth_cap = 8);
DimensionReport gfd_detect(const ChainComplex& m, long depth_cap = 8);

// Reading the projective dimension off a validated complete resolution: its
// agreement degree is an upper bound, certified exact when a probe module
// shows nonvanishing torsion there.
DimensionReport gpd_from_resolution(const ChainComplex& target, const CompleteResolutionData& cr);

}  // namespace gorhom
