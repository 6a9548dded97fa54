#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gorhom/complex.hpp"
#include "gorhom/module.hpp"
#include "gorhom/tensor.hpp"

namespace gorhom {

// A projective resolution of a module, either bounded (upper tail Zero, the
// top syzygy vanished) or eventually periodic (upper tail Periodic(p), the
// syzygy sequence repeated up to isomorphism and the window closes with a
// seam differential through that isomorphism).  cx lives in degrees [0, hi]
// with cx.term(0) the first cover; aug maps cx.term(0) onto target.
struct ProjectiveResolutionData {
  ChainComplex cx;
  ExactMatrix aug;
  Module target;
  std::vector<Module> syzygies;  // K_0, K_1, ... as far as the construction went
};

// Iterated free covers with syzygy-isomorphism detection.  Throws InputError
// if the syzygy sequence neither terminates nor repeats within `horizon`.
ProjectiveResolutionData projective_resolution(const Module& m, long horizon = 24);

// The resolution with its target spliced in at degree -1 via aug.
ChainComplex augmented_complex(const ProjectiveResolutionData& p);

// True when the augmented complex is acyclic on [-1, hi]: aug surjective and
// the resolution exact at every window degree (periodic tails fold beyond).
bool resolution_certificate(const ProjectiveResolutionData& p, long hi);

// A complete resolution: T unbounded-acyclic, tau : T -> approx.cx the
// comparison map that is the identity in degrees >= g.
struct CompleteResolutionData {
  ChainComplex t;
  ProjectiveResolutionData approx;
  ChainMap tau;
  long g = 0;
};

// Splice construction available over self-dual group algebras: resolve M and
// its dual, dualize the second resolution, and glue through the evaluation
// square at degree 0.  Requires alg->frobenius; g = 0.
CompleteResolutionData complete_resolution_frobenius(const Module& m, long horizon = 24);

// the same data resolving the degree-shifted target; the agreement degree
// moves with the shift (augmented_complex does not apply to shifted data)
CompleteResolutionData shift_complete(const CompleteResolutionData& c, long n);

// A projective module is its own resolution; the matching total complex is
// the contractible pair glued below the cover, with agreement degree zero.
CompleteResolutionData contractible_complete(const Module& p);

struct TauKernelData {
  ChainComplex k;
  ChainMap incl;  // k -> t
};

// Kernel of the comparison map, materialized on a window wide enough for
// homology near [need_lo, need_hi].  The window ends are chosen seam-clean:
// the low end sits in the pure-kernel zone strictly below the resolution
// (there the kernel inherits the total complex's periodicity), the high end
// at or above the agreement degree (zero kernel).  Requires the resolution
// side bounded below.
TauKernelData tau_kernel(const CompleteResolutionData& cr, long need_lo, long need_hi);

// The doubly periodic complete resolution of the trivial module over the
// integral cyclic group algebra of order n (n >= 2), paired with its
// nonnegative truncation.  Coefficient module conventions follow `side`.
CompleteResolutionData fixture_cyclic(long n, Side side);

struct TotalAcyclicityReport {
  bool acyclic = false;
  bool hom_acyclic = false;
  bool tensor_injective_acyclic = false;
  bool injectives_checked = false;
  std::vector<long> failed_degrees;
  bool ok_projective() const { return acyclic && hom_acyclic; }
  bool ok_flat() const {
    return acyclic && (injectives_checked ? tensor_injective_acyclic : hom_acyclic);
  }
};

// Checks exactness of T, of Hom(T, R), and (over field-based algebras, where
// the indecomposable injectives are enumerable) of E (x) T for each injective
// E, all across window degrees [lo, hi].  Over integer-based rings the
// injective sweep is skipped and flatness falls back to the Hom route.
TotalAcyclicityReport total_acyclicity(const ChainComplex& t, long lo, long hi);

// Replaces a complete resolution whose tau is only known to agree with the
// approximation in high degrees by one with degreewise surjective tau, by
// summing a contractible complex built from the low truncation of approx.
// Tau must literally be the identity in degrees >= g.
CompleteResolutionData pad_split_surjective(const CompleteResolutionData& c);

// A strict resolution of a bounded complex M: a degreewise surjective
// quasi-isomorphism onto : g -> M with degreewise kernel k (acyclic), so
// 0 -> k -> g -> M -> 0 is exact in every degree.  class_height bounds how
// far g extends above sup M.
struct StrictResolutionData {
  ChainComplex g;
  ChainMap onto;
  ChainComplex k;
  ChainMap k_incl;
  long class_height = 0;
};

// Produces the strict resolution of a single module placed in degree 0.
using ModuleResolver = std::function<StrictResolutionData(const Module&)>;

// For self-dual group algebras every module resolves by itself: g = M, k = 0.
ModuleResolver frobenius_resolver();

// One free cover: g = [ker -> free], k the degreewise kernel of the
// projection.  Projective inputs resolve by themselves.
ModuleResolver free_resolver();

// Glues per-module strict resolutions along the cone induction over the
// degrees of a bounded complex.  Postconditions are machine checked; see
// strict_resolution_certificate.
StrictResolutionData assemble_complex_resolution(const ChainComplex& m, const ModuleResolver& r);

// Degreewise exactness of 0 -> k -> g -> m -> 0, acyclicity of k, and the
// inf/sup bounds.  Used as an internal gate by assemble_complex_resolution.
bool strict_resolution_certificate(const StrictResolutionData& r, const ChainComplex& m);

// A projective resolution of a bounded complex, truncated at `depth`: every
// term is projective, onto is a quasi-isomorphism in degrees < depth.
// Homology of the resolution (or anything built degreewise from it) is only
// trustworthy in degrees <= valid_hi = depth - 2.
struct SemiProjectiveData {
  ChainComplex p;
  ChainMap onto;
  long valid_hi = 0;
};

SemiProjectiveData semi_projective_resolution(const ChainComplex& m, long depth);

// Solves for a chain map g with pb . g congruent to f . pa and dg = gd, by
// one global linear system over the hom spaces of each degree.  All four
// complexes must have finite windows with zero tails.
ChainMap lift_chain_map(const ChainMap& pa, const ChainMap& pb, const ChainMap& f);

}  // namespace gorhom
