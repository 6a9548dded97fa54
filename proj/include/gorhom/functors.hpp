#pragma once

#include <gorhom/resolution.hpp>

namespace gorhom {

// Absolute homology: H_i of (projective resolution of m) tensor n.  Module
// arguments must pair one right module with one left module over the same
// algebra, in either order; i < 0 is rejected for modules.  For complexes
// any degree is allowed and the resolution is built just deep enough.
HomologyGroup tor(const Module& m, const Module& n, long i);
HomologyGroup tor(const ChainComplex& m, const ChainComplex& n, long i);

// Tate homology H_i(T tensor n) through a complete resolution, defined for
// all integers i.  The module overload builds the Frobenius splice.
HomologyGroup tate_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i);
HomologyGroup tate_tor(const Module& m, const Module& n, long i);

// Stable homology through a split-surjective complete resolution: H_i of
// T tensor n.  Rejects data without a degreewise section (pad first).
HomologyGroup stable_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i);
HomologyGroup stable_tor(const Module& m, const Module& n, long i);

// Unbounded homology through the kernel K of the comparison tau:
// H_(i-1)(K tensor n).  Same split-surjectivity requirement.
HomologyGroup unbounded_tor(const CompleteResolutionData& cr, const ChainComplex& n, long i);
HomologyGroup unbounded_tor(const Module& m, const Module& n, long i);

// Relative homology over a proper Gorenstein projective resolution of m.
// Over Frobenius algebras every module is Gorenstein projective and m itself
// is a proper length-zero resolution; over rank-one base rings and for
// projective m the ordinary projective resolution is proper.  The Gorenstein
// flat flavor coincides with the projective one on every supported ring
// class (finite modules there are cotorsion and flats are projective), so it
// delegates and says so here rather than silently.
HomologyGroup relative_tor_gp(const Module& m, const Module& n, long i);
HomologyGroup relative_tor_gf(const Module& m, const Module& n, long i);

// Ext^i(m, n) as cohomology of Hom(P, n) for a projective resolution P of m;
// module arguments are same-side and i < 0 is rejected, complexes allow any i.
HomologyGroup ext_group(const Module& m, const Module& n, long i);
HomologyGroup ext_group(const ChainComplex& m, const Module& n, long i);

// Memoization: results of the module-level functors are cached under a
// content fingerprint; safe for concurrent readers with exclusive insertion.
void clear_functor_cache();

}  // namespace gorhom
