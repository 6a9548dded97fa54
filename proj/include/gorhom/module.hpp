#pragma once

#include <gorhom/algebra.hpp>
#include <gorhom/presentation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gorhom {

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Module over a structure-constant algebra, carried by coordinates over the
// coefficient domain.  Over field domains the underlying space is free (rel
// empty); over Z the underlying group is presented by the columns of rel.
struct Module {
  AlgebraPtr alg;
  Side side = Side::Left;
  long gens = 0;
  ExactMatrix rel;                // gens x r, columns are relations
  std::vector<ExactMatrix> act;   // per algebra basis element, gens x gens
  std::string id;

  const CoefficientDomain& dom() const { return alg->dom; }
  Presentation pres() const { return Presentation{dom(), gens, rel}; }
  HomologyGroup descriptor() const { return pres().descriptor(); }
  ExactMatrix action(const ExactMatrix& r) const;  // action of the element with coordinates r

  void validate() const;  // throws InputError on any axiom violation
};

Module make_module(AlgebraPtr a, Side side, long gens, std::vector<ExactMatrix> act,
                   ExactMatrix rel, std::string id);
Module zero_module(AlgebraPtr a, Side side);
Module free_module(AlgebraPtr a, Side side, long copies, std::string id = "");
Module regular_module(AlgebraPtr a, Side side);
// residue field of a local algebra: every non-unit basis direction acts by zero
// on truncated polynomials; group generators act by one on group rings
Module simple_module(AlgebraPtr a, Side side);
// rank-one module over a cyclic group ring: the generator t acts by c (c^n = 1)
Module character_module(AlgebraPtr a, Side side, const Scalar& c, std::string id = "");
// rank-one quotient over a Z-domain algebra: Z/m with t acting by c
Module character_quotient_module(AlgebraPtr a, Side side, const Scalar& c, const mpz_class& m,
                                 std::string id = "");
Module direct_sum(const Module& x, const Module& y);
Module dual_module(const Module& m);  // field domains only
bool modules_equal(const Module& x, const Module& y);  // content equality; ids ignored

// f is an R-linear map src -> tgt in coordinates, compatible with presentations.
bool is_morphism(const Module& src, const ExactMatrix& f, const Module& tgt);

std::vector<long> minimal_generators(const Module& m);  // minimal over local algebras

struct CoverData {
  Module free;
  ExactMatrix pi;  // m.gens x free.gens
};
CoverData cover_by_free(const Module& m);

struct KernelData {
  Module ker;       // rel-free underlying space
  ExactMatrix incl;  // src.gens x ker.gens, basis of the kernel
};
// kernel of an R-linear morphism whose source has a free underlying space
KernelData kernel_of_morphism(const Module& src, const ExactMatrix& f, const Module& tgt);

// M tensor_R N as a presented space over the coefficient domain
struct TensorSpace {
  Presentation pres;
  ExactMatrix to_q;    // pres coords of a pure-basis vector (field: projection; Z: identity)
  ExactMatrix from_q;  // section with to_q * from_q = identity
  long gm = 0, gn = 0;
};
TensorSpace module_tensor(const Module& mright, const Module& nleft);
// map induced by f: M -> M', g: N -> N' on chosen tensor coordinates
ExactMatrix tensor_induced(const TensorSpace& src, const TensorSpace& dst, const ExactMatrix& f,
                           const ExactMatrix& g);

// Hom_R(M, N) as a presented space over the coefficient domain.  basis columns
// are row-major vectorized matrices N.gens x M.gens representing generators.
struct HomSpace {
  Presentation pres;
  ExactMatrix basis;
  long gm = 0, gn = 0;

  ExactMatrix matrix_of(const ExactMatrix& coords) const;
  ExactMatrix coords_of(const ExactMatrix& X) const;
};
HomSpace hom_space(const Module& m, const Module& n);  // modules on the same side

// Hom over R-op from a right module into the regular right module, as a left module
Module hom_into_regular(const Module& mright);

// indecomposable injective modules of the given side, via the algebra's
// certified idempotent data; throws InputError when none is available
std::vector<Module> indecomposable_injectives(AlgebraPtr a, Side side);

std::optional<ExactMatrix> iso_search(const Module& m, const Module& n);
bool is_projective(const Module& m);

}  // namespace gorhom
