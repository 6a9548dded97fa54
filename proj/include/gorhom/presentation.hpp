#pragma once

#include "gorhom/linalg.hpp"

namespace gorhom {

/// Isomorphism-class descriptor of a finitely generated module over the
/// coefficient domain: a dimension over a field, free rank plus torsion
/// divisors (ascending divisibility chain) over Z.
struct HomologyGroup {
  bool field = true;
  long dim = 0;
  long rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return field ? dim == 0 : (rank == 0 && torsion.empty()); }
  bool operator==(const HomologyGroup&) const = default;
  std::string str() const;
};

/// Finitely presented module over the domain: gens generators, columns of
/// rel as relations. Over fields this is just a quotient vector space; over
/// Z it carries torsion. The zero-relation case covers free modules.
struct Presentation {
  CoefficientDomain dom;
  long gens = 0;
  ExactMatrix rel;  // gens x r

  Presentation() : dom(CoefficientDomain::rationals()), rel(dom, 0, 0) {}
  Presentation(CoefficientDomain d, long g, ExactMatrix r);
  static Presentation free_of(CoefficientDomain d, long g);

  HomologyGroup descriptor() const;
};

/// Basis for {x : G x lies in the span of relC's columns}. Over Z the result
/// is a lattice basis, so expressing elements in it is an exact solve.
ExactMatrix constrained_kernel(const ExactMatrix& G, const ExactMatrix& relC);

/// Homology at the middle of  A --f--> B --g--> C  where the three terms are
/// presented modules and f, g act on generators. H comes with the cycle
/// generators in B's coordinates so maps on homology can be computed.
struct SpotHomology {
  Presentation H;
  ExactMatrix cycles;  // B.gens x H.gens
};
SpotHomology homology_spot(const Presentation& A, const ExactMatrix& f,
                           const Presentation& B, const ExactMatrix& g,
                           const Presentation& C);

/// Map induced on homology by phi (a degreewise map commuting with the
/// differentials up to relations). src/tgt are spot data at matching degree.
ExactMatrix induced_on_homology(const SpotHomology& src, const SpotHomology& tgt,
                                const ExactMatrix& phi, const Presentation& tgt_term);

/// Exactness of  X --F--> Y --G--> Z  at Y for presented modules and
/// generator-level maps: composite vanishes and ker G lies in im F.
struct ExactnessCheck {
  bool composite_zero = false;
  bool kernel_in_image = false;
  bool ok() const { return composite_zero && kernel_in_image; }
};
ExactnessCheck exact_at(const Presentation& X, const ExactMatrix& F,
                        const Presentation& Y, const ExactMatrix& G,
                        const Presentation& Z);

/// Columns of A - B all lie in the span of rel (equality of morphisms into a
/// presented module).
bool congruent(const ExactMatrix& A, const ExactMatrix& B, const ExactMatrix& rel);

/// Whether the morphism given by F: X -> Y on generators is well defined,
/// i.e. F maps X's relations into the span of Y's.
bool morphism_well_defined(const Presentation& X, const ExactMatrix& F, const Presentation& Y);

}  // namespace gorhom
