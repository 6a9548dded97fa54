#pragma once

#include <gorhom/module.hpp>

#include <map>
#include <optional>
#include <vector>

namespace gorhom {

// Behavior of a complex (or chain map) outside its stored window: identically
// zero, or repeating with the given period.
struct Tail {
  enum class Kind { Zero, Periodic };
  Kind kind = Kind::Zero;
  long period = 0;

  static Tail zero() { return {Kind::Zero, 0}; }
  static Tail periodic(long p) { return {Kind::Periodic, p}; }
  bool is_zero() const { return kind == Kind::Zero; }
  bool operator==(const Tail&) const = default;
};

// Chain complex of modules with homological indexing: dif(i) maps term(i) to
// term(i-1).  Terms and differentials are stored on the window [lo, hi] and
// extended by the declared tails; accessors fold indices into the window.
class ChainComplex {
 public:
  ChainComplex(AlgebraPtr ring, Side side, long lo, long hi, Tail lower = Tail::zero(),
               Tail upper = Tail::zero());

  const AlgebraPtr& ring() const { return ring_; }
  Side side() const { return side_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  const Tail& lower() const { return lower_; }
  const Tail& upper() const { return upper_; }
  const CoefficientDomain& dom() const { return ring_->dom; }

  void set_term(long i, Module m);
  void set_dif(long i, ExactMatrix d);  // term(i) -> term(i-1), lo < i <= hi

  const Module& term(long i) const;  // any degree; zero module outside zero tails
  ExactMatrix dif(long i) const;     // any degree; zero maps across zero boundaries

  bool bounded_below() const;  // no nonzero terms in arbitrarily low degrees
  bool bounded_above() const;
  std::optional<long> sup_deg() const;  // extreme nonzero degrees of a bounded side
  std::optional<long> inf_deg() const;
  bool is_zero_complex() const;

  void validate() const;  // shapes, R-linearity, dif*dif = 0, periodic seams

 private:
  std::optional<long> fold(long i) const;  // stored index, or nullopt in a zero tail

  AlgebraPtr ring_;
  Side side_;
  long lo_, hi_;
  Tail lower_, upper_;
  std::map<long, Module> terms_;
  std::map<long, ExactMatrix> difs_;
  Module zero_;
};

ChainComplex one_term_complex(Module m, long degree);
ChainComplex zero_complex(AlgebraPtr ring, Side side);
ChainComplex shift(const ChainComplex& c, long n);  // degree i picks up c's degree i-n; dif scaled by (-1)^n

// Degreewise map of complexes; mats stored on [mlo, mhi] and extended by the
// declared rules (zero, or periodic folding for maps of periodic complexes).
struct ChainMap {
  ChainComplex src, tgt;
  std::map<long, ExactMatrix> mats;
  long mlo = 0, mhi = -1;
  Tail lower_ext = Tail::zero(), upper_ext = Tail::zero();

  ExactMatrix at(long i) const;
  void validate() const;  // morphism degreewise and commutes with differentials
};

ChainMap make_chain_map(ChainComplex src, ChainComplex tgt, std::map<long, ExactMatrix> mats,
                        long mlo, long mhi, Tail lower = Tail::zero(), Tail upper = Tail::zero());
ChainMap identity_chain_map(const ChainComplex& c);
ChainMap shift(const ChainMap& f, long n);  // same degreewise maps between the shifted complexes

// keep degrees >= n (resp. <= n), zero elsewhere
ChainComplex truncate_below(const ChainComplex& c, long n);
ChainComplex truncate_above(const ChainComplex& c, long n);

// coker(dif(n+1): term(n+1) -> term(n)) as a module, with the projection from
// term(n)'s coordinates (a genuine matrix over fields, identity over Z)
struct CokernelModule {
  Module m;
  ExactMatrix proj;
};
CokernelModule cokernel_at(const ChainComplex& c, long n);

struct ConeData {
  ChainComplex cone;   // Cone(f)_i = src_(i-1) + tgt_i
  ChainMap incl;       // tgt -> cone
  ChainMap proj;       // cone -> shift(src, 1)
};
ConeData cone(const ChainMap& f);

struct ComplexKernel {
  ChainComplex ker;
  ChainMap incl;
};
ComplexKernel kernel_complex(const ChainMap& f);

// every degree admits an additive section of f (split surjectivity over the
// coefficient domain), checked across the stored window and tail seams
bool degreewise_split_surjective(const ChainMap& f);

SpotHomology homology_at(const ChainComplex& c, long i);
HomologyGroup homology_group(const ChainComplex& c, long i);

// spot-exactness of the homology sequence of f through its cone,
// ... -> H_n(src) -> H_n(tgt) -> H_n(Cone f) -> H_(n-1)(src) -> ...,
// checked at every spot with middle degree in [lo, hi]
bool triangle_homology_exact(const ChainMap& f, long lo, long hi);

struct AcyclicityReport {
  bool ok = true;
  std::vector<long> failed_degrees;
};
AcyclicityReport acyclic_on(const ChainComplex& c, long a, long b);

}  // namespace gorhom
