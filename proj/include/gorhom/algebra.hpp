#pragma once

#include <gorhom/linalg.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gorhom {

// Finite-rank associative unital algebra over an exact coefficient domain,
// presented by left-multiplication matrices on a fixed basis.
struct Algebra {
  CoefficientDomain dom;
  long dim = 0;
  std::string name;
  std::vector<ExactMatrix> lmul;  // lmul[i] column j = coordinates of e_i * e_j
  ExactMatrix unit;               // dim x 1, coordinates of 1
  std::optional<ExactMatrix> frobenius;  // invertible associating bilinear form (field domains only)
  bool known_local = false;       // set by constructors when the algebra is local
  std::optional<std::vector<long>> idempotent_basis;  // indices forming a complete orthogonal idempotent set
  std::optional<ExactMatrix> residue_map;  // 1 x dim algebra map onto the coefficient domain

  Algebra(CoefficientDomain d, long n, std::string nm)
      : dom(d), dim(n), name(std::move(nm)), unit(d, n, 1) {}

  ExactMatrix basis_element(long i) const;             // coordinates of e_i
  ExactMatrix left_mult(const ExactMatrix& x) const;   // matrix of y -> x*y
  ExactMatrix right_mult(const ExactMatrix& x) const;  // matrix of y -> y*x
  ExactMatrix mult(const ExactMatrix& x, const ExactMatrix& y) const;

  bool is_trivial() const { return dim == 1; }

  void validate() const;  // throws InputError on any axiom violation
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// k regarded as an algebra over itself (or Z over Z when dom is Integers).
AlgebraPtr make_trivial_algebra(CoefficientDomain dom);

// k[x]/(x^n) with basis 1, x, ..., x^{n-1}; Frobenius form pairs x^a with x^{n-1-a}.
AlgebraPtr make_truncated_poly(CoefficientDomain field_dom, long n);

// dom[C_n] with basis t^0, ..., t^{n-1}; Frobenius form (field domains) pairs t^a with t^{-a}.
AlgebraPtr make_group_ring_cyclic(CoefficientDomain dom, long n);

// k x ... x k (m factors), componentwise product, Frobenius form = identity.
AlgebraPtr make_product_fields(CoefficientDomain field_dom, long m);

bool algebras_equal(const Algebra& a, const Algebra& b);

}  // namespace gorhom
