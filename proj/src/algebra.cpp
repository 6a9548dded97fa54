#include <gorhom/algebra.hpp>

namespace gorhom {

ExactMatrix Algebra::basis_element(long i) const {
  if (i < 0 || i >= dim) throw InternalError("basis index out of range");
  ExactMatrix v(dom, dim, 1);
  v.set(i, 0, Scalar(1));
  return v;
}

ExactMatrix Algebra::left_mult(const ExactMatrix& x) const {
  if (x.rows() != dim || x.cols() != 1) throw InternalError("left_mult: bad coordinate shape");
  ExactMatrix m(dom, dim, dim);
  for (long i = 0; i < dim; ++i) m = m + lmul[static_cast<size_t>(i)].scaled(x.at(i, 0));
  return m;
}

ExactMatrix Algebra::right_mult(const ExactMatrix& x) const {
  if (x.rows() != dim || x.cols() != 1) throw InternalError("right_mult: bad coordinate shape");
  ExactMatrix m(dom, dim, dim);
  for (long i = 0; i < dim; ++i) {
    ExactMatrix col = lmul[static_cast<size_t>(i)] * x;  // e_i * x
    for (long r = 0; r < dim; ++r) m.set(r, i, col.at(r, 0));
  }
  return m;
}

ExactMatrix Algebra::mult(const ExactMatrix& x, const ExactMatrix& y) const {
  return left_mult(x) * y;
}

void Algebra::validate() const {
  if (dim < 1) throw InputError("algebra '" + name + "': dimension must be positive");
  if (static_cast<long>(lmul.size()) != dim)
    throw InputError("algebra '" + name + "': need one left-multiplication matrix per basis element");
  for (const auto& m : lmul)
    if (m.rows() != dim || m.cols() != dim || !(m.domain() == dom))
      throw InputError("algebra '" + name + "': malformed multiplication matrix");
  if (unit.rows() != dim || unit.cols() != 1)
    throw InputError("algebra '" + name + "': malformed unit vector");

  // associativity: left multiplication by e_i*e_j equals L_i L_j
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      ExactMatrix lhs = lmul[static_cast<size_t>(i)] * lmul[static_cast<size_t>(j)];
      ExactMatrix rhs(dom, dim, dim);
      for (long m = 0; m < dim; ++m)
        rhs = rhs + lmul[static_cast<size_t>(m)].scaled(lmul[static_cast<size_t>(i)].at(m, j));
      if (!(lhs == rhs))
        throw InputError("algebra '" + name + "': associativity fails at basis pair (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  if (!(left_mult(unit) == ExactMatrix::identity(dom, dim)))
    throw InputError("algebra '" + name + "': unit is not a left unit");
  for (long i = 0; i < dim; ++i)
    if (!(lmul[static_cast<size_t>(i)] * unit == basis_element(i)))
      throw InputError("algebra '" + name + "': unit is not a right unit");

  if (residue_map) {
    const ExactMatrix& chi = *residue_map;
    if (chi.rows() != 1 || chi.cols() != dim || !(chi.domain() == dom))
      throw InputError("algebra '" + name + "': malformed residue map");
    ExactMatrix u = chi * unit;
    if (!(u.at(0, 0) == Scalar(1)))
      throw InputError("algebra '" + name + "': residue map does not send the unit to 1");
    for (long i = 0; i < dim; ++i) {
      ExactMatrix along = chi * lmul[static_cast<size_t>(i)];  // chi(e_i * e_j) per column j
      for (long j = 0; j < dim; ++j)
        if (!(along.at(0, j) == dom.mul(chi.at(0, i), chi.at(0, j))))
          throw InputError("algebra '" + name + "': residue map is not multiplicative");
    }
  }

  if (idempotent_basis) {
    ExactMatrix sum(dom, dim, 1);
    for (long j : *idempotent_basis) {
      if (j < 0 || j >= dim) throw InputError("algebra '" + name + "': idempotent index out of range");
      sum = sum + basis_element(j);
      for (long k : *idempotent_basis) {
        ExactMatrix prod = mult(basis_element(j), basis_element(k));
        ExactMatrix want = j == k ? basis_element(j) : ExactMatrix(dom, dim, 1);
        if (!(prod == want))
          throw InputError("algebra '" + name + "': claimed idempotents are not orthogonal idempotents");
      }
    }
    if (!(sum == unit))
      throw InputError("algebra '" + name + "': claimed idempotents do not sum to the unit");
  }

  if (frobenius) {
    const ExactMatrix& B = *frobenius;
    if (!dom.is_field())
      throw InputError("algebra '" + name + "': Frobenius form requires a field domain");
    if (B.rows() != dim || B.cols() != dim || !(B.domain() == dom))
      throw InputError("algebra '" + name + "': malformed Frobenius form");
    if (rank_of(B) != dim)
      throw InputError("algebra '" + name + "': Frobenius form is singular");
    // associating: B(e_i e_j, e_k) = B(e_i, e_j e_k)
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) {
        for (long k = 0; k < dim; ++k) {
          Scalar lhs(0), rhs(0);
          for (long m = 0; m < dim; ++m) {
            lhs = dom.add(lhs, dom.mul(lmul[static_cast<size_t>(i)].at(m, j), B.at(m, k)));
            rhs = dom.add(rhs, dom.mul(lmul[static_cast<size_t>(j)].at(m, k), B.at(i, m)));
          }
          if (!(lhs == rhs))
            throw InputError("algebra '" + name + "': Frobenius form does not associate at (" +
                             std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
        }
      }
    }
  }
}

AlgebraPtr make_trivial_algebra(CoefficientDomain dom) {
  auto a = std::make_shared<Algebra>(dom, 1, dom.name());
  a->lmul.push_back(ExactMatrix::identity(dom, 1));
  a->unit.set(0, 0, Scalar(1));
  if (dom.is_field()) a->frobenius = ExactMatrix::identity(dom, 1);
  a->known_local = true;
  a->idempotent_basis = std::vector<long>{0};
  a->residue_map = ExactMatrix::identity(dom, 1);
  a->validate();
  return a;
}

AlgebraPtr make_truncated_poly(CoefficientDomain field_dom, long n) {
  if (!field_dom.is_field()) throw InputError("truncated polynomial algebra needs a field domain");
  if (n < 1) throw InputError("truncated polynomial algebra needs exponent >= 1");
  auto a = std::make_shared<Algebra>(field_dom, n,
                                     field_dom.name() + "[x]/(x^" + std::to_string(n) + ")");
  for (long i = 0; i < n; ++i) {
    ExactMatrix L(field_dom, n, n);
    for (long j = 0; j < n; ++j)
      if (i + j < n) L.set(i + j, j, Scalar(1));
    a->lmul.push_back(L);
  }
  a->unit.set(0, 0, Scalar(1));
  ExactMatrix B(field_dom, n, n);
  for (long i = 0; i < n; ++i) B.set(i, n - 1 - i, Scalar(1));
  a->frobenius = B;
  a->known_local = true;
  ExactMatrix chi(field_dom, 1, n);
  chi.set(0, 0, Scalar(1));
  a->residue_map = chi;
  a->validate();
  return a;
}

AlgebraPtr make_group_ring_cyclic(CoefficientDomain dom, long n) {
  if (n < 1) throw InputError("cyclic group ring needs order >= 1");
  auto a = std::make_shared<Algebra>(dom, n, dom.name() + "[C" + std::to_string(n) + "]");
  for (long i = 0; i < n; ++i) {
    ExactMatrix L(dom, n, n);
    for (long j = 0; j < n; ++j) L.set((i + j) % n, j, Scalar(1));
    a->lmul.push_back(L);
  }
  a->unit.set(0, 0, Scalar(1));
  if (dom.is_field()) {
    ExactMatrix B(dom, n, n);
    for (long i = 0; i < n; ++i) B.set(i, (n - i) % n, Scalar(1));
    a->frobenius = B;
  }
  {
    ExactMatrix chi(dom, 1, n);
    for (long i = 0; i < n; ++i) chi.set(0, i, Scalar(1));  // augmentation t -> 1
    a->residue_map = chi;
  }
  if (n == 1) {
    a->known_local = dom.is_field();
    if (dom.is_field()) a->idempotent_basis = std::vector<long>{0};
  } else if (dom.kind == CoefficientDomain::Kind::Fp) {
    long q = n;  // local exactly when the order is a power of the characteristic
    while (q % static_cast<long>(a->dom.p) == 0) q /= static_cast<long>(a->dom.p);
    a->known_local = q == 1;
  }
  a->validate();
  return a;
}

AlgebraPtr make_product_fields(CoefficientDomain field_dom, long m) {
  if (!field_dom.is_field()) throw InputError("product of fields needs a field domain");
  if (m < 1) throw InputError("product of fields needs >= 1 factors");
  auto a = std::make_shared<Algebra>(field_dom, m,
                                     field_dom.name() + "^" + std::to_string(m));
  for (long i = 0; i < m; ++i) {
    ExactMatrix L(field_dom, m, m);
    L.set(i, i, Scalar(1));
    a->lmul.push_back(L);
  }
  for (long i = 0; i < m; ++i) a->unit.set(i, 0, Scalar(1));
  a->frobenius = ExactMatrix::identity(field_dom, m);
  a->known_local = m == 1;
  std::vector<long> idem(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) idem[static_cast<size_t>(i)] = i;
  a->idempotent_basis = std::move(idem);
  a->validate();
  return a;
}

bool algebras_equal(const Algebra& a, const Algebra& b) {
  if (!(a.dom == b.dom) || a.dim != b.dim) return false;
  for (long i = 0; i < a.dim; ++i)
    if (!(a.lmul[static_cast<size_t>(i)] == b.lmul[static_cast<size_t>(i)])) return false;
  return a.unit == b.unit;
}

}  // namespace gorhom
