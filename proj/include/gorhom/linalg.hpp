#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorhom {

using Scalar = mpq_class;

// Raised on malformed user input (bad JSON, shape mismatches, invalid fixtures).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal postcondition fails; always a bug or a broken fixture.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Exact coefficient domain: F_p (p prime), Q, or Z.
/// All scalars are carried as mpq_class; the domain fixes the canonical form
/// (F_p: integer in [0,p); Q: lowest terms, positive denominator; Z: integral).
struct CoefficientDomain {
  enum class Kind { Fp, Rationals, Integers };

  Kind kind = Kind::Rationals;
  long p = 0;  // modulus, Fp only

  static CoefficientDomain fp(long p);
  static CoefficientDomain rationals() { return {Kind::Rationals, 0}; }
  static CoefficientDomain integers() { return {Kind::Integers, 0}; }

  bool is_field() const { return kind != Kind::Integers; }
  bool operator==(const CoefficientDomain&) const = default;

  Scalar canon(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
  Scalar neg(const Scalar& a) const { return canon(-a); }
  Scalar inv(const Scalar& a) const;  // fields only; a nonzero

  Scalar parse(const std::string& s) const;
  std::string print(const Scalar& x) const;
  std::string name() const;
};

/// Dense matrix with exact entries, kept canonical for its domain.
/// Rows index the target coordinates, columns the source ones, so composition
/// of maps is plain matrix product.
class ExactMatrix {
 public:
  ExactMatrix() : dom_(CoefficientDomain::rationals()) {}
  ExactMatrix(CoefficientDomain d, long rows, long cols);

  static ExactMatrix identity(CoefficientDomain d, long n);
  static ExactMatrix from_strings(CoefficientDomain d, long rows, long cols,
                                  const std::vector<std::string>& row_major);
  static ExactMatrix from_ints(CoefficientDomain d, long rows, long cols,
                               const std::vector<long>& row_major);
  static ExactMatrix from_ints(CoefficientDomain d, const std::vector<std::vector<long>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const CoefficientDomain& domain() const { return dom_; }

  const Scalar& at(long r, long c) const;
  void set(long r, long c, const Scalar& v);
  void paste(long r0, long c0, const ExactMatrix& blk);  // overwrite a sub-block

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix negated() const;
  ExactMatrix scaled(const Scalar& s) const;
  ExactMatrix transpose() const;

  ExactMatrix col(long c) const;
  ExactMatrix cols_range(long first, long count) const;

  std::vector<std::string> to_strings() const;  // row-major, canonical

 private:
  CoefficientDomain dom_;
  long rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diag(CoefficientDomain d, const std::vector<ExactMatrix>& blocks);
// Kronecker product; index (i,j) of the product maps to i*b.rows()+j  etc.,
// matching the generator order used for tensor products of modules.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Reduced row echelon data over a field:  rref = trans * A,  trans invertible.
struct RankProfile {
  long rank = 0;
  ExactMatrix rref;
  ExactMatrix trans;
  std::vector<long> pivot_cols;
  std::vector<long> free_cols;
  ExactMatrix kernel;  // cols x nullity; canonical basis (unit at free column)
  ExactMatrix image;   // rows x rank; the pivot columns of the original matrix
};
RankProfile rank_profile(const ExactMatrix& A);

/// Smith normal form over Z:  U * A * V = D,  U and V unimodular, D diagonal
/// with nonnegative entries and d1 | d2 | ... | dk.
/// Pivot selection is smallest nonzero absolute value, ties broken by lowest
/// row then lowest column, so the reduction is reproducible.
struct SmithResult {
  ExactMatrix U, Uinv, V, D;
  long rank = 0;
  std::vector<mpz_class> invariants;  // nonzero diagonal, divisibility order
};
SmithResult smith_normal_form(const ExactMatrix& A);

/// Inconsistency certificate for a linear system A x = b.
/// LeftKernel: y^T A = 0 and y^T b != 0 (any domain).
/// Divisibility (Z only): y^T A integral but y^T b not an integer.
struct SolveWitness {
  enum class Kind { LeftKernel, Divisibility };
  Kind kind = Kind::LeftKernel;
  ExactMatrix y;        // rows x 1, rational entries
  long rhs_column = 0;  // which column of the right-hand side failed
  bool verify(const ExactMatrix& A, const ExactMatrix& B) const;
};

struct SolveResult {
  std::optional<ExactMatrix> solution;  // A.cols x B.cols
  std::optional<SolveWitness> witness;
  bool ok() const { return solution.has_value(); }
};

/// Factors A once (RREF over fields, SNF over Z) and answers many solves.
class LinearSolver {
 public:
  explicit LinearSolver(ExactMatrix A);

  // Solve A x = b columnwise; empty optional if any column is unsolvable
  // (over Z this means: no *integral* solution).
  std::optional<ExactMatrix> solve(const ExactMatrix& B) const;
  SolveResult solve_with_witness(const ExactMatrix& B) const;

  // Basis of {x : A x = 0}; over Z a lattice basis of the integer kernel.
  const ExactMatrix& kernel() const { return kernel_; }
  long rank() const { return rank_; }

 private:
  ExactMatrix a_;
  long rank_ = 0;
  ExactMatrix kernel_;
  std::optional<RankProfile> rp_;   // fields
  std::optional<SmithResult> snf_;  // integers
};

SolveResult solve_linear(const ExactMatrix& A, const ExactMatrix& b);
ExactMatrix kernel_basis(const ExactMatrix& A);
long rank_of(const ExactMatrix& A);
bool in_span(const ExactMatrix& span_cols, const ExactMatrix& vectors);

/// Basis for the span of M's columns: a vector-space basis over fields, a
/// lattice basis over Z (so membership tests are exact integral ones).
ExactMatrix column_basis(const ExactMatrix& M);

}  // namespace gorhom
