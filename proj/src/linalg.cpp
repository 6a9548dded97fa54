#include "gorhom/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gorhom {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

mpz_class mod_p(const mpz_class& a, long p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

CoefficientDomain CoefficientDomain::fp(long p) {
  if (!is_prime(p)) throw InputError("F_p modulus must be prime, got " + std::to_string(p));
  return {Kind::Fp, p};
}

Scalar CoefficientDomain::canon(const Scalar& x) const {
  Scalar t = x;  // raw num/den constructions may be uncanonical
  t.canonicalize();
  switch (kind) {
    case Kind::Rationals:
      return t;
    case Kind::Integers:
      if (t.get_den() != 1) throw InputError("non-integral scalar in Z domain: " + t.get_str());
      return t;
    case Kind::Fp: {
      if (t.get_den() != 1) {
        // a/b mod p with b invertible
        mpz_class den = mod_p(t.get_den(), p);
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
          throw InputError("denominator not invertible mod p: " + t.get_str());
        return Scalar(mod_p(t.get_num() * dinv, p));
      }
      return Scalar(mod_p(t.get_num(), p));
    }
  }
  throw InternalError("bad domain kind");
}

Scalar CoefficientDomain::inv(const Scalar& a) const {
  if (!is_field()) throw InternalError("inverse requested over Z");
  if (a == 0) throw InternalError("inverse of zero");
  if (kind == Kind::Rationals) return Scalar(1) / a;
  mpz_class ai;
  if (mpz_invert(ai.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
    throw InternalError("non-invertible element mod p");
  return Scalar(ai);
}

Scalar CoefficientDomain::parse(const std::string& s) const {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad scalar literal: '" + s + "'");
  q.canonicalize();
  return canon(q);
}

std::string CoefficientDomain::print(const Scalar& x) const { return x.get_str(); }

std::string CoefficientDomain::name() const {
  switch (kind) {
    case Kind::Fp: return "F" + std::to_string(p);
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
  }
  return "?";
}

ExactMatrix::ExactMatrix(CoefficientDomain d, long rows, long cols)
    : dom_(d), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), Scalar(0)) {
  if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(CoefficientDomain d, long n) {
  ExactMatrix m(d, n, n);
  for (long i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

ExactMatrix ExactMatrix::from_strings(CoefficientDomain d, long rows, long cols,
                                      const std::vector<std::string>& row_major) {
  if (static_cast<long>(row_major.size()) != rows * cols)
    throw InputError("matrix literal has " + std::to_string(row_major.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  ExactMatrix m(d, rows, cols);
  for (long i = 0; i < rows * cols; ++i) m.e_[i] = d.parse(row_major[i]);
  return m;
}

ExactMatrix ExactMatrix::from_ints(CoefficientDomain d, long rows, long cols,
                                   const std::vector<long>& row_major) {
  if (static_cast<long>(row_major.size()) != rows * cols)
    throw InputError("matrix literal size mismatch");
  ExactMatrix m(d, rows, cols);
  for (long i = 0; i < rows * cols; ++i) m.e_[i] = d.canon(Scalar(row_major[i]));
  return m;
}

ExactMatrix ExactMatrix::from_ints(CoefficientDomain d, const std::vector<std::vector<long>>& rows) {
  long nr = static_cast<long>(rows.size());
  long nc = nr == 0 ? 0 : static_cast<long>(rows[0].size());
  ExactMatrix m(d, nr, nc);
  for (long i = 0; i < nr; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != nc)
      throw InputError("ragged matrix literal");
    for (long j = 0; j < nc; ++j)
      m.set(i, j, Scalar(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  }
  return m;
}

const Scalar& ExactMatrix::at(long r, long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InternalError("matrix index out of range");
  return e_[static_cast<size_t>(r * cols_ + c)];
}

void ExactMatrix::set(long r, long c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InternalError("matrix index out of range");
  e_[static_cast<size_t>(r * cols_ + c)] = dom_.canon(v);
}

void ExactMatrix::paste(long r0, long c0, const ExactMatrix& blk) {
  if (!(blk.domain() == dom_)) throw InternalError("paste domain mismatch");
  if (r0 < 0 || c0 < 0 || r0 + blk.rows() > rows_ || c0 + blk.cols() > cols_)
    throw InternalError("paste block out of range");
  for (long i = 0; i < blk.rows(); ++i)
    for (long j = 0; j < blk.cols(); ++j) set(r0 + i, c0 + j, blk.at(i, j));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& x) { return x == 0; });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return dom_ == o.dom_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (!(dom_ == o.dom_)) throw InternalError("domain mismatch in product");
  if (cols_ != o.rows_) throw InternalError("shape mismatch in product");
  ExactMatrix r(dom_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b == 0) continue;
        r.e_[static_cast<size_t>(i * r.cols_ + j)] += a * b;
      }
    }
  for (auto& x : r.e_) x = dom_.canon(x);
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (!(dom_ == o.dom_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw InternalError("shape mismatch in sum");
  ExactMatrix r(dom_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.canon(e_[i] + o.e_[i]);
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.negated(); }

ExactMatrix ExactMatrix::negated() const {
  ExactMatrix r(dom_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.canon(-e_[i]);
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
  ExactMatrix r(dom_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.canon(e_[i] * s);
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(dom_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(j * rows_ + i)] = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::col(long c) const { return cols_range(c, 1); }

ExactMatrix ExactMatrix::cols_range(long first, long count) const {
  if (first < 0 || count < 0 || first + count > cols_) throw InternalError("column range out of bounds");
  ExactMatrix r(dom_, rows_, count);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
  return r;
}

std::vector<std::string> ExactMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(e_.size());
  for (const auto& x : e_) out.push_back(x.get_str());
  return out;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain() == b.domain()) || a.rows() != b.rows()) throw InternalError("hstack mismatch");
  ExactMatrix r(a.domain(), a.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (long j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain() == b.domain()) || a.cols() != b.cols()) throw InternalError("vstack mismatch");
  ExactMatrix r(a.domain(), a.rows() + b.rows(), a.cols());
  for (long j = 0; j < a.cols(); ++j) {
    for (long i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
    for (long i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
  }
  return r;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain() == b.domain())) throw InternalError("block_diag domain mismatch");
  ExactMatrix r(a.domain(), a.rows() + b.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (long i = 0; i < b.rows(); ++i)
    for (long j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return r;
}

ExactMatrix block_diag(CoefficientDomain d, const std::vector<ExactMatrix>& blocks) {
  ExactMatrix r(d, 0, 0);
  for (const ExactMatrix& b : blocks) r = block_diag(r, b);
  return r;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain() == b.domain())) throw InternalError("kron domain mismatch");
  ExactMatrix r(a.domain(), a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s == 0) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          r.set(i * b.rows() + k, j * b.cols() + l, s * b.at(k, l));
    }
  return r;
}

RankProfile rank_profile(const ExactMatrix& A) {
  const CoefficientDomain& d = A.domain();
  if (!d.is_field()) throw InternalError("rank_profile needs a field domain");
  RankProfile out;
  ExactMatrix R = A;
  ExactMatrix E = ExactMatrix::identity(d, A.rows());
  long r = 0;
  for (long c = 0; c < A.cols() && r < A.rows(); ++c) {
    long piv = -1;
    for (long i = r; i < A.rows(); ++i)
      if (!(R.at(i, c) == 0)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) {
      for (long j = 0; j < R.cols(); ++j) { Scalar t = R.at(r, j); R.set(r, j, R.at(piv, j)); R.set(piv, j, t); }
      for (long j = 0; j < E.cols(); ++j) { Scalar t = E.at(r, j); E.set(r, j, E.at(piv, j)); E.set(piv, j, t); }
    }
    Scalar s = d.inv(R.at(r, c));
    for (long j = 0; j < R.cols(); ++j) R.set(r, j, d.mul(R.at(r, j), s));
    for (long j = 0; j < E.cols(); ++j) E.set(r, j, d.mul(E.at(r, j), s));
    for (long i = 0; i < A.rows(); ++i) {
      if (i == r) continue;
      Scalar f = R.at(i, c);
      if (f == 0) continue;
      for (long j = 0; j < R.cols(); ++j) R.set(i, j, d.sub(R.at(i, j), d.mul(f, R.at(r, j))));
      for (long j = 0; j < E.cols(); ++j) E.set(i, j, d.sub(E.at(i, j), d.mul(f, E.at(r, j))));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = R;
  out.trans = E;
  for (long c = 0, k = 0; c < A.cols(); ++c) {
    if (k < static_cast<long>(out.pivot_cols.size()) && out.pivot_cols[k] == c) { ++k; continue; }
    out.free_cols.push_back(c);
  }
  // canonical kernel basis: unit at the free column, pivot rows read off the rref
  out.kernel = ExactMatrix(d, A.cols(), static_cast<long>(out.free_cols.size()));
  for (long k = 0; k < static_cast<long>(out.free_cols.size()); ++k) {
    long f = out.free_cols[k];
    out.kernel.set(f, k, Scalar(1));
    for (long j = 0; j < r; ++j) out.kernel.set(out.pivot_cols[j], k, d.neg(R.at(j, f)));
  }
  out.image = ExactMatrix(d, A.rows(), r);
  for (long j = 0; j < r; ++j)
    for (long i = 0; i < A.rows(); ++i) out.image.set(i, j, A.at(i, out.pivot_cols[j]));
  return out;
}

namespace {

struct SmithWork {
  ExactMatrix A, U, Uinv, V;

  // row_i -= q * row_t  on A and U; inverse op on Uinv columns
  void row_sub(long i, long t, const mpz_class& q) {
    Scalar qs(q);
    for (long j = 0; j < A.cols(); ++j) A.set(i, j, A.at(i, j) - qs * A.at(t, j));
    for (long j = 0; j < U.cols(); ++j) U.set(i, j, U.at(i, j) - qs * U.at(t, j));
    for (long r = 0; r < Uinv.rows(); ++r) Uinv.set(r, t, Uinv.at(r, t) + qs * Uinv.at(r, i));
  }
  void col_sub(long j, long t, const mpz_class& q) {
    Scalar qs(q);
    for (long i = 0; i < A.rows(); ++i) A.set(i, j, A.at(i, j) - qs * A.at(i, t));
    for (long i = 0; i < V.rows(); ++i) V.set(i, j, V.at(i, j) - qs * V.at(i, t));
  }
  void row_swap(long i, long t) {
    if (i == t) return;
    for (long j = 0; j < A.cols(); ++j) { Scalar tmp = A.at(i, j); A.set(i, j, A.at(t, j)); A.set(t, j, tmp); }
    for (long j = 0; j < U.cols(); ++j) { Scalar tmp = U.at(i, j); U.set(i, j, U.at(t, j)); U.set(t, j, tmp); }
    for (long r = 0; r < Uinv.rows(); ++r) { Scalar tmp = Uinv.at(r, i); Uinv.set(r, i, Uinv.at(r, t)); Uinv.set(r, t, tmp); }
  }
  void col_swap(long j, long t) {
    if (j == t) return;
    for (long i = 0; i < A.rows(); ++i) { Scalar tmp = A.at(i, j); A.set(i, j, A.at(i, t)); A.set(i, t, tmp); }
    for (long i = 0; i < V.rows(); ++i) { Scalar tmp = V.at(i, j); V.set(i, j, V.at(i, t)); V.set(i, t, tmp); }
  }
  void row_negate(long i) {
    for (long j = 0; j < A.cols(); ++j) A.set(i, j, -A.at(i, j));
    for (long j = 0; j < U.cols(); ++j) U.set(i, j, -U.at(i, j));
    for (long r = 0; r < Uinv.rows(); ++r) Uinv.set(r, i, -Uinv.at(r, i));
  }
  void row_add(long t, long i) {  // row_t += row_i
    for (long j = 0; j < A.cols(); ++j) A.set(t, j, A.at(t, j) + A.at(i, j));
    for (long j = 0; j < U.cols(); ++j) U.set(t, j, U.at(t, j) + U.at(i, j));
    for (long r = 0; r < Uinv.rows(); ++r) Uinv.set(r, i, Uinv.at(r, i) - Uinv.at(r, t));
  }

  // smallest |a_ij| != 0 in the submatrix from (t,t); ties: lowest row, then column
  bool find_pivot(long t, long& pr, long& pc) const {
    bool found = false;
    mpz_class best;
    for (long i = t; i < A.rows(); ++i)
      for (long j = t; j < A.cols(); ++j) {
        const Scalar& x = A.at(i, j);
        if (x == 0) continue;
        mpz_class v = abs(x.get_num());
        if (!found || v < best) { found = true; best = v; pr = i; pc = j; }
      }
    return found;
  }
};

}  // namespace

SmithResult smith_normal_form(const ExactMatrix& A0) {
  if (!(A0.domain() == CoefficientDomain::integers()))
    throw InternalError("smith_normal_form needs the Z domain");
  const CoefficientDomain Z = CoefficientDomain::integers();
  const long m = A0.rows(), n = A0.cols();
  SmithWork w{A0, ExactMatrix::identity(Z, m), ExactMatrix::identity(Z, m), ExactMatrix::identity(Z, n)};

  long t = 0;
  while (t < std::min(m, n)) {
    long pr = 0, pc = 0;
    if (!w.find_pivot(t, pr, pc)) break;
    w.row_swap(pr, t);
    w.col_swap(pc, t);
    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t below/above using division with remainder
      for (long i = t + 1; i < m; ++i) {
        if (w.A.at(i, t) == 0) continue;
        mpz_class q = w.A.at(i, t).get_num() / w.A.at(t, t).get_num();  // trunc toward zero
        w.row_sub(i, t, q);
        if (!(w.A.at(i, t) == 0)) {  // remainder is strictly smaller; promote it
          w.row_swap(i, t);
          clean = false;
        }
      }
      for (long j = t + 1; j < n; ++j) {
        if (w.A.at(t, j) == 0) continue;
        mpz_class q = w.A.at(t, j).get_num() / w.A.at(t, t).get_num();
        w.col_sub(j, t, q);
        if (!(w.A.at(t, j) == 0)) {
          w.col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility fix: pivot must divide every remaining entry
      for (long i = t + 1; i < m && clean; ++i)
        for (long j = t + 1; j < n && clean; ++j) {
          if (w.A.at(i, j).get_num() % w.A.at(t, t).get_num() != 0) {
            w.row_add(t, i);
            clean = false;
          }
        }
    }
    if (w.A.at(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SmithResult out;
  out.U = w.U;
  out.Uinv = w.Uinv;
  out.V = w.V;
  out.D = w.A;
  out.rank = t;
  for (long i = 0; i < t; ++i) out.invariants.push_back(w.A.at(i, i).get_num());
  if (!(out.U * A0 * out.V == out.D)) throw InternalError("SNF factor identity failed");
  if (!(out.U * out.Uinv == ExactMatrix::identity(CoefficientDomain::integers(), A0.rows())))
    throw InternalError("SNF inverse tracking failed");
  return out;
}

LinearSolver::LinearSolver(ExactMatrix A) : a_(std::move(A)) {
  if (a_.domain().is_field()) {
    rp_ = rank_profile(a_);
    rank_ = rp_->rank;
    kernel_ = rp_->kernel;
  } else {
    snf_ = smith_normal_form(a_);
    rank_ = snf_->rank;
    // kernel lattice basis: columns of V past the nonzero diagonal
    kernel_ = snf_->V.cols_range(rank_, a_.cols() - rank_);
  }
}

SolveResult LinearSolver::solve_with_witness(const ExactMatrix& B) const {
  if (B.rows() != a_.rows()) throw InternalError("solve rhs shape mismatch");
  const CoefficientDomain& d = a_.domain();
  SolveResult res;
  ExactMatrix X(d, a_.cols(), B.cols());
  if (rp_) {
    ExactMatrix C = rp_->trans * B;  // reduced rhs
    for (long col = 0; col < B.cols(); ++col) {
      for (long i = rank_; i < a_.rows(); ++i) {
        if (!(C.at(i, col) == 0)) {
          SolveWitness wtn;
          wtn.kind = SolveWitness::Kind::LeftKernel;
          wtn.rhs_column = col;
          wtn.y = ExactMatrix(CoefficientDomain::rationals(), a_.rows(), 1);
          for (long j = 0; j < a_.rows(); ++j) wtn.y.set(j, 0, rp_->trans.at(i, j));
          res.witness = wtn;
          return res;
        }
      }
      for (long j = 0; j < rank_; ++j) X.set(rp_->pivot_cols[j], col, C.at(j, col));
    }
  } else {
    ExactMatrix C = snf_->U * B;
    for (long col = 0; col < B.cols(); ++col) {
      ExactMatrix z(d, a_.cols(), 1);
      for (long i = 0; i < a_.rows(); ++i) {
        const Scalar& c = C.at(i, col);
        if (i < rank_) {
          mpz_class di = snf_->D.at(i, i).get_num();
          if (c.get_num() % di != 0) {
            SolveWitness wtn;
            wtn.kind = SolveWitness::Kind::Divisibility;
            wtn.rhs_column = col;
            wtn.y = ExactMatrix(CoefficientDomain::rationals(), a_.rows(), 1);
            for (long j = 0; j < a_.rows(); ++j)
              wtn.y.set(j, 0, Scalar(snf_->U.at(i, j).get_num(), di));
            res.witness = wtn;
            return res;
          }
          if (i < a_.cols()) z.set(i, 0, Scalar(c.get_num() / di));
        } else if (!(c == 0)) {
          SolveWitness wtn;
          wtn.kind = SolveWitness::Kind::LeftKernel;
          wtn.rhs_column = col;
          wtn.y = ExactMatrix(CoefficientDomain::rationals(), a_.rows(), 1);
          for (long j = 0; j < a_.rows(); ++j) wtn.y.set(j, 0, snf_->U.at(i, j));
          res.witness = wtn;
          return res;
        }
      }
      ExactMatrix x = snf_->V * z;
      for (long i = 0; i < a_.cols(); ++i) X.set(i, col, x.at(i, 0));
    }
  }
  res.solution = X;
  return res;
}

std::optional<ExactMatrix> LinearSolver::solve(const ExactMatrix& B) const {
  return solve_with_witness(B).solution;
}

bool SolveWitness::verify(const ExactMatrix& A, const ExactMatrix& B) const {
  if (A.domain().is_field()) {
    // witness entries are field elements; y^T A = 0 only holds in the field itself
    ExactMatrix yf(A.domain(), 1, A.rows());
    for (long i = 0; i < A.rows(); ++i) yf.set(0, i, y.at(i, 0));
    ExactMatrix bf(A.domain(), B.rows(), 1);
    for (long i = 0; i < B.rows(); ++i) bf.set(i, 0, B.at(i, rhs_column));
    ExactMatrix ya = yf * A;
    ExactMatrix yb = yf * bf;
    return ya.is_zero() && !(yb.at(0, 0) == 0);
  }
  // over Z the witness is rational: lift everything to Q
  ExactMatrix yr = y.transpose();  // 1 x rows
  const CoefficientDomain Q = CoefficientDomain::rationals();
  ExactMatrix Aq(Q, A.rows(), A.cols()), bq(Q, B.rows(), 1);
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j) Aq.set(i, j, A.at(i, j));
  for (long i = 0; i < B.rows(); ++i) bq.set(i, 0, B.at(i, rhs_column));
  ExactMatrix ya = yr * Aq;
  ExactMatrix yb = yr * bq;
  if (kind == Kind::LeftKernel) return ya.is_zero() && !(yb.at(0, 0) == 0);
  for (long j = 0; j < ya.cols(); ++j)
    if (ya.at(0, j).get_den() != 1) return false;
  return yb.at(0, 0).get_den() != 1;
}

SolveResult solve_linear(const ExactMatrix& A, const ExactMatrix& b) {
  return LinearSolver(A).solve_with_witness(b);
}

ExactMatrix kernel_basis(const ExactMatrix& A) { return LinearSolver(A).kernel(); }

long rank_of(const ExactMatrix& A) {
  if (A.domain().is_field()) return rank_profile(A).rank;
  return smith_normal_form(A).rank;
}

bool in_span(const ExactMatrix& span_cols, const ExactMatrix& vectors) {
  return LinearSolver(span_cols).solve(vectors).has_value();
}

ExactMatrix column_basis(const ExactMatrix& M) {
  if (M.domain().is_field()) return rank_profile(M).image;
  SmithResult s = smith_normal_form(M);
  ExactMatrix out(M.domain(), M.rows(), s.rank);
  for (long k = 0; k < s.rank; ++k) {
    Scalar dk = s.D.at(k, k);
    for (long i = 0; i < M.rows(); ++i) out.set(i, k, s.Uinv.at(i, k) * dk);
  }
  return out;
}

}  // namespace gorhom
