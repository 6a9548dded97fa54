#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gorhom/linalg.hpp"

using namespace gorhom;

namespace {

const CoefficientDomain Z = CoefficientDomain::integers();
const CoefficientDomain Q = CoefficientDomain::rationals();

ExactMatrix zmat(long r, long c, const std::vector<long>& v) { return ExactMatrix::from_ints(Z, r, c, v); }

// Independent oracle: product d1*...*dk equals the gcd of all k x k minors.
// Laplace expansion determinants; fine for the <= 4 x 4 sizes used here.
mpz_class minor_det(const ExactMatrix& A, const std::vector<long>& rows, const std::vector<long>& cols) {
  size_t n = rows.size();
  if (n == 1) return A.at(rows[0], cols[0]).get_num();
  mpz_class acc = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<long> sub_rows(rows.begin() + 1, rows.end());
    std::vector<long> sub_cols;
    for (size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    mpz_class term = A.at(rows[0], cols[j]).get_num() * minor_det(A, sub_rows, sub_cols);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

void subsets_of(long n, long k, std::vector<std::vector<long>>& out) {
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long start) {
    if (static_cast<long>(cur.size()) == k) { out.push_back(cur); return; }
    for (long i = start; i <= n - (k - static_cast<long>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<mpz_class> minor_gcd_invariants(const ExactMatrix& A) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (long k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
    std::vector<std::vector<long>> rsets, csets;
    subsets_of(A.rows(), k, rsets);
    subsets_of(A.cols(), k, csets);
    mpz_class g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        mpz_class d = abs(minor_det(A, rs, cs));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Brute-force F2 oracle: enumerate the whole domain.
struct F2Oracle {
  long rank, nullity;
  std::vector<std::vector<int>> image;  // all reachable values of A x
};
F2Oracle f2_enumerate(const ExactMatrix& A) {
  long n = A.cols(), m = A.rows();
  F2Oracle o{0, 0, {}};
  long kercount = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> y(m, 0);
    for (long j = 0; j < n; ++j)
      if (mask & (1L << j))
        for (long i = 0; i < m; ++i) y[i] = (y[i] + static_cast<int>(A.at(i, j).get_num().get_si())) % 2;
    if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; })) ++kercount;
    if (std::find(o.image.begin(), o.image.end(), y) == o.image.end()) o.image.push_back(y);
  }
  long img = static_cast<long>(o.image.size());
  o.rank = 0;
  while ((1L << o.rank) < img) ++o.rank;
  o.nullity = 0;
  while ((1L << o.nullity) < kercount) ++o.nullity;
  return o;
}

ExactMatrix random_matrix(const CoefficientDomain& d, long r, long c, std::mt19937& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  ExactMatrix m(d, r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.set(i, j, d.canon(Scalar(entry(rng))));
  return m;
}

}  // namespace

TEST_CASE("canonical scalar forms") {
  auto F5 = CoefficientDomain::fp(5);
  CHECK(F5.parse("7") == Scalar(2));
  CHECK(F5.parse("-1") == Scalar(4));
  auto F3 = CoefficientDomain::fp(3);
  CHECK(F3.parse("1/2") == Scalar(2));  // 2 is self-inverse mod 3
  CHECK(Q.parse("-4/8").get_str() == "-1/2");
  CHECK(Q.parse("3/-6").get_str() == "-1/2");  // denominator made positive
  CHECK_THROWS_AS(Z.parse("1/2"), InputError);
  CHECK_THROWS_AS(CoefficientDomain::fp(4), InputError);
  CHECK_THROWS_AS(CoefficientDomain::fp(1), InputError);
}

TEST_CASE("rank, kernel and image over Q") {
  auto A = ExactMatrix::from_strings(Q, 2, 2, {"1", "2", "2", "4"});
  auto rp = rank_profile(A);
  CHECK(rp.rank == 1);
  CHECK(rp.kernel.cols() == 1);
  CHECK(rp.kernel.at(0, 0) == Scalar(-2));
  CHECK(rp.kernel.at(1, 0) == Scalar(1));
  CHECK((A * rp.kernel).is_zero());
  CHECK(rp.image.cols() == 1);
  CHECK((rp.trans * A == rp.rref));
}

TEST_CASE("rank over F2 matches exhaustive enumeration") {
  std::mt19937 rng(20260822);
  auto F2 = CoefficientDomain::fp(2);
  std::uniform_int_distribution<long> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    long m = dim(rng), n = dim(rng);
    ExactMatrix A(F2, m, n);
    std::uniform_int_distribution<int> bit(0, 1);
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < n; ++j) A.set(i, j, Scalar(bit(rng)));
    auto rp = rank_profile(A);
    auto oracle = f2_enumerate(A);
    CHECK(rp.rank == oracle.rank);
    CHECK(rp.kernel.cols() == oracle.nullity);
    CHECK((A * rp.kernel).is_zero());
  }
}

TEST_CASE("smith normal form hand table") {
  struct Case {
    long r, c;
    std::vector<long> entries;
    std::vector<long> want;
  };
  // Reduced by hand; each case is also re-checked against the minor-gcd oracle below.
  std::vector<Case> table = {
      {1, 1, {0}, {}},
      {1, 1, {5}, {5}},
      {2, 2, {2, 4, 6, 8}, {2, 4}},
      {2, 2, {1, 2, 3, 4}, {1, 2}},
      {2, 2, {2, 0, 0, 3}, {1, 6}},
      {2, 2, {6, 0, 0, 10}, {2, 30}},
      {3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16}, {2, 6, 12}},
      {3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 4}, {1, 2, 4}},
      {2, 2, {0, 0, 0, 0}, {}},
      {2, 2, {4, 6, 6, 9}, {1}},
  };
  for (const auto& tc : table) {
    CAPTURE(tc.entries);
    auto A = zmat(tc.r, tc.c, tc.entries);
    auto s = smith_normal_form(A);
    REQUIRE(s.invariants.size() == tc.want.size());
    for (size_t i = 0; i < tc.want.size(); ++i) CHECK(s.invariants[i] == tc.want[i]);
    CHECK(s.U * A * s.V == s.D);
    auto oracle = minor_gcd_invariants(A);
    REQUIRE(oracle.size() == s.invariants.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == s.invariants[i]);
  }
}

TEST_CASE("smith normal form properties on random integer matrices") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<long> dim(0, 5);
  for (int trial = 0; trial < 80; ++trial) {
    long m = dim(rng), n = dim(rng);
    auto A = random_matrix(Z, m, n, rng);
    auto s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    // D diagonal, nonnegative, divisibility chain
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < n; ++j)
        if (i != j) CHECK(s.D.at(i, j) == 0);
    for (size_t i = 0; i < s.invariants.size(); ++i) {
      CHECK(s.invariants[i] > 0);
      if (i + 1 < s.invariants.size()) CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    // unimodularity: integral inverses exist
    CHECK(s.U * s.Uinv == ExactMatrix::identity(Z, m));
    auto vinv = LinearSolver(s.V).solve(ExactMatrix::identity(Z, n));
    REQUIRE(vinv.has_value());
    CHECK(s.V * *vinv == ExactMatrix::identity(Z, n));
    if (m > 0 && m <= 4 && n > 0 && n <= 4) {
      auto oracle = minor_gcd_invariants(A);
      REQUIRE(oracle.size() == s.invariants.size());
      for (size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == s.invariants[i]);
    }
    // kernel is exact: A k = 0 and full nullity
    auto K = kernel_basis(A);
    CHECK(K.cols() == n - s.rank);
    if (K.cols() > 0) CHECK((A * K).is_zero());
  }
}

TEST_CASE("solve over Z with certificates") {
  SUBCASE("divisibility failure") {
    auto A = zmat(1, 1, {2});
    auto b = zmat(1, 1, {3});
    auto res = solve_linear(A, b);
    REQUIRE(!res.ok());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->kind == SolveWitness::Kind::Divisibility);
    CHECK(res.witness->verify(A, b));
  }
  SUBCASE("rank failure") {
    auto A = zmat(2, 1, {1, 1});
    auto b = zmat(2, 1, {0, 1});
    auto res = solve_linear(A, b);
    REQUIRE(!res.ok());
    CHECK(res.witness->kind == SolveWitness::Kind::LeftKernel);
    CHECK(res.witness->verify(A, b));
  }
  SUBCASE("solvable system returns an exact solution") {
    auto A = zmat(2, 3, {2, 4, 0, 0, 6, 3});
    auto b = zmat(2, 1, {6, 9});
    auto res = solve_linear(A, b);
    REQUIRE(res.ok());
    CHECK(A * *res.solution == b);
  }
}

TEST_CASE("solve over fields with certificates") {
  auto F2 = CoefficientDomain::fp(2);
  auto A = ExactMatrix::from_ints(F2, 2, 2, {1, 1, 1, 1});
  SUBCASE("inconsistent") {
    auto b = ExactMatrix::from_ints(F2, 2, 1, {1, 0});
    auto res = solve_linear(A, b);
    REQUIRE(!res.ok());
    CHECK(res.witness->kind == SolveWitness::Kind::LeftKernel);
    CHECK(res.witness->verify(A, b));
  }
  SUBCASE("solvable") {
    auto b = ExactMatrix::from_ints(F2, 2, 1, {1, 1});
    auto res = solve_linear(A, b);
    REQUIRE(res.ok());
    CHECK(A * *res.solution == b);
  }
}

TEST_CASE("random solve round trips") {
  std::mt19937 rng(1357);
  std::uniform_int_distribution<long> dim(1, 5);
  for (const auto& d : {Q, CoefficientDomain::fp(3), Z}) {
    for (int trial = 0; trial < 40; ++trial) {
      long m = dim(rng), n = dim(rng);
      auto A = random_matrix(d, m, n, rng);
      auto x = random_matrix(d, n, 1, rng);
      auto b = A * x;
      auto res = solve_linear(A, b);
      REQUIRE(res.ok());
      CHECK(A * *res.solution == b);
    }
  }
}

TEST_CASE("witnesses verify on random inconsistent systems") {
  std::mt19937 rng(24680);
  std::uniform_int_distribution<long> dim(1, 4);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 30; ++trial) {
    long m = dim(rng) + 1, n = dim(rng);
    auto A = random_matrix(Z, m, n, rng);
    auto b = random_matrix(Z, m, 1, rng);
    auto res = solve_linear(A, b);
    if (res.ok()) {
      CHECK(A * *res.solution == b);
    } else {
      CHECK(res.witness->verify(A, b));
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("empty shapes") {
  auto A = ExactMatrix(Z, 0, 3);
  auto s = smith_normal_form(A);
  CHECK(s.rank == 0);
  CHECK(kernel_basis(A) == ExactMatrix::identity(Z, 3));
  auto res = solve_linear(A, ExactMatrix(Z, 0, 1));
  REQUIRE(res.ok());
  CHECK(res.solution->rows() == 3);
  CHECK(res.solution->is_zero());

  auto B = ExactMatrix(Q, 3, 0);
  CHECK(rank_profile(B).rank == 0);
  CHECK(kernel_basis(B).cols() == 0);
}

TEST_CASE("column basis spans the same lattice") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<long> dim(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    long m = dim(rng), n = dim(rng) + 1;
    auto A = random_matrix(Z, m, n, rng);
    auto B = column_basis(A);
    CHECK(rank_of(B) == B.cols());
    CHECK(in_span(B, A));
    if (B.cols() > 0) CHECK(in_span(A, B));
  }
}
