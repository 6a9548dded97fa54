// Acceptance gate: one line per criterion, nonzero exit when any of them
// fails or the whole run blows its time budget.  Randomized sections use a
// pinned seed so every run certifies the identical instance set.
#include <gorhom/verify.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace gorhom;

namespace {

constexpr double kBudgetTensor = 10.0;
constexpr double kBudgetBalance = 5.0;
constexpr double kBudgetTotal = 60.0;
constexpr unsigned kSeed = 20240817;

struct Line {
  bool pass = false;
  double secs = 0;
  std::string label;
  std::string detail;  // shown when failing
};

double now_minus(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long ri(std::mt19937& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

ExactMatrix random_invertible(const CoefficientDomain& d, long n, std::mt19937& g) {
  ExactMatrix u = ExactMatrix::identity(d, n);
  for (long step = 0; step < 2 * n + 2 && n > 0; ++step) {
    long kind = ri(g, 0, 2);
    long i = ri(g, 0, n - 1), j = ri(g, 0, n - 1);
    if (kind == 0 && i != j) {
      Scalar lam(ri(g, -2, 2));
      for (long c = 0; c < n; ++c) u.set(i, c, u.at(i, c) + lam * u.at(j, c));
    } else if (kind == 1 && i != j) {
      for (long c = 0; c < n; ++c) {
        Scalar t = u.at(i, c);
        u.set(i, c, u.at(j, c));
        u.set(j, c, t);
      }
    } else if (kind == 2) {
      long lam = d.kind == CoefficientDomain::Kind::Fp ? ri(g, 1, d.p - 1)
                                                       : (ri(g, 0, 1) ? 1 : -1) * ri(g, 1, 2);
      for (long c = 0; c < n; ++c) u.set(i, c, Scalar(lam) * u.at(i, c));
    }
  }
  return u;
}

ExactMatrix inverse_of_square(const ExactMatrix& u) {
  auto inv = LinearSolver(u).solve(ExactMatrix::identity(u.domain(), u.cols()));
  if (!inv) throw InternalError("random unit failed to invert");
  return *inv;
}

// Random bounded complex of free modules over the trivial algebra: a direct
// sum of spheres and disks, conjugated by random units in every degree so
// the differentials are dense.
ChainComplex random_complex(AlgebraPtr a, Side side, std::mt19937& g) {
  const CoefficientDomain d = a->dom;
  long lo = ri(g, -2, 2), len = ri(g, 1, 4);
  std::vector<long> dim(static_cast<size_t>(len), 0);
  std::vector<std::vector<std::pair<long, long>>> units(static_cast<size_t>(len));
  long items = ri(g, 1, 7);
  for (long s = 0; s < items; ++s) {
    long t = ri(g, 0, len - 1);
    bool disk = t > 0 && dim[static_cast<size_t>(t)] < 3 && dim[static_cast<size_t>(t - 1)] < 3 &&
                ri(g, 0, 1) == 1;
    if (disk) {
      units[static_cast<size_t>(t)].push_back(
          {dim[static_cast<size_t>(t - 1)], dim[static_cast<size_t>(t)]});
      ++dim[static_cast<size_t>(t - 1)];
      ++dim[static_cast<size_t>(t)];
    } else if (dim[static_cast<size_t>(t)] < 3) {
      ++dim[static_cast<size_t>(t)];
    }
  }
  bool empty = true;
  for (long x : dim) empty = empty && x == 0;
  if (empty) dim[0] = 1;

  std::vector<ExactMatrix> u;
  for (long t = 0; t < len; ++t)
    u.push_back(random_invertible(d, dim[static_cast<size_t>(t)], g));
  ChainComplex cx(a, side, lo, lo + len - 1);
  for (long t = 0; t < len; ++t)
    cx.set_term(lo + t, free_module(a, side, dim[static_cast<size_t>(t)],
                                    "r" + std::to_string(lo + t)));
  for (long t = 1; t < len; ++t) {
    ExactMatrix dmat(d, dim[static_cast<size_t>(t - 1)], dim[static_cast<size_t>(t)]);
    for (auto [r, c] : units[static_cast<size_t>(t)]) dmat.set(r, c, Scalar(1));
    cx.set_dif(lo + t, u[static_cast<size_t>(t - 1)] * dmat *
                           inverse_of_square(u[static_cast<size_t>(t)]));
  }
  cx.validate();
  return cx;
}

Line criterion_tensor_d2() {
  Line L{false, 0, "tensor of random bounded complexes keeps d^2 = 0 (100 pairs over F2, F3, Q)", ""};
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 g(kSeed);
  const std::vector<std::pair<CoefficientDomain, long>> doms = {
      {CoefficientDomain::fp(2), 34}, {CoefficientDomain::fp(3), 33},
      {CoefficientDomain::rationals(), 33}};
  long pairs = 0, degrees = 0;
  bool ok = true;
  for (const auto& [dom, count] : doms) {
    AlgebraPtr a = make_trivial_algebra(dom);
    for (long c = 0; c < count && ok; ++c) {
      ChainComplex cm = random_complex(a, Side::Right, g);
      ChainComplex cn = random_complex(a, Side::Left, g);
      TensorComplexData td =
          tensor_complexes(cm, cn, cm.lo() + cn.lo() - 1, cm.hi() + cn.hi() + 1);
      for (long i = td.cx.lo(); i <= td.cx.hi(); ++i) {
        ++degrees;
        if (!(td.cx.dif(i) * td.cx.dif(i + 1)).is_zero()) {
          ok = false;
          L.detail = "d^2 != 0 at degree " + std::to_string(i) + " on pair " +
                     std::to_string(pairs);
          break;
        }
      }
      ++pairs;
    }
  }
  L.secs = now_minus(t0);
  if (ok && L.secs > kBudgetTensor) {
    ok = false;
    L.detail = "over the 10s budget";
  }
  if (ok && pairs != 100) {
    ok = false;
    L.detail = "expected 100 pairs, ran " + std::to_string(pairs);
  }
  L.pass = ok;
  if (ok)
    L.label += ", " + std::to_string(degrees) + " degree slots";
  return L;
}

Line criterion_window_lemma() {
  Line L{false, 0, "homology of periodic-tensor-bounded is window independent (n in -4..6)", ""};
  auto t0 = std::chrono::steady_clock::now();
  Corpus c = builtin_corpus();
  bool ok = true;
  std::ostringstream why;

  std::vector<std::pair<ChainComplex, ChainComplex>> cases;
  {
    CompleteResolutionData cr = complete_resolution_frobenius(c.modules.at("k"));
    cases.emplace_back(cr.t, one_term_complex(c.modules.at("kl"), 0));
    ChainComplex two(c.modules.at("kl").alg, Side::Left, 0, 1);
    two.set_term(0, c.modules.at("kl"));
    two.set_term(1, c.modules.at("Rl"));
    two.set_dif(1, ExactMatrix::from_strings(c.modules.at("kl").dom(), 1, 2, {"1", "0"}));
    two.validate();
    cases.emplace_back(cr.t, std::move(two));
  }
  {
    CompleteResolutionData cr = fixture_cyclic(2, Side::Right);
    cases.emplace_back(cr.t, one_term_complex(c.modules.at("ztl"), 0));
    ChainComplex two(c.modules.at("ztl").alg, Side::Left, 0, 1);
    two.set_term(0, c.modules.at("zt2l"));
    two.set_term(1, c.modules.at("ztl"));
    two.set_dif(1, ExactMatrix::from_strings(c.modules.at("ztl").dom(), 1, 1, {"1"}));
    two.validate();
    cases.emplace_back(cr.t, std::move(two));
  }
  long checked = 0;
  for (const auto& [tcx, dcx] : cases) {
    for (long n = -4; n <= 6 && ok; ++n) {
      std::string narrow =
          homology_group(tensor_complexes(tcx, dcx, n - 2, n + 2).cx, n).str();
      std::string wide = homology_group(tensor_complexes(tcx, dcx, n - 4, n + 4).cx, n).str();
      if (narrow != wide) {
        ok = false;
        why << "window mismatch at n=" << n << ": " << narrow << " vs " << wide;
      }
      ++checked;
    }
    if (!ok) break;
  }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += ", " + std::to_string(checked) + " spots over 4 pairings";
  return L;
}

Line criterion_balance_oracles() {
  Line L{false, 0,
         "stabilized torsion matches pinned oracles and balances over three rings (i in -4..6)",
         ""};
  auto t0 = std::chrono::steady_clock::now();
  Corpus c = builtin_corpus();
  bool ok = true;
  std::ostringstream why;
  auto run = [&](const CompleteResolutionData& crm, const Module& n,
                 const CompleteResolutionData& crn, const Module& m,
                 auto oracle, const char* name) {
    ChainComplex nc = one_term_complex(n, 0), mc = one_term_complex(m, 0);
    for (long i = -4; i <= 6 && ok; ++i) {
      std::string want = oracle(i);
      std::string a = tate_tor(crm, nc, i).str();
      std::string b = tate_tor(crn, mc, i).str();
      if (a != want || b != want) {
        ok = false;
        why << name << " at i=" << i << ": got " << a << " / " << b << ", oracle " << want;
      }
    }
  };
  // Pinned oracle: over both Frobenius field algebras every group is k; over
  // the integral group ring the groups alternate Z/2 in odd degrees and 0 in
  // even degrees.
  run(complete_resolution_frobenius(c.modules.at("k")), c.modules.at("kl"),
      complete_resolution_frobenius(c.modules.at("kl")), c.modules.at("k"),
      [](long) { return std::string("k"); }, "truncated polynomial ring");
  if (ok)
    run(complete_resolution_frobenius(c.modules.at("c2.k")), c.modules.at("c2.kl"),
        complete_resolution_frobenius(c.modules.at("c2.kl")), c.modules.at("c2.k"),
        [](long) { return std::string("k"); }, "group algebra over F2");
  if (ok)
    run(fixture_cyclic(2, Side::Right), c.modules.at("ztl"), fixture_cyclic(2, Side::Left),
        c.modules.at("zt"),
        [](long i) { return std::string(((i % 2) + 2) % 2 == 1 ? "Z/2" : "0"); },
        "integral group ring");
  L.secs = now_minus(t0);
  if (ok && L.secs > kBudgetBalance) {
    ok = false;
    why << "over the 5s budget";
  }
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += ", 66 group comparisons";
  return L;
}

Line criterion_four_term() {
  Line L{false, 0, "four-term sequence rank-certified on 4 pairs incl. both projective degenerations", ""};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports = run_suite({"tate-sequence"});
  bool ok = reports.size() >= 3;
  long degenerate = 0;
  bool has_allk = false;
  std::ostringstream why;
  for (const auto& r : reports) {
    if (!r.pass()) {
      ok = false;
      why << r.instance << " failed; ";
    }
    if (r.instance.find("projective target") != std::string::npos) ++degenerate;
    if (r.instance.find("(k, k) over F2[x]/(x^2)") != std::string::npos) has_allk = true;
  }
  if (degenerate < 2) {
    ok = false;
    why << "need both degenerate projective cases, saw " << degenerate;
  }
  if (!has_allk) {
    ok = false;
    why << "missing the all-k instance";
  }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += " (" + std::to_string(reports.size()) + " instances)";
  return L;
}

Line criterion_dimension_survey() {
  Line L{false, 0, "detected dimension <= max(term dimension) + sup(support) across the corpus", ""};
  auto t0 = std::chrono::steady_clock::now();
  Corpus c = builtin_corpus();
  CheckReport r = check_dimension_survey(c);
  bool ok = r.pass() && c.complexes.size() >= 10;
  bool strict = false;
  for (const auto& row : r.rows)
    if (row.relation.find("strict inequality") != std::string::npos && row.pass) strict = true;
  if (!strict) ok = false;
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = ok ? "" : (!strict ? "strict-inequality flag missing" : "survey rows failed");
  if (ok)
    L.label += " (" + std::to_string(c.complexes.size()) + " complexes, strict gap flagged)";
  return L;
}

Line criterion_detector() {
  Line L{false, 0, "dimension detector: Gfd(k)=0, Gfd(k shifted to degree 2)=2, Gfd(acyclic)=-inf", ""};
  auto t0 = std::chrono::steady_clock::now();
  Corpus c = builtin_corpus();
  std::ostringstream why;
  bool ok = true;
  DimensionReport a = gfd_detect(c.modules.at("k"));
  if (!(a.exact && a.value == 0 && a.witness_degree == 0 && !a.witness_id.empty())) {
    ok = false;
    why << "Gfd(k) = " << a.str() << "; ";
  }
  DimensionReport b = gfd_detect(c.complexes.at("c.k2"));
  if (!(b.exact && b.value == 2 && b.witness_degree == 2 && !b.witness_id.empty())) {
    ok = false;
    why << "Gfd(shifted k) = " << b.str() << "; ";
  }
  DimensionReport e = gfd_detect(c.complexes.at("intro"));
  if (!e.minus_infinity) {
    ok = false;
    why << "Gfd(acyclic) = " << e.str();
  }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += ", witnesses " + a.witness_id + "@0 and " + b.witness_id + "@2";
  return L;
}

Line criterion_vanishing() {
  Line L{false, 0,
         "unbounded groups of k: zero in degrees >= 1 and double-dual Hom in degree 0, all "
         "probes of dim <= 3",
         ""};
  auto t0 = std::chrono::steady_clock::now();
  Corpus c = builtin_corpus();
  const Module& k = c.modules.at("k");
  CompleteResolutionData cr = complete_resolution_frobenius(k);
  Module h = hom_into_regular(k);
  std::vector<std::string> zoo = {"kl", "k2l", "k3l", "Rl", "R+kl"};
  bool ok = true;
  long rows = 0;
  std::ostringstream why;
  for (const auto& id : zoo) {
    const Module& n = c.modules.at(id);
    ChainComplex nc = one_term_complex(n, 0);
    for (long i = 1; i <= 3 && ok; ++i) {
      ++rows;
      std::string got = unbounded_tor(cr, nc, i).str();
      if (got != "0") {
        ok = false;
        why << "nonzero group " << got << " at i=" << i << " against " << id;
      }
    }
    if (!ok) break;
    ++rows;
    std::string kernel_route = unbounded_tor(cr, nc, 0).str();
    std::string hom_route = hom_space(h, n).pres.descriptor().str();
    if (kernel_route != hom_route) {
      ok = false;
      why << "degree-0 mismatch against " << id << ": " << kernel_route << " vs " << hom_route;
    }
  }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += " (" + std::to_string(rows) + " rows, independent routes)";
  return L;
}

Line criterion_exact_sequences() {
  Line L{false, 0, "spot-exactness of the connecting sequences and their vanishing rows", ""};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports =
      run_suite({"tate-sequence", "stable-sequences", "relative-comparison"});
  bool ok = true;
  long vanish = 0, spots = 0;
  std::ostringstream why;
  for (const auto& r : reports) {
    if (!r.pass()) {
      ok = false;
      why << r.tag << " " << r.instance << " failed; ";
    }
    for (const auto& row : r.rows) {
      if (row.relation.find("vanishes") != std::string::npos) {
        ++vanish;
        if (!row.pass) ok = false;
      }
      if (row.right == "exact") ++spots;
    }
  }
  if (vanish == 0 || spots == 0) {
    ok = false;
    why << "expected vanishing rows and exactness spots";
  }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok)
    L.label += " (" + std::to_string(spots) + " spots, " + std::to_string(vanish) +
               " vanishing rows)";
  return L;
}

Line criterion_symmetry() {
  Line L{false, 0, "unbounded-group symmetry per degree on 3 pairs across the fixture rings", ""};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports = run_suite({"balance-unbounded"});
  bool ok = reports.size() == 3;
  std::ostringstream why;
  if (!ok) why << "expected 3 instances, got " << reports.size();
  for (const auto& r : reports)
    if (!r.pass()) {
      ok = false;
      why << r.instance << " failed; ";
    }
  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += " (" + std::to_string(reports.size() * 11) + " degree comparisons)";
  return L;
}

Line criterion_infrastructure() {
  Line L{false, 0, "normal-form table, rank-nullity on 200 matrices, mapping-cone exactness on 50 maps", ""};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream why;
  const CoefficientDomain zz = CoefficientDomain::integers();

  struct SnfCase {
    long rows, cols;
    std::vector<long> entries;
    std::vector<long> want;
  };
  // Hand-reduced forms: invariant factors in divisibility order.
  const std::vector<SnfCase> table = {
      {1, 1, {2}, {2}},
      {1, 1, {0}, {}},
      {2, 2, {2, 0, 0, 3}, {1, 6}},
      {2, 2, {1, 2, 3, 4}, {1, 2}},
      {2, 2, {2, 4, 4, 8}, {2}},
      {2, 2, {0, 0, 0, 0}, {}},
      {2, 2, {6, 4, 4, 6}, {2, 10}},
      {3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}, {1, 1, 1}},
      {3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}, {1, 1, 30}},
      {1, 3, {2, 4, 6}, {2}},
  };
  for (size_t t = 0; t < table.size() && ok; ++t) {
    const SnfCase& sc = table[t];
    ExactMatrix a = ExactMatrix::from_ints(zz, sc.rows, sc.cols, sc.entries);
    SmithResult s = smith_normal_form(a);
    bool match = s.invariants.size() == sc.want.size();
    for (size_t i = 0; match && i < sc.want.size(); ++i)
      match = s.invariants[i] == sc.want[i];
    if (!(match && s.U * a * s.V == s.D)) {
      ok = false;
      why << "normal-form case " << t << " disagrees with the hand reduction; ";
    }
  }

  std::mt19937 g(kSeed + 1);
  const std::vector<CoefficientDomain> doms = {CoefficientDomain::fp(2), CoefficientDomain::fp(3),
                                               CoefficientDomain::rationals()};
  for (long t = 0; t < 200 && ok; ++t) {
    const CoefficientDomain& d = doms[static_cast<size_t>(t % 3)];
    long r = ri(g, 0, 5), c = ri(g, 0, 5);
    ExactMatrix a(d, r, c);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j) a.set(i, j, Scalar(ri(g, -2, 2)));
    RankProfile rp = rank_profile(a);
    if (rp.rank + rp.kernel.cols() != c || rank_of(a.transpose()) != rp.rank) {
      ok = false;
      why << "rank-nullity failed on a " << r << "x" << c << " matrix over " << d.name();
    }
  }

  long cones = 0;
  for (long t = 0; t < 50 && ok; ++t) {
    const CoefficientDomain& d = doms[static_cast<size_t>(t % 3)];
    AlgebraPtr a = make_trivial_algebra(d);
    ChainComplex src = random_complex(a, Side::Right, g);
    if (t % 2 == 0) {
      // conjugated isomorphic copy; the comparison map is the unit itself
      std::map<long, ExactMatrix> um, mats;
      ChainComplex tgt(a, Side::Right, src.lo(), src.hi());
      for (long i = src.lo(); i <= src.hi(); ++i) {
        um.emplace(i, random_invertible(d, src.term(i).gens, g));
        tgt.set_term(i, src.term(i));
      }
      for (long i = src.lo() + 1; i <= src.hi(); ++i)
        tgt.set_dif(i, um.at(i - 1) * src.dif(i) * inverse_of_square(um.at(i)));
      tgt.validate();
      for (long i = src.lo(); i <= src.hi(); ++i) mats.emplace(i, um.at(i));
      ChainMap f = make_chain_map(src, tgt, std::move(mats), src.lo(), src.hi());
      if (!triangle_homology_exact(f, src.lo() - 2, src.hi() + 2)) {
        ok = false;
        why << "cone sequence failed on an isomorphism at trial " << t;
      }
    } else {
      // null-homotopic map d h + h d into an unrelated random complex
      ChainComplex tgt = random_complex(a, Side::Right, g);
      std::map<long, ExactMatrix> h;
      long lo = std::min(src.lo(), tgt.lo()) - 1, hi = std::max(src.hi(), tgt.hi()) + 1;
      for (long i = lo - 1; i <= hi; ++i) {
        ExactMatrix hi_m(d, tgt.term(i + 1).gens, src.term(i).gens);
        for (long rr = 0; rr < hi_m.rows(); ++rr)
          for (long cc = 0; cc < hi_m.cols(); ++cc) hi_m.set(rr, cc, Scalar(ri(g, -1, 1)));
        h.emplace(i, std::move(hi_m));
      }
      std::map<long, ExactMatrix> mats;
      for (long i = lo; i <= hi; ++i)
        mats.emplace(i, tgt.dif(i + 1) * h.at(i) + h.at(i - 1) * src.dif(i));
      ChainMap f = make_chain_map(src, tgt, std::move(mats), lo, hi);
      if (!triangle_homology_exact(f, lo - 1, hi + 1)) {
        ok = false;
        why << "cone sequence failed on a null-homotopic map at trial " << t;
      }
    }
    ++cones;
  }

  L.secs = now_minus(t0);
  L.pass = ok;
  L.detail = why.str();
  if (ok) L.label += " (" + std::to_string(cones) + " cones certified)";
  return L;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Line> lines;
  try {
    lines.push_back(criterion_tensor_d2());
    lines.push_back(criterion_window_lemma());
    lines.push_back(criterion_balance_oracles());
    lines.push_back(criterion_four_term());
    lines.push_back(criterion_dimension_survey());
    lines.push_back(criterion_detector());
    lines.push_back(criterion_vanishing());
    lines.push_back(criterion_exact_sequences());
    lines.push_back(criterion_symmetry());
    lines.push_back(criterion_infrastructure());
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  long passed = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const Line& L = lines[i];
    std::ostringstream secs;
    secs.setf(std::ios::fixed);
    secs.precision(2);
    secs << L.secs;
    std::cout << "[" << (i + 1 < 10 ? " " : "") << i + 1 << "] "
              << (L.pass ? "PASS" : "FAIL") << "  " << secs.str() << "s  " << L.label << "\n";
    if (!L.pass && !L.detail.empty()) std::cout << "      " << L.detail << "\n";
    if (L.pass) ++passed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = total < kBudgetTotal;
  std::cout << "acceptance: " << passed << "/" << lines.size() << " criteria pass in ";
  std::ostringstream ts;
  ts.setf(std::ios::fixed);
  ts.precision(2);
  ts << total;
  std::cout << ts.str() << "s (budget " << kBudgetTotal << "s"
            << (in_budget ? "" : ", EXCEEDED") << ")\n";
  return (passed == static_cast<long>(lines.size()) && in_budget) ? 0 : 1;
}
