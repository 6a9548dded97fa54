#include <gorhom/complex.hpp>

namespace gorhom {

ChainComplex::ChainComplex(AlgebraPtr ring, Side side, long lo, long hi, Tail lower, Tail upper)
    : ring_(std::move(ring)),
      side_(side),
      lo_(lo),
      hi_(hi),
      lower_(lower),
      upper_(upper),
      zero_(zero_module(ring_, side)) {
  if (hi_ < lo_) throw InputError("complex window is empty");
  if (!lower_.is_zero() && lower_.period < 1) throw InputError("bad lower period");
  if (!upper_.is_zero() && upper_.period < 1) throw InputError("bad upper period");
}

void ChainComplex::set_term(long i, Module m) {
  if (i < lo_ || i > hi_) throw InputError("set_term outside the stored window");
  terms_.insert_or_assign(i, std::move(m));
}

void ChainComplex::set_dif(long i, ExactMatrix d) {
  if (i <= lo_ || i > hi_) throw InputError("set_dif outside the stored window");
  difs_.insert_or_assign(i, std::move(d));
}

std::optional<long> ChainComplex::fold(long i) const {
  if (i > hi_) {
    if (upper_.is_zero()) return std::nullopt;
    long p = upper_.period;
    long k = (i - hi_ + p - 1) / p;
    return i - k * p;
  }
  if (i < lo_) {
    if (lower_.is_zero()) return std::nullopt;
    long p = lower_.period;
    long k = (lo_ - i + p - 1) / p;
    return i + k * p;
  }
  return i;
}

const Module& ChainComplex::term(long i) const {
  auto j = fold(i);
  if (!j) return zero_;
  auto it = terms_.find(*j);
  if (it == terms_.end()) throw InternalError("missing term at degree " + std::to_string(*j));
  return it->second;
}

ExactMatrix ChainComplex::dif(long i) const {
  const Module& src = term(i);
  const Module& tgt = term(i - 1);
  auto j = fold(i);
  if (j) {
    long jj = *j;
    if (jj == lo_ && !lower_.is_zero()) jj = lo_ + lower_.period;
    if (jj > lo_) {
      auto it = difs_.find(jj);
      if (it == difs_.end())
        throw InternalError("missing differential at degree " + std::to_string(jj));
      return it->second;
    }
  }
  return ExactMatrix(dom(), tgt.gens, src.gens);
}

bool ChainComplex::bounded_below() const {
  if (lower_.is_zero()) return true;
  for (long i = lo_; i < lo_ + lower_.period; ++i)
    if (term(i).gens > 0) return false;
  return true;
}

bool ChainComplex::bounded_above() const {
  if (upper_.is_zero()) return true;
  for (long i = hi_; i > hi_ - upper_.period; --i)
    if (term(i).gens > 0) return false;
  return true;
}

std::optional<long> ChainComplex::sup_deg() const {
  if (!bounded_above()) throw InputError("sup of a complex that is unbounded above");
  for (long i = hi_; i >= lo_; --i)
    if (term(i).gens > 0) return i;
  return std::nullopt;
}

std::optional<long> ChainComplex::inf_deg() const {
  if (!bounded_below()) throw InputError("inf of a complex that is unbounded below");
  for (long i = lo_; i <= hi_; ++i)
    if (term(i).gens > 0) return i;
  return std::nullopt;
}

bool ChainComplex::is_zero_complex() const {
  for (long i = lo_; i <= hi_; ++i)
    if (term(i).gens > 0) return false;
  return true;
}

void ChainComplex::validate() const {
  if (!upper_.is_zero() && hi_ - upper_.period < lo_)
    throw InputError("window shorter than the upper period");
  if (!lower_.is_zero() && lo_ + lower_.period > hi_)
    throw InputError("window shorter than the lower period");
  for (long i = lo_; i <= hi_; ++i) {
    const Module& m = term(i);
    if (!algebras_equal(*m.alg, *ring_) || m.side != side_)
      throw InputError("term at degree " + std::to_string(i) + " lives over the wrong ring");
    m.validate();
  }
  if (!upper_.is_zero() && !modules_equal(term(hi_), term(hi_ - upper_.period)))
    throw InputError("upper periodic seam does not match");
  if (!lower_.is_zero() && !modules_equal(term(lo_), term(lo_ + lower_.period)))
    throw InputError("lower periodic seam does not match");

  long below = lower_.is_zero() ? 0 : lower_.period;
  long above = upper_.is_zero() ? 0 : upper_.period;
  for (long i = lo_ - below, e = hi_ + above; i <= e; ++i) {
    ExactMatrix d = dif(i);
    if (!is_morphism(term(i), d, term(i - 1)))
      throw InputError("differential at degree " + std::to_string(i) + " is not a morphism");
  }
  for (long i = lo_ - below - 1, e = hi_ + above; i <= e; ++i) {
    if (!(dif(i) * dif(i + 1)).is_zero())
      throw InputError("dif(" + std::to_string(i) + ") * dif(" + std::to_string(i + 1) +
                       ") is nonzero");
  }
}

ChainComplex one_term_complex(Module m, long degree) {
  ChainComplex c(m.alg, m.side, degree, degree);
  c.set_term(degree, std::move(m));
  return c;
}

ChainComplex zero_complex(AlgebraPtr ring, Side side) {
  ChainComplex c(ring, side, 0, 0);
  c.set_term(0, zero_module(std::move(ring), side));
  return c;
}

ChainComplex shift(const ChainComplex& c, long n) {
  ChainComplex out(c.ring(), c.side(), c.lo() + n, c.hi() + n, c.lower(), c.upper());
  bool flip = (n % 2 + 2) % 2 == 1;
  for (long i = c.lo(); i <= c.hi(); ++i) out.set_term(i + n, c.term(i));
  for (long i = c.lo() + 1; i <= c.hi(); ++i)
    out.set_dif(i + n, flip ? c.dif(i).negated() : c.dif(i));
  return out;
}

ChainMap shift(const ChainMap& f, long n) {
  std::map<long, ExactMatrix> mats;
  for (long i = f.mlo; i <= f.mhi; ++i) mats.emplace(i + n, f.at(i));
  return make_chain_map(shift(f.src, n), shift(f.tgt, n), std::move(mats), f.mlo + n, f.mhi + n,
                        f.lower_ext, f.upper_ext);
}

ExactMatrix ChainMap::at(long i) const {
  if (i >= mlo && i <= mhi) {
    auto it = mats.find(i);
    if (it == mats.end()) throw InternalError("missing chain map entry at " + std::to_string(i));
    return it->second;
  }
  if (i > mhi && !upper_ext.is_zero()) {
    long p = upper_ext.period;
    long k = (i - mhi + p - 1) / p;
    return at(i - k * p);
  }
  if (i < mlo && !lower_ext.is_zero()) {
    long p = lower_ext.period;
    long k = (mlo - i + p - 1) / p;
    return at(i + k * p);
  }
  return ExactMatrix(src.dom(), tgt.term(i).gens, src.term(i).gens);
}

void ChainMap::validate() const {
  if (mhi < mlo) throw InputError("chain map window is empty");
  if (!upper_ext.is_zero() && mhi - upper_ext.period + 1 < mlo)
    throw InputError("chain map window shorter than its upper period");
  if (!lower_ext.is_zero() && mlo + lower_ext.period - 1 > mhi)
    throw InputError("chain map window shorter than its lower period");
  long below = lower_ext.is_zero() ? 1 : lower_ext.period;
  long above = upper_ext.is_zero() ? 1 : upper_ext.period;
  for (long i = mlo - below, e = mhi + above; i <= e; ++i) {
    ExactMatrix fi = at(i);
    if (!is_morphism(src.term(i), fi, tgt.term(i)))
      throw InputError("chain map is not a morphism at degree " + std::to_string(i));
    ExactMatrix lhs = tgt.dif(i) * fi;
    ExactMatrix rhs = at(i - 1) * src.dif(i);
    if (!congruent(lhs, rhs, tgt.term(i - 1).rel))
      throw InputError("chain map does not commute with differentials at degree " +
                       std::to_string(i));
  }
}

ChainMap make_chain_map(ChainComplex src, ChainComplex tgt, std::map<long, ExactMatrix> mats,
                        long mlo, long mhi, Tail lower, Tail upper) {
  ChainMap f{std::move(src), std::move(tgt), std::move(mats), mlo, mhi, lower, upper};
  f.validate();
  return f;
}

ChainMap identity_chain_map(const ChainComplex& c) {
  std::map<long, ExactMatrix> mats;
  for (long i = c.lo(); i <= c.hi(); ++i)
    mats.emplace(i, ExactMatrix::identity(c.dom(), c.term(i).gens));
  Tail lower = c.lower().is_zero() ? Tail::zero() : Tail::periodic(c.lower().period);
  Tail upper = c.upper().is_zero() ? Tail::zero() : Tail::periodic(c.upper().period);
  return make_chain_map(c, c, std::move(mats), c.lo(), c.hi(), lower, upper);
}

ChainComplex truncate_below(const ChainComplex& c, long n) {
  if (n <= c.lo() && c.lower().is_zero()) {
    ChainComplex out(c.ring(), c.side(), c.lo(), c.hi(), Tail::zero(), c.upper());
    for (long i = c.lo(); i <= c.hi(); ++i) out.set_term(i, c.term(i));
    for (long i = c.lo() + 1; i <= c.hi(); ++i) out.set_dif(i, c.dif(i));
    out.validate();
    return out;
  }
  long hi = std::max(c.hi(), c.upper().is_zero() ? n : n + c.upper().period);
  ChainComplex out(c.ring(), c.side(), n, hi, Tail::zero(), c.upper());
  for (long i = n; i <= hi; ++i) out.set_term(i, c.term(i));
  for (long i = n + 1; i <= hi; ++i) out.set_dif(i, c.dif(i));
  out.validate();
  return out;
}

ChainComplex truncate_above(const ChainComplex& c, long n) {
  if (n >= c.hi() && c.upper().is_zero()) {
    ChainComplex out(c.ring(), c.side(), c.lo(), c.hi(), c.lower(), Tail::zero());
    for (long i = c.lo(); i <= c.hi(); ++i) out.set_term(i, c.term(i));
    for (long i = c.lo() + 1; i <= c.hi(); ++i) out.set_dif(i, c.dif(i));
    out.validate();
    return out;
  }
  long lo = std::min(c.lo(), c.lower().is_zero() ? n : n - c.lower().period);
  ChainComplex out(c.ring(), c.side(), lo, n, c.lower(), Tail::zero());
  for (long i = lo; i <= n; ++i) out.set_term(i, c.term(i));
  for (long i = lo + 1; i <= n; ++i) out.set_dif(i, c.dif(i));
  out.validate();
  return out;
}

CokernelModule cokernel_at(const ChainComplex& c, long n) {
  const Module& tn = c.term(n);
  ExactMatrix d = c.dif(n + 1);
  const CoefficientDomain dm = c.dom();
  if (dm.is_field()) {
    ExactMatrix q = kernel_basis(d.transpose()).transpose();  // functionals killing the image
    auto s = LinearSolver(q).solve(ExactMatrix::identity(dm, q.rows()));
    if (!s) throw InternalError("cokernel has no section");
    std::vector<ExactMatrix> act;
    for (const auto& a : tn.act) act.push_back(q * a * *s);
    Module m = make_module(c.ring(), c.side(), q.rows(), std::move(act),
                           ExactMatrix(dm, q.rows(), 0), "coker(" + std::to_string(n) + ")");
    return CokernelModule{std::move(m), std::move(q)};
  }
  Module m = make_module(c.ring(), c.side(), tn.gens, tn.act, hstack(tn.rel, d),
                         "coker(" + std::to_string(n) + ")");
  return CokernelModule{std::move(m), ExactMatrix::identity(dm, tn.gens)};
}

namespace {

Tail combine_tails(const Tail& a, const Tail& b, const char* where) {
  if (a.is_zero() && b.is_zero()) return Tail::zero();
  if (!a.is_zero() && !b.is_zero()) {
    if (a.period != b.period)
      throw InputError(std::string("cone: mismatched ") + where + " periods");
    return a;
  }
  return a.is_zero() ? b : a;
}

}  // namespace

ConeData cone(const ChainMap& f) {
  const ChainComplex& a = f.src;
  const ChainComplex& b = f.tgt;
  Tail lower = combine_tails(a.lower(), b.lower(), "lower");
  Tail upper = combine_tails(a.upper(), b.upper(), "upper");
  long clo = std::min(a.lo() + 1, b.lo());
  long chi = std::max(a.hi() + 1, b.hi());
  if (!lower.is_zero()) clo -= lower.period;
  if (!upper.is_zero()) chi += upper.period;

  ChainComplex cn(a.ring(), a.side(), clo, chi, lower, upper);
  for (long i = clo; i <= chi; ++i) cn.set_term(i, direct_sum(a.term(i - 1), b.term(i)));
  for (long i = clo + 1; i <= chi; ++i) {
    const Module& sa = a.term(i - 1);
    const Module& sb = b.term(i);
    const Module& ta = a.term(i - 2);
    const Module& tb = b.term(i - 1);
    ExactMatrix d(cn.dom(), ta.gens + tb.gens, sa.gens + sb.gens);
    ExactMatrix da = a.dif(i - 1).negated();
    ExactMatrix fb = f.at(i - 1);
    ExactMatrix db = b.dif(i);
    for (long r = 0; r < ta.gens; ++r)
      for (long col = 0; col < sa.gens; ++col) d.set(r, col, da.at(r, col));
    for (long r = 0; r < tb.gens; ++r) {
      for (long col = 0; col < sa.gens; ++col) d.set(ta.gens + r, col, fb.at(r, col));
      for (long col = 0; col < sb.gens; ++col) d.set(ta.gens + r, sa.gens + col, db.at(r, col));
    }
    cn.set_dif(i, std::move(d));
  }
  cn.validate();

  std::map<long, ExactMatrix> incl_mats, proj_mats;
  for (long i = clo; i <= chi; ++i) {
    long ga = a.term(i - 1).gens, gb = b.term(i).gens;
    ExactMatrix inc(cn.dom(), ga + gb, gb);
    for (long r = 0; r < gb; ++r) inc.set(ga + r, r, Scalar(1));
    incl_mats.emplace(i, std::move(inc));
    ExactMatrix pr(cn.dom(), ga, ga + gb);
    for (long r = 0; r < ga; ++r) pr.set(r, r, Scalar(1));
    proj_mats.emplace(i, std::move(pr));
  }
  ChainMap incl = make_chain_map(b, cn, std::move(incl_mats), clo, chi, lower, upper);
  ChainMap proj = make_chain_map(cn, shift(a, 1), std::move(proj_mats), clo, chi, lower, upper);
  return ConeData{std::move(cn), std::move(incl), std::move(proj)};
}

ComplexKernel kernel_complex(const ChainMap& f) {
  const ChainComplex& a = f.src;
  ChainComplex ker(a.ring(), a.side(), a.lo(), a.hi(), a.lower(), a.upper());
  std::map<long, ExactMatrix> incl_mats;
  std::map<long, KernelData> kd;
  for (long i = a.lo(); i <= a.hi(); ++i) {
    KernelData k = kernel_of_morphism(a.term(i), f.at(i), f.tgt.term(i));
    incl_mats.emplace(i, k.incl);
    kd.emplace(i, std::move(k));
  }
  for (long i = a.lo(); i <= a.hi(); ++i) ker.set_term(i, kd.at(i).ker);
  for (long i = a.lo() + 1; i <= a.hi(); ++i) {
    long j = i - 1;
    if (j < a.lo()) j += a.lower().period;
    auto coords = LinearSolver(kd.at(j).incl).solve(a.dif(i) * kd.at(i).incl);
    if (!coords) throw InternalError("kernel complex differential does not restrict");
    ker.set_dif(i, *coords);
  }
  ker.validate();
  ChainMap incl = make_chain_map(ker, a, std::move(incl_mats), a.lo(), a.hi(), a.lower(),
                                 a.upper());
  return ComplexKernel{std::move(ker), std::move(incl)};
}

bool degreewise_split_surjective(const ChainMap& f) {
  long below = f.lower_ext.is_zero() ? 1 : f.lower_ext.period;
  long above = f.upper_ext.is_zero() ? 1 : f.upper_ext.period;
  for (long i = f.mlo - below, e = f.mhi + above; i <= e; ++i) {
    const Module& tgt = f.tgt.term(i);
    ExactMatrix fi = f.at(i);
    // section sigma with f sigma = id, allowing slack in the target relations
    ExactMatrix lhs = hstack(fi, tgt.rel);
    if (!LinearSolver(lhs).solve(ExactMatrix::identity(f.src.dom(), tgt.gens))) return false;
  }
  return true;
}

SpotHomology homology_at(const ChainComplex& c, long i) {
  return homology_spot(c.term(i + 1).pres(), c.dif(i + 1), c.term(i).pres(), c.dif(i),
                       c.term(i - 1).pres());
}

HomologyGroup homology_group(const ChainComplex& c, long i) {
  return homology_at(c, i).H.descriptor();
}

AcyclicityReport acyclic_on(const ChainComplex& c, long a, long b) {
  AcyclicityReport rep;
  for (long i = a; i <= b; ++i) {
    ExactnessCheck e = exact_at(c.term(i + 1).pres(), c.dif(i + 1), c.term(i).pres(), c.dif(i),
                                c.term(i - 1).pres());
    if (!e.ok()) {
      rep.ok = false;
      rep.failed_degrees.push_back(i);
    }
  }
  return rep;
}

bool triangle_homology_exact(const ChainMap& f, long lo, long hi) {
  ConeData cd = cone(f);
  std::map<long, SpotHomology> hs, ht, hc;
  auto spot = [](std::map<long, SpotHomology>& m, const ChainComplex& c, long n) -> SpotHomology& {
    auto it = m.find(n);
    if (it == m.end()) it = m.emplace(n, homology_at(c, n)).first;
    return it->second;
  };
  for (long n = lo; n <= hi; ++n) {
    SpotHomology& sn = spot(hs, f.src, n);
    SpotHomology& sn1 = spot(hs, f.src, n - 1);
    SpotHomology& tn = spot(ht, f.tgt, n);
    SpotHomology& tn1 = spot(ht, f.tgt, n - 1);
    SpotHomology& cn = spot(hc, cd.cone, n);
    ExactMatrix fs = induced_on_homology(sn, tn, f.at(n), f.tgt.term(n).pres());
    ExactMatrix fs1 = induced_on_homology(sn1, tn1, f.at(n - 1), f.tgt.term(n - 1).pres());
    ExactMatrix is = induced_on_homology(tn, cn, cd.incl.at(n), cd.cone.term(n).pres());
    ExactMatrix ps = induced_on_homology(cn, sn1, cd.proj.at(n), f.src.term(n - 1).pres());
    if (!exact_at(sn.H, fs, tn.H, is, cn.H).ok()) return false;
    if (!exact_at(tn.H, is, cn.H, ps, sn1.H).ok()) return false;
    if (!exact_at(cn.H, ps, sn1.H, fs1, tn1.H).ok()) return false;
  }
  return true;
}

}  // namespace gorhom
