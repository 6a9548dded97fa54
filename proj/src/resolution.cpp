#include <gorhom/resolution.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace gorhom {

namespace {

// row-major vectorization, matching the kron convention in linalg
ExactMatrix vec_rm(const ExactMatrix& x) {
  ExactMatrix v(x.domain(), x.rows() * x.cols(), 1);
  for (long r = 0; r < x.rows(); ++r)
    for (long c = 0; c < x.cols(); ++c) v.set(r * x.cols() + c, 0, x.at(r, c));
  return v;
}

ExactMatrix inverse_of(const ExactMatrix& phi) {
  auto inv = LinearSolver(phi).solve(ExactMatrix::identity(phi.domain(), phi.rows()));
  if (!inv) throw InternalError("isomorphism has no inverse over the domain");
  return *inv;
}

}  // namespace

ProjectiveResolutionData projective_resolution(const Module& m, long horizon) {
  m.validate();
  std::vector<Module> ps;
  std::vector<ExactMatrix> pis;    // pis[i] : P_i -> K_{i-1} on generators (pis[0] = aug)
  std::vector<ExactMatrix> incls;  // incls[i] : K_i -> P_i, kernel basis columns
  std::vector<Module> ks;

  CoverData c0 = cover_by_free(m);
  KernelData k0 = kernel_of_morphism(c0.free, c0.pi, m);
  ps.push_back(c0.free);
  pis.push_back(c0.pi);
  ks.push_back(k0.ker);
  incls.push_back(k0.incl);

  long top = -1;
  long seam_j = -1;
  std::optional<ExactMatrix> seam_phi;  // K_top-1 -> K_seam_j

  for (long step = 0;; ++step) {
    const Module& km = ks.back();
    if (km.gens == 0) {
      top = step;
      break;
    }
    bool closed = false;
    for (long j = step - 1; j >= 0; --j) {
      if (auto phi = iso_search(km, ks[static_cast<size_t>(j)])) {
        seam_j = j;
        seam_phi = std::move(phi);
        closed = true;
        break;
      }
    }
    if (closed) {
      top = step + 1;
      break;
    }
    if (step >= horizon)
      throw InputError("projective_resolution: syzygies neither vanish nor repeat within horizon " +
                       std::to_string(horizon));
    CoverData c = cover_by_free(km);
    KernelData k = kernel_of_morphism(c.free, c.pi, km);
    ps.push_back(c.free);
    pis.push_back(c.pi);
    ks.push_back(k.ker);
    incls.push_back(k.incl);
  }

  Tail upper = seam_j < 0 ? Tail::zero() : Tail::periodic(top - 1 - seam_j);
  ChainComplex cx(m.alg, m.side, 0, top, Tail::zero(), upper);
  long built = static_cast<long>(ps.size());  // P_0 .. P_{built-1}
  for (long i = 0; i <= top; ++i)
    cx.set_term(i, i < built ? ps[static_cast<size_t>(i)] : ps[static_cast<size_t>(seam_j + 1)]);
  for (long i = 1; i <= std::min(top, built - 1); ++i)
    cx.set_dif(i, incls[static_cast<size_t>(i - 1)] * pis[static_cast<size_t>(i)]);
  if (seam_j >= 0)
    cx.set_dif(top, incls.back() * inverse_of(*seam_phi) * pis[static_cast<size_t>(seam_j + 1)]);
  cx.validate();
  return ProjectiveResolutionData{std::move(cx), pis[0], m, std::move(ks)};
}

ChainComplex augmented_complex(const ProjectiveResolutionData& p) {
  const ChainComplex& r = p.cx;
  if (r.lo() != 0) throw InputError("augmented_complex expects a resolution starting in degree 0");
  ChainComplex out(r.ring(), r.side(), -1, r.hi(), Tail::zero(), r.upper());
  out.set_term(-1, p.target);
  for (long i = 0; i <= r.hi(); ++i) out.set_term(i, r.term(i));
  out.set_dif(0, p.aug);
  for (long i = 1; i <= r.hi(); ++i) out.set_dif(i, r.dif(i));
  // not validated: aug composites vanish only modulo the target relations
  return out;
}

bool resolution_certificate(const ProjectiveResolutionData& p, long hi) {
  return acyclic_on(augmented_complex(p), -1, hi).ok;
}

CompleteResolutionData complete_resolution_frobenius(const Module& m, long horizon) {
  if (!m.alg->frobenius)
    throw InputError(
        "complete_resolution_frobenius: the algebra carries no Frobenius form; "
        "use fixture_cyclic over integral group rings");
  if (m.rel.cols() != 0)
    throw InputError("complete_resolution_frobenius: expects a relation-free presentation");
  const CoefficientDomain d = m.dom();

  ProjectiveResolutionData p = projective_resolution(m, horizon);
  ProjectiveResolutionData q = projective_resolution(dual_module(m), horizon);

  long ph = p.cx.hi(), qh = q.cx.hi();
  long lo = -qh - 2, hi = ph;
  Tail lower = q.cx.upper().is_zero() ? Tail::zero() : Tail::periodic(q.cx.upper().period);
  Tail upper = p.cx.upper();

  ChainComplex t(m.alg, m.side, lo, hi, lower, upper);
  for (long i = lo; i <= hi; ++i)
    t.set_term(i, i >= 0 ? p.cx.term(i) : dual_module(q.cx.term(-1 - i)));
  for (long i = lo + 1; i <= hi; ++i) {
    if (i >= 1)
      t.set_dif(i, p.cx.dif(i));
    else if (i == 0)
      t.set_dif(0, q.aug.transpose() * p.aug);  // evaluation square through the double dual
    else
      t.set_dif(i, q.cx.dif(-i).transpose());
  }
  t.validate();

  std::map<long, ExactMatrix> mats;
  for (long i = lo; i <= hi; ++i)
    mats.emplace(i, i >= 0 ? ExactMatrix::identity(d, t.term(i).gens)
                           : ExactMatrix(d, 0, t.term(i).gens));
  ChainMap tau = make_chain_map(t, p.cx, std::move(mats), lo, hi, Tail::zero(), upper);
  return CompleteResolutionData{std::move(t), std::move(p), std::move(tau), 0};
}

CompleteResolutionData shift_complete(const CompleteResolutionData& c, long n) {
  ProjectiveResolutionData approx{shift(c.approx.cx, n), c.approx.aug, c.approx.target,
                                  c.approx.syzygies};
  return CompleteResolutionData{shift(c.t, n), std::move(approx), shift(c.tau, n), c.g + n};
}

CompleteResolutionData contractible_complete(const Module& p) {
  ProjectiveResolutionData pr = projective_resolution(p);
  if (pr.cx.hi() != pr.cx.lo())
    throw InputError("contractible_complete expects a projective module");
  const Module& p0 = pr.cx.term(0);
  const CoefficientDomain d = p.dom();
  ChainComplex t(p.alg, p.side, -1, 0);
  t.set_term(0, p0);
  t.set_term(-1, p0);
  t.set_dif(0, ExactMatrix::identity(d, p0.gens));
  t.validate();
  std::map<long, ExactMatrix> mats;
  mats.emplace(0, ExactMatrix::identity(d, p0.gens));
  mats.emplace(-1, ExactMatrix(d, 0, p0.gens));
  ChainMap tau = make_chain_map(t, pr.cx, std::move(mats), -1, 0);
  return CompleteResolutionData{std::move(t), std::move(pr), std::move(tau), 0};
}

TauKernelData tau_kernel(const CompleteResolutionData& cr, long need_lo, long need_hi) {
  const ChainComplex& t = cr.t;
  const ChainComplex& a = cr.tau.tgt;
  if (!a.lower().is_zero())
    throw InputError("tau_kernel: the resolution side must be bounded below");
  long p = t.lower().is_zero() ? 0 : t.lower().period;
  long klo = std::min(need_lo, a.lo() - 1 - p);
  long khi = std::max(need_hi, cr.g);
  std::map<long, KernelData> kd;
  for (long j = klo; j <= khi; ++j)
    kd.emplace(j, kernel_of_morphism(t.term(j), cr.tau.at(j), a.term(j)));
  ChainComplex k(t.ring(), t.side(), klo, khi, t.lower(), Tail::zero());
  for (long j = klo; j <= khi; ++j) k.set_term(j, kd.at(j).ker);
  for (long j = klo + 1; j <= khi; ++j) {
    auto x = LinearSolver(kd.at(j - 1).incl).solve(t.dif(j) * kd.at(j).incl);
    if (!x) throw InternalError("tau_kernel: boundary escapes the kernel");
    k.set_dif(j, *x);
  }
  k.validate();
  std::map<long, ExactMatrix> mats;
  for (long j = klo; j <= khi; ++j) mats.emplace(j, kd.at(j).incl);
  ChainMap incl = make_chain_map(k, t, std::move(mats), klo, khi, t.lower(), Tail::zero());
  return TauKernelData{std::move(k), std::move(incl)};
}

CompleteResolutionData fixture_cyclic(long n, Side side) {
  if (n < 2) throw InputError("fixture_cyclic needs n >= 2");
  AlgebraPtr a = make_group_ring_cyclic(CoefficientDomain::integers(), n);
  const CoefficientDomain d = a->dom;
  Module reg = regular_module(a, side);

  ExactMatrix tm1(d, n, 1);
  tm1.set(0, 0, Scalar(-1));
  tm1.set(1, 0, Scalar(1));
  ExactMatrix norm(d, n, 1);
  for (long i = 0; i < n; ++i) norm.set(i, 0, Scalar(1));
  ExactMatrix dodd = a->left_mult(tm1), deven = a->left_mult(norm);

  ChainComplex t(a, side, -1, 2, Tail::periodic(2), Tail::periodic(2));
  for (long i = -1; i <= 2; ++i) t.set_term(i, reg);
  t.set_dif(0, deven);
  t.set_dif(1, dodd);
  t.set_dif(2, deven);
  t.validate();

  Module target = character_module(a, side, Scalar(1), "Ztriv");
  ExactMatrix aug(d, 1, n);
  for (long i = 0; i < n; ++i) aug.set(0, i, Scalar(1));
  ProjectiveResolutionData approx{truncate_below(t, 0), aug, target, {}};

  std::map<long, ExactMatrix> mats;
  mats.emplace(-1, ExactMatrix(d, 0, n));
  for (long i = 0; i <= 2; ++i) mats.emplace(i, ExactMatrix::identity(d, n));
  ChainMap tau = make_chain_map(t, approx.cx, std::move(mats), -1, 2, Tail::zero(),
                                Tail::periodic(2));
  return CompleteResolutionData{std::move(t), std::move(approx), std::move(tau), 0};
}

TotalAcyclicityReport total_acyclicity(const ChainComplex& t, long lo, long hi) {
  TotalAcyclicityReport rep;
  AcyclicityReport plain = acyclic_on(t, lo, hi);
  rep.acyclic = plain.ok;
  rep.failed_degrees = plain.failed_degrees;

  Module reg = regular_module(t.ring(), t.side());
  HomComplexData h = hom_complex(t, reg, -hi, -lo);
  rep.hom_acyclic = acyclic_on(h.cx, -hi, -lo).ok;

  if (t.dom().is_field()) {
    try {
      std::vector<Module> injectives = indecomposable_injectives(t.ring(), opposite(t.side()));
      bool all = true;
      for (const Module& e : injectives) {
        ChainComplex ec = one_term_complex(e, 0);
        for (long i = lo; i <= hi && all; ++i) {
          HomologyGroup hg = t.side() == Side::Right ? tensor_homology(t, ec, i)
                                                     : tensor_homology(ec, t, i);
          all = hg.is_zero();
        }
        if (!all) break;
      }
      rep.injectives_checked = true;
      rep.tensor_injective_acyclic = all;
    } catch (const InputError&) {
      rep.injectives_checked = false;
    }
  }
  return rep;
}

CompleteResolutionData pad_split_surjective(const CompleteResolutionData& c) {
  const ChainComplex& t = c.t;
  const ChainComplex& a = c.approx.cx;
  const CoefficientDomain d = t.dom();
  long g = c.g;

  for (long i = g; i <= std::max(t.hi(), a.hi()); ++i) {
    if (!modules_equal(t.term(i), a.term(i)) ||
        !(c.tau.at(i) == ExactMatrix::identity(d, t.term(i).gens)))
      throw InputError(
          "pad_split_surjective: agreement certificate missing (tau must be the identity in "
          "degrees >= g)");
  }

  bool empty = true;
  for (long i = a.lo(); i <= std::min(g - 1, a.hi()); ++i)
    if (a.term(i).gens > 0) empty = false;
  if (g - 1 < a.lo() || empty) return c;

  // contractible cover D_i = low_i (+) low_{i+1}, d(x, y) = (dx, x - dy)
  ChainComplex low = truncate_above(a, g - 1);
  long dlo = low.lo() - 1, dhi = g - 1;
  auto dgens = [&](long i) {
    return (i < dlo || i > dhi) ? 0L : low.term(i).gens + low.term(i + 1).gens;
  };

  long q = t.lower().is_zero() ? 0 : t.lower().period;
  long pp = t.upper().is_zero() ? 0 : t.upper().period;
  long newlo = std::min(t.lo(), q > 0 ? dlo - 1 - q : dlo);
  long newhi = pp > 0 ? std::max(t.hi(), g + pp) : std::max(t.hi(), dhi);

  ChainComplex tn(t.ring(), t.side(), newlo, newhi, t.lower(), t.upper());
  for (long i = newlo; i <= newhi; ++i) {
    if (dgens(i) > 0)
      tn.set_term(i, direct_sum(t.term(i), direct_sum(low.term(i), low.term(i + 1))));
    else
      tn.set_term(i, t.term(i));
  }
  for (long i = newlo + 1; i <= newhi; ++i) {
    if (dgens(i) == 0 && dgens(i - 1) == 0) {
      tn.set_dif(i, t.dif(i));
      continue;
    }
    long r0 = low.term(i - 1).gens, r1 = low.term(i).gens;
    long c1 = low.term(i).gens, c2 = low.term(i + 1).gens;
    ExactMatrix dd(d, r0 + r1, c1 + c2);
    dd.paste(0, 0, low.dif(i));
    dd.paste(r0, 0, ExactMatrix::identity(d, r1));
    dd.paste(r0, c1, low.dif(i + 1).negated());
    tn.set_dif(i, block_diag(t.dif(i), dd));
  }
  tn.validate();

  std::map<long, ExactMatrix> mats;
  for (long i = newlo; i <= newhi; ++i) {
    ExactMatrix base = c.tau.at(i);
    if (dgens(i) == 0) {
      mats.emplace(i, std::move(base));
      continue;
    }
    ExactMatrix pi(d, a.term(i).gens, dgens(i));
    pi.paste(0, 0, ExactMatrix::identity(d, low.term(i).gens));
    mats.emplace(i, hstack(base, pi));
  }
  ChainMap tau = make_chain_map(tn, a, std::move(mats), newlo, newhi, Tail::zero(),
                                c.tau.upper_ext);
  return CompleteResolutionData{std::move(tn), c.approx, std::move(tau), g};
}

ChainMap lift_chain_map(const ChainMap& pa, const ChainMap& pb, const ChainMap& f) {
  const ChainComplex& sa = pa.src;
  const ChainComplex& sb = pb.src;
  const ChainComplex& ta = pa.tgt;
  const ChainComplex& tb = pb.tgt;
  auto bounded = [](const ChainComplex& c) {
    return c.lower().is_zero() && c.upper().is_zero();
  };
  if (!bounded(sa) || !bounded(sb) || !bounded(ta) || !bounded(tb))
    throw InputError("lift_chain_map requires bounded complexes");
  const CoefficientDomain d = sa.dom();
  long lo = std::min(sa.lo(), sb.lo()), hi = std::max(sa.hi(), sb.hi());

  std::map<long, HomSpace> hs;
  std::map<long, long> coff, yoff, zoff, aoff, boff;
  long ncols = 0, nrows = 0;
  for (long i = lo; i <= hi; ++i) {
    hs.emplace(i, hom_space(sa.term(i), sb.term(i)));
    coff[i] = ncols;
    ncols += hs.at(i).pres.gens;
  }
  for (long i = lo; i <= hi; ++i) {
    yoff[i] = ncols;
    ncols += tb.term(i).rel.cols() * sa.term(i).gens;
  }
  for (long i = lo + 1; i <= hi; ++i) {
    zoff[i] = ncols;
    ncols += sb.term(i - 1).rel.cols() * sa.term(i).gens;
  }
  for (long i = lo; i <= hi; ++i) {
    aoff[i] = nrows;
    nrows += tb.term(i).gens * sa.term(i).gens;
  }
  for (long i = lo + 1; i <= hi; ++i) {
    boff[i] = nrows;
    nrows += sb.term(i - 1).gens * sa.term(i).gens;
  }

  ExactMatrix sys(d, nrows, ncols), rhs(d, nrows, 1);
  for (long i = lo; i <= hi; ++i) {
    const HomSpace& h = hs.at(i);
    for (long k = 0; k < h.pres.gens; ++k) {
      ExactMatrix ek(d, h.pres.gens, 1);
      ek.set(k, 0, Scalar(1));
      ExactMatrix bk = h.matrix_of(ek);
      sys.paste(aoff[i], coff[i] + k, vec_rm(pb.at(i) * bk));
      if (i > lo) sys.paste(boff[i], coff[i] + k, vec_rm(sb.dif(i) * bk));
      if (i < hi) sys.paste(boff[i + 1], coff[i] + k, vec_rm(bk * sa.dif(i + 1)).negated());
    }
    if (tb.term(i).rel.cols() > 0 && sa.term(i).gens > 0)
      sys.paste(aoff[i], yoff[i],
                kron(tb.term(i).rel, ExactMatrix::identity(d, sa.term(i).gens)).negated());
    if (i > lo && sb.term(i - 1).rel.cols() > 0 && sa.term(i).gens > 0)
      sys.paste(boff[i], zoff[i],
                kron(sb.term(i - 1).rel, ExactMatrix::identity(d, sa.term(i).gens)).negated());
    rhs.paste(aoff[i], 0, vec_rm(f.at(i) * pa.at(i)));
  }

  auto sol = LinearSolver(sys).solve(rhs);
  if (!sol) throw InternalError("lift_chain_map: comparison lift is unsolvable");

  std::map<long, ExactMatrix> mats;
  for (long i = lo; i <= hi; ++i) {
    const HomSpace& h = hs.at(i);
    ExactMatrix coords(d, h.pres.gens, 1);
    for (long k = 0; k < h.pres.gens; ++k) coords.set(k, 0, sol->at(coff[i] + k, 0));
    mats.emplace(i, h.matrix_of(coords));
  }
  return make_chain_map(sa, sb, std::move(mats), lo, hi);
}

namespace {

StrictResolutionData identity_resolution(const Module& m) {
  ChainComplex g = one_term_complex(m, 0);
  ChainMap onto = identity_chain_map(g);
  ChainComplex k(m.alg, m.side, 0, 0);
  k.set_term(0, zero_module(m.alg, m.side));
  k.validate();
  ChainMap kincl =
      make_chain_map(k, g, {{0, ExactMatrix(m.dom(), m.gens, 0)}}, 0, 0);
  return StrictResolutionData{std::move(g), std::move(onto), std::move(k), std::move(kincl), 0};
}

StrictResolutionData shift_strict(const StrictResolutionData& r, long n) {
  return StrictResolutionData{shift(r.g, n), shift(r.onto, n), shift(r.k, n),
                              shift(r.k_incl, n), r.class_height};
}

}  // namespace

ModuleResolver frobenius_resolver() {
  return [](const Module& m) { return identity_resolution(m); };
}

ModuleResolver free_resolver() {
  return [](const Module& m) -> StrictResolutionData {
    if (is_projective(m)) return identity_resolution(m);
    CoverData c = cover_by_free(m);
    KernelData kd = kernel_of_morphism(c.free, c.pi, m);
    ChainComplex g(m.alg, m.side, 0, 1);
    g.set_term(0, c.free);
    g.set_term(1, kd.ker);
    g.set_dif(1, kd.incl);
    g.validate();
    std::map<long, ExactMatrix> om{{0, c.pi}, {1, ExactMatrix(m.dom(), 0, kd.ker.gens)}};
    ChainMap onto = make_chain_map(g, one_term_complex(m, 0), std::move(om), 0, 1);
    ComplexKernel ck = kernel_complex(onto);
    return StrictResolutionData{std::move(g), std::move(onto), std::move(ck.ker),
                                std::move(ck.incl), 1};
  };
}

namespace {

// glue step shared by the strict and the semi-projective assembly: given a
// strict-ish resolution ra of the top module placed at s-1 and cur resolving
// the part below s, produce the cone resolution of the part up to s
struct GlueResult {
  ConeData cd;
  ChainMap onto;
  ChainMap lift;
};

GlueResult glue_step(const ChainComplex& m, long s, const ChainMap& ra_onto,
                     const ChainMap& cur_onto) {
  const CoefficientDomain d = m.dom();
  ChainComplex b = truncate_above(m, s - 1);
  ChainMap f = make_chain_map(one_term_complex(m.term(s), s - 1), b, {{s - 1, m.dif(s)}}, s - 1,
                              s - 1);
  ChainMap lift = lift_chain_map(ra_onto, cur_onto, f);
  ConeData cd = cone(lift);

  ChainComplex tgt = truncate_above(m, s);
  std::map<long, ExactMatrix> om;
  for (long i = cd.cone.lo(); i <= cd.cone.hi(); ++i) {
    long ga = ra_onto.src.term(i - 1).gens, gb = cur_onto.src.term(i).gens;
    ExactMatrix row(d, tgt.term(i).gens, ga + gb);
    if (i == s) row.paste(0, 0, ra_onto.at(s - 1));
    if (i <= s - 1) row.paste(0, ga, cur_onto.at(i));
    om.emplace(i, std::move(row));
  }
  ChainMap onto =
      make_chain_map(cd.cone, std::move(tgt), std::move(om), cd.cone.lo(), cd.cone.hi());
  return GlueResult{std::move(cd), std::move(onto), std::move(lift)};
}

}  // namespace

StrictResolutionData assemble_complex_resolution(const ChainComplex& m, const ModuleResolver& r) {
  if (!m.lower().is_zero() || !m.upper().is_zero())
    throw InputError("assemble_complex_resolution requires a bounded complex");
  auto inf = m.inf_deg();
  if (!inf) {
    ChainComplex z = zero_complex(m.ring(), m.side());
    ChainMap onto = make_chain_map(z, m, {{0, ExactMatrix(m.dom(), m.term(0).gens, 0)}}, 0, 0);
    ChainComplex k = zero_complex(m.ring(), m.side());
    ChainMap kincl = make_chain_map(k, z, {{0, ExactMatrix(m.dom(), 0, 0)}}, 0, 0);
    return StrictResolutionData{std::move(z), std::move(onto), std::move(k), std::move(kincl), 0};
  }
  long s0 = *inf, s1 = *m.sup_deg();

  StrictResolutionData cur = shift_strict(r(m.term(s0)), s0);
  for (long s = s0 + 1; s <= s1; ++s) {
    StrictResolutionData ra = shift_strict(r(m.term(s)), s - 1);
    GlueResult glued = glue_step(m, s, ra.onto, cur.onto);

    // kernel comparison h : ra.k -> cur.k through the inclusions
    long klo = std::min(ra.k.lo(), cur.k.lo()), khi = std::max(ra.k.hi(), cur.k.hi());
    std::map<long, ExactMatrix> hm;
    for (long i = klo; i <= khi; ++i) {
      ExactMatrix rhs = glued.lift.at(i) * ra.k_incl.at(i);
      auto x = LinearSolver(cur.k_incl.at(i)).solve(rhs);
      if (!x) throw InternalError("assemble_complex_resolution: kernel comparison escaped");
      hm.emplace(i, *x);
    }
    ChainMap h = make_chain_map(ra.k, cur.k, std::move(hm), klo, khi);
    ConeData kc = cone(h);

    std::map<long, ExactMatrix> kim;
    for (long i = kc.cone.lo(); i <= kc.cone.hi(); ++i)
      kim.emplace(i, block_diag(ra.k_incl.at(i - 1), cur.k_incl.at(i)));
    ChainMap kincl = make_chain_map(kc.cone, glued.cd.cone, std::move(kim), kc.cone.lo(),
                                    kc.cone.hi());

    cur = StrictResolutionData{glued.cd.cone, glued.onto, std::move(kc.cone), std::move(kincl),
                               std::max(ra.class_height, cur.class_height)};
  }
  if (!strict_resolution_certificate(cur, m))
    throw InternalError("assemble_complex_resolution: postconditions failed");
  return cur;
}

bool strict_resolution_certificate(const StrictResolutionData& r, const ChainComplex& m) {
  long lo = std::min({r.g.lo(), r.k.lo(), m.lo()}) - 1;
  long hi = std::max({r.g.hi(), r.k.hi(), m.hi()}) + 1;
  if (!acyclic_on(r.k, lo, hi).ok) return false;

  const CoefficientDomain d = m.dom();
  for (long i = lo; i <= hi; ++i) {
    const Module& tgt = m.term(i);
    ExactMatrix fi = r.onto.at(i);
    if (!LinearSolver(hstack(fi, tgt.rel)).solve(ExactMatrix::identity(d, tgt.gens)))
      return false;
    ExactMatrix cyc = constrained_kernel(fi, tgt.rel);
    ExactMatrix im = r.k_incl.at(i);
    if (!LinearSolver(im).solve(cyc)) return false;
    if (!LinearSolver(cyc).solve(im)) return false;
  }

  auto minf = m.inf_deg();
  if (minf) {
    if (r.g.inf_deg() != minf) return false;
    long msup = *m.sup_deg();
    long gsup = r.g.sup_deg().value_or(msup);
    if (gsup > msup + r.class_height) return false;
    for (long i = msup + 1; i <= gsup; ++i)
      if (r.g.term(i).gens > 0 && !is_projective(r.g.term(i))) return false;
  }
  return true;
}

SemiProjectiveData semi_projective_resolution(const ChainComplex& m, long depth) {
  if (!m.lower().is_zero() || !m.upper().is_zero())
    throw InputError("semi_projective_resolution requires a bounded complex");
  auto inf = m.inf_deg();
  if (!inf) {
    ChainComplex z = zero_complex(m.ring(), m.side());
    ChainMap onto = make_chain_map(z, m, {{0, ExactMatrix(m.dom(), m.term(0).gens, 0)}}, 0, 0);
    return SemiProjectiveData{std::move(z), std::move(onto), depth - 2};
  }
  long s0 = *inf, s1 = *m.sup_deg();
  if (depth <= s1)
    throw InputError("semi_projective_resolution: depth must exceed the top degree");

  auto resolve_at = [&](long s) -> ChainMap {
    ProjectiveResolutionData p = projective_resolution(m.term(s));
    ChainComplex pc = truncate_above(shift(p.cx, s), depth);
    long plo = pc.lo(), phi = pc.hi();
    std::map<long, ExactMatrix> om;
    for (long i = plo; i <= phi; ++i)
      om.emplace(i, i == s ? p.aug : ExactMatrix(m.dom(), 0, pc.term(i).gens));
    return make_chain_map(std::move(pc), one_term_complex(m.term(s), s), std::move(om), plo, phi);
  };

  ChainMap cur = resolve_at(s0);
  for (long s = s0 + 1; s <= s1; ++s) {
    ChainMap ra = shift(resolve_at(s), -1);
    GlueResult glued = glue_step(m, s, ra, cur);
    cur = std::move(glued.onto);
  }
  ChainComplex p = cur.src;
  return SemiProjectiveData{std::move(p), std::move(cur), depth - 2};
}

}  // namespace gorhom
