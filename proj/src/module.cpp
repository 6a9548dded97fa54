#include <gorhom/module.hpp>

#include <random>

namespace gorhom {

namespace {

// row-major vectorization: entry (r, c) of an R x C matrix lands at r*C + c
ExactMatrix vec_rm(const ExactMatrix& x) {
  ExactMatrix v(x.domain(), x.rows() * x.cols(), 1);
  for (long r = 0; r < x.rows(); ++r)
    for (long c = 0; c < x.cols(); ++c) v.set(r * x.cols() + c, 0, x.at(r, c));
  return v;
}

ExactMatrix unvec_rm(const ExactMatrix& v, long rows, long cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw InternalError("unvec shape mismatch");
  ExactMatrix x(v.domain(), rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) x.set(r, c, v.at(r * cols + c, 0));
  return x;
}

// coefficient matrix of X -> A*X on row-major vec, X having xcols columns
ExactMatrix lmul_on_vec(const ExactMatrix& a, long xcols) {
  return kron(a, ExactMatrix::identity(a.domain(), xcols));
}

// coefficient matrix of X -> X*B on row-major vec, X having xrows rows
ExactMatrix rmul_on_vec(const ExactMatrix& b, long xrows) {
  return kron(ExactMatrix::identity(b.domain(), xrows), b.transpose());
}

// structure-constant combination sum_m c[i][j][m] act[m]
ExactMatrix structure_combo(const Algebra& a, const std::vector<ExactMatrix>& act, long i, long j) {
  ExactMatrix s(act[0].domain(), act[0].rows(), act[0].cols());
  for (long m = 0; m < a.dim; ++m)
    s = s + act[static_cast<size_t>(m)].scaled(a.lmul[static_cast<size_t>(i)].at(m, j));
  return s;
}

std::vector<Scalar> coeff_pool(const CoefficientDomain& dom) {
  if (dom.kind == CoefficientDomain::Kind::Fp) {
    std::vector<Scalar> out;
    for (long c = 1; c < dom.p; ++c) out.emplace_back(c);
    return out;
  }
  return {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3), Scalar(-3)};
}

}  // namespace

ExactMatrix Module::action(const ExactMatrix& r) const {
  if (r.rows() != alg->dim || r.cols() != 1) throw InternalError("action: bad element shape");
  ExactMatrix m(dom(), gens, gens);
  for (long i = 0; i < alg->dim; ++i) m = m + act[static_cast<size_t>(i)].scaled(r.at(i, 0));
  return m;
}

void Module::validate() const {
  if (!alg) throw InputError("module '" + id + "': missing algebra");
  const Algebra& a = *alg;
  if (gens < 0) throw InputError("module '" + id + "': negative generator count");
  if (static_cast<long>(act.size()) != a.dim)
    throw InputError("module '" + id + "': need one action matrix per algebra basis element");
  for (const auto& m : act)
    if (m.rows() != gens || m.cols() != gens || !(m.domain() == dom()))
      throw InputError("module '" + id + "': malformed action matrix");
  if (rel.rows() != gens || !(rel.domain() == dom()))
    throw InputError("module '" + id + "': malformed relation matrix");
  if (dom().is_field() && rel.cols() != 0)
    throw InputError("module '" + id + "': field-domain modules must have a free underlying space");

  // relations must be stable under the action so the quotient is a module
  if (rel.cols() > 0) {
    LinearSolver rel_solver(rel);
    for (long i = 0; i < a.dim; ++i)
      if (!rel_solver.solve(act[static_cast<size_t>(i)] * rel))
        throw InputError("module '" + id + "': action does not preserve the relations");
  }

  for (long i = 0; i < a.dim; ++i) {
    for (long j = 0; j < a.dim; ++j) {
      const ExactMatrix& ai = act[static_cast<size_t>(i)];
      const ExactMatrix& aj = act[static_cast<size_t>(j)];
      ExactMatrix composite = side == Side::Left ? ai * aj : aj * ai;
      if (!congruent(composite, structure_combo(a, act, i, j), rel))
        throw InputError("module '" + id + "': action is not a representation at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  ExactMatrix unit_act = action(a.unit);
  if (!congruent(unit_act, ExactMatrix::identity(dom(), gens), rel))
    throw InputError("module '" + id + "': unit does not act as identity");
}

Module make_module(AlgebraPtr a, Side side, long gens, std::vector<ExactMatrix> act,
                   ExactMatrix rel, std::string id) {
  Module m{std::move(a), side, gens, std::move(rel), std::move(act), std::move(id)};
  m.validate();
  return m;
}

Module zero_module(AlgebraPtr a, Side side) {
  std::vector<ExactMatrix> act(static_cast<size_t>(a->dim), ExactMatrix(a->dom, 0, 0));
  return make_module(std::move(a), side, 0, std::move(act), ExactMatrix(a->dom, 0, 0), "0");
}

Module free_module(AlgebraPtr a, Side side, long copies, std::string id) {
  if (copies < 0) throw InputError("free module: negative rank");
  const CoefficientDomain d = a->dom;
  long g = copies * a->dim;
  ExactMatrix eye = ExactMatrix::identity(d, copies);
  std::vector<ExactMatrix> act;
  for (long i = 0; i < a->dim; ++i) {
    ExactMatrix mult = side == Side::Left ? a->lmul[static_cast<size_t>(i)]
                                          : a->right_mult(a->basis_element(i));
    act.push_back(kron(eye, mult));
  }
  if (id.empty()) id = "R^" + std::to_string(copies);
  return make_module(std::move(a), side, g, std::move(act), ExactMatrix(d, g, 0), std::move(id));
}

Module regular_module(AlgebraPtr a, Side side) { return free_module(std::move(a), side, 1, "R"); }

Module simple_module(AlgebraPtr a, Side side) {
  if (!a->residue_map)
    throw InputError("algebra '" + a->name + "' carries no residue map; no canonical simple module");
  const ExactMatrix& chi = *a->residue_map;
  const CoefficientDomain d = a->dom;
  std::vector<ExactMatrix> act;
  for (long i = 0; i < a->dim; ++i) {
    ExactMatrix m(d, 1, 1);
    m.set(0, 0, chi.at(0, i));
    act.push_back(m);
  }
  std::string id = d.is_field() ? "k" : "Ztriv";
  return make_module(std::move(a), side, 1, std::move(act), ExactMatrix(d, 1, 0), std::move(id));
}

Module character_module(AlgebraPtr a, Side side, const Scalar& c, std::string id) {
  const CoefficientDomain d = a->dom;
  std::vector<ExactMatrix> act;
  Scalar pw = d.canon(Scalar(1));
  for (long i = 0; i < a->dim; ++i) {
    ExactMatrix m(d, 1, 1);
    m.set(0, 0, pw);
    act.push_back(m);
    pw = d.mul(pw, c);
  }
  if (id.empty()) id = "chi(" + c.get_str() + ")";
  return make_module(std::move(a), side, 1, std::move(act), ExactMatrix(d, 1, 0), std::move(id));
}

Module character_quotient_module(AlgebraPtr a, Side side, const Scalar& c, const mpz_class& m,
                                 std::string id) {
  const CoefficientDomain d = a->dom;
  if (d.is_field()) throw InputError("cyclic quotient modules need a Z-domain algebra");
  std::vector<ExactMatrix> act;
  Scalar pw(1);
  for (long i = 0; i < a->dim; ++i) {
    ExactMatrix mat(d, 1, 1);
    mat.set(0, 0, pw);
    act.push_back(mat);
    pw = pw * c;
  }
  ExactMatrix rel(d, 1, 1);
  rel.set(0, 0, Scalar(m));
  if (id.empty()) id = "Z/" + m.get_str() + (c == 1 ? "" : "(" + c.get_str() + ")");
  return make_module(std::move(a), side, 1, std::move(act), std::move(rel), std::move(id));
}

Module direct_sum(const Module& x, const Module& y) {
  if (!algebras_equal(*x.alg, *y.alg) || x.side != y.side)
    throw InputError("direct sum: incompatible modules");
  std::vector<ExactMatrix> act;
  for (size_t i = 0; i < x.act.size(); ++i) act.push_back(block_diag(x.act[i], y.act[i]));
  return make_module(x.alg, x.side, x.gens + y.gens, std::move(act), block_diag(x.rel, y.rel),
                     x.id + "+" + y.id);
}

Module dual_module(const Module& m) {
  if (!m.dom().is_field()) throw InputError("duals are only available over field domains");
  std::vector<ExactMatrix> act;
  for (const auto& a : m.act) act.push_back(a.transpose());
  return make_module(m.alg, opposite(m.side), m.gens, std::move(act),
                     ExactMatrix(m.dom(), m.gens, 0), "D(" + m.id + ")");
}

bool modules_equal(const Module& x, const Module& y) {
  if (!algebras_equal(*x.alg, *y.alg) || x.side != y.side || x.gens != y.gens) return false;
  if (!(x.rel == y.rel)) return false;
  for (size_t i = 0; i < x.act.size(); ++i)
    if (!(x.act[i] == y.act[i])) return false;
  return true;
}

bool is_morphism(const Module& src, const ExactMatrix& f, const Module& tgt) {
  if (f.rows() != tgt.gens || f.cols() != src.gens) return false;
  if (!morphism_well_defined(src.pres(), f, tgt.pres())) return false;
  for (long i = 0; i < src.alg->dim; ++i)
    if (!congruent(f * src.act[static_cast<size_t>(i)], tgt.act[static_cast<size_t>(i)] * f,
                   tgt.rel))
      return false;
  return true;
}

namespace {

// does the submodule generated by the selected standard generators fill m?
bool generates(const Module& m, const std::vector<long>& keep) {
  ExactMatrix sel(m.dom(), m.gens, static_cast<long>(keep.size()));
  for (long a = 0; a < static_cast<long>(keep.size()); ++a)
    sel.set(keep[static_cast<size_t>(a)], a, Scalar(1));
  ExactMatrix span(m.dom(), m.gens, 0);
  for (const auto& ai : m.act) span = hstack(span, ai * sel);
  if (m.dom().is_field()) return rank_of(span) == m.gens;
  ExactMatrix with_rel = hstack(span, m.rel);
  SmithResult s = smith_normal_form(with_rel);
  if (s.rank != m.gens) return false;
  for (const auto& d : s.invariants)
    if (d != 1) return false;
  return true;
}

}  // namespace

std::vector<long> minimal_generators(const Module& m) {
  std::vector<long> keep;
  for (long i = 0; i < m.gens; ++i) keep.push_back(i);
  if (!generates(m, keep))
    throw InternalError("standard generators fail to generate '" + m.id + "'");
  for (long i = 0; i < m.gens; ++i) {
    std::vector<long> trial;
    for (long j : keep)
      if (j != i) trial.push_back(j);
    if (trial.size() < keep.size() && generates(m, trial)) keep = trial;
  }
  return keep;
}

CoverData cover_by_free(const Module& m) {
  std::vector<long> gens = minimal_generators(m);
  long s = static_cast<long>(gens.size());
  long d = m.alg->dim;
  Module fr = free_module(m.alg, m.side, s, "F(" + m.id + ")");
  ExactMatrix pi(m.dom(), m.gens, s * d);
  for (long a = 0; a < s; ++a) {
    for (long e = 0; e < d; ++e) {
      ExactMatrix col = m.act[static_cast<size_t>(e)].col(gens[static_cast<size_t>(a)]);
      for (long r = 0; r < m.gens; ++r) pi.set(r, a * d + e, col.at(r, 0));
    }
  }
  if (!is_morphism(fr, pi, m)) throw InternalError("free cover is not a morphism");
  return CoverData{std::move(fr), std::move(pi)};
}

KernelData kernel_of_morphism(const Module& src, const ExactMatrix& f, const Module& tgt) {
  if (src.rel.cols() != 0)
    throw InputError("kernel_of_morphism needs a source with free underlying space");
  if (!is_morphism(src, f, tgt)) throw InputError("kernel_of_morphism: map is not a morphism");
  ExactMatrix incl = constrained_kernel(f, tgt.rel);
  LinearSolver in_ker(incl);
  std::vector<ExactMatrix> act;
  for (const auto& ai : src.act) {
    auto coords = in_ker.solve(ai * incl);
    if (!coords) throw InternalError("kernel is not action-stable");
    act.push_back(*coords);
  }
  Module ker = make_module(src.alg, src.side, incl.cols(), std::move(act),
                           ExactMatrix(src.dom(), incl.cols(), 0), "ker(" + tgt.id + ")");
  return KernelData{std::move(ker), std::move(incl)};
}

TensorSpace module_tensor(const Module& mright, const Module& nleft) {
  if (mright.side != Side::Right || nleft.side != Side::Left)
    throw InputError("module_tensor needs a right module and a left module");
  if (!algebras_equal(*mright.alg, *nleft.alg))
    throw InputError("module_tensor: modules over different algebras");
  const CoefficientDomain d = mright.dom();
  long gm = mright.gens, gn = nleft.gens;
  ExactMatrix im = ExactMatrix::identity(d, gm), in = ExactMatrix::identity(d, gn);

  ExactMatrix balance(d, gm * gn, 0);
  for (long e = 0; e < mright.alg->dim; ++e)
    balance = hstack(balance, kron(mright.act[static_cast<size_t>(e)], in) -
                                  kron(im, nleft.act[static_cast<size_t>(e)]));

  TensorSpace t;
  t.gm = gm;
  t.gn = gn;
  if (d.is_field()) {
    ExactMatrix q = kernel_basis(balance.transpose()).transpose();  // functionals killing relations
    auto s = LinearSolver(q).solve(ExactMatrix::identity(d, q.rows()));
    if (!s) throw InternalError("tensor quotient has no section");
    t.pres = Presentation::free_of(d, q.rows());
    t.to_q = q;
    t.from_q = *s;
  } else {
    ExactMatrix rel = hstack(hstack(kron(mright.rel, in), kron(im, nleft.rel)), balance);
    t.pres = Presentation{d, gm * gn, std::move(rel)};
    t.to_q = ExactMatrix::identity(d, gm * gn);
    t.from_q = t.to_q;
  }
  return t;
}

ExactMatrix tensor_induced(const TensorSpace& src, const TensorSpace& dst, const ExactMatrix& f,
                           const ExactMatrix& g) {
  if (f.cols() != src.gm || g.cols() != src.gn || f.rows() != dst.gm || g.rows() != dst.gn)
    throw InternalError("tensor_induced shape mismatch");
  return dst.to_q * kron(f, g) * src.from_q;
}

ExactMatrix HomSpace::matrix_of(const ExactMatrix& coords) const {
  return unvec_rm(basis * coords, gn, gm);
}

ExactMatrix HomSpace::coords_of(const ExactMatrix& X) const {
  auto c = LinearSolver(basis).solve(vec_rm(X));
  if (!c) throw InternalError("matrix is not in the homomorphism space");
  return *c;
}

HomSpace hom_space(const Module& m, const Module& n) {
  if (m.side != n.side) throw InputError("hom_space needs modules on the same side");
  if (!algebras_equal(*m.alg, *n.alg)) throw InputError("hom_space: modules over different algebras");
  const CoefficientDomain d = m.dom();
  long gm = m.gens, gn = n.gens;
  long dimA = m.alg->dim;

  HomSpace h;
  h.gm = gm;
  h.gn = gn;
  if (d.is_field()) {
    ExactMatrix cons(d, 0, gn * gm);
    for (long e = 0; e < dimA; ++e)
      cons = vstack(cons, lmul_on_vec(n.act[static_cast<size_t>(e)], gm) -
                              rmul_on_vec(m.act[static_cast<size_t>(e)], gn));
    h.basis = kernel_basis(cons);
    h.pres = Presentation::free_of(d, h.basis.cols());
    return h;
  }

  // unknowns: vec(X) | vec(Y_e) per basis element | vec(Y') with
  //   n.act[e] X - X m.act[e] = rel_n Y_e     and     X rel_m = rel_n Y'
  long rm = m.rel.cols(), rn = n.rel.cols();
  long nx = gn * gm;
  std::vector<ExactMatrix> rows;
  for (long e = 0; e < dimA; ++e) {
    ExactMatrix row = lmul_on_vec(n.act[static_cast<size_t>(e)], gm) -
                      rmul_on_vec(m.act[static_cast<size_t>(e)], gn);
    for (long e2 = 0; e2 < dimA; ++e2)
      row = hstack(row, e2 == e ? lmul_on_vec(n.rel, gm).negated()
                                : ExactMatrix(d, nx, rn * gm));
    row = hstack(row, ExactMatrix(d, nx, rn * rm));
    rows.push_back(row);
  }
  {
    ExactMatrix row = rmul_on_vec(m.rel, gn);
    row = hstack(row, ExactMatrix(d, gn * rm, dimA * rn * gm));
    row = hstack(row, kron(n.rel, ExactMatrix::identity(d, rm)).negated());
    rows.push_back(row);
  }
  ExactMatrix big(d, 0, rows.empty() ? 0 : rows[0].cols());
  for (const auto& r : rows) big = vstack(big, r);

  ExactMatrix sols = kernel_basis(big);
  ExactMatrix xpart(d, nx, sols.cols());
  for (long r = 0; r < nx; ++r)
    for (long c = 0; c < sols.cols(); ++c) xpart.set(r, c, sols.at(r, c));
  h.basis = column_basis(xpart);

  // zero maps factor through the relations of n: X = rel_n E
  ExactMatrix zero_maps = kron(n.rel, ExactMatrix::identity(d, gm));
  ExactMatrix rel_coords(d, h.basis.cols(), 0);
  if (zero_maps.cols() > 0) {
    auto c = LinearSolver(h.basis).solve(zero_maps);
    if (!c) throw InternalError("zero homomorphisms escape the solution lattice");
    rel_coords = *c;
  }
  h.pres = Presentation{d, h.basis.cols(), std::move(rel_coords)};
  return h;
}

Module hom_into_regular(const Module& mright) {
  if (mright.side != Side::Right) throw InputError("hom_into_regular needs a right module");
  Module reg = regular_module(mright.alg, Side::Right);
  HomSpace h = hom_space(mright, reg);
  const Algebra& a = *mright.alg;
  long g = h.pres.gens;
  std::vector<ExactMatrix> act;
  for (long e = 0; e < a.dim; ++e) {
    ExactMatrix ae(mright.dom(), g, g);
    for (long k = 0; k < g; ++k) {
      ExactMatrix ek(mright.dom(), g, 1);
      ek.set(k, 0, Scalar(1));
      ExactMatrix post = a.lmul[static_cast<size_t>(e)] * h.matrix_of(ek);  // (e . f)(x) = e f(x)
      ExactMatrix coords = h.coords_of(post);
      for (long r = 0; r < g; ++r) ae.set(r, k, coords.at(r, 0));
    }
    act.push_back(ae);
  }
  return make_module(mright.alg, Side::Left, g, std::move(act), h.pres.rel,
                     "Hom(" + mright.id + ",R)");
}

namespace {

// submodule of the regular module spanned by the given ambient columns
Module regular_submodule(AlgebraPtr a, Side side, const ExactMatrix& span, const std::string& id) {
  ExactMatrix basis = column_basis(span);
  LinearSolver in_basis(basis);
  std::vector<ExactMatrix> act;
  for (long e = 0; e < a->dim; ++e) {
    ExactMatrix amb = side == Side::Left ? a->lmul[static_cast<size_t>(e)]
                                         : a->right_mult(a->basis_element(e));
    auto coords = in_basis.solve(amb * basis);
    if (!coords) throw InternalError("regular submodule is not action-stable");
    act.push_back(*coords);
  }
  return make_module(a, side, basis.cols(), std::move(act), ExactMatrix(a->dom, basis.cols(), 0),
                     id);
}

}  // namespace

std::vector<Module> indecomposable_injectives(AlgebraPtr a, Side side) {
  if (!a->dom.is_field())
    throw InputError("algebra '" + a->name +
                     "': injective classification is only supported over field domains");
  std::vector<Module> out;
  if (a->idempotent_basis) {
    for (long j : *a->idempotent_basis) {
      // injective left modules are duals of the right projectives e_j R, and dually
      ExactMatrix span = side == Side::Left ? a->lmul[static_cast<size_t>(j)]
                                            : a->right_mult(a->basis_element(j));
      Module proj = regular_submodule(a, opposite(side), span,
                                      side == Side::Left ? "e" + std::to_string(j) + "R"
                                                         : "Re" + std::to_string(j));
      Module inj = dual_module(proj);
      inj.id = "E" + std::to_string(j);
      out.push_back(std::move(inj));
    }
    return out;
  }
  if (a->known_local) {
    Module inj = dual_module(regular_module(a, opposite(side)));
    inj.id = "E";
    out.push_back(std::move(inj));
    return out;
  }
  throw InputError("algebra '" + a->name +
                   "': no certified idempotent decomposition; cannot list injectives");
}

namespace {

bool candidate_is_iso(const Module& m, const Module& n, const ExactMatrix& x) {
  if (m.dom().is_field()) return m.gens == n.gens && rank_of(x) == m.gens;
  // surjective: columns of [x | rel_n] span the full lattice
  SmithResult s = smith_normal_form(hstack(x, n.rel));
  if (s.rank != n.gens) return false;
  for (const auto& inv : s.invariants)
    if (inv != 1) return false;
  // injective: anything mapped into the relations of n was already a relation of m
  ExactMatrix pulled = constrained_kernel(x, n.rel);
  if (pulled.cols() == 0) return true;
  if (m.rel.cols() == 0) return false;
  return LinearSolver(column_basis(m.rel)).solve(pulled).has_value();
}

}  // namespace

std::optional<ExactMatrix> iso_search(const Module& m, const Module& n) {
  if (!algebras_equal(*m.alg, *n.alg) || m.side != n.side) return std::nullopt;
  if (!(m.descriptor() == n.descriptor())) return std::nullopt;
  if (m.descriptor().is_zero()) return ExactMatrix(m.dom(), n.gens, m.gens);

  HomSpace h = hom_space(m, n);
  long hdim = h.pres.gens;
  if (hdim == 0) return std::nullopt;
  std::vector<Scalar> pool = coeff_pool(m.dom());

  auto try_coords = [&](const ExactMatrix& coords) -> std::optional<ExactMatrix> {
    ExactMatrix x = h.matrix_of(coords);
    if (candidate_is_iso(m, n, x)) return x;
    return std::nullopt;
  };

  ExactMatrix coords(m.dom(), hdim, 1);
  for (long i = 0; i < hdim; ++i) {
    for (const auto& c : pool) {
      ExactMatrix cc(m.dom(), hdim, 1);
      cc.set(i, 0, c);
      if (auto x = try_coords(cc)) return x;
    }
  }
  for (long i = 0; i < hdim; ++i) {
    for (long j = i + 1; j < hdim; ++j) {
      for (const auto& ci : pool) {
        for (const auto& cj : pool) {
          ExactMatrix cc(m.dom(), hdim, 1);
          cc.set(i, 0, ci);
          cc.set(j, 0, cj);
          if (auto x = try_coords(cc)) return x;
        }
      }
    }
  }
  std::mt19937 rng(20240);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 600; ++trial) {
    ExactMatrix cc(m.dom(), hdim, 1);
    for (long i = 0; i < hdim; ++i)
      if (coin(rng) != 0) cc.set(i, 0, pool[pick(rng)]);
    if (auto x = try_coords(cc)) return x;
  }
  return std::nullopt;
}

bool is_projective(const Module& m) {
  if (m.alg->is_trivial()) {
    if (m.dom().is_field()) return true;
    return m.descriptor().torsion.empty();
  }
  CoverData cover = cover_by_free(m);
  const CoefficientDomain d = m.dom();
  long gf = cover.free.gens, gm = m.gens;
  long nx = gf * gm;

  // section unknowns: vec(X) with X: m -> free, R-linear, pi X = id (mod rel)
  std::vector<ExactMatrix> rows;
  std::vector<ExactMatrix> rhs;
  for (long e = 0; e < m.alg->dim; ++e) {
    rows.push_back(lmul_on_vec(cover.free.act[static_cast<size_t>(e)], gm) -
                   rmul_on_vec(m.act[static_cast<size_t>(e)], gf));
    rhs.push_back(ExactMatrix(d, nx, 1));
  }
  if (m.rel.cols() > 0) {
    rows.push_back(rmul_on_vec(m.rel, gf));  // X must kill the relations: X rel = 0
    rhs.push_back(ExactMatrix(d, gf * m.rel.cols(), 1));
  }
  rows.push_back(lmul_on_vec(cover.pi, gm));  // pi X = id
  rhs.push_back(vec_rm(ExactMatrix::identity(d, gm)));

  long rm = m.rel.cols();
  long extra = rm > 0 ? rm * gm : 0;  // congruence slack: pi X - id = rel Y
  ExactMatrix big(d, 0, nx + extra);
  ExactMatrix bvec(d, 0, 1);
  for (size_t i = 0; i < rows.size(); ++i) {
    ExactMatrix row = rows[i];
    bool is_split_row = i + 1 == rows.size();
    if (extra > 0)
      row = hstack(row, is_split_row ? kron(m.rel, ExactMatrix::identity(d, gm)).negated()
                                     : ExactMatrix(d, row.rows(), extra));
    big = vstack(big, row);
    bvec = vstack(bvec, rhs[i]);
  }
  return solve_linear(big, bvec).ok();
}

}  // namespace gorhom
