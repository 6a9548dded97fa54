#include <gorhom/tensor.hpp>

#include <string>

namespace gorhom {

namespace {

// first-factor degrees contributing a nonzero summand to tensor degree deg
std::vector<long> component_degrees(const ChainComplex& m, const ChainComplex& n, long deg) {
  std::vector<long> is;
  if (m.bounded_below() && m.bounded_above()) {
    auto s = m.sup_deg();
    auto f = m.inf_deg();
    if (s && f)
      for (long i = *f; i <= *s; ++i)
        if (m.term(i).gens > 0 && n.term(deg - i).gens > 0) is.push_back(i);
  } else if (n.bounded_below() && n.bounded_above()) {
    auto s = n.sup_deg();
    auto f = n.inf_deg();
    if (s && f)
      for (long j = *s; j >= *f; --j) {
        long i = deg - j;
        if (m.term(i).gens > 0 && n.term(j).gens > 0) is.push_back(i);
      }
  } else {
    throw InputError("tensor_complexes: at least one factor must be bounded");
  }
  return is;
}

long total_gens(const std::vector<std::pair<long, TensorSpace>>& comps) {
  long g = 0;
  for (const auto& [i, ts] : comps) g += ts.pres.gens;
  return g;
}

long offset_of(const std::vector<std::pair<long, TensorSpace>>& comps, long i) {
  long off = 0;
  for (const auto& [j, ts] : comps) {
    if (j == i) return off;
    off += ts.pres.gens;
  }
  return -1;
}

const TensorSpace* space_of(const std::vector<std::pair<long, TensorSpace>>& comps, long i) {
  for (const auto& [j, ts] : comps)
    if (j == i) return &ts;
  return nullptr;
}

}  // namespace

TensorComplexData tensor_complexes(const ChainComplex& m, const ChainComplex& n, long lo, long hi) {
  if (lo > hi) throw InputError("tensor_complexes: empty degree window");
  if (!algebras_equal(*m.ring(), *n.ring()))
    throw InputError("tensor_complexes: factors live over different algebras");
  if (m.side() != Side::Right || n.side() != Side::Left)
    throw InputError("tensor_complexes: need a right complex tensored with a left complex");

  CoefficientDomain d = m.dom();
  AlgebraPtr triv = make_trivial_algebra(d);
  long blo = lo - 1, bhi = hi + 1;

  TensorComplexData out{ChainComplex(triv, Side::Left, blo, bhi), {}, lo, hi};

  for (long deg = blo; deg <= bhi; ++deg) {
    std::vector<std::pair<long, TensorSpace>> comps;
    for (long i : component_degrees(m, n, deg))
      comps.emplace_back(i, module_tensor(m.term(i), n.term(deg - i)));
    long g = total_gens(comps);
    std::vector<ExactMatrix> rels;
    for (const auto& [i, ts] : comps) rels.push_back(ts.pres.rel);
    ExactMatrix rel = block_diag(d, rels);
    out.cx.set_term(deg, make_module(triv, Side::Left, g, {ExactMatrix::identity(d, g)}, rel,
                                     "tensor[" + std::to_string(deg) + "]"));
    out.parts[deg] = std::move(comps);
  }

  for (long deg = blo + 1; deg <= bhi; ++deg) {
    const auto& src = out.parts.at(deg);
    const auto& tgt = out.parts.at(deg - 1);
    ExactMatrix dif(d, total_gens(tgt), total_gens(src));
    long coff = 0;
    for (const auto& [i, ts] : src) {
      const Module& mi = m.term(i);
      const Module& nj = n.term(deg - i);
      if (const TensorSpace* tdown = space_of(tgt, i - 1)) {
        ExactMatrix blk = tensor_induced(ts, *tdown, m.dif(i), ExactMatrix::identity(d, nj.gens));
        dif.paste(offset_of(tgt, i - 1), coff, blk);
      }
      if (const TensorSpace* tsame = space_of(tgt, i)) {
        ExactMatrix blk =
            tensor_induced(ts, *tsame, ExactMatrix::identity(d, mi.gens), n.dif(deg - i));
        if (i % 2 != 0) blk = blk.negated();
        dif.paste(offset_of(tgt, i), coff, blk);
      }
      coff += ts.pres.gens;
    }
    out.cx.set_dif(deg, dif);
  }

  out.cx.validate();
  return out;
}

ChainMap tensor_chain_map(const TensorComplexData& src, const TensorComplexData& dst,
                          const ChainMap& f, const ChainMap& g) {
  if (src.cx.lo() != dst.cx.lo() || src.cx.hi() != dst.cx.hi())
    throw InputError("tensor_chain_map: windows must match");
  CoefficientDomain d = src.cx.dom();
  std::map<long, ExactMatrix> mats;
  for (long deg = src.cx.lo(); deg <= src.cx.hi(); ++deg) {
    const auto& scomps = src.parts.at(deg);
    const auto& tcomps = dst.parts.at(deg);
    ExactMatrix mat(d, total_gens(tcomps), total_gens(scomps));
    long coff = 0;
    for (const auto& [i, ts] : scomps) {
      if (const TensorSpace* tt = space_of(tcomps, i))
        mat.paste(offset_of(tcomps, i), coff, tensor_induced(ts, *tt, f.at(i), g.at(deg - i)));
      coff += ts.pres.gens;
    }
    mats.emplace(deg, std::move(mat));
  }
  return make_chain_map(src.cx, dst.cx, std::move(mats), src.cx.lo(), src.cx.hi());
}

HomologyGroup tensor_homology(const ChainComplex& m, const ChainComplex& n, long deg) {
  TensorComplexData narrow = tensor_complexes(m, n, deg, deg);
  HomologyGroup h = homology_group(narrow.cx, deg);
  TensorComplexData wide = tensor_complexes(m, n, deg - 1, deg + 1);
  HomologyGroup h2 = homology_group(wide.cx, deg);
  if (h.str() != h2.str())
    throw InternalError("tensor_homology: windowed value failed its stability self-check");
  return h;
}

HomComplexData hom_complex(const ChainComplex& m, const Module& n, long lo, long hi) {
  if (lo > hi) throw InputError("hom_complex: empty degree window");
  if (!algebras_equal(*m.ring(), *n.alg))
    throw InputError("hom_complex: complex and module live over different algebras");
  if (m.side() != n.side) throw InputError("hom_complex: complex and module must share a side");

  CoefficientDomain d = m.dom();
  AlgebraPtr triv = make_trivial_algebra(d);
  long blo = lo - 1, bhi = hi + 1;

  HomComplexData out{ChainComplex(triv, Side::Left, blo, bhi), {}, lo, hi};

  for (long t = blo; t <= bhi; ++t) {
    HomSpace hs = hom_space(m.term(-t), n);
    long g = hs.pres.gens;
    out.cx.set_term(t, make_module(triv, Side::Left, g, {ExactMatrix::identity(d, g)},
                                   hs.pres.rel, "hom[" + std::to_string(t) + "]"));
    out.parts.emplace(t, std::move(hs));
  }

  for (long t = blo + 1; t <= bhi; ++t) {
    const HomSpace& hsrc = out.parts.at(t);
    const HomSpace& htgt = out.parts.at(t - 1);
    ExactMatrix pre = m.dif(1 - t);
    ExactMatrix dif(d, htgt.pres.gens, hsrc.pres.gens);
    for (long k = 0; k < hsrc.pres.gens; ++k) {
      ExactMatrix ek(d, hsrc.pres.gens, 1);
      ek.set(k, 0, Scalar(1));
      dif.paste(0, k, htgt.coords_of(hsrc.matrix_of(ek) * pre));
    }
    out.cx.set_dif(t, dif);
  }

  out.cx.validate();
  return out;
}

}  // namespace gorhom
