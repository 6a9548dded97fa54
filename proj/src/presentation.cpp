#include "gorhom/presentation.hpp"

#include <sstream>

namespace gorhom {

std::string HomologyGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (field) {
    os << "k";
    if (dim > 1) os << "^" << dim;
    return os.str();
  }
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

Presentation::Presentation(CoefficientDomain d, long g, ExactMatrix r) : dom(d), gens(g), rel(std::move(r)) {
  if (rel.rows() != gens) throw InternalError("presentation relation shape mismatch");
  if (!(rel.domain() == dom)) throw InternalError("presentation domain mismatch");
}

Presentation Presentation::free_of(CoefficientDomain d, long g) {
  return Presentation(d, g, ExactMatrix(d, g, 0));
}

HomologyGroup Presentation::descriptor() const {
  HomologyGroup h;
  if (dom.is_field()) {
    h.field = true;
    h.dim = gens - rank_of(rel);
  } else {
    h.field = false;
    SmithResult s = smith_normal_form(rel);
    h.rank = gens - s.rank;
    for (const auto& d : s.invariants)
      if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

ExactMatrix constrained_kernel(const ExactMatrix& G, const ExactMatrix& relC) {
  if (G.rows() != relC.rows()) throw InternalError("constrained_kernel shape mismatch");
  ExactMatrix K = kernel_basis(hstack(G, relC));
  // project to the G-argument coordinates, then re-extract an honest basis
  ExactMatrix P(G.domain(), G.cols(), K.cols());
  for (long i = 0; i < G.cols(); ++i)
    for (long j = 0; j < K.cols(); ++j) P.set(i, j, K.at(i, j));
  return column_basis(P);
}

SpotHomology homology_spot(const Presentation& A, const ExactMatrix& f,
                           const Presentation& B, const ExactMatrix& g,
                           const Presentation& C) {
  if (f.rows() != B.gens || f.cols() != A.gens) throw InternalError("homology_spot: bad f shape");
  if (g.rows() != C.gens || g.cols() != B.gens) throw InternalError("homology_spot: bad g shape");
  ExactMatrix L = constrained_kernel(g, C.rel);
  ExactMatrix boundaries = hstack(f, B.rel);
  auto X = LinearSolver(L).solve(boundaries);
  if (!X) throw InternalError("homology_spot: boundaries escaped the cycle span (differential invalid?)");
  SpotHomology out;
  out.H = Presentation(B.dom, L.cols(), *X);
  out.cycles = L;
  return out;
}

ExactMatrix induced_on_homology(const SpotHomology& src, const SpotHomology& tgt,
                                const ExactMatrix& phi, const Presentation& tgt_term) {
  if (phi.cols() != src.cycles.rows() || phi.rows() != tgt_term.gens)
    throw InternalError("induced_on_homology: shape mismatch");
  ExactMatrix moved = phi * src.cycles;
  auto w = LinearSolver(tgt.cycles).solve(moved);
  if (!w) throw InternalError("induced_on_homology: image not in target cycles (map not a chain map?)");
  return *w;
}

ExactnessCheck exact_at(const Presentation& X, const ExactMatrix& F,
                        const Presentation& Y, const ExactMatrix& G,
                        const Presentation& Z) {
  if (F.rows() != Y.gens || F.cols() != X.gens || G.rows() != Z.gens || G.cols() != Y.gens)
    throw InternalError("exact_at: shape mismatch");
  ExactnessCheck out;
  out.composite_zero = congruent(G * F, ExactMatrix(Y.dom, Z.gens, X.gens), Z.rel);
  ExactMatrix L = constrained_kernel(G, Z.rel);
  out.kernel_in_image = in_span(hstack(F, Y.rel), L);
  return out;
}

bool congruent(const ExactMatrix& A, const ExactMatrix& B, const ExactMatrix& rel) {
  ExactMatrix diff = A - B;
  if (diff.is_zero()) return true;
  if (rel.cols() == 0) return false;
  return in_span(rel, diff);
}

bool morphism_well_defined(const Presentation& X, const ExactMatrix& F, const Presentation& Y) {
  if (F.rows() != Y.gens || F.cols() != X.gens) return false;
  if (X.rel.cols() == 0) return true;
  return congruent(F * X.rel, ExactMatrix(Y.dom, Y.gens, X.rel.cols()), Y.rel);
}

}  // namespace gorhom
