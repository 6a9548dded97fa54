#pragma once

#include <gorhom/complex.hpp>

#include <map>
#include <utility>
#include <vector>

namespace gorhom {

// Tensor product of a right complex and a left complex over their algebra,
// materialized on a finite degree window as a complex of presentations over
// the trivial algebra.  parts records, per degree, the first-factor degree
// and tensor space of each direct summand in storage order; terms and the
// surrounding differentials are correct for degrees in [valid_lo, valid_hi].
struct TensorComplexData {
  ChainComplex cx;
  std::map<long, std::vector<std::pair<long, TensorSpace>>> parts;
  long valid_lo = 0, valid_hi = -1;
};

TensorComplexData tensor_complexes(const ChainComplex& mright, const ChainComplex& nleft, long lo,
                                   long hi);

// chain map induced degreewise by f (between the right factors) and g
// (between the left factors) on already-built tensor windows
ChainMap tensor_chain_map(const TensorComplexData& src, const TensorComplexData& dst,
                          const ChainMap& f, const ChainMap& g);

// H_deg of the tensor complex, recomputed on a widened window as a stability
// self-check (throws InternalError if the two windows disagree)
HomologyGroup tensor_homology(const ChainComplex& mright, const ChainComplex& nleft, long deg);

// Hom_R(M, N) for a complex M and module N of the same side, materialized on
// [lo, hi]: degree t holds Hom(M_{-t}, N), differentials precompose with the
// differential of M.
struct HomComplexData {
  ChainComplex cx;
  std::map<long, HomSpace> parts;  // degree t -> hom space of M_{-t}
  long valid_lo = 0, valid_hi = -1;
};

HomComplexData hom_complex(const ChainComplex& m, const Module& n, long lo, long hi);

}  // namespace gorhom
