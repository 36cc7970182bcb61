#pragma once

#include <vector>

#include "lzpath/rootsys.hpp"

namespace fixtures {

inline lzp::AffineData a1() { return lzp::AffineData::validate(lzp::CartanMatrix({{2, -2}, {-2, 2}})); }

inline lzp::AffineData a2() {
  return lzp::AffineData::validate(lzp::CartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

inline lzp::AffineData a3() {
  return lzp::AffineData::validate(
      lzp::CartanMatrix({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
}

// marks (1,2,1), comarks (1,1,1)
inline lzp::AffineData c2() {
  return lzp::AffineData::validate(lzp::CartanMatrix({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}));
}

// vertex 2 is the branch node
inline lzp::AffineData d4() {
  return lzp::AffineData::validate(lzp::CartanMatrix({{2, 0, -1, 0, 0},
                                                      {0, 2, -1, 0, 0},
                                                      {-1, -1, 2, -1, -1},
                                                      {0, 0, -1, 2, 0},
                                                      {0, 0, -1, 0, 2}}));
}

inline lzp::Rational q(long p, long d = 1) {
  lzp::Rational r{mpz_class(p), mpz_class(d)};
  r.canonicalize();
  return r;
}

inline lzp::Weight w(std::vector<long> pairings, lzp::Rational delta = 0) {
  lzp::Weight out(pairings.size());
  for (std::size_t k = 0; k < pairings.size(); ++k) out.pairings[k] = pairings[k];
  out.delta = delta;
  return out;
}

}  // namespace fixtures
