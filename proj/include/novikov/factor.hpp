#pragma once

#include <vector>

#include "novikov/poly.hpp"

namespace novikov {

struct PolyFactor {
  Poly factor;  // monic
  bool irreducible = false;  // proven irreducible over Q
};

/// Splits a square-free polynomial into monic factors over Q: the linear
/// factors of its rational roots, the cyclotomic polynomials dividing it, and
/// what remains. The remainder is proven irreducible when it has degree at
/// most 3 (it has no rational root); otherwise it is reported as it stands.
/// Factors are ordered by degree, then coefficients.
std::vector<PolyFactor> split_square_free(const Poly& f);

/// Total order on polynomials: degree first, then coefficients from the top.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace novikov
