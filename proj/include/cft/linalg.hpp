#pragma once

// Exact linear algebra over Q: definiteness classification, rank and
// kernel bases. Definiteness never touches eigenvalues: positive
// definiteness is Sylvester's criterion on leading principal minors, and
// positive semidefiniteness is the sign pattern of the characteristic
// polynomial (whose coefficients are sums of principal minors).

#include "cft/matrix.hpp"
#include "cft/rational.hpp"

#include <string>
#include <vector>

namespace cft {

using RatMatrix = DenseMatrix<Rational>;

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

std::string to_string(Definiteness d);

// Coefficients of det(t*I - M) = sum a_k t^k, returned as a[0..n].
std::vector<Rational> charpoly(const RatMatrix& m);

// Requires a symmetric matrix; throws std::invalid_argument otherwise.
Definiteness definiteness(const RatMatrix& m);

std::size_t rank(RatMatrix m);

inline std::size_t nullity(const RatMatrix& m) { return m.cols() - rank(m); }

// Basis of the right kernel, each vector scaled so that its first nonzero
// coordinate is 1; vectors ordered by the position of that coordinate.
std::vector<std::vector<Rational>> kernel_basis(RatMatrix m);

}  // namespace cft
