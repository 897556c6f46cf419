#pragma once

#include <mutex>

#include "lie/algebra.hpp"

namespace lie {

/// Matrix of ad(x): column j holds the coordinates of [x, b_j].
Matrix ad_matrix(const LieAlgebra& L, const Element& x);

/// Killing Gram matrix: entry (i,j) = trace(ad b_i . ad b_j), exact.
Matrix killing_gram(const LieAlgebra& L, Exec exec = default_exec());

Rat killing(const Matrix& gram, const Element& x, const Element& y);
Rat killing(const LieAlgebra& L, const Element& x, const Element& y);

/// Exact kernel of the Gram matrix.
Subspace form_radical(const LieAlgebra& L);

/// Cartan's criterion: nondegenerate Killing form.
bool is_semisimple(const LieAlgebra& L);

/// Lazily computed Gram matrix for repeated form evaluations. Safe for
/// concurrent readers; the algebra value itself stays immutable.
class KillingCache {
 public:
  explicit KillingCache(const LieAlgebra& L) : L_(&L) {}
  const Matrix& gram(Exec exec = default_exec()) const;

 private:
  const LieAlgebra* L_;
  mutable std::once_flag once_;
  mutable Matrix gram_;
};

}  // namespace lie
