#include "lie/forms.hpp"

namespace lie {

Matrix ad_matrix(const LieAlgebra& L, const Element& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw Error("dimension mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rat_is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& s = L.c(i, j, k);
        if (!rat_is_zero(s)) m.at(k, j) += x[i] * s;
      }
  }
  return m;
}

Matrix killing_gram(const LieAlgebra& L, Exec exec) {
  const std::size_t n = L.dim();
  Matrix gram(n, n);
  // trace(ad b_i . ad b_j) = sum_{p,q} c(i,q,p) c(j,p,q); entries of the
  // upper triangle are independent.
  const std::size_t entries = n * (n + 1) / 2;
  parallel_for(exec, entries, [&](std::size_t t) {
    // unrank t -> (i, j) with i <= j
    std::size_t i = 0, offset = t;
    while (offset >= n - i) {
      offset -= n - i;
      ++i;
    }
    const std::size_t j = i + offset;
    Rat sum = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rat& a = L.c(i, q, p);
        if (rat_is_zero(a)) continue;
        const Rat& b = L.c(j, p, q);
        if (!rat_is_zero(b)) sum += a * b;
      }
    gram.at(i, j) = sum;
    if (i != j) gram.at(j, i) = sum;
  });
  return gram;
}

Rat killing(const Matrix& gram, const Element& x, const Element& y) {
  return vec_dot(x, gram.apply(y));
}

Rat killing(const LieAlgebra& L, const Element& x, const Element& y) {
  return killing(killing_gram(L), x, y);
}

Subspace form_radical(const LieAlgebra& L) {
  return Subspace(L.dim(), killing_gram(L).kernel().rows_list());
}

bool is_semisimple(const LieAlgebra& L) { return form_radical(L).dim() == 0; }

const Matrix& KillingCache::gram(Exec exec) const {
  std::call_once(once_, [&] { gram_ = killing_gram(*L_, exec); });
  return gram_;
}

}  // namespace lie
