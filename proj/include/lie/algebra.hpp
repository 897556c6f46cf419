#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie/matrix.hpp"

namespace lie {

/// Coordinate vector in the fixed basis of an algebra.
using Element = Vec;

/// Finite-dimensional Lie algebra given by its structure constants over Q:
/// [b_i, b_j] = sum_k c(i,j,k) b_k. Antisymmetry and the Jacobi identity are
/// checked exhaustively at construction; instances are immutable afterwards.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, std::vector<std::string> labels,
             std::vector<Rat> table, std::vector<std::size_t> cartan = {},
             std::map<std::size_t, std::string> root_labels = {},
             Exec exec = default_exec());

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& cartan_indices() const { return cartan_; }
  const std::map<std::size_t, std::string>& root_labels() const {
    return root_labels_;
  }
  const std::vector<Rat>& structure_table() const { return c_; }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Coordinates of [b_i, b_j].
  Element bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure table; throws on size mismatch.
  Element bracket(const Element& x, const Element& y) const;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rat> c_;
  std::vector<std::size_t> cartan_;
  std::map<std::size_t, std::string> root_labels_;
};

/// Exhaustive antisymmetry + Jacobi check over basis triples. Throws Error
/// naming the first offending pair/triple. Serial and parallel runs report
/// the same triple.
void validate_structure(std::size_t dim, const std::vector<Rat>& table,
                        Exec exec = default_exec());

// Builder families. Bases are frozen; see README for the exact orderings.
LieAlgebra build_sl(int n);
LieAlgebra build_abelian(int n);
LieAlgebra build_heisenberg(int k);
LieAlgebra build_filiform(int n);

/// Parses "name:param" (sl:3, heisenberg:2, filiform:5, abelian:4).
LieAlgebra build_from_spec(const std::string& spec);

/// Subspace of Q^n kept as a canonical reduced-echelon basis matrix, so
/// subspace equality is matrix equality.
class Subspace {
 public:
  Subspace(std::size_t ambient, const std::vector<Element>& spanning);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Element> basis_rows() const { return basis_.rows_list(); }

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;
  /// Standard-basis indices completing the echelon basis to all of Q^n.
  std::vector<std::size_t> complement_indices() const;

  bool operator==(const Subspace& o) const = default;

 private:
  Subspace(std::size_t ambient, Matrix reduced)
      : ambient_(ambient), basis_(std::move(reduced)) {}
  std::size_t ambient_;
  Matrix basis_;
};

/// Span of [a, b] over all basis pairs of A and B.
Subspace commutator_span(const LieAlgebra& L, const Subspace& A,
                         const Subspace& B);
Subspace commutator_subalgebra(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);

/// Series start at the full algebra and end at the first repeated or zero
/// term (the terminating term is included).
std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

struct SeriesVerdict {
  bool value = false;
  std::optional<int> index;  // smallest k with the defining vanishing
};
SeriesVerdict is_solvable(const LieAlgebra& L);
SeriesVerdict is_nilpotent(const LieAlgebra& L);

}  // namespace lie
