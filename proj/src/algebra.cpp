#include "lie/algebra.hpp"

#include <atomic>
#include <cstdint>
#include <limits>

namespace lie {

namespace {

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  return labels;
}

// Fetch-min over encoded violation positions keeps the reported pair/triple
// independent of thread scheduling.
void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

void validate_structure(std::size_t dim, const std::vector<Rat>& table,
                        Exec exec) {
  if (dim == 0) throw Error("algebra dimension must be positive");
  if (table.size() != dim * dim * dim)
    throw Error("structure table has wrong size");
  const auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rat& {
    return table[(i * dim + j) * dim + k];
  };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  // Antisymmetry: c(i,i,*) = 0 and c(j,i,*) = -c(i,j,*).
  std::atomic<std::uint64_t> bad_pair{kNone};
  parallel_for(exec, dim * dim, [&](std::size_t idx) {
    const std::size_t i = idx / dim, j = idx % dim;
    if (j < i) return;
    for (std::size_t k = 0; k < dim; ++k) {
      const bool ok = (i == j) ? rat_is_zero(c(i, i, k)) : c(j, i, k) == -c(i, j, k);
      if (!ok) {
        atomic_min(bad_pair, static_cast<std::uint64_t>(i * dim + j));
        return;
      }
    }
  });
  if (bad_pair.load() != kNone) {
    const std::uint64_t e = bad_pair.load();
    throw Error("not a Lie algebra: antisymmetry fails at basis pair (" +
                std::to_string(e / dim) + ", " + std::to_string(e % dim) + ")");
  }

  // Jacobi over i<j<k; the remaining triples follow from antisymmetry.
  const auto double_bracket = [&](const Vec& u, std::size_t k, Vec& out) {
    for (Rat& x : out) x = 0;
    for (std::size_t m = 0; m < dim; ++m) {
      if (rat_is_zero(u[m])) continue;
      for (std::size_t t = 0; t < dim; ++t) out[t] += u[m] * c(m, k, t);
    }
  };
  std::atomic<std::uint64_t> bad_triple{kNone};
  parallel_for(exec, dim, [&](std::size_t i) {
    Vec u(dim), acc(dim), term(dim);
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        for (std::size_t t = 0; t < dim; ++t) u[t] = c(i, j, t);
        double_bracket(u, k, acc);  // [[bi,bj],bk]
        for (std::size_t t = 0; t < dim; ++t) u[t] = c(j, k, t);
        double_bracket(u, i, term);  // [[bj,bk],bi]
        for (std::size_t t = 0; t < dim; ++t) acc[t] += term[t];
        for (std::size_t t = 0; t < dim; ++t) u[t] = c(k, i, t);
        double_bracket(u, j, term);  // [[bk,bi],bj]
        for (std::size_t t = 0; t < dim; ++t) acc[t] += term[t];
        if (!vec_is_zero(acc)) {
          atomic_min(bad_triple,
                     static_cast<std::uint64_t>((i * dim + j) * dim + k));
          return;
        }
      }
  });
  if (bad_triple.load() != kNone) {
    const std::uint64_t e = bad_triple.load();
    throw Error("not a Lie algebra: Jacobi identity fails at basis triple (" +
                std::to_string(e / (dim * dim)) + ", " +
                std::to_string((e / dim) % dim) + ", " + std::to_string(e % dim) +
                ")");
  }
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels,
                       std::vector<Rat> table, std::vector<std::size_t> cartan,
                       std::map<std::size_t, std::string> root_labels, Exec exec)
    : dim_(dim),
      labels_(labels.empty() ? default_labels(dim) : std::move(labels)),
      c_(std::move(table)),
      cartan_(std::move(cartan)),
      root_labels_(std::move(root_labels)) {
  if (labels_.size() != dim_) throw Error("label list has wrong size");
  for (std::size_t i : cartan_)
    if (i >= dim_) throw Error("cartan index out of range");
  validate_structure(dim_, c_, exec);
}

Element LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Element out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("dimension mismatch");
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (rat_is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rat_is_zero(y[j])) continue;
      const Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rat& s = c(i, j, k);
        if (!rat_is_zero(s)) out[k] += f * s;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

struct TableBuilder {
  std::size_t n;
  std::vector<Rat> t;
  explicit TableBuilder(std::size_t dim) : n(dim), t(dim * dim * dim) {}
  void set(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
    t[(i * n + j) * n + k] = v;
    t[(j * n + i) * n + k] = -v;
  }
};

}  // namespace

LieAlgebra build_sl(int n) {
  if (n < 2) throw Error("build_sl requires n >= 2");
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t dim = nn * nn - 1;

  // Basis order: h_1..h_{n-1}, then E_{i,i+ht} for ht = 1..n-1 with i
  // ascending, then the matching E_{i+ht,i} in the same order.
  struct Unit {
    std::size_t r, c;  // matrix unit E_{r,c}; r == c encodes h_r (E_rr - E_{r+1,r+1})
  };
  std::vector<Unit> basis;
  std::vector<std::string> labels;
  std::map<std::size_t, std::string> root_labels;
  for (std::size_t i = 1; i < nn; ++i) {
    basis.push_back({i, i});
    labels.push_back("h" + std::to_string(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> positives;
  for (std::size_t ht = 1; ht < nn; ++ht)
    for (std::size_t i = 1; i + ht <= nn; ++i) positives.push_back({i, i + ht});
  const auto root_name = [](std::size_t i, std::size_t j, bool neg) {
    std::string s;
    for (std::size_t a = i; a < j; ++a) {
      if (neg)
        s += "-a" + std::to_string(a);
      else
        s += (s.empty() ? "" : "+") + std::string("a") + std::to_string(a);
    }
    return s;
  };
  for (auto [i, j] : positives) {
    root_labels[basis.size()] = root_name(i, j, false);
    basis.push_back({i, j});
    labels.push_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  for (auto [i, j] : positives) {
    root_labels[basis.size()] = root_name(i, j, true);
    basis.push_back({j, i});
    labels.push_back("e(" + std::to_string(j) + "," + std::to_string(i) + ")");
  }

  const auto realize = [&](const Unit& u) {
    Matrix m(nn, nn);
    if (u.r == u.c) {
      m.at(u.r - 1, u.r - 1) = 1;
      m.at(u.r, u.r) = -1;
    } else {
      m.at(u.r - 1, u.c - 1) = 1;
    }
    return m;
  };

  // Express a traceless matrix in the frozen basis: off-diagonal entries map
  // to root vectors, the diagonal to partial sums over h_i.
  const auto express = [&](const Matrix& m) {
    Vec coords(dim);
    std::size_t idx = 0;
    for (std::size_t i = 1; i < nn; ++i, ++idx) {
      Rat partial = 0;
      for (std::size_t k = 0; k < i; ++k) partial += m.at(k, k);
      coords[idx] = partial;
    }
    for (std::size_t b = nn - 1; b < dim; ++b)
      coords[b] = m.at(basis[b].r - 1, basis[b].c - 1);
    return coords;
  };

  TableBuilder tb(dim);
  std::vector<Matrix> mats;
  mats.reserve(dim);
  for (const Unit& u : basis) mats.push_back(realize(u));
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = p + 1; q < dim; ++q) {
      const Matrix comm = mats[p] * mats[q] - mats[q] * mats[p];
      const Vec coords = express(comm);
      for (std::size_t k = 0; k < dim; ++k)
        if (!rat_is_zero(coords[k])) tb.set(p, q, k, coords[k]);
    }

  std::vector<std::size_t> cartan(nn - 1);
  for (std::size_t i = 0; i + 1 < nn; ++i) cartan[i] = i;
  return LieAlgebra(dim, std::move(labels), std::move(tb.t), std::move(cartan),
                    std::move(root_labels));
}

LieAlgebra build_abelian(int n) {
  if (n < 1) throw Error("build_abelian requires n >= 1");
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= dim; ++i) labels.push_back("x" + std::to_string(i));
  return LieAlgebra(dim, std::move(labels), std::vector<Rat>(dim * dim * dim));
}

LieAlgebra build_heisenberg(int k) {
  if (k < 1) throw Error("build_heisenberg requires k >= 1");
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t dim = 2 * kk + 1;
  // Basis x1, y1, ..., xk, yk, z with [x_i, y_i] = z.
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= kk; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  labels.push_back("z");
  TableBuilder tb(dim);
  for (std::size_t i = 0; i < kk; ++i) tb.set(2 * i, 2 * i + 1, dim - 1, 1);
  return LieAlgebra(dim, std::move(labels), std::move(tb.t));
}

LieAlgebra build_filiform(int n) {
  if (n < 3) throw Error("build_filiform requires n >= 3");
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  TableBuilder tb(dim);
  for (std::size_t i = 1; i + 1 < dim; ++i) tb.set(0, i, i + 1, 1);
  return LieAlgebra(dim, std::move(labels), std::move(tb.t));
}

LieAlgebra build_from_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("builder spec must be name:param, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  int value;
  try {
    std::size_t used = 0;
    value = std::stoi(param, &used);
    if (used != param.size()) throw std::invalid_argument(param);
  } catch (const std::exception&) {
    throw Error("builder parameter must be an integer, got '" + param + "'");
  }
  if (name == "sl") return build_sl(value);
  if (name == "abelian") return build_abelian(value);
  if (name == "heisenberg") return build_heisenberg(value);
  if (name == "filiform") return build_filiform(value);
  throw Error("unknown builder '" + name + "'");
}

// ---------------------------------------------------------------------------
// Subspaces and structural series

Subspace::Subspace(std::size_t ambient, const std::vector<Element>& spanning)
    : ambient_(ambient) {
  for (const Element& v : spanning)
    if (v.size() != ambient) throw Error("dimension mismatch");
  Matrix r = Matrix::from_rows(spanning, ambient).rref();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (!vec_is_zero(r.row(i))) ++nonzero;
  Matrix basis(nonzero, ambient);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = r.at(i, j);
  basis_ = std::move(basis);
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

bool Subspace::contains(const Element& v) const {
  if (v.size() != ambient_) throw Error("dimension mismatch");
  // Reduce against the echelon basis; exact remainder test.
  Element rem = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && rat_is_zero(basis_.at(i, p))) ++p;
    if (p == ambient_) continue;
    const Rat f = rem[p];
    if (rat_is_zero(f)) continue;
    for (std::size_t j = p; j < ambient_; ++j) rem[j] -= f * basis_.at(i, j);
  }
  return vec_is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> pivot(ambient_, false);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && rat_is_zero(basis_.at(i, p))) ++p;
    if (p < ambient_) pivot[p] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!pivot[j]) out.push_back(j);
  return out;
}

Subspace commutator_span(const LieAlgebra& L, const Subspace& A,
                         const Subspace& B) {
  std::vector<Element> products;
  const auto arows = A.basis_rows();
  const auto brows = B.basis_rows();
  for (const Element& a : arows)
    for (const Element& b : brows) products.push_back(L.bracket(a, b));
  if (products.empty()) return Subspace::zero(L.dim());
  return Subspace(L.dim(), products);
}

Subspace commutator_subalgebra(const LieAlgebra& L) {
  return commutator_span(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
}

Subspace center(const LieAlgebra& L) {
  // x central iff sum_j x_j c(i,j,k) = 0 for all i, k.
  const std::size_t n = L.dim();
  Matrix sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) sys.at(i * n + k, j) = L.c(i, j, k);
  return Subspace(n, sys.kernel().rows_list());
}

namespace {

std::vector<Subspace> series(const LieAlgebra& L, bool derived) {
  std::vector<Subspace> out{Subspace::full(L.dim())};
  for (;;) {
    const Subspace& prev = out.back();
    Subspace next = derived ? commutator_span(L, prev, prev)
                            : commutator_span(L, prev, Subspace::full(L.dim()));
    const bool stop = next.dim() == 0 || next == prev;
    out.push_back(std::move(next));
    if (stop) break;
  }
  return out;
}

SeriesVerdict verdict_from(const std::vector<Subspace>& chain) {
  if (chain.back().dim() == 0)
    return {true, static_cast<int>(chain.size()) - 1};
  return {false, std::nullopt};
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  return series(L, true);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  return series(L, false);
}

SeriesVerdict is_solvable(const LieAlgebra& L) {
  return verdict_from(derived_series(L));
}

SeriesVerdict is_nilpotent(const LieAlgebra& L) {
  return verdict_from(lower_central_series(L));
}

}  // namespace lie
