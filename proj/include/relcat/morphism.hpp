#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcat/object.hpp"
#include "relcat/rational.hpp"

namespace relcat {

using Matrix = std::vector<std::vector<Rat>>;  // matrix[row][col]

/// A concrete morphism: a total function table (FinSet) or an exact
/// rational matrix with cod.size rows and dom.size columns (FinVect).
struct Mor {
  Obj dom;
  Obj cod;
  std::vector<std::size_t> table;
  Matrix matrix;

  bool is_table() const { return dom.ambient == Ambient::FinSet; }

  friend bool operator==(const Mor&, const Mor&);
};

Mor mor_from_table(Obj dom, Obj cod, std::vector<std::size_t> table);
Mor mor_from_matrix(Obj dom, Obj cod, Matrix m);

Mor identity(const Obj& x);
Mor zero_mor(const Obj& dom, const Obj& cod);  // FinVect only

/// g after f. Throws CompositionError unless f.cod == g.dom.
Mor compose(const Mor& g, const Mor& f);

/// Convenience n-ary composite: compose(fs...) applies right-to-left.
Mor compose_chain(const std::vector<Mor>& chain);

/// Product of morphisms: pair-index tables (FinSet), block diagonal
/// (FinVectSum) or Kronecker product (FinVectTensor).
Mor tensor_mor(const Mor& f, const Mor& g);

bool is_mono(const Mor& f);
bool is_iso(const Mor& f);
Mor inverse(const Mor& f);  // NotInvertibleError if not iso

/// Equalizer of a parallel pair. FinSet: the sorted fixed set with its
/// inclusion table. FinVect: ker(f - g) with a reduced-echelon basis as
/// columns. The mediating morphism is always mono.
std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g);

/// Unique h with pi . h = u for mono pi; nullopt when u does not factor.
std::optional<Mor> factor_through_mono(const Mor& pi, const Mor& u);

// Exact linear algebra helpers (also used by test oracles).
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(std::size_t n);
std::size_t mat_rank(Matrix m);
/// Basis of the null space as columns, reduced-echelon convention.
Matrix kernel_basis(const Matrix& m, std::size_t cols);
/// Reduced column echelon form with zero columns dropped; canonical
/// representative of the column space.
Matrix column_space_canonical(const Matrix& m);

std::string mor_to_string(const Mor& f);

}  // namespace relcat
