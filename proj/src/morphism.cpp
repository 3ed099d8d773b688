#include "relcat/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "relcat/errors.hpp"

namespace relcat {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::FinSet: return "finset";
    case Ambient::FinVectSum: return "finvect_sum";
    case Ambient::FinVectTensor: return "finvect_tensor";
  }
  return "?";
}

Obj unit_object(Ambient a) {
  switch (a) {
    case Ambient::FinSet: return {a, 1};
    case Ambient::FinVectSum: return {a, 0};
    case Ambient::FinVectTensor: return {a, 1};
  }
  return {a, 1};
}

Obj tensor_object(const Obj& x, const Obj& y) {
  if (x.ambient != y.ambient)
    throw AmbientError("tensor_object: mixed ambients");
  if (x.ambient == Ambient::FinVectSum) return {x.ambient, x.size + y.size};
  return {x.ambient, x.size * y.size};
}

std::string obj_name(const Obj& o) {
  return ambient_name(o.ambient) + ":" + std::to_string(o.size);
}

bool operator==(const Mor& a, const Mor& b) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  if (a.is_table()) return a.table == b.table;
  return a.matrix == b.matrix;
}

Mor mor_from_table(Obj dom, Obj cod, std::vector<std::size_t> table) {
  if (dom.ambient != Ambient::FinSet || cod.ambient != Ambient::FinSet)
    throw AmbientError("function table requires FinSet objects");
  if (table.size() != dom.size)
    throw ShapeError("table length != domain size");
  for (std::size_t v : table)
    if (v >= cod.size) throw ShapeError("table entry out of range");
  return Mor{dom, cod, std::move(table), {}};
}

Mor mor_from_matrix(Obj dom, Obj cod, Matrix m) {
  if (dom.ambient == Ambient::FinSet || dom.ambient != cod.ambient)
    throw AmbientError("matrix requires matching FinVect objects");
  if (m.size() != cod.size) throw ShapeError("matrix row count != codomain dim");
  for (const auto& row : m)
    if (row.size() != dom.size) throw ShapeError("matrix column count != domain dim");
  return Mor{dom, cod, {}, std::move(m)};
}

Mor identity(const Obj& x) {
  if (x.ambient == Ambient::FinSet) {
    std::vector<std::size_t> t(x.size);
    for (std::size_t i = 0; i < x.size; ++i) t[i] = i;
    return Mor{x, x, std::move(t), {}};
  }
  return Mor{x, x, {}, mat_identity(x.size)};
}

Mor zero_mor(const Obj& dom, const Obj& cod) {
  if (dom.ambient == Ambient::FinSet)
    throw AmbientError("zero morphism needs a linear ambient");
  Matrix m(cod.size, std::vector<Rat>(dom.size, Rat(0)));
  return Mor{dom, cod, {}, std::move(m)};
}

Mor compose(const Mor& g, const Mor& f) {
  if (f.dom.ambient != g.dom.ambient)
    throw CompositionError("compose: mixed ambients");
  if (!(f.cod == g.dom))
    throw CompositionError("compose: codomain/domain mismatch " +
                           obj_name(f.cod) + " vs " + obj_name(g.dom));
  if (f.is_table()) {
    std::vector<std::size_t> t(f.table.size());
    for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
    return Mor{f.dom, g.cod, std::move(t), {}};
  }
  return Mor{f.dom, g.cod, {}, mat_mul(g.matrix, f.matrix)};
}

Mor compose_chain(const std::vector<Mor>& chain) {
  if (chain.empty()) throw CompositionError("compose_chain: empty");
  Mor acc = chain.back();
  for (auto it = std::next(chain.rbegin()); it != chain.rend(); ++it)
    acc = compose(*it, acc);
  return acc;
}

namespace {

Matrix kron(const Matrix& a, std::size_t ar, std::size_t ac, const Matrix& b,
            std::size_t br, std::size_t bc) {
  Matrix m(ar * br, std::vector<Rat>(ac * bc, Rat(0)));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) {
          if (b[k][l] == 0) continue;
          m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
    }
  return m;
}

}  // namespace

Mor tensor_mor(const Mor& f, const Mor& g) {
  if (f.dom.ambient != g.dom.ambient)
    throw AmbientError("tensor_mor: mixed ambients");
  Obj dom = tensor_object(f.dom, g.dom);
  Obj cod = tensor_object(f.cod, g.cod);
  switch (f.dom.ambient) {
    case Ambient::FinSet: {
      std::vector<std::size_t> t(dom.size);
      for (std::size_t x = 0; x < f.dom.size; ++x)
        for (std::size_t y = 0; y < g.dom.size; ++y)
          t[pair_index(x, y, g.dom.size)] =
              pair_index(f.table[x], g.table[y], g.cod.size);
      return Mor{dom, cod, std::move(t), {}};
    }
    case Ambient::FinVectSum: {
      Matrix m(cod.size, std::vector<Rat>(dom.size, Rat(0)));
      for (std::size_t i = 0; i < f.cod.size; ++i)
        for (std::size_t j = 0; j < f.dom.size; ++j) m[i][j] = f.matrix[i][j];
      for (std::size_t i = 0; i < g.cod.size; ++i)
        for (std::size_t j = 0; j < g.dom.size; ++j)
          m[f.cod.size + i][f.dom.size + j] = g.matrix[i][j];
      return Mor{dom, cod, {}, std::move(m)};
    }
    case Ambient::FinVectTensor:
      return Mor{dom, cod, {},
                 kron(f.matrix, f.cod.size, f.dom.size, g.matrix, g.cod.size,
                      g.dom.size)};
  }
  throw AmbientError("tensor_mor: unknown ambient");
}

bool is_mono(const Mor& f) {
  if (f.is_table()) {
    std::vector<bool> seen(f.cod.size, false);
    for (std::size_t v : f.table) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  return mat_rank(f.matrix) == f.dom.size;
}

bool is_iso(const Mor& f) {
  if (f.dom.size != f.cod.size) return false;
  return is_mono(f);
}

Mor inverse(const Mor& f) {
  if (!is_iso(f)) throw NotInvertibleError("inverse: morphism is not iso");
  if (f.is_table()) {
    std::vector<std::size_t> t(f.cod.size);
    for (std::size_t i = 0; i < f.table.size(); ++i) t[f.table[i]] = i;
    return Mor{f.cod, f.dom, std::move(t), {}};
  }
  // Gauss-Jordan on [M | I].
  std::size_t n = f.dom.size;
  Matrix a = f.matrix;
  Matrix inv = mat_identity(n);
  for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw NotInvertibleError("inverse: singular matrix");
    std::swap(a[piv], a[row]);
    std::swap(inv[piv], inv[row]);
    Rat d = a[row][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[row][j] /= d;
      inv[row][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[row][j];
        inv[i][j] -= factor * inv[row][j];
      }
    }
  }
  return Mor{f.cod, f.dom, {}, std::move(inv)};
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t ar = a.size();
  std::size_t inner = b.size();
  std::size_t bc = inner ? b[0].size() : 0;
  if (ar && inner && a[0].size() != inner)
    throw ShapeError("mat_mul: inner dimension mismatch");
  Matrix m(ar, std::vector<Rat>(bc, Rat(0)));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      const Rat& aik = a[i][k];
      for (std::size_t j = 0; j < bc; ++j) {
        if (b[k][j] == 0) continue;
        m[i][j] += aik * b[k][j];
      }
    }
  return m;
}

Matrix mat_identity(std::size_t n) {
  Matrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rat d = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= d;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(Matrix m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  return rref(m, cols).size();
}

Matrix kernel_basis(const Matrix& m, std::size_t cols) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(cols, std::vector<Rat>(free_cols.size(), Rat(0)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis[fc][k] = 1;
    for (std::size_t prow = 0; prow < pivots.size(); ++prow)
      if (prow < r.size()) basis[pivots[prow]][k] = -r[prow][fc];
  }
  return basis;
}

Matrix column_space_canonical(const Matrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  // Transpose, row-reduce, transpose back, drop zero columns.
  Matrix t(cols, std::vector<Rat>(rows, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  std::size_t rank = rref(t, rows).size();
  Matrix out(rows, std::vector<Rat>(rank, Rat(0)));
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < rows; ++i) out[i][k] = t[k][i];
  return out;
}

std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw CompositionError("equalizer: maps are not parallel");
  if (f.is_table()) {
    std::vector<std::size_t> incl;
    for (std::size_t i = 0; i < f.table.size(); ++i)
      if (f.table[i] == g.table[i]) incl.push_back(i);
    Obj x = {f.dom.ambient, incl.size()};
    return {x, Mor{x, f.dom, std::move(incl), {}}};
  }
  Matrix diff = f.matrix;
  for (std::size_t i = 0; i < diff.size(); ++i)
    for (std::size_t j = 0; j < diff[i].size(); ++j) diff[i][j] -= g.matrix[i][j];
  Matrix basis = kernel_basis(diff, f.dom.size);
  std::size_t k = basis.empty() ? 0 : basis[0].size();
  Obj x = {f.dom.ambient, k};
  return {x, Mor{x, f.dom, {}, std::move(basis)}};
}

std::optional<Mor> factor_through_mono(const Mor& pi, const Mor& u) {
  if (!(pi.cod == u.cod)) return std::nullopt;
  if (pi.is_table()) {
    std::vector<std::size_t> pre(pi.cod.size, SIZE_MAX);
    for (std::size_t i = 0; i < pi.table.size(); ++i) pre[pi.table[i]] = i;
    std::vector<std::size_t> h(u.table.size());
    for (std::size_t i = 0; i < u.table.size(); ++i) {
      std::size_t p = pre[u.table[i]];
      if (p == SIZE_MAX) return std::nullopt;
      h[i] = p;
    }
    return Mor{u.dom, pi.dom, std::move(h), {}};
  }
  // Solve pi.matrix * H = u.matrix column by column.
  std::size_t rows = pi.cod.size;
  std::size_t pcols = pi.dom.size;
  std::size_t ucols = u.dom.size;
  Matrix aug(rows, std::vector<Rat>(pcols + ucols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < pcols; ++j) aug[i][j] = pi.matrix[i][j];
    for (std::size_t j = 0; j < ucols; ++j) aug[i][pcols + j] = u.matrix[i][j];
  }
  std::vector<std::size_t> pivots = rref(aug, pcols + ucols);
  Matrix h(pcols, std::vector<Rat>(ucols, Rat(0)));
  for (std::size_t prow = 0; prow < pivots.size(); ++prow) {
    if (pivots[prow] >= pcols) return std::nullopt;  // inconsistent system
    for (std::size_t j = 0; j < ucols; ++j)
      h[pivots[prow]][j] = aug[prow][pcols + j];
  }
  Mor cand{u.dom, pi.dom, {}, std::move(h)};
  if (!(compose(pi, cand) == u)) return std::nullopt;
  return cand;
}

std::string mor_to_string(const Mor& f) {
  std::ostringstream os;
  os << obj_name(f.dom) << " -> " << obj_name(f.cod) << " ";
  if (f.is_table()) {
    os << "[";
    for (std::size_t i = 0; i < f.table.size(); ++i)
      os << (i ? "," : "") << f.table[i];
    os << "]";
  } else {
    os << "[";
    for (std::size_t i = 0; i < f.matrix.size(); ++i) {
      os << (i ? ";" : "") << "[";
      for (std::size_t j = 0; j < f.matrix[i].size(); ++j)
        os << (j ? "," : "") << rat_to_string(f.matrix[i][j]);
      os << "]";
    }
    os << "]";
  }
  return os.str();
}

}  // namespace relcat
