#include "relcat/comonoid.hpp"

#include <algorithm>

#include "relcat/errors.hpp"

namespace relcat {

namespace {

void shape_check(const ComonoidData& c) {
  Obj aa = tensor_object(c.carrier, c.carrier);
  Obj e = unit_object(c.carrier.ambient);
  if (!(c.delta.dom == c.carrier) || !(c.delta.cod == aa))
    throw ShapeError("comonoid: delta must map carrier to carrier^2");
  if (!(c.epsilon.dom == c.carrier) || !(c.epsilon.cod == e))
    throw ShapeError("comonoid: epsilon must map carrier to the unit");
}

}  // namespace

Report check_comonoid(const ComonoidData& c, bool cosemigroup_only) {
  shape_check(c);
  Report rep;
  Mor id = identity(c.carrier);

  {
    CheckResult& row = rep.add("coassociativity");
    row.checked = 1;
    Mor lhs = compose(tensor_mor(id, c.delta), c.delta);
    Mor rhs = compose(tensor_mor(c.delta, id), c.delta);
    if (!(lhs == rhs)) {
      row.passed = false;
      row.witness = "on " + obj_name(c.carrier);
    }
  }
  if (cosemigroup_only) return rep;

  {
    CheckResult& row = rep.add("left-counit");
    row.checked = 1;
    Mor lhs = compose(tensor_mor(c.epsilon, id), c.delta);
    if (!(lhs == id)) {
      row.passed = false;
      if (c.delta.is_table()) {
        for (std::size_t b = 0; b < lhs.table.size(); ++b)
          if (lhs.table[b] != b) {
            row.witness = "element " + std::to_string(b);
            break;
          }
      } else {
        row.witness = "on " + obj_name(c.carrier);
      }
    }
  }
  {
    CheckResult& row = rep.add("right-counit");
    row.checked = 1;
    Mor lhs = compose(tensor_mor(id, c.epsilon), c.delta);
    if (!(lhs == id)) {
      row.passed = false;
      if (c.delta.is_table()) {
        for (std::size_t b = 0; b < lhs.table.size(); ++b)
          if (lhs.table[b] != b) {
            row.witness = "element " + std::to_string(b);
            break;
          }
      } else {
        row.witness = "on " + obj_name(c.carrier);
      }
    }
  }
  return rep;
}

bool check_sigma_commutative(const ComonoidData& c) {
  shape_check(c);
  return compose(builtin_sigma(c.carrier, c.carrier), c.delta) == c.delta;
}

bool check_coproduct_mono(const ComonoidData& c) {
  shape_check(c);
  return is_mono(c.delta);
}

ComonoidData finset_diagonal(std::size_t n) {
  Obj a = finset(n);
  std::vector<std::size_t> d(n);
  for (std::size_t x = 0; x < n; ++x) d[x] = pair_index(x, x, n);
  Mor delta = mor_from_table(a, tensor_object(a, a), std::move(d));
  Mor eps = mor_from_table(a, unit_object(a.ambient),
                           std::vector<std::size_t>(n, 0));
  return {a, delta, eps};
}

ComonoidData vec_sum_diagonal(std::size_t n) {
  Obj a = vec_sum(n);
  Matrix d(2 * n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 1;
    d[n + i][i] = 1;
  }
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          zero_mor(a, unit_object(a.ambient))};
}

ComonoidData grouplike(std::size_t n) {
  Obj a = vec_tensor(n);
  Matrix d(n * n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) d[pair_index(i, i, n)][i] = 1;
  Matrix eps(1, std::vector<Rat>(n, Rat(1)));
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          mor_from_matrix(a, unit_object(a.ambient), std::move(eps))};
}

ComonoidData pointed_cosemigroup(std::size_t n, std::size_t basepoint) {
  if (basepoint >= n) throw ShapeError("basepoint out of range");
  Obj a = finset(n);
  std::vector<std::size_t> d(n);
  for (std::size_t x = 0; x < n; ++x) d[x] = pair_index(basepoint, x, n);
  return {a, mor_from_table(a, tensor_object(a, a), std::move(d)),
          mor_from_table(a, unit_object(a.ambient),
                         std::vector<std::size_t>(n, 0))};
}

ComonoidData dim2_comonoid_family(const Rat& x) {
  Obj a = vec_tensor(2);
  Matrix d(4, std::vector<Rat>(2, Rat(0)));
  d[pair_index(0, 0, 2)][0] = 1;
  d[pair_index(0, 0, 2)][1] = -x;
  d[pair_index(0, 1, 2)][1] = 1;
  d[pair_index(1, 0, 2)][1] = 1;
  Matrix eps(1, std::vector<Rat>(2, Rat(0)));
  eps[0][0] = 1;
  eps[0][1] = x;
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          mor_from_matrix(a, unit_object(a.ambient), std::move(eps))};
}

ComonoidData function_coalgebra(const std::vector<std::vector<std::size_t>>& mul) {
  std::size_t n = mul.size();
  if (n == 0) throw NotAGroupError("empty multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) throw NotAGroupError("table is not square");
    for (std::size_t v : row)
      if (v >= n) throw NotAGroupError("table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
          throw NotAGroupError("associativity fails at (" + std::to_string(i) +
                               "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
  std::size_t id = SIZE_MAX;
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      ok = ok && mul[c][i] == i && mul[i][c] == i;
    if (ok) {
      id = c;
      break;
    }
  }
  if (id == SIZE_MAX) throw NotAGroupError("no identity element");
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inv = false;
    for (std::size_t j = 0; j < n; ++j)
      has_inv = has_inv || (mul[i][j] == id && mul[j][i] == id);
    if (!has_inv)
      throw NotAGroupError("element " + std::to_string(i) + " has no inverse");
  }

  Obj a = vec_tensor(n);
  // delta(e_z) = sum over xy = z of e_x (x) e_y; epsilon(e_z) = [z == id].
  Matrix d(n * n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[pair_index(x, y, n)][mul[x][y]] = 1;
  Matrix eps(1, std::vector<Rat>(n, Rat(0)));
  eps[0][id] = 1;
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          mor_from_matrix(a, unit_object(a.ambient), std::move(eps))};
}

ComonoidData projector_cosemigroup(const Mor& f, const Mor& g) {
  if (f.dom.ambient != Ambient::FinVectSum)
    throw AmbientError("projector cosemigroup lives in FinVectSum");
  if (!(f.dom == f.cod) || !(g.dom == g.cod) || !(f.dom == g.dom))
    throw ShapeError("projector cosemigroup needs two endomorphisms of one object");
  if (!(compose(f, f) == f))
    throw NotProjectorsError("f . f != f");
  if (!(compose(g, g) == g))
    throw NotProjectorsError("g . g != g");
  if (!(compose(f, g) == compose(g, f)))
    throw NotCommutingError("f . g != g . f");
  Obj a = f.dom;
  std::size_t n = a.size;
  Matrix d(2 * n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = f.matrix[i][j];
      d[n + i][j] = g.matrix[i][j];
    }
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          zero_mor(a, unit_object(a.ambient))};
}

ComonoidData FieldComonoid::lift() const {
  Obj a = vec_tensor(dim);
  Matrix d(dim * dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        d[pair_index(j, k, dim)][i] = static_cast<long>(r[i][j][k]);
  Matrix eps(1, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) eps[0][i] = static_cast<long>(q[i]);
  return {a, mor_from_matrix(a, tensor_object(a, a), std::move(d)),
          mor_from_matrix(a, unit_object(a.ambient), std::move(eps))};
}

std::vector<FieldComonoid> solve_comonoid_equations(std::size_t dim, unsigned p) {
  if (dim > 2 || p > 5)
    throw BoundsExceededError("brute-force bound is dim <= 2, field size <= 5");
  if (dim == 0) return {};
  for (unsigned d = 2; d < p; ++d)
    if (p % d == 0) throw BoundsExceededError("field size must be prime");

  std::size_t m = dim * dim;
  // All F_p matrices r^i (flattened j*dim+k) satisfying both counit systems
  // for a fixed q, then the quadratic coassociativity across the full tuple.
  auto counit_ok = [&](const std::vector<unsigned>& ri, std::size_t i,
                       const std::vector<unsigned>& q) {
    for (std::size_t k = 0; k < dim; ++k) {
      unsigned srk = 0, skr = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        srk = (srk + ri[j * dim + k] * q[j]) % p;
        skr = (skr + ri[k * dim + j] * q[j]) % p;
      }
      unsigned want = (i == k) ? 1u : 0u;
      if (srk != want || skr != want) return false;
    }
    return true;
  };

  std::vector<FieldComonoid> out;
  std::vector<unsigned> q(dim, 0);
  auto next_tuple = [&](std::vector<unsigned>& t) {
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < p) return true;
      t[i] = 0;
    }
    return false;
  };

  do {
    // Candidate r^i matrices per output index i under the counit pruning.
    std::vector<std::vector<std::vector<unsigned>>> candidates(dim);
    bool feasible = true;
    for (std::size_t i = 0; i < dim && feasible; ++i) {
      std::vector<unsigned> ri(m, 0);
      do {
        if (counit_ok(ri, i, q)) candidates[i].push_back(ri);
      } while (next_tuple(ri));
      feasible = !candidates[i].empty();
    }
    if (!feasible) continue;

    std::vector<std::size_t> pick(dim, 0);
    bool more_picks = true;
    auto advance_pick = [&]() {
      for (std::size_t i = pick.size(); i-- > 0;) {
        if (++pick[i] < candidates[i].size()) return true;
        pick[i] = 0;
      }
      return false;
    };
    auto coassoc_ok = [&]() {
      // sum_j r[i][j][k] r[j][l][n] == sum_j r[i][l][j] r[j][n][k]
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t l = 0; l < dim; ++l)
            for (std::size_t n2 = 0; n2 < dim; ++n2) {
              unsigned lhs = 0, rhs = 0;
              for (std::size_t j = 0; j < dim; ++j) {
                lhs = (lhs + candidates[i][pick[i]][j * dim + k] *
                                 candidates[j][pick[j]][l * dim + n2]) %
                      p;
                rhs = (rhs + candidates[i][pick[i]][l * dim + j] *
                                 candidates[j][pick[j]][n2 * dim + k]) %
                      p;
              }
              if (lhs != rhs) return false;
            }
      return true;
    };

    while (more_picks) {
      if (coassoc_ok()) {
        FieldComonoid fc;
        fc.p = p;
        fc.dim = dim;
        fc.q = q;
        fc.r.assign(dim, std::vector<std::vector<unsigned>>(
                             dim, std::vector<unsigned>(dim, 0)));
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
              fc.r[i][j][k] = candidates[i][pick[i]][j * dim + k];
        out.push_back(std::move(fc));
      }
      more_picks = advance_pick();
    }
  } while (next_tuple(q));

  return out;
}

bool check_comonoid_mod(const ComonoidData& c, unsigned p) {
  shape_check(c);
  auto zero_mod = [&](const Mor& a, const Mor& b) {
    for (std::size_t i = 0; i < a.matrix.size(); ++i)
      for (std::size_t j = 0; j < a.matrix[i].size(); ++j) {
        Rat d = a.matrix[i][j] - b.matrix[i][j];
        if (d.get_den() != 1) return false;
        if (mpz_class(d.get_num() % p) != 0) return false;
      }
    return true;
  };
  Mor id = identity(c.carrier);
  Mor coassoc_l = compose(tensor_mor(id, c.delta), c.delta);
  Mor coassoc_r = compose(tensor_mor(c.delta, id), c.delta);
  Mor left = compose(tensor_mor(c.epsilon, id), c.delta);
  Mor right = compose(tensor_mor(id, c.epsilon), c.delta);
  return zero_mod(coassoc_l, coassoc_r) && zero_mod(left, id) &&
         zero_mod(right, id);
}

}  // namespace relcat
