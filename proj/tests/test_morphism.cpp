#include <doctest.h>

#include "relcat/errors.hpp"
#include "relcat/monoidal.hpp"
#include "support.hpp"

using namespace relcat;

TEST_CASE("composition of function tables") {
  Mor f = mor_from_table(finset(2), finset(2), {1, 0});
  Mor g = mor_from_table(finset(2), finset(2), {1, 0});
  CHECK(compose(g, f) == identity(finset(2)));

  Mor h = mor_from_table(finset(3), finset(2), {0, 0, 1});
  Mor k = mor_from_table(finset(2), finset(1), {0, 0});
  CHECK(compose(k, h).table == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("composition of matrices is the exact matrix product") {
  Mor f = mor_from_matrix(vec_sum(2), vec_sum(2),
                          {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  Mor g = mor_from_matrix(vec_sum(2), vec_sum(2),
                          {{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
  Matrix expected{{Rat(2), Rat(2)}, {Rat(0), Rat(3)}};
  // independent oracle: hand-rolled triple loop
  Matrix oracle(2, std::vector<Rat>(2, Rat(0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        oracle[i][j] += g.matrix[i][k] * f.matrix[k][j];
  CHECK(compose(g, f).matrix == expected);
  CHECK(oracle == expected);
}

TEST_CASE("composition errors") {
  Mor f = mor_from_table(finset(2), finset(3), {0, 1});
  Mor g = mor_from_table(finset(2), finset(2), {0, 1});
  CHECK_THROWS_AS(compose(g, f), CompositionError);
}

TEST_CASE("tensor on tables uses the row-major pair index") {
  CHECK(tensor_mor(identity(finset(2)), identity(finset(3))) ==
        identity(finset(6)));

  Mor f = mor_from_table(finset(2), finset(2), {1, 0});
  Mor g = mor_from_table(finset(1), finset(1), {0});
  CHECK(tensor_mor(f, g).table == std::vector<std::size_t>{1, 0});

  // enumerate all pair indices by hand as the oracle
  Mor h = mor_from_table(finset(2), finset(2), {1, 1});
  Mor t = tensor_mor(f, h);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      CHECK(t.table[x * 2 + y] == f.table[x] * 2 + h.table[y]);
}

TEST_CASE("tensor on matrices: Kronecker and block diagonal") {
  Mor a = mor_from_matrix(vec_tensor(1), vec_tensor(1), {{Rat(2)}});
  Mor b = mor_from_matrix(vec_tensor(1), vec_tensor(1), {{Rat(3)}});
  CHECK(tensor_mor(a, b).matrix == Matrix{{Rat(6)}});

  Mor c = mor_from_matrix(vec_sum(1), vec_sum(1), {{Rat(2)}});
  Mor d = mor_from_matrix(vec_sum(1), vec_sum(1), {{Rat(3)}});
  CHECK(tensor_mor(c, d).matrix ==
        Matrix{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
}

TEST_CASE("tensor is functorial on random small morphisms") {
  auto r = test::rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t a = test::pick(r, 1, 4), b = test::pick(r, 1, 4),
                c = test::pick(r, 1, 4);
    std::size_t d = test::pick(r, 1, 4), e = test::pick(r, 1, 4),
                h2 = test::pick(r, 1, 4);
    Mor f = test::random_table(r, a, b);
    Mor g = test::random_table(r, b, c);
    Mor h = test::random_table(r, d, e);
    Mor k = test::random_table(r, e, h2);
    CHECK(tensor_mor(compose(g, f), compose(k, h)) ==
          compose(tensor_mor(g, k), tensor_mor(f, h)));
  }
}

TEST_CASE("equalizer of tables") {
  Mor f = mor_from_table(finset(3), finset(2), {0, 1, 1});
  Mor g = mor_from_table(finset(3), finset(2), {0, 0, 1});
  auto [x, h] = equalizer(f, g);
  CHECK(x.size == 2);
  CHECK(h.table == std::vector<std::size_t>{0, 2});
  CHECK(compose(f, h) == compose(g, h));
  CHECK(is_mono(h));

  auto [full, hid] = equalizer(f, f);
  CHECK(full == f.dom);
  CHECK(hid == identity(f.dom));
}

TEST_CASE("equalizer of matrices is the kernel of the difference") {
  Mor f = mor_from_matrix(vec_sum(2), vec_sum(1), {{Rat(1), Rat(0)}});
  Mor g = mor_from_matrix(vec_sum(2), vec_sum(1), {{Rat(0), Rat(1)}});
  auto [x, h] = equalizer(f, g);
  CHECK(x.size == 1);
  CHECK(h.matrix == Matrix{{Rat(1)}, {Rat(1)}});
  CHECK(compose(f, h) == compose(g, h));
  CHECK(is_mono(h));
}

TEST_CASE("equalizer mediators are mono on random inputs") {
  auto r = test::rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = test::pick(r, 1, 5), m = test::pick(r, 1, 4);
    Mor f = test::random_table(r, n, m);
    Mor g = test::random_table(r, n, m);
    auto [x, h] = equalizer(f, g);
    CHECK(is_mono(h));
    CHECK(compose(f, h) == compose(g, h));
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = test::pick(r, 1, 4), m = test::pick(r, 1, 3);
    Mor f = test::random_matrix_mor(r, Ambient::FinVectSum, n, m);
    Mor g = test::random_matrix_mor(r, Ambient::FinVectSum, n, m);
    auto [x, h] = equalizer(f, g);
    CHECK(is_mono(h));
    CHECK(compose(f, h) == compose(g, h));
  }
}

TEST_CASE("inverse of tables and matrices") {
  Mor p = mor_from_table(finset(3), finset(3), {2, 0, 1});
  CHECK(compose(inverse(p), p) == identity(finset(3)));
  Mor m = mor_from_matrix(vec_tensor(2), vec_tensor(2),
                          {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK(compose(inverse(m), m) == identity(vec_tensor(2)));
  Mor sing = mor_from_matrix(vec_tensor(2), vec_tensor(2),
                             {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK_THROWS_AS(inverse(sing), NotInvertibleError);
}

TEST_CASE("factor_through_mono solves pi . h = u exactly") {
  Mor pi = mor_from_table(finset(2), finset(5), {1, 3});
  Mor u = mor_from_table(finset(3), finset(5), {3, 1, 1});
  auto h = factor_through_mono(pi, u);
  REQUIRE(h.has_value());
  CHECK(compose(pi, *h) == u);

  Mor bad = mor_from_table(finset(1), finset(5), {0});
  CHECK(!factor_through_mono(pi, bad).has_value());

  Mor mpi = mor_from_matrix(vec_sum(1), vec_sum(2), {{Rat(1)}, {Rat(1)}});
  Mor mu_ok = mor_from_matrix(vec_sum(2), vec_sum(2),
                              {{Rat(2), Rat(-1)}, {Rat(2), Rat(-1)}});
  auto hm = factor_through_mono(mpi, mu_ok);
  REQUIRE(hm.has_value());
  CHECK(compose(mpi, *hm) == mu_ok);
  Mor mu_bad = mor_from_matrix(vec_sum(1), vec_sum(2), {{Rat(1)}, {Rat(0)}});
  CHECK(!factor_through_mono(mpi, mu_bad).has_value());
}

TEST_CASE("composition is associative with neutral identities") {
  auto r = test::rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t a = test::pick(r, 1, 4), b = test::pick(r, 1, 4),
                c = test::pick(r, 1, 4), d = test::pick(r, 1, 4);
    Mor f = test::random_table(r, a, b);
    Mor g = test::random_table(r, b, c);
    Mor h = test::random_table(r, c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(identity(f.cod), f) == f);
    CHECK(compose(f, identity(f.dom)) == f);
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = test::pick(r, 1, 3), b = test::pick(r, 1, 3),
                c = test::pick(r, 1, 3), d = test::pick(r, 1, 3);
    Mor f = test::random_matrix_mor(r, Ambient::FinVectTensor, a, b);
    Mor g = test::random_matrix_mor(r, Ambient::FinVectTensor, b, c);
    Mor h = test::random_matrix_mor(r, Ambient::FinVectTensor, c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(identity(f.cod), f) == f);
  }
}

TEST_CASE("rational parsing round-trip") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_to_string(make_rat(-5, 10)) == "-1/2");
  CHECK(make_rat(4, 6) == make_rat(2, 3));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
