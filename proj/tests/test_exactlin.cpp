#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "homcalc/builtins.hpp"
#include "homcalc/linalg.hpp"
#include "homcalc/scalar.hpp"
#include "homcalc/tensor.hpp"

using namespace homcalc;
using Q = Rational;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(4, 8).str() == "1/2");
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational(4, -8).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK((Rational(5) / Rational(2)).str() == "5/2");
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InternalError);
}

TEST_CASE("prime field arithmetic") {
  const auto a = Fp::in_field(3, 7), b = Fp::in_field(5, 7);
  CHECK((a + b).raw() == 1);
  CHECK((a * b).raw() == 1);
  CHECK((a - b).raw() == 5);
  CHECK((a / b).str() == "2");  // 5 * 2 = 10 = 3
  CHECK(a.inverse() * a == Fp(1));
  CHECK((-Fp::in_field(0, 7)).raw() == 0 % 7);
  // literals bind to the field they first touch
  CHECK(Fp(-1) * a == Fp::in_field(4, 7));
  CHECK_THROWS_AS(Fp::in_field(1, 5) + Fp::in_field(1, 7), ValidationError);
  CHECK_THROWS_AS(Fp::in_field(3, 9).inverse(), ValidationError);  // 9 is not prime
}

TEST_CASE("solve_affine on the scalar examples") {
  // [2] x = [4]
  auto s = solve_affine<Q>({{Q(2)}}, {Q(4)});
  REQUIRE(s.solvable);
  CHECK(s.particular == Vec<Q>{Q(2)});
  CHECK(s.homogeneous.dim() == 0);

  // [1 1] x = [0]
  s = solve_affine<Q>({{Q(1), Q(1)}}, {Q(0)});
  REQUIRE(s.solvable);
  CHECK(s.particular == Vec<Q>{Q(0), Q(0)});
  CHECK(s.homogeneous == Subspace<Q>::from_span(2, {{Q(-1), Q(1)}}));

  // [[1],[1]] x = [1,2] is inconsistent
  s = solve_affine<Q>({{Q(1)}, {Q(1)}}, {Q(1), Q(2)});
  CHECK_FALSE(s.solvable);

  CHECK_THROWS_AS(solve_affine<Q>({{Q(1)}}, Vec<Q>{Q(1), Q(2)}), ValidationError);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix<Q>::identity(3)).dim() == 0);
  CHECK(kernel(Matrix<Q>(2, 3)).dim() == 3);

  const Matrix<Q> m{{Q(1), Q(2), Q(3)}};
  auto ker = kernel(m);
  REQUIRE(ker.dim() == 2);
  for (std::size_t i = 0; i < ker.dim(); ++i)
    CHECK(is_zero_vec(m.apply(ker.basis_vector(i))));  // multiply back to zero
}

TEST_CASE("solved systems satisfy their constraints exactly") {
  std::mt19937_64 rng(20240117);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix<Q> m(rows, cols);
    Vec<Q> rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = Q(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 3));
      rhs[i] = Q(static_cast<long long>(rng() % 5) - 2);
    }
    auto s = solve_affine(m, rhs);
    if (s.solvable) CHECK(m.apply(s.particular) == rhs);
    for (std::size_t i = 0; i < s.homogeneous.dim(); ++i)
      CHECK(is_zero_vec(m.apply(s.homogeneous.basis_vector(i))));
    // determinism: a second run is bit-identical
    auto s2 = solve_affine(m, rhs);
    CHECK(s.solvable == s2.solvable);
    CHECK(s.particular == s2.particular);
    CHECK(s.homogeneous == s2.homogeneous);
  }
}

TEST_CASE("subspace canonicity does not depend on the spanning set") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 4, k = 1 + rng() % 3;
    Matrix<Q> span(0, n);
    for (std::size_t i = 0; i < k; ++i) {
      Vec<Q> v(n);
      for (auto& x : v) x = Q(static_cast<long long>(rng() % 5) - 2);
      span.append_row(v);
    }
    auto a = Subspace<Q>::from_span(n, span);
    // shuffle rows and add random combinations of existing rows
    Matrix<Q> span2(0, n);
    for (std::size_t i = k; i-- > 0;) span2.append_row(span.row(i));
    for (std::size_t i = 0; i + 1 < k; ++i)
      span2.append_row(add_vec(span.row(i), scale_vec(Q(3), span.row(i + 1))));
    auto b = Subspace<Q>::from_span(n, span2);
    CHECK(a == b);
  }
}

TEST_CASE("quotient examples") {
  // ambient 2, sub = span{[1,0]}
  auto q = quotient(std::size_t{2}, Subspace<Q>::from_span(2, {{Q(1), Q(0)}}));
  CHECK(q.dim == 1);
  CHECK(is_zero_vec(q.projection.apply({Q(1), Q(0)})));

  // zero subspace: projection is the identity
  auto q0 = quotient(std::size_t{4}, Subspace<Q>(4));
  CHECK(q0.projection == Matrix<Q>::identity(4));

  // ambient 3, sub = span{[1,1,0]}
  auto q1 = quotient(std::size_t{3}, Subspace<Q>::from_span(3, {{Q(1), Q(1), Q(0)}}));
  CHECK(q1.dim == 2);
  CHECK(q1.projection * q1.section == Matrix<Q>::identity(2));
  CHECK(is_zero_vec(q1.projection.apply({Q(1), Q(1), Q(0)})));
}

TEST_CASE("quotient projection/section laws hold on random subspaces") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 5, k = rng() % n;
    Matrix<Q> span(0, n);
    for (std::size_t i = 0; i < k; ++i) {
      Vec<Q> v(n);
      for (auto& x : v) x = Q(static_cast<long long>(rng() % 5) - 2);
      span.append_row(v);
    }
    auto sub = Subspace<Q>::from_span(n, span);
    auto q = quotient(n, sub);
    CHECK(q.projection * q.section == Matrix<Q>::identity(q.dim));
    for (std::size_t i = 0; i < sub.dim(); ++i)
      CHECK(is_zero_vec(q.projection.apply(sub.basis_vector(i))));
    CHECK(kernel(q.projection) == sub);
  }
}

TEST_CASE("subquotient representatives") {
  auto num = Subspace<Q>::from_span(3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}});
  auto den = Subspace<Q>::from_span(3, {{Q(1), Q(1), Q(0)}});
  auto sq = subquotient(num, den);
  CHECK(sq.dim() == 1);
  // the class map kills the denominator and is exact on representatives
  CHECK(is_zero_vec(sq.class_of({Q(1), Q(1), Q(0)})));
  CHECK(sq.class_of(sq.representatives.row(0)) == Vec<Q>{Q(1)});
  CHECK_THROWS_AS(subquotient(den, num), ValidationError);
}

TEST_CASE("tensor over the algebra") {
  SECTION("A (x)_A A is A for a product field") {
    const auto A = product_field<Q>(2);
    const auto reg = regular_bimodule(A);
    auto t = tensor_over_algebra(reg.dim, reg.right_action, reg.dim, reg.left_action);
    CHECK(t.dim == 2);
  }
  SECTION("A (x)_A A is A for a matrix algebra") {
    const auto A = matrix_algebra<Q>(2);
    const auto reg = regular_bimodule(A);
    auto t = tensor_over_algebra(reg.dim, reg.right_action, reg.dim, reg.left_action);
    CHECK(t.dim == A.dim);
  }
  SECTION("over the ground field the tensor product is plain") {
    const auto A = ground_field<Q>();
    // two- and three-dimensional trivial modules
    std::vector<Matrix<Q>> v{Matrix<Q>::identity(2)}, w{Matrix<Q>::identity(3)};
    auto t = tensor_over_algebra(std::size_t{2}, v, std::size_t{3}, w);
    CHECK(t.dim == 6);
  }
  SECTION("factor map is a left inverse of the section") {
    const auto A = matrix_algebra<Q>(2);
    const auto reg = regular_bimodule(A);
    auto t = tensor_over_algebra(reg.dim, reg.right_action, reg.dim, reg.left_action);
    CHECK(t.factor * t.section == Matrix<Q>::identity(t.dim));
    // balancing relations die in the quotient: (v a) (x) w = v (x) (a w)
    for (std::size_t s = 0; s < A.dim; ++s)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          auto lhs = t.project(reg.right_action[s].col(i), unit_vec<Q>(4, j));
          auto rhs = t.project(unit_vec<Q>(4, i), reg.left_action[s].col(j));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("matrix inverse") {
  const Matrix<Q> m{{Q(1), Q(2)}, {Q(3), Q(4)}};
  CHECK(inverse(m) * m == Matrix<Q>::identity(2));
  CHECK_THROWS_AS(inverse(Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}), ValidationError);
}

TEST_CASE("prime field linear algebra") {
  using F = Fp;
  auto e = [](long long n) { return F::in_field(n, 5); };
  Matrix<F> m{{e(2), e(1)}, {e(1), e(1)}};
  auto s = solve_affine(m, Vec<F>{e(1), e(2)});
  REQUIRE(s.solvable);
  CHECK(m.apply(s.particular) == Vec<F>{e(1), e(2)});
  CHECK(kernel(m).dim() == 0);
}
