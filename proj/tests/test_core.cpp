#include <doctest.h>

#include "balfair/core.hpp"
#include "balfair/errors.hpp"
#include "fixtures.hpp"

using namespace balfair;
using fixtures::alloc;

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(Matrix(0, 3)), InvalidArgument);
  CHECK_THROWS_AS(fixtures::from_rows({{1, -1}}), InvalidArgument);
  const auto inst = fixtures::running_example();
  CHECK(inst.num_agents() == 2);
  CHECK(inst.num_goods() == 4);
  CHECK(inst.k() == 2);
  CHECK_THROWS_AS(fixtures::from_rows({{1, 2, 3}, {1, 2, 3}}).k(), InvalidArgument);
}

TEST_CASE("allocations") {
  const auto inst = fixtures::running_example();
  const auto a = alloc({{3, 1}, {4, 2}});
  CHECK(a.bundle(0) == Bundle{0, 2});
  CHECK(a.partitions(4));
  CHECK(a.is_balanced(2));
  CHECK(a.owners(4) == std::vector<int>{0, 1, 0, 1});
  CHECK(Allocation::from_owners(std::vector<int>{0, 1, 0, 1}, 2) == a);
  CHECK_FALSE(alloc({{1, 2}, {2, 3}}).partitions(4));
  CHECK_THROWS_AS(require_allocation(inst, alloc({{1, 2, 3}, {4}}), true), InvalidArgument);
  CHECK_NOTHROW(require_allocation(inst, alloc({{1, 2, 3}, {4}}), false));
  CHECK_THROWS_AS(require_allocation(inst, alloc({{1, 2}, {3, 5}}), false), InvalidArgument);
}

TEST_CASE("welfare on the running example") {
  const auto inst = fixtures::running_example();
  CHECK(valuation_vector(inst, alloc({{1, 3}, {2, 4}})) == fixtures::vec({31, 9}));
  CHECK(nash_product(inst, alloc({{1, 3}, {2, 4}})) == 279);
  CHECK(nash_product(inst, alloc({{1, 2}, {3, 4}})) == 280);
  CHECK(weighted_welfare(inst, alloc({{1, 3}, {2, 4}}), fixtures::vec({1, 2})) == 49);
  CHECK(bundle_value(inst, 1, std::vector<int>{}) == 0);
}

TEST_CASE("classification") {
  CHECK(std::holds_alternative<SingleType>(classify(fixtures::from_rows({{1, 2}, {1, 2}}))));
  CHECK(std::holds_alternative<TwoTypeClass>(classify(fixtures::running_example())));
  const auto bi = classify(fixtures::from_rows({{5, 5, 2, 2}, {5, 2, 5, 2}}));
  REQUIRE(std::holds_alternative<BivaluedClass>(bi));
  CHECK(std::get<BivaluedClass>(bi).params[0] == BivaluedParams{5, 2});
  CHECK(std::holds_alternative<GeneralClass>(classify(fixtures::from_rows({{1, 2, 3}, {3, 2, 1}, {2, 1, 3}}))));
  const auto constant = bivalued_params(fixtures::from_rows({{4, 4}, {1, 0}}));
  REQUIRE(constant);
  CHECK((*constant)[0] == BivaluedParams{5, 4});
  const auto tt = classify(fixtures::from_rows({{1, 2, 3, 4}, {4, 3, 2, 1}, {1, 2, 3, 4}, {4, 3, 2, 1}}));
  REQUIRE(std::holds_alternative<TwoTypeClass>(tt));
  CHECK(std::get<TwoTypeClass>(tt).type2_agents == std::vector<int>{1, 3});
}

TEST_CASE("reduction appends dummy goods") {
  const auto inst = fixtures::from_rows({{1, 2, 3}, {3, 2, 1}});
  const auto r = reduce_unconstrained(inst);
  CHECK(r.instance.num_goods() == 6);
  CHECK(r.original_goods == 3);
  CHECK(r.dummies == std::vector<int>{3, 4, 5});
  CHECK(r.instance.k() == 3);
  CHECK(r.instance.values().rightCols(3).isZero());
  const auto single = fixtures::from_rows({{1, 2, 3}});
  CHECK(reduce_unconstrained(single).instance == single);

  const auto stripped = strip_dummies(alloc({{1, 4, 5}, {2, 3, 6}}), 3);
  CHECK(stripped == alloc({{1}, {2, 3}}));
  CHECK(stripped.partitions(3));
}

TEST_CASE("round robin picks favorites") {
  const auto a = round_robin(fixtures::running_example());
  CHECK(a == alloc({{4, 1}, {3, 2}}));
  CHECK(a.is_balanced(2));
}

TEST_CASE("fractional helpers") {
  const auto x = indicator_matrix(alloc({{1, 3}, {2, 4}}), 4);
  CHECK(is_balanced_fractional(x, 2));
  Matrix half = Matrix::Constant(2, 4, Rational(1, 2));
  CHECK(is_balanced_fractional(half, 2));
  half(0, 0) = Rational(1);
  CHECK_FALSE(is_balanced_fractional(half, 2));
}
