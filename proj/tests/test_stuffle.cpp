#include "doctest.h"

#include "polyapery/stuffle.hpp"
#include "testkit.hpp"

using namespace polyapery;

TEST_SUITE("stuffle") {

TEST_CASE("small products") {
  FormalSum square;
  square.add(Composition{1, 1}, 2);
  square.add(Composition{2}, 1);
  CHECK(quasi_shuffle(Composition{1}, Composition{1}) == square);
  CHECK(quasi_shuffle(Composition{1}, Composition{1}).to_string() == "2*(1,1) + (2)");

  const FormalSum p = quasi_shuffle(Composition{1}, Composition{2});
  CHECK(p.coefficient(Composition{1, 2}) == 1);
  CHECK(p.coefficient(Composition{2, 1}) == 1);
  CHECK(p.coefficient(Composition{3}) == 1);
  CHECK(p.size() == 3);

  CHECK(quasi_shuffle(Composition{4}, Composition{}) == FormalSum(Composition{4}));
  CHECK(quasi_shuffle(Composition{}, Composition{2, 1}) == FormalSum(Composition{2, 1}));
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(quasi_shuffle(Composition{1, 1, 1, 1, 1}, Composition{1}), CapacityError);
  CHECK_NOTHROW(quasi_shuffle(Composition{1, 1, 1, 1}, Composition{1}));
}

TEST_CASE("commutative and associative up to weight five") {
  const auto r = testkit::stuffle_laws(5);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.checked > 50);
}

TEST_CASE("weight is additive") {
  for (const auto& a : {Composition{1}, Composition{2, 1}, Composition{1, 3}}) {
    for (const auto& b : {Composition{2}, Composition{1, 1}, Composition{3, 1, 2}}) {
      const FormalSum p = quasi_shuffle(a, b);
      for (const auto& [c, coeff] : p.terms()) {
        CHECK(coeff > 0);
        CHECK(c.weight() == a.weight() + b.weight());
      }
    }
  }
}

TEST_CASE("partial sums") {
  CHECK(partial_sum(Composition{1}, 4) == mpq_class(11, 6));
  CHECK(partial_sum(Composition{1, 1}, 6) == mpq_class(15, 8));
  CHECK(partial_sum(Composition{}, 3) == 1);
  CHECK(partial_sum(Composition{2, 1}, 2) == 0);
  const FormalSum square = quasi_shuffle(Composition{1}, Composition{1});
  for (long n = 1; n <= 30; ++n) {
    const mpq_class h = partial_sum(Composition{1}, n);
    CHECK(evaluate(square, n) == h * h);
  }
}

TEST_CASE("numeric verification") {
  CHECK(verify_stuffle_numeric(Composition{1}, Composition{1}, 200));
  CHECK(verify_stuffle_numeric(Composition{2, 1}, Composition{1, 2}, 100));
  CHECK(verify_stuffle_numeric(Composition{1}, Composition{1}, 1));
  CHECK_THROWS_AS(verify_stuffle_numeric(Composition{1}, Composition{1}, 0), DomainError);
}

}
