#include <doctest.h>

#include "pglca/field.hpp"

using namespace pglca;

namespace {
const int kOrders[] = {2, 3, 4, 5, 7, 8, 9};
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : kOrders) {
    CAPTURE(q);
    const Field f = Field::make(q);
    CHECK(f.symbol_count() == q + 1);
    CHECK(f.infinity() == q);
    for (int a = 0; a < q; ++a) {
      const auto x = static_cast<Symbol>(a);
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (a != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int b = 0; b < q; ++b) {
        const auto y = static_cast<Symbol>(b);
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        if (a != 0 && b != 0) CHECK(f.mul(x, y) != 0);
        for (int c = 0; c < q; ++c) {
          const auto z = static_cast<Symbol>(c);
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("extension fields use the documented reduction polynomials") {
  const Field f4 = Field::make(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
  const Field f8 = Field::make(8);
  CHECK(f8.mul(2, 4) == 3);  // x^3 = x + 1
  const Field f9 = Field::make(9);
  CHECK(f9.characteristic() == 3);
  CHECK(f9.mul(3, 3) == 2);  // x^2 = -1
  CHECK(Field::make(7).reduction().empty());
}

TEST_CASE("unsupported orders and zero inverse are rejected") {
  for (int q : {0, 1, 6, 10, 11, 16}) CHECK_THROWS_AS(Field::make(q), UnsupportedOrder);
  CHECK_THROWS_AS(Field::make(5).inv(0), std::domain_error);
}

TEST_CASE("symbol text round trip") {
  CHECK(parse_symbols("011*1", 3) == std::vector<Symbol>{0, 1, 1, 2, 1});
  CHECK(parse_symbols("0 1, ∞", 3) == std::vector<Symbol>{0, 1, 2});
  CHECK(format_symbols({0, 1, 2}, 3) == "01*");
  CHECK(format_symbols({0, 8, 9}, 10, " ") == "0 8 *");
  CHECK(symbol_char(4, 5) == '*');
  CHECK_THROWS_AS(parse_symbol("3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbols("01x", 3), std::invalid_argument);
}
