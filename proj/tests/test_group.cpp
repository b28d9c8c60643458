#include <doctest.h>

#include <set>

#include "pglca/group.hpp"

using namespace pglca;

TEST_CASE("group order is (q+1)q(q-1)") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Group grp(Field::make(q));
    CHECK(grp.order() == static_cast<std::size_t>((q + 1) * q * (q - 1)));
    CHECK(grp.elements().front() == identity_element(grp.field()));
    std::set<std::vector<Symbol>> actions;
    for (const auto& e : grp.elements()) actions.emplace(e.action.begin(), e.action.begin() + q + 1);
    CHECK(actions.size() == grp.order());
  }
}

TEST_CASE("action is sharply 3-transitive") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    CHECK(check_sharp_3_transitivity(Field::make(q)));
  }
}

TEST_CASE("infinity conventions") {
  const Field f = Field::make(3);
  const Symbol inf = f.infinity();
  const auto recip = make_element(0, 1, 1, 0, f);
  CHECK(recip(0) == inf);
  CHECK(recip(inf) == 0);
  CHECK(recip(2) == 2);
  const auto shift = make_element(1, 1, 0, 1, f);
  CHECK(shift(inf) == inf);
  CHECK(shift(2) == 0);
  CHECK_THROWS_AS(make_element(1, 2, 2, 1, f), std::invalid_argument);  // 1 - 4 = 0 mod 3
}

TEST_CASE("composition and inverses stay in the group") {
  const Group grp = Group::of_order(6);
  const Field& f = grp.field();
  const auto& els = grp.elements();
  for (std::size_t i = 0; i < els.size(); i += 7)
    for (std::size_t j = 0; j < els.size(); j += 5) {
      const auto c = compose(els[i], els[j], f);
      for (int x = 0; x < 6; ++x) CHECK(c(static_cast<Symbol>(x)) == els[i](els[j](static_cast<Symbol>(x))));
      CHECK(std::find(els.begin(), els.end(), c) != els.end());
    }
  for (const auto& e : els) CHECK(compose(e, inverse(e, f), f) == identity_element(f));
}
