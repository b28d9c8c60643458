#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pglca/field.hpp"

namespace pglca {

/// Largest projective line handled (q = 9).
inline constexpr int kMaxSymbols = 10;

/// A fractional linear map x -> (ax+b)/(cx+d), ad - bc != 0, stored in
/// normalized form (first nonzero of c, a equals 1) together with its action
/// on all q+1 symbols.
struct GroupElement {
  Symbol a = 1;
  Symbol b = 0;
  Symbol c = 0;
  Symbol d = 1;
  std::array<Symbol, kMaxSymbols> action{};

  Symbol operator()(Symbol x) const { return action[x]; }
  friend bool operator==(const GroupElement& l, const GroupElement& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

/// Evaluates (ax+b)/(cx+d) from the coefficients using 1/0 = ∞ and
/// x=∞ -> a/c (∞ when c = 0).
Symbol apply(const GroupElement& e, Symbol x, const Field& field);

/// Builds the normalized element for the given coefficients. Throws
/// std::invalid_argument when ad - bc = 0.
GroupElement make_element(Symbol a, Symbol b, Symbol c, Symbol d, const Field& field);

GroupElement identity_element(const Field& field);

/// All (q+1)q(q-1) elements of PGL(2,q); the identity comes first.
std::vector<GroupElement> enumerate_group(const Field& field);

/// Action of e1 after e2.
GroupElement compose(const GroupElement& e1, const GroupElement& e2, const Field& field);
GroupElement inverse(const GroupElement& e, const Field& field);

/// Exhaustive check that every ordered triple of distinct symbols is mapped
/// onto every other by exactly one group element.
bool check_sharp_3_transitivity(const Field& field);

/// A field together with its enumerated group; the unit most modules consume.
class Group {
 public:
  explicit Group(Field field);
  static Group of_order(int g) { return Group(Field::make(g - 1)); }

  const Field& field() const { return field_; }
  int symbol_count() const { return field_.symbol_count(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  Field field_;
  std::vector<GroupElement> elements_;
};

}  // namespace pglca
