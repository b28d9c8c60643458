#include "pglca/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace pglca {

Symbol apply(const GroupElement& e, Symbol x, const Field& field) {
  const Symbol inf = field.infinity();
  if (x == inf) return e.c == 0 ? inf : field.div(e.a, e.c);
  const Symbol num = field.add(field.mul(e.a, x), e.b);
  const Symbol den = field.add(field.mul(e.c, x), e.d);
  if (den == 0) return inf;
  return field.div(num, den);
}

GroupElement make_element(Symbol a, Symbol b, Symbol c, Symbol d, const Field& field) {
  if (field.sub(field.mul(a, d), field.mul(b, c)) == 0)
    throw std::invalid_argument("singular fractional linear map");
  const Symbol lead = c != 0 ? c : a;
  const Symbol s = field.inv(lead);
  GroupElement e;
  e.a = field.mul(a, s);
  e.b = field.mul(b, s);
  e.c = field.mul(c, s);
  e.d = field.mul(d, s);
  e.action.fill(0);
  for (int x = 0; x < field.symbol_count(); ++x)
    e.action[x] = apply(e, static_cast<Symbol>(x), field);
  return e;
}

GroupElement identity_element(const Field& field) { return make_element(1, 0, 0, 1, field); }

std::vector<GroupElement> enumerate_group(const Field& field) {
  const int q = field.order();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>((q + 1) * q * (q - 1)));
  // c = 0, a = 1: affine maps x -> x/d + b/d; identity is (1,0,0,1).
  for (int d = 1; d < q; ++d)
    for (int b = 0; b < q; ++b)
      out.push_back(make_element(1, static_cast<Symbol>(b), 0, static_cast<Symbol>(d), field));
  // c = 1: ad - b != 0.
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int d = 0; d < q; ++d) {
        const auto sa = static_cast<Symbol>(a);
        const auto sb = static_cast<Symbol>(b);
        const auto sd = static_cast<Symbol>(d);
        if (field.mul(sa, sd) == sb) continue;
        out.push_back(make_element(sa, sb, 1, sd, field));
      }
  return out;
}

GroupElement compose(const GroupElement& e1, const GroupElement& e2, const Field& field) {
  // Matrix product [[a1 b1][c1 d1]] * [[a2 b2][c2 d2]].
  const auto m = [&](Symbol x, Symbol y, Symbol z, Symbol w) {
    return field.add(field.mul(x, y), field.mul(z, w));
  };
  return make_element(m(e1.a, e2.a, e1.b, e2.c), m(e1.a, e2.b, e1.b, e2.d),
                      m(e1.c, e2.a, e1.d, e2.c), m(e1.c, e2.b, e1.d, e2.d), field);
}

GroupElement inverse(const GroupElement& e, const Field& field) {
  // Adjugate; scalar factor disappears in normalization.
  return make_element(e.d, field.neg(e.b), field.neg(e.c), e.a, field);
}

bool check_sharp_3_transitivity(const Field& field) {
  const int g = field.symbol_count();
  const auto group = enumerate_group(field);
  std::vector<int> hits(static_cast<std::size_t>(g * g * g));
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      for (int z = 0; z < g; ++z) {
        if (x == y || y == z || x == z) continue;
        std::fill(hits.begin(), hits.end(), 0);
        for (const auto& e : group) ++hits[(e(x) * g + e(y)) * g + e(z)];
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) {
              const bool distinct = i != j && j != k && i != k;
              if (hits[(i * g + j) * g + k] != (distinct ? 1 : 0)) return false;
            }
      }
  return true;
}

Group::Group(Field field) : field_(std::move(field)), elements_(enumerate_group(field_)) {}

}  // namespace pglca
