#include "pglca/field.hpp"

#include <algorithm>
#include <array>

namespace pglca {

UnsupportedOrder::UnsupportedOrder(int q)
    : std::invalid_argument("unsupported field order " + std::to_string(q) +
                            " (supported: 2,3,4,5,7,8,9)") {}

namespace {

struct FieldParams {
  int q;
  int p;
  int m;
  std::vector<int> reduction;  // monic, lowest degree first
};

const std::array<FieldParams, 7>& supported() {
  static const std::array<FieldParams, 7> table{{
      {2, 2, 1, {}},
      {3, 3, 1, {}},
      {4, 2, 2, {1, 1, 1}},     // x^2 + x + 1
      {5, 5, 1, {}},
      {7, 7, 1, {}},
      {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, 3, 2, {1, 0, 1}},     // x^2 + 1
  }};
  return table;
}

std::vector<int> to_digits(int code, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

int poly_mul(int a, int b, const FieldParams& fp) {
  const auto da = to_digits(a, fp.p, fp.m);
  const auto db = to_digits(b, fp.p, fp.m);
  std::vector<int> prod(2 * fp.m - 1, 0);
  for (int i = 0; i < fp.m; ++i)
    for (int j = 0; j < fp.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % fp.p;
  // Reduce from the top using the monic reduction polynomial.
  for (int deg = static_cast<int>(prod.size()) - 1; deg >= fp.m; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    for (int i = 0; i <= fp.m; ++i) {
      const int idx = deg - fp.m + i;
      prod[idx] = ((prod[idx] - c * fp.reduction[i]) % fp.p + fp.p) % fp.p;
    }
  }
  prod.resize(fp.m);
  return from_digits(prod, fp.p);
}

}  // namespace

Field Field::make(int q) {
  const auto& table = supported();
  const auto it = std::find_if(table.begin(), table.end(),
                               [q](const FieldParams& fp) { return fp.q == q; });
  if (it == table.end()) throw UnsupportedOrder(q);
  const FieldParams& fp = *it;

  Field f;
  f.q_ = fp.q;
  f.p_ = fp.p;
  f.m_ = fp.m;
  f.reduction_ = fp.reduction;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const auto da = to_digits(a, fp.p, fp.m);
    for (int b = 0; b < q; ++b) {
      const auto db = to_digits(b, fp.p, fp.m);
      std::vector<int> sum(fp.m);
      for (int i = 0; i < fp.m; ++i) sum[i] = (da[i] + db[i]) % fp.p;
      f.add_[a * q + b] = static_cast<Symbol>(from_digits(sum, fp.p));
      f.mul_[a * q + b] = static_cast<Symbol>(fp.m == 1 ? (a * b) % q : poly_mul(a, b, fp));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Symbol>(b);
      if (a != 0 && f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Symbol>(b);
    }
  }
  return f;
}

Symbol Field::inv(Symbol a) const {
  if (a == 0 || a >= q_) throw std::domain_error("inverse of zero or non-element");
  return inv_[a];
}

char symbol_char(Symbol s, int g) {
  if (s == g - 1) return '*';
  return static_cast<char>('0' + s);
}

std::string symbol_pretty(Symbol s, int g) {
  if (s == g - 1) return "∞";
  return std::string(1, static_cast<char>('0' + s));
}

Symbol parse_symbol(std::string_view token, int g) {
  if (token == "*" || token == "∞") return static_cast<Symbol>(g - 1);
  if (token.size() == 1 && token[0] >= '0' && token[0] <= '8') {
    const int v = token[0] - '0';
    if (v < g - 1) return static_cast<Symbol>(v);
  }
  throw std::invalid_argument("invalid symbol token '" + std::string(token) +
                              "' for g=" + std::to_string(g));
}

std::vector<Symbol> parse_symbols(std::string_view text, int g) {
  static constexpr std::string_view kInf = "∞";
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++i;
    } else if (text.substr(i, kInf.size()) == kInf) {
      out.push_back(static_cast<Symbol>(g - 1));
      i += kInf.size();
    } else {
      out.push_back(parse_symbol(text.substr(i, 1), g));
      ++i;
    }
  }
  return out;
}

std::string format_symbols(const std::vector<Symbol>& symbols, int g, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i != 0) out += sep;
    out += symbol_char(symbols[i], g);
  }
  return out;
}

}  // namespace pglca
