#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pglca {

/// A point of the projective line GF(q) ∪ {∞}. Codes 0..q-1 are field
/// elements, code q is ∞, so the natural integer order is 0 < 1 < ... < ∞.
using Symbol = std::uint8_t;

class UnsupportedOrder : public std::invalid_argument {
 public:
  explicit UnsupportedOrder(int q);
};

/// Finite field GF(q) for q in {2,3,4,5,7,8,9}, stored as full operation
/// tables. Element code = sum of c_i * p^i for the polynomial sum c_i x^i.
/// Reduction polynomials: x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+1 over GF(3) (q=9).
class Field {
 public:
  static Field make(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }
  /// Coefficients of the monic reduction polynomial, lowest degree first.
  /// Empty for prime fields.
  const std::vector<int>& reduction() const { return reduction_; }

  /// Size of the projective line, g = q + 1.
  int symbol_count() const { return q_ + 1; }
  Symbol infinity() const { return static_cast<Symbol>(q_); }

  Symbol add(Symbol a, Symbol b) const { return add_[a * q_ + b]; }
  Symbol mul(Symbol a, Symbol b) const { return mul_[a * q_ + b]; }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

 private:
  Field() = default;

  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> reduction_;
  std::vector<Symbol> add_;
  std::vector<Symbol> mul_;
  std::vector<Symbol> neg_;
  std::vector<Symbol> inv_;
};

/// g = q + 1 for the projective line over `field`.
inline int symbol_count(const Field& field) { return field.symbol_count(); }

// Text encoding: '0'..'8' for field elements and '*' for ∞.
char symbol_char(Symbol s, int g);
std::string symbol_pretty(Symbol s, int g);
/// Parses one token ("0".."8", "*" or "∞"). Throws std::invalid_argument.
Symbol parse_symbol(std::string_view token, int g);
/// Parses a compact vector such as "011*11**" (whitespace between tokens is
/// allowed, "∞" is accepted for '*').
std::vector<Symbol> parse_symbols(std::string_view text, int g);
std::string format_symbols(const std::vector<Symbol>& symbols, int g,
                           std::string_view sep = "");

}  // namespace pglca
