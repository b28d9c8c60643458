#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pglca/field.hpp"

namespace pglca {

/// k x n array over the g symbols of a projective line, stored row-major so
/// that one parameter's values over all tests are contiguous.
class TestingArray {
 public:
  TestingArray() = default;
  TestingArray(int g, int k, int n, Symbol fill = 0);

  int symbol_count() const { return g_; }
  int rows() const { return k_; }
  int columns() const { return n_; }

  Symbol at(int row, int col) const { return data_[index(row, col)]; }
  Symbol& at(int row, int col) { return data_[index(row, col)]; }
  std::span<const Symbol> row(int r) const { return {data_.data() + index(r, 0), static_cast<std::size_t>(n_)}; }
  std::span<Symbol> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(n_)}; }
  std::vector<Symbol> column(int c) const;

  /// Horizontal concatenation; throws std::invalid_argument on a row or
  /// alphabet mismatch.
  void append(const TestingArray& other);
  TestingArray select_columns(const std::vector<int>& cols) const;
  TestingArray drop_rows(const std::vector<int>& rows) const;

  friend bool operator==(const TestingArray&, const TestingArray&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

  int g_ = 0;
  int k_ = 0;
  int n_ = 0;
  std::vector<Symbol> data_;
};

/// Array file: header "CA k=<k> n=<n> g=<g> t=4", then k lines of n
/// single-space separated tokens ('0'..'8', '*').
void write_array(std::ostream& os, const TestingArray& a);
TestingArray read_array(std::istream& is);
std::string format_array(const TestingArray& a);
TestingArray parse_array(const std::string& text);
void save_array(const std::string& path, const TestingArray& a);
TestingArray load_array(const std::string& path);

/// Starter-vector file: one vector per line in symbol tokens.
std::vector<std::vector<Symbol>> read_vectors(std::istream& is, int g);
void write_vectors(std::ostream& os, const std::vector<std::vector<Symbol>>& vectors, int g);

}  // namespace pglca
