#include "pglca/array.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace pglca {

TestingArray::TestingArray(int g, int k, int n, Symbol fill)
    : g_(g), k_(k), n_(n), data_(static_cast<std::size_t>(k) * n, fill) {
  if (g < 2 || g > 10) throw std::invalid_argument("symbol count out of range");
  if (k < 0 || n < 0) throw std::invalid_argument("negative array dimension");
}

std::vector<Symbol> TestingArray::column(int c) const {
  std::vector<Symbol> out(k_);
  for (int r = 0; r < k_; ++r) out[r] = at(r, c);
  return out;
}

void TestingArray::append(const TestingArray& other) {
  if (n_ == 0 && k_ == 0) {
    *this = other;
    return;
  }
  if (other.k_ != k_ || other.g_ != g_)
    throw std::invalid_argument("cannot concatenate arrays of different shape");
  std::vector<Symbol> merged(static_cast<std::size_t>(k_) * (n_ + other.n_));
  for (int r = 0; r < k_; ++r) {
    auto dst = merged.begin() + static_cast<std::ptrdiff_t>(r) * (n_ + other.n_);
    dst = std::copy(row(r).begin(), row(r).end(), dst);
    std::copy(other.row(r).begin(), other.row(r).end(), dst);
  }
  data_ = std::move(merged);
  n_ += other.n_;
}

TestingArray TestingArray::select_columns(const std::vector<int>& cols) const {
  TestingArray out(g_, k_, static_cast<int>(cols.size()));
  for (int r = 0; r < k_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, static_cast<int>(j)) = at(r, cols[j]);
  return out;
}

TestingArray TestingArray::drop_rows(const std::vector<int>& rows) const {
  std::vector<int> keep;
  for (int r = 0; r < k_; ++r)
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) keep.push_back(r);
  TestingArray out(g_, static_cast<int>(keep.size()), n_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    std::copy(row(keep[i]).begin(), row(keep[i]).end(), out.row(static_cast<int>(i)).begin());
  return out;
}

void write_array(std::ostream& os, const TestingArray& a) {
  os << "CA k=" << a.rows() << " n=" << a.columns() << " g=" << a.symbol_count() << " t=4\n";
  std::string line;
  for (int r = 0; r < a.rows(); ++r) {
    line.clear();
    for (int c = 0; c < a.columns(); ++c) {
      if (c != 0) line += ' ';
      line += symbol_char(a.at(r, c), a.symbol_count());
    }
    line += '\n';
    os << line;
  }
}

TestingArray read_array(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("array file is empty");
  static const std::regex kHeader(R"(^CA k=(\d+) n=(\d+) g=(\d+) t=4\s*$)");
  std::smatch m;
  if (!std::regex_match(header, m, kHeader))
    throw std::runtime_error("bad array header: '" + header + "'");
  const int k = std::stoi(m[1]);
  const int n = std::stoi(m[2]);
  const int g = std::stoi(m[3]);
  TestingArray a(g, k, n);
  std::string line;
  for (int r = 0; r < k; ++r) {
    if (!std::getline(is, line))
      throw std::runtime_error("array file truncated at row " + std::to_string(r));
    std::istringstream ls(line);
    std::string tok;
    int c = 0;
    while (ls >> tok) {
      if (c >= n) throw std::runtime_error("row " + std::to_string(r) + " has more than n tokens");
      a.at(r, c++) = parse_symbol(tok, g);
    }
    if (c != n) throw std::runtime_error("row " + std::to_string(r) + " has " + std::to_string(c) + " tokens, expected " + std::to_string(n));
  }
  return a;
}

std::string format_array(const TestingArray& a) {
  std::ostringstream os;
  write_array(os, a);
  return os.str();
}

TestingArray parse_array(const std::string& text) {
  std::istringstream is(text);
  return read_array(is);
}

void save_array(const std::string& path, const TestingArray& a) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_array(os, a);
}

TestingArray load_array(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_array(is);
}

std::vector<std::vector<Symbol>> read_vectors(std::istream& is, int g) {
  std::vector<std::vector<Symbol>> out;
  std::string line;
  while (std::getline(is, line)) {
    auto v = parse_symbols(line, g);
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

void write_vectors(std::ostream& os, const std::vector<std::vector<Symbol>>& vectors, int g) {
  for (const auto& v : vectors) os << format_symbols(v, g, " ") << '\n';
}

}  // namespace pglca
