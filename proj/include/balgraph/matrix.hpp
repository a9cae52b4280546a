#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "balgraph/graph.hpp"

namespace balgraph {

/// Rectangular 0/1 matrix; each row is a bitset over column indices.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  ZeroOneMatrix(int rows, int cols);
  static ZeroOneMatrix from_rows(int cols, std::vector<Bits> rows);
  /// Parses rows of '0'/'1' characters; blank lines are skipped.
  static ZeroOneMatrix parse(std::istream& in);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return (bits_[static_cast<std::size_t>(r)] >> c) & 1U; }
  void set(int r, int c, bool value);
  Bits row(int r) const { return bits_[static_cast<std::size_t>(r)]; }
  /// Rows having a one in column c.
  Bits column(int c) const;

  std::string to_text() const;
  bool operator==(const ZeroOneMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Bits> bits_;
};

}  // namespace balgraph
