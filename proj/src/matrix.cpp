#include "balgraph/matrix.hpp"

#include <istream>
#include <string>

namespace balgraph {

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw GraphError("negative matrix dimension");
  if (rows > 64 || cols > 64)
    throw SizeLimitError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds 64x64");
  bits_.assign(static_cast<std::size_t>(rows), 0);
}

ZeroOneMatrix ZeroOneMatrix::from_rows(int cols, std::vector<Bits> rows) {
  ZeroOneMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] & ~low_bits(cols)) throw GraphError("row " + std::to_string(r) + " has entries beyond column " + std::to_string(cols - 1));
  m.bits_ = std::move(rows);
  return m;
}

ZeroOneMatrix ZeroOneMatrix::parse(std::istream& in) {
  std::vector<Bits> rows;
  int cols = -1;
  std::string line;
  while (std::getline(in, line)) {
    std::string cells;
    for (char ch : line) {
      if (ch == '0' || ch == '1') cells.push_back(ch);
      else if (ch != ' ' && ch != '\t' && ch != '\r') throw GraphError("unexpected matrix character '" + std::string(1, ch) + "'");
    }
    if (cells.empty()) continue;
    if (cols >= 0 && static_cast<int>(cells.size()) != cols)
      throw GraphError("matrix row '" + line + "' has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(cols));
    cols = static_cast<int>(cells.size());
    if (cols > 64) throw SizeLimitError("matrix row '" + line + "' exceeds 64 columns");
    Bits r = 0;
    for (int c = 0; c < cols; ++c)
      if (cells[static_cast<std::size_t>(c)] == '1') r |= bit(c);
    rows.push_back(r);
  }
  return from_rows(cols < 0 ? 0 : cols, std::move(rows));
}

void ZeroOneMatrix::set(int r, int c, bool value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw GraphError("matrix index out of range");
  auto& row = bits_[static_cast<std::size_t>(r)];
  row = value ? (row | bit(c)) : (row & ~bit(c));
}

Bits ZeroOneMatrix::column(int c) const {
  Bits out = 0;
  for (int r = 0; r < rows_; ++r)
    if (at(r, c)) out |= bit(r);
  return out;
}

std::string ZeroOneMatrix::to_text() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace balgraph
