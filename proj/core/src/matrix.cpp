#include "cubeslice/matrix.hpp"

#include <fstream>
#include <sstream>

namespace cubeslice {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(int c) const {
  RatVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      Rational acc = 0;
      for (int i = 0; i < a.cols(); ++i) acc += a.at(r, i) * b.at(i, c);
      out.at(r, c) = acc;
    }
  return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw DimensionError("matrix-vector dimension mismatch");
  RatVector out(m.rows(), Rational(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

namespace {

// Splits one line into tokens, recording the 1-based column of each token.
// '#' starts a comment.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, int>> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    toks.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
  }
  return toks;
}

// Reads the next line with at least one token; returns false on EOF.
bool next_content_line(std::istream& in, std::vector<std::pair<std::string, int>>& toks,
                       int& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    toks = tokenize(line);
    if (!toks.empty()) return true;
  }
  return false;
}

long parse_dim(const std::pair<std::string, int>& tok, int lineno) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok.first, &pos);
    if (pos != tok.first.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, tok.second, "expected integer dimension, got '" + tok.first + "'");
  }
}

}  // namespace

RatMatrix parse_matrix(std::istream& in) {
  int lineno = 0;
  std::vector<std::pair<std::string, int>> toks;
  if (!next_content_line(in, toks, lineno))
    throw ParseError(lineno + 1, 1, "missing header line 'm k'");
  if (toks.size() != 2)
    throw ParseError(lineno, toks[0].second, "header must be exactly 'm k'");
  long m = parse_dim(toks[0], lineno);
  long k = parse_dim(toks[1], lineno);
  if (m < 1 || k < 1)
    throw ParseError(lineno, toks[0].second, "dimensions must be positive");

  RatMatrix mat(static_cast<int>(m), static_cast<int>(k));
  for (long r = 0; r < m; ++r) {
    if (!next_content_line(in, toks, lineno))
      throw ParseError(lineno + 1, 1,
                       "expected " + std::to_string(m) + " rows, got " + std::to_string(r));
    if (static_cast<long>(toks.size()) != k)
      throw ParseError(lineno, toks.back().second,
                       "row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(k));
    for (long c = 0; c < k; ++c) {
      auto q = parse_rational(toks[c].first);
      if (!q)
        throw ParseError(lineno, toks[c].second, "malformed rational '" + toks[c].first + "'");
      mat.at(static_cast<int>(r), static_cast<int>(c)) = *q;
    }
  }
  if (next_content_line(in, toks, lineno))
    throw ParseError(lineno, toks[0].second, "trailing content after matrix rows");
  return mat;
}

RatMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return parse_matrix(in);
}

RatMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

void format_matrix(std::ostream& out, const RatMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << to_string(m.at(r, c));
    }
    out << "\n";
  }
}

std::string format_matrix(const RatMatrix& m) {
  std::ostringstream out;
  format_matrix(out, m);
  return out.str();
}

RatVector parse_vector(std::istream& in) {
  int lineno = 0;
  std::vector<std::pair<std::string, int>> toks;
  if (!next_content_line(in, toks, lineno))
    throw ParseError(lineno + 1, 1, "missing vector line");
  RatVector v;
  for (const auto& tok : toks) {
    auto q = parse_rational(tok.first);
    if (!q) throw ParseError(lineno, tok.second, "malformed rational '" + tok.first + "'");
    v.push_back(*q);
  }
  if (next_content_line(in, toks, lineno))
    throw ParseError(lineno, toks[0].second, "trailing content after vector line");
  return v;
}

RatVector parse_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return parse_vector(in);
}

}  // namespace cubeslice
