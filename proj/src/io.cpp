#include "flagmodel/io.hpp"

#include <charconv>
#include <string>
#include <type_traits>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace flagmodel {

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw FlagError(ErrorCode::ParseError, std::string("empty entry in ") + what + " list");
    tok = tok.substr(first, last - first + 1);
    T value{};
    if constexpr (std::is_same_v<T, int>) {
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FlagError(ErrorCode::ParseError, std::string("bad ") + what + " entry '" + tok + "'");
    } else {
      std::size_t used = 0;
      try {
        value = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(value))
        throw FlagError(ErrorCode::ParseError, std::string("bad ") + what + " entry '" + tok + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  return parse_list<int>(text, "integer");
}

std::vector<double> parse_real_list(const std::string& text) {
  return parse_list<double>(text, "real");
}

Matrix read_matrix_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 4096)
    throw FlagError(ErrorCode::ParseError, "matrix file must start with a size 1..4096");
  Matrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw FlagError(ErrorCode::ParseError, "matrix file ends early at row " + std::to_string(i + 1));
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v))
        throw FlagError(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
      m(i, j) = v;
    }
  }
  std::string extra;
  if (in >> extra) throw FlagError(ErrorCode::ParseError, "trailing data after matrix");
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FlagError(ErrorCode::ParseError, "cannot open matrix file " + path);
  return read_matrix_text(in);
}

void write_matrix_text(std::ostream& out, const Matrix& m) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << m.rows() << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(prec);
}

}  // namespace flagmodel
