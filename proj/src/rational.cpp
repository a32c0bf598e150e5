#include "vexf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "vexf/errors.hpp"

namespace vexf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  using boost::multiprecision::mpz_int;
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  const mpz_int n{std::string(num.front() == '+' ? num.substr(1) : num)};
  const mpz_int q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, q);
}

std::string to_string(const Rational& value) { return value.str(); }

Vec parse_vector(std::string_view csv) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  if (trim(csv).empty()) throw ParseError("empty vector literal");
  while (true) {
    const auto comma = csv.find(',', start);
    entries.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Vec out(static_cast<Index>(entries.size()));
  for (Index i = 0; i < out.size(); ++i) out[i] = entries[static_cast<std::size_t>(i)];
  return out;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

Vec from_ints(std::initializer_list<long> values) {
  Vec out(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) out[i++] = Rational(x);
  return out;
}

Vec unit_vector(Index dim, Index i) {
  Vec e = Vec::Zero(dim);
  e[i] = 1;
  return e;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

Mat stack_rows(const std::vector<Vec>& rows, Index dim) {
  Mat out(static_cast<Index>(rows.size()), dim);
  for (Index i = 0; i < out.rows(); ++i) out.row(i) = rows[static_cast<std::size_t>(i)].transpose();
  return out;
}

Mat sorted_unique_rows(const Mat& points) {
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(points.rows()));
  for (Index i = 0; i < points.rows(); ++i) rows.emplace_back(points.row(i).transpose());
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end(), [](const Vec& a, const Vec& b) { return a == b; }),
             rows.end());
  return stack_rows(rows, points.cols());
}

}  // namespace vexf
