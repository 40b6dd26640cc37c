#include "frifc/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frifc/rng.hpp"

namespace frifc {

FuzzyParams FuzzyParams::uniform(int m, double d, double d0, double v) {
  FuzzyParams fp;
  fp.d.assign(static_cast<std::size_t>(m), d);
  fp.d0 = d0;
  fp.v = v;
  return fp;
}

ParseError::ParseError(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

void validate(const FriProblem& p) {
  if (p.m < 1 || p.n < 1)
    throw std::invalid_argument("problem dimensions must be at least 1x1");
  if (p.A.size() != static_cast<std::size_t>(p.m) * p.n)
    throw std::invalid_argument("matrix size does not match dimensions");
  if (p.b.size() != static_cast<std::size_t>(p.m))
    throw std::invalid_argument("right-hand side size does not match m");
  if (p.c.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("cost size does not match n");
  for (double a : p.A)
    if (!(a >= 0.0 && a <= 1.0))
      throw std::invalid_argument("matrix entries must lie in [0,1]");
  for (double bi : p.b)
    if (!(bi >= 0.0 && bi <= 1.0))
      throw std::invalid_argument("right-hand sides must lie in [0,1]");
  for (double cj : p.c)
    if (!std::isfinite(cj))
      throw std::invalid_argument("costs must be finite");
}

void validate(const FriProblem& p, const FuzzyParams& fp) {
  validate(p);
  if (fp.d.size() != static_cast<std::size_t>(p.m))
    throw std::invalid_argument("tolerance vector size does not match m");
  for (double di : fp.d)
    if (!(di > 0.0) || !std::isfinite(di))
      throw std::invalid_argument("constraint tolerances must be positive");
  if (!(fp.d0 > 0.0) || !std::isfinite(fp.d0))
    throw std::invalid_argument("objective tolerance must be positive");
  if (!(fp.v > 0.0 && fp.v < 1.0))
    throw std::invalid_argument("v must lie strictly between 0 and 1");
}

namespace {

// Splits into whitespace tokens; the caller has already dropped comments.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line) {
  double value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, "expected a number, got '" + tok + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite value '" + tok + "'");
  return value;
}

int parse_dim(const std::string& tok, int line) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, "expected an integer dimension, got '" + tok + "'");
  return value;
}

struct DataLine {
  std::vector<std::string> toks;
  int line = 0;
};

}  // namespace

FriProblem parse_problem(std::istream& in, std::string id) {
  std::vector<DataLine> data;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    data.push_back({tokens_of(line.substr(0, line.find('#'))), lineno});
  }
  if (data.empty()) throw ParseError(lineno ? lineno : 1, "no data lines found");

  const auto& dims = data[0];
  if (dims.toks.size() != 2)
    throw ParseError(dims.line, "expected 'm n' on the first data line");
  FriProblem p;
  p.id = std::move(id);
  p.m = parse_dim(dims.toks[0], dims.line);
  p.n = parse_dim(dims.toks[1], dims.line);
  if (p.m < 1 || p.n < 1)
    throw ParseError(dims.line, "dimensions must be at least 1");

  const std::size_t want = 2 + static_cast<std::size_t>(p.m);  // dims, c, m rows, b
  if (data.size() < want + 1)
    throw ParseError(data.back().line, "unexpected end of input: expected " +
                                           std::to_string(p.m + 2) + " data lines after the dimensions");
  if (data.size() > want + 1)
    throw ParseError(data[want + 1].line, "unexpected extra data line");

  auto read_row = [](const DataLine& dl, int count, const char* what) {
    if (dl.toks.size() != static_cast<std::size_t>(count))
      throw ParseError(dl.line, std::string(what) + ": expected " + std::to_string(count) +
                                    " numbers, got " + std::to_string(dl.toks.size()));
    std::vector<double> row(count);
    for (int k = 0; k < count; ++k) row[k] = parse_double(dl.toks[k], dl.line);
    return row;
  };

  p.c = read_row(data[1], p.n, "cost line");
  p.A.reserve(static_cast<std::size_t>(p.m) * p.n);
  for (int i = 0; i < p.m; ++i) {
    const auto& dl = data[2 + i];
    auto row = read_row(dl, p.n, "matrix row");
    for (double a : row)
      if (a < 0.0 || a > 1.0)
        throw ParseError(dl.line, "matrix entry " + std::to_string(a) + " outside [0,1]");
    p.A.insert(p.A.end(), row.begin(), row.end());
  }
  const auto& bl = data[2 + p.m];
  p.b = read_row(bl, p.m, "right-hand side line");
  for (double bi : p.b)
    if (bi < 0.0 || bi > 1.0)
      throw ParseError(bl.line, "right-hand side " + std::to_string(bi) + " outside [0,1]");
  return p;
}

FriProblem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  // Default id: the file name without directories; an alphabetic extension
  // is dropped so "A.1.txt" names the problem "A.1" but "A.1" stays intact.
  const auto slash = path.find_last_of('/');
  std::string id = slash == std::string::npos ? path : path.substr(slash + 1);
  if (const auto dot = id.find_last_of('.'); dot != std::string::npos && dot > 0 &&
                                             dot + 1 < id.size() &&
                                             std::all_of(id.begin() + dot + 1, id.end(),
                                                         [](unsigned char c) {
                                                           return std::isalpha(c);
                                                         }))
    id.erase(dot);
  return parse_problem(in, id);
}

namespace {

void put(std::string& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

std::string write_problem(const FriProblem& p) {
  std::string out;
  if (!p.id.empty()) out += "# " + p.id + "\n";
  out += std::to_string(p.m) + " " + std::to_string(p.n) + "\n";
  for (int j = 0; j < p.n; ++j) {
    if (j) out += ' ';
    put(out, p.c[j]);
  }
  out += '\n';
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (j) out += ' ';
      put(out, p.a(i, j));
    }
    out += '\n';
  }
  for (int i = 0; i < p.m; ++i) {
    if (i) out += ' ';
    put(out, p.b[i]);
  }
  out += '\n';
  return out;
}

FriProblem gen_random(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be at least 1");
  SplitMix64 rng(seed);
  FriProblem p;
  p.m = m;
  p.n = n;
  p.id = "rand-" + std::to_string(m) + "x" + std::to_string(n) + "-" + std::to_string(seed);
  p.c.resize(n);
  for (auto& cj : p.c) cj = rng.uniform(-10.0, 10.0);
  p.A.resize(static_cast<std::size_t>(m) * n);
  for (auto& a : p.A) a = rng.uniform();
  p.b.resize(m);
  for (auto& bi : p.b) bi = rng.uniform();
  return p;
}

}  // namespace frifc
