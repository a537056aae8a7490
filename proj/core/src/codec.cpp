#include "stochtop/codec.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stochtop/error.hpp"

namespace stochtop {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

unsigned long long parse_uint(std::string_view tok, std::size_t line) {
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "malformed integer '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in, int dim_cap) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Simplex> simplices;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_n) {
      if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected header 'n=<int>'");
      n = static_cast<std::size_t>(parse_uint(trim(line.substr(2)), line_no));
      have_n = true;
      continue;
    }
    Simplex s;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      const unsigned long long v = parse_uint(line.substr(pos, end - pos), line_no);
      if (v >= n) throw ParseError(line_no, "vertex id " + std::to_string(v) + " is not below n=" + std::to_string(n));
      if (!s.empty() && v <= s.back()) throw ParseError(line_no, "vertex ids must be strictly increasing");
      s.push_back(static_cast<Vertex>(v));
      pos = end;
    }
    if (static_cast<int>(s.size()) - 1 > dim_cap) throw ParseError(line_no, "simplex exceeds the dimension cap");
    simplices.push_back(std::move(s));
  }
  if (!have_n) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n=<int>'");
  return SimplicialComplex::from_simplices(n, simplices, dim_cap);
}

SimplicialComplex parse_complex(const std::string& text, int dim_cap) {
  std::istringstream in(text);
  return parse_complex(in, dim_cap);
}

SimplicialComplex read_complex_file(const std::string& path, int dim_cap) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return parse_complex(in, dim_cap);
}

void write_complex(std::ostream& out, const SimplicialComplex& x) {
  out << "n=" << x.vertex_universe() << '\n';
  for (const Simplex& s : maximal_simplices(x)) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

std::string format_complex(const SimplicialComplex& x) {
  std::ostringstream out;
  write_complex(out, x);
  return out.str();
}

}  // namespace stochtop
