#include "chainprof/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace chainprof {

namespace {

struct LineReader {
  std::istream& in;
  int number = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
};

std::uint64_t parse_u64(const std::string& token, int line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

}  // namespace

Poset read_poset(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line) || line != "poset v1")
    throw ParseError(reader.number == 0 ? 1 : reader.number, "expected header 'poset v1'");

  if (!reader.next(line)) throw ParseError(reader.number + 1, "expected 'elements <n>'");
  std::istringstream header(line);
  std::string keyword, count_token, extra;
  header >> keyword >> count_token;
  if (keyword != "elements" || count_token.empty() || header >> extra)
    throw ParseError(reader.number, "expected 'elements <n>'");
  std::uint64_t n = parse_u64(count_token, reader.number);
  if (n > static_cast<std::uint64_t>(INT32_MAX))
    throw ParseError(reader.number, "element count too large");

  std::vector<std::pair<int, int>> edges;
  while (reader.next(line)) {
    std::istringstream row(line);
    std::string verb, a, b;
    row >> verb >> a >> b;
    if (verb != "cover" || a.empty() || b.empty() || row >> extra)
      throw ParseError(reader.number, "expected 'cover <i> <j>'");
    std::uint64_t i = parse_u64(a, reader.number);
    std::uint64_t j = parse_u64(b, reader.number);
    if (i >= n || j >= n) throw ParseError(reader.number, "cover edge index out of range");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Poset::from_cover_edges(static_cast<int>(n), std::move(edges));
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset v1\n";
  out << "elements " << p.size() << "\n";
  for (auto [i, j] : p.cover_edges()) out << "cover " << i << " " << j << "\n";
}

namespace {

CertVertex parse_vertex(const std::string& token, int line) {
  if (token.size() < 2 || (token[0] != 'M' && token[0] != 'X'))
    throw ParseError(line, "vertex token must be M<pos> or X<idx>, got '" + token + "'");
  return {token[0] == 'M', parse_u64(token.substr(1), line)};
}

}  // namespace

CompressedPoset read_certificate(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line) || line != "cert v1")
    throw ParseError(reader.number == 0 ? 1 : reader.number, "expected header 'cert v1'");

  CompressedPoset cert;
  std::string extra;

  if (!reader.next(line)) throw ParseError(reader.number + 1, "expected 'm <m>'");
  {
    std::istringstream row(line);
    std::string keyword, value;
    row >> keyword >> value;
    if (keyword != "m" || value.empty() || row >> extra)
      throw ParseError(reader.number, "expected 'm <m>'");
    cert.m = parse_u64(value, reader.number);
  }

  if (!reader.next(line)) throw ParseError(reader.number + 1, "expected 'mprime <pos...>'");
  {
    std::istringstream row(line);
    std::string keyword;
    row >> keyword;
    if (keyword != "mprime") throw ParseError(reader.number, "expected 'mprime <pos...>'");
    std::string token;
    while (row >> token) cert.mprime_positions.push_back(parse_u64(token, reader.number));
    if (cert.mprime_positions.empty())
      throw ParseError(reader.number, "expected at least one chain position");
  }

  if (!reader.next(line)) throw ParseError(reader.number + 1, "expected 'x <count>'");
  {
    std::istringstream row(line);
    std::string keyword, value;
    row >> keyword >> value;
    if (keyword != "x" || value.empty() || row >> extra)
      throw ParseError(reader.number, "expected 'x <count>'");
    cert.x_count = parse_u64(value, reader.number);
  }

  while (reader.next(line)) {
    std::istringstream row(line);
    std::string verb, a, b;
    row >> verb >> a >> b;
    if (verb != "edge" || a.empty() || b.empty() || row >> extra)
      throw ParseError(reader.number, "expected 'edge <u> <v>'");
    cert.light_edges.emplace_back(parse_vertex(a, reader.number),
                                  parse_vertex(b, reader.number));
  }
  return cert;
}

void write_certificate(std::ostream& out, const CompressedPoset& cert) {
  out << "cert v1\n";
  out << "m " << cert.m << "\n";
  out << "mprime";
  for (std::uint64_t pos : cert.mprime_positions) out << " " << pos;
  out << "\n";
  out << "x " << cert.x_count << "\n";
  for (const auto& [u, v] : cert.light_edges) {
    out << "edge " << (u.on_chain ? 'M' : 'X') << u.id << " " << (v.on_chain ? 'M' : 'X')
        << v.id << "\n";
  }
}

ChainProfile parse_profile_arg(std::string_view text) {
  ChainProfile profile;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    std::string piece(token);
    if (piece.empty()) throw InvalidProfileError("empty profile member in '" +
                                                 std::string(text) + "'");
    std::uint64_t value = 0, mult = 1;
    std::size_t x = piece.find('x');
    std::string value_part = x == std::string::npos ? piece : piece.substr(0, x);
    auto parse = [&](const std::string& s) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidProfileError("bad profile member '" + piece + "'");
      return v;
    };
    value = parse(value_part);
    if (x != std::string::npos) mult = parse(piece.substr(x + 1));
    profile.add(value, mult);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return profile;
}

std::string format_profile(const ChainProfile& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [card, mult] : s.counts()) {
    if (!first) out << " ";
    out << card << ":" << mult;
    first = false;
  }
  return out.str();
}

void write_dot(std::ostream& out, const Poset& p) {
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  for (int v = 0; v < p.size(); ++v) out << "  " << v << ";\n";
  for (auto [i, j] : p.cover_edges()) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
}

}  // namespace chainprof
