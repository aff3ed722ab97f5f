#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "srgswitch/error.hpp"
#include "srgswitch/graph.hpp"

namespace srgsw::graph6 {

namespace detail {

inline void put_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

inline unsigned sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw ParseError("graph6: byte " + std::to_string(u) + " outside printable range 63..126");
  return u - 63;
}

}  // namespace detail

/// Encodes g without the optional ">>graph6<<" header and without a newline.
inline std::string encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::put_order(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) throw ParseError("graph6: empty line");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = detail::sextet(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw ParseError("graph6: truncated 8-byte order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::sextet(line[i]);
    pos = 8;
  } else {
    if (line.size() < 4) throw ParseError("graph6: truncated 4-byte order field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::sextet(line[i]);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6: graph has 0 vertices");
  require_within_cap(n);

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes for order " + std::to_string(n) +
                     ", got " + std::to_string(line.size() - pos));

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const unsigned byte = detail::sextet(line[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1U) g.set_edge(i, j);
    }
  if (nbits % 6 != 0) {
    const unsigned last = detail::sextet(line.back());
    if (last & ((1U << (6 - nbits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

/// Reads one graph per nonblank line.
inline std::vector<Graph> read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(decode(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace srgsw::graph6
