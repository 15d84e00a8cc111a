#include "blab/graph6.hpp"

#include <stdexcept>

namespace blab {

namespace {

int checked_byte(const std::string& text, size_t i) {
  if (i >= text.size()) throw std::invalid_argument("graph6: input truncated");
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  size_t pos = 0;
  long long n;
  int first = checked_byte(text, pos);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~' prefix: three more bytes carry n as an 18-bit big-endian value.
    if (text.size() >= 2 && text[1] == '~')
      throw std::invalid_argument("graph6: orders above 258047 are not supported");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_byte(text, i);
    if (n < 63)
      throw std::invalid_argument("graph6: long header used for a small order");
    pos = 4;
  }
  if (n < 1) throw std::invalid_argument("graph6: graphs need at least one vertex");

  long long bits = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos != body)
    throw std::invalid_argument("graph6: body length does not match order");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = checked_byte(text, pos + static_cast<size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  if (bits % 6 != 0) {
    int last = checked_byte(text, text.size() - 1);
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1))
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  long long n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: orders above 258047 are not supported");
  }
  long long bits = n * (n - 1) / 2;
  std::string body(static_cast<size_t>((bits + 5) / 6), 0);
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) body[static_cast<size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

}  // namespace blab
