#include "rtd/graph6.hpp"

#include "rtd/errors.hpp"

namespace rtd {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  out.push_back(126);
  out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
  out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
  out.push_back(static_cast<char>((n & 63) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  auto sixbits = [&](std::size_t pos) -> int {
    if (pos >= line.size())
      throw ParseError("graph6 line truncated", base + pos);
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte outside [63, 126]", base + pos);
    return c - 63;
  };

  if (line.empty()) throw ParseError("empty graph6 line", base);
  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126)
      throw ParseError("graph6 8-byte size form exceeds the vertex limit",
                       base + 1);
    n = (static_cast<long>(sixbits(1)) << 12) | (sixbits(2) << 6) | sixbits(3);
    pos = 4;
  } else {
    n = sixbits(0);
    pos = 1;
  }
  if (n > Graph::kMaxVertices)
    throw ParseError("graph6 vertex count exceeds " +
                         std::to_string(Graph::kMaxVertices),
                     base);

  const long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() != pos + body) {
    const std::size_t where = line.size() < pos + body ? line.size() : pos + body;
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) +
                         " bytes, expected " + std::to_string(body),
                     base + where);
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sixbits(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    const int last = sixbits(pos + body - 1);
    const int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1))
      throw ParseError("graph6 padding bits are not zero", base + pos + body - 1);
  }
  return g;
}

}  // namespace rtd
