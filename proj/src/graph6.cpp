#include <string>
#include <string_view>

#include "longcycle/io.hpp"

namespace longcycle {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 258047: '~' then three 6-bit digits, most significant first.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int chunk = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size())
      throw FormatError("truncated graph6 string", base + text.size());
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw FormatError("invalid graph6 byte " + std::to_string(int(c)),
                        base + i);
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (byte_at(0) == 63) {  // '~'
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == '~')
      throw FormatError("graph6 orders beyond 2^18 are not supported",
                        base + 1);
    n = (static_cast<long long>(byte_at(1)) << 12) |
        (static_cast<long long>(byte_at(2)) << 6) | byte_at(3);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  if (n > kMaxVertices)
    throw Error(Error::Code::TooManyVertices,
                "graph6 order " + std::to_string(n) + " exceeds 64");

  GraphBuilder b(static_cast<int>(n));
  int bits = 0, chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        chunk = byte_at(pos++);
        bits = 6;
      }
      if ((chunk >> 5) & 1) b.add_edge(i, j);
      chunk = (chunk << 1) & 63;
      --bits;
    }
  }
  if (pos != text.size())
    throw FormatError("trailing bytes after graph6 payload", base + pos);
  return std::move(b).freeze();
}

}  // namespace longcycle
