#include "longcycle/canonical.hpp"

#include <algorithm>
#include <cstring>

#include "longcycle/io.hpp"

// Canonical labelling by individualization-refinement. The search tree
// branches on the vertices of the first smallest non-singleton cell of an
// equitable partition; every discrete leaf yields a candidate relabelling
// and the lexicographically least packed adjacency matrix wins. Two leaves
// with equal strings differ by an automorphism, which is recorded and used
// to prune sibling branches whose root lies in the orbit of an already
// explored one (only automorphisms fixing the current individualization
// path pointwise may prune). Run to completion this discovers a generating
// set of the full automorphism group, which the enumeration module needs
// for its canonical-augmentation acceptance test.

namespace longcycle {

namespace {

struct UnionFind {
  std::array<std::uint8_t, kMaxVertices> parent;

  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = static_cast<std::uint8_t>(a);  // smallest vertex is the root
  }
};

struct Partition {
  int n = 0;
  std::array<std::uint8_t, kMaxVertices> lab;    // position -> vertex
  std::array<std::uint8_t, kMaxVertices> pos;    // vertex -> position
  std::array<std::uint8_t, kMaxVertices> start;  // position -> its cell start
  std::array<std::uint8_t, kMaxVertices> len;    // valid at cell starts
  int cells = 0;

  void init_unit(int order) {
    n = order;
    cells = n > 0 ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      lab[i] = static_cast<std::uint8_t>(i);
      pos[i] = static_cast<std::uint8_t>(i);
      start[i] = 0;
    }
    if (n > 0) len[0] = static_cast<std::uint8_t>(n);
  }

  bool discrete() const { return cells == n; }

  VertexSet cell_bits(int s) const {
    VertexSet bits = 0;
    for (int i = s; i < s + len[s]; ++i) bits |= vbit(lab[i]);
    return bits;
  }
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition p;
    p.init_unit(n_);
    if (n_ == 0) return;
    refine(p);
    search(p);
  }

  const std::array<std::uint8_t, kMaxVertices>& best_lab() const {
    return best_lab_;
  }
  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }

  std::vector<int> orbits() {
    UnionFind uf;
    uf.reset(n_);
    for (const auto& gen : gens_)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    std::vector<int> orbit(n_);
    for (int v = 0; v < n_; ++v) orbit[v] = uf.find(v);
    return orbit;
  }

 private:
  // Splits every cell by neighbour counts against every cell until the
  // partition is equitable. Subcells are ordered by ascending count, which
  // keeps the refinement equivariant under relabelling.
  void refine(Partition& p) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.n; s += p.len[s]) {
        const VertexSet splitter = p.cell_bits(s);
        for (int d = 0; d < p.n;) {
          const int dlen = p.len[d];
          if (dlen > 1 && split_cell(p, d, splitter)) changed = true;
          d += dlen;  // advance by the original extent; fragments stay inside
        }
        if (changed) break;  // cell boundaries moved; restart the pass
      }
    }
  }

  bool split_cell(Partition& p, int d, VertexSet splitter) {
    const int dlen = p.len[d];
    std::array<std::uint8_t, kMaxVertices> verts;
    std::array<std::uint8_t, kMaxVertices> cnt;
    bool uniform = true;
    for (int i = 0; i < dlen; ++i) {
      const int v = p.lab[d + i];
      verts[i] = static_cast<std::uint8_t>(v);
      cnt[i] = static_cast<std::uint8_t>(set_size(g_.neighbors(v) & splitter));
      if (cnt[i] != cnt[0]) uniform = false;
    }
    if (uniform) return false;
    // counting sort by count, ascending; stable.
    std::array<std::uint8_t, kMaxVertices + 1> bucket{};
    for (int i = 0; i < dlen; ++i) ++bucket[cnt[i] + 1];
    for (int c = 1; c <= kMaxVertices; ++c) bucket[c] += bucket[c - 1];
    std::array<std::uint8_t, kMaxVertices> sorted_v;
    std::array<std::uint8_t, kMaxVertices> sorted_c;
    for (int i = 0; i < dlen; ++i) {
      const int slot = bucket[cnt[i]]++;
      sorted_v[slot] = verts[i];
      sorted_c[slot] = cnt[i];
    }
    for (int i = 0; i < dlen; ++i) {
      const int v = sorted_v[i];
      p.lab[d + i] = static_cast<std::uint8_t>(v);
      p.pos[v] = static_cast<std::uint8_t>(d + i);
    }
    int run_start = d;
    for (int i = 0; i < dlen; ++i) {
      if (i > 0 && sorted_c[i] != sorted_c[i - 1]) {
        p.len[run_start] = static_cast<std::uint8_t>(d + i - run_start);
        run_start = d + i;
        ++p.cells;
      }
      p.start[d + i] = static_cast<std::uint8_t>(run_start);
    }
    p.len[run_start] = static_cast<std::uint8_t>(d + dlen - run_start);
    return true;
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_len = kMaxVertices + 1;
    for (int s = 0; s < p.n; s += p.len[s])
      if (p.len[s] > 1 && p.len[s] < best_len) {
        best = s;
        best_len = p.len[s];
      }
    return best;
  }

  void individualize(Partition& p, int v) {
    const int s = p.start[p.pos[v]];
    const int other_pos = p.pos[v];
    const int u = p.lab[s];
    p.lab[s] = static_cast<std::uint8_t>(v);
    p.lab[other_pos] = static_cast<std::uint8_t>(u);
    p.pos[v] = static_cast<std::uint8_t>(s);
    p.pos[u] = static_cast<std::uint8_t>(other_pos);
    const int old_len = p.len[s];
    p.len[s] = 1;
    p.start[s] = static_cast<std::uint8_t>(s);
    p.len[s + 1] = static_cast<std::uint8_t>(old_len - 1);
    for (int i = s + 1; i < s + old_len; ++i)
      p.start[i] = static_cast<std::uint8_t>(s + 1);
    ++p.cells;
  }

  void search(const Partition& p) {
    if (p.discrete()) {
      handle_leaf(p);
      return;
    }
    const int cs = target_cell(p);
    std::array<std::uint8_t, kMaxVertices> cand;
    const int clen = p.len[cs];
    for (int i = 0; i < clen; ++i) cand[i] = p.lab[cs + i];
    std::sort(cand.begin(), cand.begin() + clen);

    std::vector<int> tried;
    UnionFind uf;
    size_t built_with = SIZE_MAX;
    for (int i = 0; i < clen; ++i) {
      const int v = cand[i];
      if (!tried.empty()) {
        if (built_with != gens_.size()) {
          uf.reset(n_);
          for (const auto& gen : gens_) {
            bool fixes_path = true;
            for (int u : path_)
              if (gen[u] != u) {
                fixes_path = false;
                break;
              }
            if (fixes_path)
              for (int x = 0; x < n_; ++x) uf.unite(x, gen[x]);
          }
          built_with = gens_.size();
        }
        bool pruned = false;
        for (int u : tried)
          if (uf.find(u) == uf.find(v)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
      }
      tried.push_back(v);
      Partition child = p;
      individualize(child, v);
      refine(child);
      path_.push_back(v);
      search(child);
      path_.pop_back();
    }
  }

  void handle_leaf(const Partition& p) {
    // Row i of the candidate matrix: adjacency of the vertex at canonical
    // position i, re-expressed in canonical positions.
    std::vector<std::uint64_t> rows(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      LONGCYCLE_FOR_EACH_VERTEX(u, g_.neighbors(p.lab[i]))
      row |= std::uint64_t{1} << p.pos[u];
      rows[i] = row;
    }
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = rows;
      best_lab_ = p.lab;
      return;
    }
    if (rows == best_rows_) {
      // phi maps the best leaf onto this one: phi(v) = lab[best_pos(v)].
      std::vector<int> phi(static_cast<size_t>(n_));
      std::array<std::uint8_t, kMaxVertices> best_pos;
      for (int i = 0; i < n_; ++i) best_pos[best_lab_[i]] = static_cast<std::uint8_t>(i);
      bool identity = true;
      for (int v = 0; v < n_; ++v) {
        phi[v] = p.lab[best_pos[v]];
        if (phi[v] != v) identity = false;
      }
      if (!identity) gens_.push_back(std::move(phi));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<std::uint64_t> best_rows_;
  std::array<std::uint8_t, kMaxVertices> best_lab_{};
  std::vector<std::vector<int>> gens_;
};

std::vector<std::uint8_t> pack_certificate(int n,
                                           const std::vector<std::uint64_t>& rows) {
  const int row_bytes = (n + 7) / 8;
  std::vector<std::uint8_t> bytes;
  bytes.reserve(1 + static_cast<size_t>(n) * row_bytes);
  bytes.push_back(static_cast<std::uint8_t>(n));
  for (std::uint64_t row : rows)
    for (int b = 0; b < row_bytes; ++b)
      bytes.push_back(static_cast<std::uint8_t>((row >> (8 * b)) & 0xff));
  return bytes;
}

}  // namespace

Certificate canonical(const Graph& g) {
  Searcher s(g);
  s.run();
  Certificate cert;
  cert.bytes = pack_certificate(g.order(), s.best_rows());
  cert.relabeling.resize(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) cert.relabeling[s.best_lab()[i]] = i;
  return cert;
}

CanonicalInfo canonical_info(const Graph& g) {
  Searcher s(g);
  s.run();
  CanonicalInfo info;
  info.certificate.bytes = pack_certificate(g.order(), s.best_rows());
  info.certificate.relabeling.resize(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i)
    info.certificate.relabeling[s.best_lab()[i]] = i;
  info.generators = s.generators();
  info.orbit = s.orbits();
  return info;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical(g).bytes == canonical(h).bytes;
}

Graph canonical_form(const Graph& g) {
  const Certificate cert = canonical(g);
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges())
    b.add_edge(cert.relabeling[u], cert.relabeling[v]);
  return std::move(b).freeze();
}

std::string canonical_key(const Graph& g) {
  return graph6_encode(canonical_form(g));
}

}  // namespace longcycle
