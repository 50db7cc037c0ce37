#include "longcycle/families.hpp"

#include <algorithm>

#include "longcycle/recognition.hpp"

namespace longcycle {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Error::Code::InvalidParameter, what);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "K_n needs n >= 0");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).freeze();
}

Graph cycle_graph(int n) {
  require(n >= 3, "C_n needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).freeze();
}

Graph path_graph(int n) {
  require(n >= 0, "P_n needs n >= 0");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).freeze();
}

Graph matching_graph(int q) {
  require(q >= 0, "qK_2 needs q >= 0");
  GraphBuilder b(2 * q);
  for (int i = 0; i < q; ++i) b.add_edge(2 * i, 2 * i + 1);
  return std::move(b).freeze();
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph::empty(n);
}

Graph mixed_join(int k, int q, int m) {
  require(k >= 0 && q >= 0 && m >= 0, "mixed_join parameters must be >= 0");
  require(k + 2 * q + m >= 1, "mixed_join needs at least one vertex");
  return join(empty_graph(k), disjoint_union(matching_graph(q), empty_graph(m)));
}

Graph remark1_family(int n) {
  require(n >= 9, "remark1 family needs n >= 9");
  const int k = n / 3;
  switch (n % 3) {
    case 0:
      return mixed_join(k - 1, k - 1, 3);
    case 1:
      return mixed_join(k, k, 1);
    default:
      return mixed_join(k, k, 2);
  }
}

Graph remark3_family(int n) {
  require(n >= 6, "remark3 family needs n >= 6");
  const int k = n / 3;
  switch (n % 3) {
    case 0:
      return mixed_join(k - 1, k, 1);
    case 1:
      return mixed_join(k - 1, k, 2);
    default:
      return mixed_join(k - 1, k, 3);
  }
}

Graph remark4_family(int a, int b) {
  require(a >= 1, "remark4 family needs a >= 1");
  require(b >= 3, "remark4 family needs b >= 3");
  return join(complete_graph(2),
              disjoint_union(empty_graph(a), matching_graph(b)));
}

Graph theta_graph(std::span<const int> lengths) {
  require(lengths.size() >= 2, "theta graph needs at least two branches");
  int ones = 0, longs = 0;
  for (int l : lengths) {
    require(l >= 1, "theta branch lengths must be >= 1");
    if (l == 1) ++ones;
    if (l >= 2) ++longs;
  }
  if (ones > 1)
    throw Error(Error::Code::NotSimple,
                "theta graph with two branches of length 1 is not simple");
  require(longs >= 2, "theta graph needs at least two branches of length >= 2");
  int order = 2;
  for (int l : lengths) order += l - 1;
  GraphBuilder b(order);
  int next = 2;
  for (int l : lengths) {
    int prev = 0;
    for (int i = 1; i < l; ++i) {
      b.add_edge(prev, next);
      prev = next++;
    }
    b.add_edge(prev, 1);
  }
  return std::move(b).freeze();
}

Graph uniform_theta(int a, int m) {
  require(m >= 2, "uniform theta needs m >= 2 branches");
  if (a == 1)
    throw Error(Error::Code::NotSimple,
                "theta(1^m) would need parallel edges");
  require(a >= 2, "uniform theta needs a >= 2");
  std::vector<int> lengths(static_cast<size_t>(m), a);
  return theta_graph(lengths);
}

Graph thm16_girth4(int n) {
  require(n >= 8, "girth-4 extremal family needs n >= 8");
  std::vector<int> lengths{3, 3};
  lengths.insert(lengths.end(), static_cast<size_t>(n - 6), 2);
  return theta_graph(lengths);
}

Graph thm16_girth5_even(int n) {
  require(n >= 10 && n % 2 == 0, "girth-5 even family needs even n >= 10");
  std::vector<int> lengths{4, 4};
  lengths.insert(lengths.end(), static_cast<size_t>((n - 10) / 2), 3);
  lengths.push_back(2);
  const Graph t = theta_graph(lengths);
  // x = 0, y = 1; the first length-4 branch is x-p-q-r-y with r = 4.
  GraphBuilder b(t);
  b.add_edge(0, 4);
  return subdivide_edge(std::move(b).freeze(), 0, 4);
}

Graph thm16_girth5_odd(int n) {
  require(n >= 11 && n % 2 == 1, "girth-5 odd family needs odd n >= 11");
  std::vector<int> lengths{4, 4};
  lengths.insert(lengths.end(), static_cast<size_t>((n - 9) / 2), 3);
  lengths.push_back(2);
  return theta_graph(lengths);
}

Graph thm16_girth6_even(int n) {
  require(n >= 12 && n % 2 == 0, "girth-6 even family needs even n >= 12");
  std::vector<int> lengths{4, 4};
  lengths.insert(lengths.end(), static_cast<size_t>((n - 8) / 2), 3);
  return theta_graph(lengths);
}

Graph thm16_girth6_odd(int n) {
  require(n >= 13 && n % 2 == 1, "girth-6 odd family needs odd n >= 13");
  std::vector<int> lengths{5, 4};
  lengths.insert(lengths.end(), static_cast<size_t>((n - 9) / 2), 3);
  return theta_graph(lengths);
}

Graph bipartite_family(int i, int n) {
  require(i >= 1 && i <= 7, "bipartite family index must be 1..7");
  require(n >= 9, "bipartite family needs n >= 9");
  // All chords are 3-chords of the 8-cycle; sets follow the seven
  // equality-class representatives.
  static const std::vector<std::vector<std::pair<int, int>>> chord_sets = {
      {},
      {{0, 3}},
      {{0, 3}, {0, 5}},
      {{0, 3}, {1, 4}},
      {{0, 3}, {4, 7}},
      {{0, 3}, {0, 5}, {1, 4}},
      {{0, 3}, {0, 5}, {1, 4}, {4, 7}},
  };
  GraphBuilder b(n);
  for (int v = 0; v < 8; ++v) b.add_edge(v, (v + 1) % 8);
  for (auto [u, v] : chord_sets[static_cast<size_t>(i - 1)]) b.add_edge(u, v);
  for (int w = 8; w < n; ++w) {
    b.add_edge(w, 0);
    b.add_edge(w, 4);
  }
  return std::move(b).freeze();
}

Graph make_family(const std::string& id, std::span<const int> params) {
  auto arity = [&](size_t want) {
    if (params.size() != want)
      throw Error(Error::Code::InvalidParameter,
                  "family " + id + " takes " + std::to_string(want) +
                      " parameter(s), got " + std::to_string(params.size()));
  };
  if (id == "K") return arity(1), complete_graph(params[0]);
  if (id == "C") return arity(1), cycle_graph(params[0]);
  if (id == "P") return arity(1), path_graph(params[0]);
  if (id == "qK2") return arity(1), matching_graph(params[0]);
  if (id == "empty") return arity(1), empty_graph(params[0]);
  if (id == "mixed_join")
    return arity(3), mixed_join(params[0], params[1], params[2]);
  if (id == "remark1") return arity(1), remark1_family(params[0]);
  if (id == "remark3") return arity(1), remark3_family(params[0]);
  if (id == "remark4") return arity(2), remark4_family(params[0], params[1]);
  if (id == "theta") {
    if (params.size() < 2)
      throw Error(Error::Code::InvalidParameter,
                  "theta takes at least two branch lengths");
    return theta_graph(params);
  }
  if (id == "uniform_theta")
    return arity(2), uniform_theta(params[0], params[1]);
  if (id == "thm16_girth4") return arity(1), thm16_girth4(params[0]);
  if (id == "thm16_girth5_even")
    return arity(1), thm16_girth5_even(params[0]);
  if (id == "thm16_girth5_odd") return arity(1), thm16_girth5_odd(params[0]);
  if (id == "thm16_girth6_even")
    return arity(1), thm16_girth6_even(params[0]);
  if (id == "thm16_girth6_odd") return arity(1), thm16_girth6_odd(params[0]);
  if (id == "bipartite")
    return arity(2), bipartite_family(params[0], params[1]);
  throw Error(Error::Code::InvalidParameter, "unknown family id: " + id);
}

std::vector<std::string> family_ids() {
  return {"K",
          "C",
          "P",
          "qK2",
          "empty",
          "mixed_join",
          "remark1",
          "remark3",
          "remark4",
          "theta",
          "uniform_theta",
          "thm16_girth4",
          "thm16_girth5_even",
          "thm16_girth5_odd",
          "thm16_girth6_even",
          "thm16_girth6_odd",
          "bipartite"};
}

// ---- claimed profiles ---------------------------------------------------------

FamilySpec t7_extremal_spec(int k, int n) {
  require(k >= 2, "cummerbund covering extremal needs k >= 2");
  require(n >= k + 1, "need n >= k + 1 for a k-connected graph");
  FamilySpec spec;
  spec.id = "t7_extremal";
  spec.params = {k, n};
  if (n <= 3 * k) {
    spec.graph = complete_graph(n);
    spec.claims.order = n;
    spec.claims.kappa = n - 1;
    spec.claims.cc = n;
    spec.claims.cummerbund_covered = true;
  } else {
    spec.graph = mixed_join(k, k, n - 3 * k);
    spec.claims.order = n;
    spec.claims.kappa = k;
    spec.claims.circumference = 3 * k;
    spec.claims.cc = 3 * k;
    spec.claims.cummerbund_covered = false;
  }
  return spec;
}

FamilySpec t8_extremal_spec(int k, int n) {
  require(k >= 1, "detour covering extremal needs k >= 1");
  require(n >= k + 1, "need n >= k + 1 for a k-connected graph");
  FamilySpec spec;
  spec.id = "t8_extremal";
  spec.params = {k, n};
  if (n <= 3 * k + 2) {
    spec.graph = complete_graph(n);
    spec.claims.order = n;
    spec.claims.kappa = n - 1;
    spec.claims.dc = n;
    spec.claims.detour_covered = true;
  } else {
    spec.graph = mixed_join(k, k + 1, n - 3 * k - 2);
    spec.claims.order = n;
    spec.claims.kappa = k;
    spec.claims.detour_order = 3 * k + 2;
    spec.claims.dc = 3 * k + 2;
    spec.claims.detour_covered = false;
  }
  return spec;
}

FamilySpec remark1_spec(int n) {
  FamilySpec spec;
  spec.id = "remark1";
  spec.params = {n};
  spec.graph = remark1_family(n);
  spec.claims.order = n;
  spec.claims.min_degree = ceil_div(n, 3) - 1;
  spec.claims.kappa_min = 2;
  spec.claims.cummerbund_covered = false;
  return spec;
}

FamilySpec remark3_spec(int n) {
  FamilySpec spec;
  spec.id = "remark3";
  spec.params = {n};
  spec.graph = remark3_family(n);
  spec.claims.order = n;
  spec.claims.min_degree = ceil_div(n - 2, 3) - 1;
  spec.claims.kappa_min = 1;
  spec.claims.detour_covered = false;
  return spec;
}

FamilySpec remark4_spec(int a, int b) {
  FamilySpec spec;
  spec.id = "remark4";
  spec.params = {a, b};
  spec.graph = remark4_family(a, b);
  spec.claims.order = 2 + a + 2 * b;
  spec.claims.kappa = 2;
  spec.claims.detour_covered = false;
  spec.claims.cummerbund_covered = false;
  spec.claims.induced_free = {"P4", "C4"};
  return spec;
}

FamilySpec t16_extremal_spec(const std::string& part, int n) {
  FamilySpec spec;
  spec.id = "t16_" + part;
  spec.params = {n};
  spec.claims.order = n;
  spec.claims.kappa = 2;
  spec.claims.cummerbund_covered = false;
  if (part == "g4") {
    spec.graph = thm16_girth4(n);
    spec.claims.girth = 4;
    spec.claims.cc = 6;
  } else if (part == "g5") {
    spec.graph = n % 2 == 0 ? thm16_girth5_even(n) : thm16_girth5_odd(n);
    spec.claims.girth = 5;
    spec.claims.cc = 8;
  } else if (part == "g6") {
    spec.graph = n % 2 == 0 ? thm16_girth6_even(n) : thm16_girth6_odd(n);
    spec.claims.girth = 6;
    spec.claims.cc = n % 2 == 0 ? 8 : 9;
  } else {
    throw Error(Error::Code::InvalidParameter, "unknown part " + part);
  }
  return spec;
}

FamilySpec bipartite_family_spec(int i, int n) {
  FamilySpec spec;
  spec.id = "bipartite";
  spec.params = {i, n};
  spec.graph = bipartite_family(i, n);
  spec.claims.order = n;
  spec.claims.kappa = 2;
  spec.claims.bipartite = true;
  spec.claims.circumference = 8;
  spec.claims.cc = 8;
  spec.claims.cummerbund_covered = false;
  return spec;
}

FamilySpec uniform_theta_spec(int a, int m) {
  FamilySpec spec;
  spec.id = "uniform_theta";
  spec.params = {a, m};
  spec.graph = uniform_theta(a, m);
  spec.claims.order = 2 + m * (a - 1);
  spec.claims.girth = 2 * a;
  spec.claims.circumference = 2 * a;
  spec.claims.kappa = 2;
  spec.claims.cummerbund_covered = true;
  return spec;
}

std::optional<std::string> certify(const FamilySpec& spec) {
  const auto p = profile(spec.graph);
  if (!p) return "profile computation timed out";
  auto fail = [&](const std::string& field, long long want, long long got) {
    return spec.id + ": " + field + " claimed " + std::to_string(want) +
           ", computed " + std::to_string(got);
  };
  const auto& c = spec.claims;
  if (c.order && *c.order != p->order) return fail("order", *c.order, p->order);
  if (c.size && *c.size != p->size) return fail("size", *c.size, p->size);
  if (c.kappa && *c.kappa != p->kappa) return fail("kappa", *c.kappa, p->kappa);
  if (c.kappa_min && p->kappa < *c.kappa_min)
    return fail("kappa_min", *c.kappa_min, p->kappa);
  if (c.girth && (!p->girth || *p->girth != *c.girth))
    return fail("girth", *c.girth, p->girth.value_or(-1));
  if (c.circumference && *c.circumference != p->circumference)
    return fail("circumference", *c.circumference, p->circumference);
  if (c.detour_order && *c.detour_order != p->detour_order)
    return fail("detour_order", *c.detour_order, p->detour_order);
  if (c.dc && *c.dc != p->dc) return fail("dc", *c.dc, p->dc);
  if (c.cc && *c.cc != p->cc) return fail("cc", *c.cc, p->cc);
  if (c.min_degree && *c.min_degree != spec.graph.min_degree())
    return fail("min_degree", *c.min_degree, spec.graph.min_degree());
  if (c.detour_covered && *c.detour_covered != p->detour_covered)
    return fail("detour_covered", *c.detour_covered, p->detour_covered);
  if (c.cummerbund_covered && *c.cummerbund_covered != p->cummerbund_covered)
    return fail("cummerbund_covered", *c.cummerbund_covered,
                p->cummerbund_covered);
  if (c.bipartite && *c.bipartite != p->bipartite)
    return fail("bipartite", *c.bipartite, p->bipartite);
  for (const auto& name : c.induced_free) {
    if (contains_induced(spec.graph, Pattern::by_name(name)))
      return spec.id + ": claimed induced-" + name + "-free but a copy exists";
  }
  return std::nullopt;
}

}  // namespace longcycle
