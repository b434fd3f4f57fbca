// First-principles validation of the local-model derivations.  Concrete
// planar patches are declared as face cycles, realized as rotation systems,
// re-traced mechanically, and every element classified straight from the
// type definitions.  The windows read off the traced graph must equal the
// windows the TriangleContext/VertexStar code derives from corner data, and
// the traced values must appear among the enumerators' option lists.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "discharge/local_model.hpp"

using namespace discharge;

namespace {

using Vertex = int;

// A plane patch built from declared counterclockwise face cycles.  Rotations
// follow from the successor pairs each face induces around its vertices;
// pendant dummies raise boundary degrees without touching inner faces.
struct Patch {
  std::vector<std::vector<Vertex>> declared;
  std::map<Vertex, std::map<Vertex, Vertex>> succ;  // around v: prev -> next
  std::map<Vertex, std::vector<Vertex>> rot;
  int next_id = 0;

  Vertex fresh() { return next_id++; }

  void add_face(std::vector<Vertex> cycle) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
      Vertex prev = cycle[(i + n - 1) % n], v = cycle[i], next = cycle[(i + 1) % n];
      auto [it, fresh_pair] = succ[v].emplace(prev, next);
      REQUIRE(fresh_pair);  // each directed edge borders one declared face
      (void)it;
    }
    declared.push_back(std::move(cycle));
  }

  // chain the successor pairs into rotations; boundary vertices leave an
  // open chain whose gap faces the outer region
  void realize() {
    for (auto& [v, s] : succ) {
      std::set<Vertex> nbrs;
      for (auto& [a, b] : s) {
        nbrs.insert(a);
        nbrs.insert(b);
      }
      Vertex start = *nbrs.begin();
      for (Vertex n : nbrs) {
        bool is_image = false;
        for (auto& [a, b] : s) is_image = is_image || b == n;
        if (!is_image) start = n;  // chain start (boundary vertex)
      }
      std::vector<Vertex> order{start};
      for (;;) {
        auto it = s.find(order.back());
        if (it == s.end() || it->second == start) break;
        order.push_back(it->second);
      }
      // the inner faces around v form one contiguous fan
      REQUIRE(order.size() == nbrs.size());
      rot[v] = order;
    }
  }

  void pad_degree(Vertex v, int degree) {
    while (int(rot[v].size()) < degree) {
      Vertex d = fresh();
      rot[v].push_back(d);
      rot[d] = {v};
    }
  }

  // left-face tracing over the rotation system
  std::vector<std::vector<Vertex>> trace() const {
    std::vector<std::vector<Vertex>> faces;
    std::set<std::pair<Vertex, Vertex>> used;
    for (const auto& [u, nbrs] : rot)
      for (Vertex v0 : nbrs) {
        if (used.count({u, v0})) continue;
        std::vector<Vertex> walk;
        Vertex a = u, b = v0;
        do {
          used.insert({a, b});
          walk.push_back(a);
          const std::vector<Vertex>& rb = rot.at(b);
          std::size_t i = std::find(rb.begin(), rb.end(), a) - rb.begin();
          REQUIRE(i < rb.size());
          Vertex c = rb[(i + 1) % rb.size()];
          a = b;
          b = c;
        } while (!(a == u && b == v0));
        faces.push_back(walk);
      }
    return faces;
  }
};

struct Traced {
  std::vector<std::vector<Vertex>> faces;
  std::map<std::pair<Vertex, Vertex>, int> left;  // directed edge -> face id

  explicit Traced(const Patch& p) : faces(p.trace()) {
    for (int f = 0; f < int(faces.size()); ++f) {
      const auto& w = faces[f];
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto key = std::make_pair(w[i], w[(i + 1) % w.size()]);
        REQUIRE(!left.count(key));
        left[key] = f;
      }
    }
  }

  int face_of(Vertex a, Vertex b) const { return left.at({a, b}); }
  int other_face(Vertex a, Vertex b, int f) const {
    int g = face_of(a, b);
    return g == f ? face_of(b, a) : g;
  }
  int size(int f) const { return int(faces[f].size()); }
  bool on_face(int f, Vertex v) const {
    return std::find(faces[f].begin(), faces[f].end(), v) != faces[f].end();
  }
  int find_face(const std::vector<Vertex>& cycle) const {
    std::set<Vertex> want(cycle.begin(), cycle.end());
    for (int f = 0; f < int(faces.size()); ++f) {
      if (faces[f].size() != cycle.size()) continue;
      if (std::set<Vertex>(faces[f].begin(), faces[f].end()) == want) return f;
    }
    FAIL("declared face not traced");
    return -1;
  }
};

int deg(const Patch& p, Vertex v) { return int(p.rot.at(v).size()); }
int bucket_of(int degree) { return degree >= 6 ? 6 : degree; }

// classification straight from the type tables
VertexClass classify_vertex(const Patch& p, const Traced& t, int f, Vertex v) {
  int d = deg(p, v);
  if (d == 3) {
    for (Vertex n : p.rot.at(v))
      if (!t.on_face(f, n)) return deg(p, n) >= 4 ? VertexClass::t : VertexClass::o;
    FAIL("3-vertex with every neighbor on the face");
  }
  if (d == 4) {
    for (Vertex n : p.rot.at(v)) {
      int tri = t.face_of(v, n);
      for (int cand : {tri, t.face_of(n, v)}) {
        if (t.size(cand) != 3) continue;
        Vertex a = -1, b = -1;
        for (Vertex x : t.faces[cand])
          if (x != v) (a < 0 ? a : b) = x;
        if (t.on_face(f, a) || t.on_face(f, b)) continue;
        int threes = (deg(p, a) == 3) + (deg(p, b) == 3);
        return threes == 0 ? VertexClass::v
                           : threes == 1 ? VertexClass::u : VertexClass::w;
      }
    }
    return VertexClass::p4;
  }
  return d == 5 ? VertexClass::p5 : VertexClass::p6;
}

FaceClass classify_face(const Patch& p, const Traced& t, int across, Vertex a, Vertex b) {
  int s = t.size(across);
  if (s == 4) return FaceClass::Q;
  if (s == 5) return FaceClass::P;
  if (s == 6) return FaceClass::H;
  REQUIRE(s == 3);
  Vertex tip = -1;
  for (Vertex x : t.faces[across])
    if (x != a && x != b) tip = x;
  if (deg(p, tip) >= 4) return FaceClass::x;
  Vertex rest = -1;
  for (Vertex n : p.rot.at(tip))
    if (n != a && n != b) rest = n;
  return deg(p, rest) >= 4 ? FaceClass::t : FaceClass::O;
}

// --- Triangle patches --------------------------------------------------------

struct CornerSpec {
  int degree;          // 3, 4, 5, 6
  int off_degree = 3;  // degree of the off-triangle neighbor   (degree 3)
  int opp_size = 4;    // size of the opposite face             (degree 4)
  int opp_x_degree = 3, opp_y_degree = 3;  // its other corners (degree 4)
  int side_next = 4, side_prev = 4;  // outer face sizes        (degree 5/6)
  int w_next_degree = 3, w_prev_degree = 3;  // hexagon vertices (degree 5/6)
  int mid_degree = 3;  // degree of hexagon middles beside degree-3 corners
};

struct TrianglePatch {
  Patch p;
  std::array<Vertex, 3> corner;
  std::array<std::array<Vertex, 6>, 3> hexv;  // v_{i+1}, v_i, w1, mA, mB, w4
};

TrianglePatch build_triangle(const std::array<CornerSpec, 3>& spec) {
  TrianglePatch tp;
  Patch& p = tp.p;
  for (int i = 0; i < 3; ++i) tp.corner[i] = p.fresh();
  const auto& v = tp.corner;

  std::array<Vertex, 3> to_next{}, to_prev{};
  std::array<std::vector<Vertex>, 3> mids;  // corner rotation middles (deg 5/6)
  for (int i = 0; i < 3; ++i) {
    if (spec[i].degree == 3) {
      to_next[i] = to_prev[i] = p.fresh();
    } else {
      to_next[i] = p.fresh();
      to_prev[i] = p.fresh();
      for (int k = 0; k < spec[i].degree - 4; ++k) mids[i].push_back(p.fresh());
    }
  }

  p.add_face({v[0], v[1], v[2]});
  for (int i = 0; i < 3; ++i) {
    Vertex mA = p.fresh(), mB = p.fresh();
    tp.hexv[i] = {v[(i + 1) % 3], v[i], to_next[i], mA, mB, to_prev[(i + 1) % 3]};
    p.add_face({v[(i + 1) % 3], v[i], to_next[i], mA, mB, to_prev[(i + 1) % 3]});
  }
  // corner faces
  for (int i = 0; i < 3; ++i) {
    const CornerSpec& cs = spec[i];
    if (cs.degree == 3) continue;
    if (cs.degree == 4) {
      std::vector<Vertex> g{to_next[i], v[i], to_prev[i]};
      for (int k = 0; k < cs.opp_size - 3; ++k) g.push_back(p.fresh());
      p.add_face(g);
    } else {
      // side faces between consecutive rotation entries around the corner
      std::vector<Vertex> around{to_next[i]};
      for (Vertex m : mids[i]) around.push_back(m);
      around.push_back(to_prev[i]);
      for (std::size_t k = 0; k + 1 < around.size(); ++k) {
        int want = k == 0 ? cs.side_next
                          : (k + 2 == around.size() ? cs.side_prev : 4);
        std::vector<Vertex> side{around[k], v[i], around[k + 1]};
        for (int extra = 0; extra < want - 3; ++extra) side.push_back(p.fresh());
        p.add_face(side);
      }
    }
  }
  p.realize();

  // degree targets
  for (int i = 0; i < 3; ++i) {
    const CornerSpec& cs = spec[i];
    if (cs.degree == 3) {
      p.pad_degree(to_next[i], cs.off_degree);
      p.pad_degree(tp.hexv[i][3], cs.mid_degree);                // mA beside e_i
      p.pad_degree(tp.hexv[(i + 2) % 3][4], cs.mid_degree);      // mB on the other side
    } else if (cs.degree == 4) {
      p.pad_degree(to_next[i], cs.opp_x_degree);
      p.pad_degree(to_prev[i], cs.opp_y_degree);
    } else {
      p.pad_degree(to_next[i], cs.w_next_degree);
      p.pad_degree(to_prev[i], cs.w_prev_degree);
    }
  }
  // everything else keeps its base degree (middles default to 3 via one pad)
  for (int i = 0; i < 3; ++i) {
    p.pad_degree(tp.hexv[i][3], 3);
    p.pad_degree(tp.hexv[i][4], 3);
  }
  return tp;
}

// reads the triangle context off the traced patch and cross-checks it
void check_triangle_patch(const std::array<CornerSpec, 3>& spec) {
  TrianglePatch tp = build_triangle(spec);
  Traced t(tp.p);

  // the declared inner faces all closed
  for (const auto& f : tp.p.declared) t.find_face(f);

  int T = t.find_face({tp.corner[0], tp.corner[1], tp.corner[2]});
  REQUIRE(t.size(T) == 3);

  TriangleContext ctx;
  std::array<TWindow, 3> traced_window;
  for (int i = 0; i < 3; ++i) {
    Vertex vi = tp.corner[i], vj = tp.corner[(i + 1) % 3];
    int hex = t.other_face(vi, vj, T);
    REQUIRE(t.size(hex) == 6);
    Vertex w1 = tp.hexv[i][2], mA = tp.hexv[i][3], mB = tp.hexv[i][4],
           w4 = tp.hexv[i][5];
    REQUIRE(t.on_face(hex, w1));
    REQUIRE(t.on_face(hex, w4));
    (void)mA;
    (void)mB;
    int f1 = t.other_face(w1, vi, hex);
    int f3 = t.other_face(vj, w4, hex);
    traced_window[i] = TWindow{
        classify_vertex(tp.p, t, hex, w1), classify_vertex(tp.p, t, hex, vi),
        classify_vertex(tp.p, t, hex, vj), classify_vertex(tp.p, t, hex, w4),
        classify_face(tp.p, t, f1, w1, vi), classify_face(tp.p, t, T, vi, vj),
        classify_face(tp.p, t, f3, vj, w4)};

    ctx.w1[i] = traced_window[i].v1;
    ctx.w4[i] = traced_window[i].v4;
    ctx.f1[i] = traced_window[i].f1;
    ctx.f3[i] = traced_window[i].f3;
  }
  for (int i = 0; i < 3; ++i) {
    const CornerSpec& cs = spec[i];
    TriangleCorner c;
    c.deg = cs.degree;
    if (cs.degree == 3) c.off_bucket = bucket_of(cs.off_degree);
    if (cs.degree == 4) {
      c.opp_size = cs.opp_size;
      if (cs.opp_size == 3) {
        // g_i as each hexagon sees it
        c.opp_prev = ctx.f3[(i + 2) % 3];
        c.opp_next = ctx.f1[i];
      }
    }
    ctx.corner[i] = c;
  }

  // the derived windows equal the traced ones
  for (int i = 0; i < 3; ++i) {
    INFO("hexagon ", i, " of ", ctx.str());
    CHECK(ctx.window(i).str() == traced_window[i].str());
    CHECK(t_window_consistent(traced_window[i]));
  }

  // and the traced values appear in the enumeration's option lists
  auto cores = triangle_corner_cores();
  for (int i = 0; i < 3; ++i) {
    CHECK(std::find(cores.begin(), cores.end(), ctx.corner[i]) != cores.end());
    CornerSides sides = expand_corner(ctx.corner[i]);
    auto has = [](const std::vector<SideOption>& side, FaceClass f, VertexClass w) {
      for (const SideOption& o : side)
        if (o.face == f && o.vert == w) return true;
      return false;
    };
    CHECK(has(sides.next, ctx.f1[i], ctx.w1[i]));
    CHECK(has(sides.prev, ctx.f3[(i + 2) % 3], ctx.w4[(i + 2) % 3]));
  }
}

}  // namespace

TEST_CASE("triangle patches: traced windows equal the derived windows") {
  std::vector<CornerSpec> variants;
  variants.push_back({.degree = 3, .off_degree = 3});
  variants.push_back({.degree = 3, .off_degree = 4});
  variants.push_back({.degree = 3, .off_degree = 5, .mid_degree = 4});
  variants.push_back({.degree = 4, .opp_size = 3, .opp_x_degree = 3, .opp_y_degree = 3});
  variants.push_back({.degree = 4, .opp_size = 3, .opp_x_degree = 3, .opp_y_degree = 4});
  variants.push_back({.degree = 4, .opp_size = 3, .opp_x_degree = 4, .opp_y_degree = 3});
  variants.push_back({.degree = 4, .opp_size = 3, .opp_x_degree = 5, .opp_y_degree = 4});
  variants.push_back({.degree = 4, .opp_size = 4, .opp_x_degree = 3, .opp_y_degree = 6});
  variants.push_back({.degree = 4, .opp_size = 5, .opp_x_degree = 4, .opp_y_degree = 3});
  variants.push_back({.degree = 4, .opp_size = 6, .opp_x_degree = 3, .opp_y_degree = 3});
  variants.push_back({.degree = 5, .side_next = 4, .side_prev = 6,
                      .w_next_degree = 3, .w_prev_degree = 4});
  variants.push_back({.degree = 5, .side_next = 5, .side_prev = 4,
                      .w_next_degree = 6, .w_prev_degree = 3});
  variants.push_back({.degree = 6, .side_next = 6, .side_prev = 5,
                      .w_next_degree = 5, .w_prev_degree = 3});

  // all corner-degree combinations with rotating variant choices
  int k = 0;
  for (const CornerSpec& a : variants)
    for (const CornerSpec& b : variants) {
      const CornerSpec& c = variants[std::size_t(k++) % variants.size()];
      check_triangle_patch({a, b, c});
    }
}

// --- Star patches ------------------------------------------------------------

namespace {

struct StarSpec {
  std::array<int, 3> size;
  std::array<int, 3> nbr_degree;
  std::array<int, 3> path_degree;  // degree of face path vertices beside n_i
};

void check_star_patch(const StarSpec& ss, const std::set<std::string>& universe) {
  Patch p;
  Vertex z = p.fresh();
  std::array<Vertex, 3> n{p.fresh(), p.fresh(), p.fresh()};
  std::array<std::vector<Vertex>, 3> path;
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> face{z, n[i]};
    for (int k = 0; k < ss.size[i] - 3; ++k) {
      path[i].push_back(p.fresh());
      face.push_back(path[i].back());
    }
    face.push_back(n[(i + 1) % 3]);
    p.add_face(face);
  }
  p.realize();
  for (int i = 0; i < 3; ++i) {
    p.pad_degree(n[i], ss.nbr_degree[i]);
    for (Vertex q : path[i]) p.pad_degree(q, ss.path_degree[i]);
  }
  Traced t(p);

  VertexStar st;
  st.size = ss.size;
  for (int i = 0; i < 3; ++i) st.nbr_bucket[i] = bucket_of(deg(p, n[i]));
  for (int i = 0; i < 3; ++i) {
    bool in_triangle = ss.size[i] == 3 || ss.size[(i + 2) % 3] == 3;
    st.rest_bucket[i] = 0;
    if (in_triangle && deg(p, n[i]) == 3) {
      // remaining neighbor of n_i: not z, not the other triangle member
      int j = ss.size[i] == 3 ? (i + 1) % 3 : (i + 2) % 3;
      for (Vertex q : p.rot.at(n[i]))
        if (q != z && q != n[j]) st.rest_bucket[i] = deg(p, q) >= 4 ? 4 : 3;
    }
    int fi = t.face_of(z, n[i]);
    int fprev = t.face_of(n[i], z);
    st.cls_next[i] = t.size(fi) >= 5 ? classify_vertex(p, t, fi, n[i]) : VertexClass::p4;
    st.cls_prev[i] =
        t.size(fprev) >= 5 ? classify_vertex(p, t, fprev, n[i]) : VertexClass::p4;
  }

  // derived windows equal the traced windows on every 5/6-face
  for (int i = 0; i < 3; ++i) {
    if (ss.size[i] < 5) continue;
    int fi = t.face_of(z, n[i]);
    REQUIRE(t.size(fi) == ss.size[i]);
    int before = t.other_face(n[i], z, fi);
    int after = t.other_face(z, n[(i + 1) % 3], fi);
    PvWindow traced{classify_vertex(p, t, fi, n[i]), classify_vertex(p, t, fi, z),
                    classify_vertex(p, t, fi, n[(i + 1) % 3]),
                    classify_face(p, t, before, n[i], z),
                    classify_face(p, t, after, z, n[(i + 1) % 3])};
    INFO("face ", i, " of ", st.str());
    CHECK(st.window(i).str() == traced.str());
  }

  // the star is part of the enumerated universe
  if (!universe.empty()) {
    INFO(st.str());
    CHECK(universe.count(st.str()) == 1);
  }
}

}  // namespace

TEST_CASE("star patches: traced windows equal the derived windows") {
  ConfigSet none;
  std::set<std::string> universe;
  enumerate_vertex_stars(none, {}, [&](const VertexStar& st) {
    universe.insert(st.str());
  });

  static const std::array<int, 3> sizes[] = {
      {6, 6, 6}, {3, 6, 6}, {6, 3, 6}, {4, 6, 6}, {5, 6, 6},
      {4, 5, 6}, {5, 5, 6}, {5, 5, 5}, {4, 6, 5}, {6, 5, 5},
  };
  static const std::array<int, 3> degs[] = {
      {3, 3, 3}, {3, 4, 5}, {4, 4, 4}, {6, 3, 4}, {5, 5, 3}, {3, 3, 6},
  };
  static const std::array<int, 3> paths[] = {{3, 3, 3}, {4, 3, 5}, {5, 4, 4}};
  for (const auto& s : sizes) {
    int sum = s[0] + s[1] + s[2];
    if (sum < 15) continue;
    for (const auto& d : degs)
      for (const auto& q : paths) check_star_patch({s, d, q}, universe);
  }
}
