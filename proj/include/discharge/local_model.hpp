#pragma once

// Finite local-neighborhood descriptors and their exhaustive enumeration:
//   - RingDescriptor streams for whole 5-/6-faces (the face-outflow universe)
//   - TriangleContext, everything around one 3-face (the triangle-inflow universe)
//   - VertexStar / DegreeProfile around one vertex (the vertex-charge universe)
//
// All enumerations are over-approximations: every descriptor realizable in a
// minimal counterexample is produced, possibly along with unrealizable ones,
// which keeps a "no violations" outcome sound as a proof check.

#include <cassert>
#include <functional>
#include <string>
#include <vector>

#include "discharge/configs.hpp"
#include "discharge/rules.hpp"

namespace discharge {

struct EnumOptions {
  Semantics semantics = Semantics::Inclusive4;
  bool reflection = true;
};

// --- Face rings --------------------------------------------------------------

// (v0, f0) root assignments in ASCII order of their two-character encoding;
// used both for lexicographic streaming and for parallel partitioning.
inline constexpr int kRingRootCount = kVertexClassCount * kFaceClassCount;

namespace detail {

template <typename Fn>
void ring_dfs(RingDescriptor& r, int depth, const ConfigSet& exclusions,
              const EnumOptions& opt, Fn&& fn) {
  const int d = r.size;
  if (depth == d) {
    if (flank_violation(r.vtypes[0], r.ftypes[d - 1], r.ftypes[0]) != 0) return;
    if (!is_canonical(r, opt.reflection)) return;
    if (exclusions.matches(r, opt.semantics, opt.reflection)) return;
    fn(static_cast<const RingDescriptor&>(r));
    return;
  }
  const char v0 = to_char(r.vtypes[0]);
  const char f0 = to_char(r.ftypes[0]);
  for (VertexClass vc : kVertexAsciiOrder) {
    // the canonical representative starts with its minimal two-char pair
    if (to_char(vc) < v0) continue;
    r.vtypes[depth] = vc;
    if (flank_violation(vc, r.ftypes[depth - 1], std::nullopt) != 0) continue;
    for (FaceClass fc : kFaceAsciiOrder) {
      if (d == 5 && is_triangle(fc)) continue;  // C1
      if (to_char(vc) == v0 && to_char(fc) < f0) continue;
      r.ftypes[depth] = fc;
      if (flank_violation(vc, r.ftypes[depth - 1], fc) != 0) continue;
      ring_dfs(r, depth + 1, exclusions, opt, fn);
    }
  }
}

}  // namespace detail

// Depth-first enumeration of consistent rings of size d, one canonical
// representative per symmetry class, in ASCII-lexicographic order of the
// canonical encoding, skipping rings matched by an exclusion configuration.
// `root` restricts to one (v0, f0) subtree (0..47) for partitioned runs;
// root -1 = everything.
template <typename Fn>
void enumerate_rings(int d, const ConfigSet& exclusions, const EnumOptions& opt,
                     Fn&& fn, int root = -1) {
  assert(d == 5 || d == 6);
  RingDescriptor r;
  r.size = d;
  int root_index = 0;
  for (VertexClass vc : kVertexAsciiOrder) {
    for (FaceClass fc : kFaceAsciiOrder) {
      if (root >= 0 && root_index++ != root) continue;
      if (d == 5 && is_triangle(fc)) continue;
      r.vtypes[0] = vc;
      r.ftypes[0] = fc;
      detail::ring_dfs(r, 1, exclusions, opt, fn);
    }
  }
}

inline std::vector<RingDescriptor> collect_rings(int d, const ConfigSet& exclusions,
                                                 const EnumOptions& opt = {}) {
  std::vector<RingDescriptor> out;
  enumerate_rings(d, exclusions, opt, [&](const RingDescriptor& r) { out.push_back(r); });
  return out;
}

// --- Triangle contexts --------------------------------------------------------
//
// A 3-face v1 v2 v3 whose three adjacent faces are 6-faces ("hexagons");
// hexagon h_i lies across edge (v_i, v_{i+1}) and is traversed as
// w1 w2 w3 w4 with (w2, w3) = (v_i, v_{i+1}).  Everything the T-rules and the
// relay rules can see is captured by per-corner data plus the outer window
// fields (w1, f1, f3, w4) of each hexagon.
//
// Geometry that pins the derived fields (all relative to the rotation around
// a triangle vertex v_i of degree 3 resp. 4):
//   - deg 3: v_i's only off-triangle neighbor c_i is w1(h_i) = w4(h_{i-1}),
//     and the outer faces f1(h_i), f3(h_{i-1}) are the hexagons h_{i-1}, h_i
//     themselves, hence class H.  v_i's off-hexagon neighbor is the third
//     triangle vertex, so its t/o class follows from deg(v_{i+2}).
//   - deg 4: the face g_i opposite the triangle at v_i is both f1(h_i) and
//     f3(h_{i-1}); its two other vertices are w1(h_i) and w4(h_{i-1}).  When
//     g_i is a 3-face, each hexagon sees g_i with the other hexagon's outer
//     vertex as tip, which couples the tip classes to those vertices'
//     degree buckets, and a degree-3 outer vertex's own t/o class follows
//     from the opposite tip's bucket.
//   - deg >= 5: outer fields are unconstrained beyond window consistency.

struct TriangleCorner {
  int deg = 3;          // 3, 4, 5, 6 (= >=6)
  int off_bucket = 0;   // deg 3: degree bucket (3,4,5,6) of the off-triangle neighbor
  int opp_size = 0;     // deg 4: size (3,4,5,6) of the opposite face g_i
  FaceClass opp_prev{};  // deg 4 & opp_size 3: g_i as f3(h_{i-1})
  FaceClass opp_next{};  // deg 4 & opp_size 3: g_i as f1(h_i)

  friend bool operator==(const TriangleCorner&, const TriangleCorner&) = default;

  std::string str() const {
    switch (deg) {
      case 3: return "3n" + std::to_string(off_bucket);
      case 4:
        if (opp_size == 3)
          return std::string("4g3") + to_char(opp_prev) + to_char(opp_next);
        return "4g" + std::to_string(opp_size);
      default: return std::to_string(deg);
    }
  }
};

struct TriangleContext {
  std::array<TriangleCorner, 3> corner{};
  std::array<VertexClass, 3> w1{}, w4{};
  std::array<FaceClass, 3> f1{}, f3{};

  static VertexClass class_of_degree(int deg, bool off_is_3vertex) {
    if (deg == 3) return off_is_3vertex ? VertexClass::o : VertexClass::t;
    if (deg == 4) return VertexClass::p4;
    return deg == 5 ? VertexClass::p5 : VertexClass::p6;
  }

  // class of v_i on hexagon h_i; the off-hexagon neighbor is v_{i+2}
  VertexClass v2(int i) const {
    return class_of_degree(corner[i].deg, corner[(i + 2) % 3].deg == 3);
  }
  // class of v_{i+1} on hexagon h_i; the off-hexagon neighbor is v_{i+2}
  VertexClass v3(int i) const {
    return class_of_degree(corner[(i + 1) % 3].deg, corner[(i + 2) % 3].deg == 3);
  }
  // the triangle as seen from h_i: tip is v_{i+2}, its remaining neighbor is
  // that corner's off-triangle neighbor
  FaceClass tip(int i) const {
    const TriangleCorner& c = corner[(i + 2) % 3];
    if (c.deg >= 4) return FaceClass::x;
    return c.off_bucket >= 4 ? FaceClass::t : FaceClass::O;
  }

  TWindow window(int i) const {
    return TWindow{w1[i], v2(i), v3(i), w4[i], f1[i], tip(i), f3[i]};
  }

  // h_i as a partially known 6-ring: positions 0..3 hold w1, v_i, v_{i+1}, w4.
  PartialRing partial_hex(int i) const {
    PartialRing p;
    p.size = 6;
    p.vtypes[0] = w1[i];
    p.vtypes[1] = v2(i);
    p.vtypes[2] = v3(i);
    p.vtypes[3] = w4[i];
    p.ftypes[0] = f1[i];
    p.ftypes[1] = tip(i);
    p.ftypes[2] = f3[i];
    return p;
  }

  // relay class of a degree-4 corner relative to its opposite face, from the
  // degrees of its two triangle companions
  VertexClass relay_class(int i) const {
    int three = (corner[(i + 1) % 3].deg == 3) + (corner[(i + 2) % 3].deg == 3);
    return three == 2 ? VertexClass::w : three == 1 ? VertexClass::u : VertexClass::v;
  }

  std::string str() const {
    std::string out = "tri(";
    for (int i = 0; i < 3; ++i) {
      if (i) out.push_back(',');
      out += corner[i].str();
    }
    out += ")[";
    for (int i = 0; i < 3; ++i) {
      if (i) out.push_back('|');
      out += window(i).str();
    }
    out.push_back(']');
    return out;
  }
};

// One choice of (outer face, outer vertex) on one side of a corner.
struct SideOption {
  FaceClass face;
  VertexClass vert;
};

namespace detail {

inline void vertex_options_of_bucket(int bucket, bool allow_vuw,
                                     std::vector<VertexClass>& out) {
  out.clear();
  switch (bucket) {
    case 3:
      out = {VertexClass::t, VertexClass::o};
      break;
    case 4:
      out = {VertexClass::p4};
      if (allow_vuw) {
        out.push_back(VertexClass::v);
        out.push_back(VertexClass::u);
        out.push_back(VertexClass::w);
      }
      break;
    case 5: out = {VertexClass::p5}; break;
    default: out = {VertexClass::p6}; break;
  }
}

}  // namespace detail

struct CornerSides {
  std::vector<SideOption> prev;  // (f3(h_{i-1}), w4(h_{i-1}))
  std::vector<SideOption> next;  // (f1(h_i),    w1(h_i))
};

inline CornerSides expand_corner(const TriangleCorner& c) {
  CornerSides sides;
  std::vector<VertexClass> verts;
  auto push_all = [&](std::vector<SideOption>& side, FaceClass face) {
    for (VertexClass v : verts) side.push_back({face, v});
  };
  switch (c.deg) {
    case 3:
      detail::vertex_options_of_bucket(c.off_bucket, true, verts);
      push_all(sides.prev, FaceClass::H);
      push_all(sides.next, FaceClass::H);
      break;
    case 4:
      if (c.opp_size != 3) {
        FaceClass g = c.opp_size == 4   ? FaceClass::Q
                      : c.opp_size == 5 ? FaceClass::P
                                        : FaceClass::H;
        for (VertexClass v : kVertexAsciiOrder)
          if (flank_violation(v, std::nullopt, g) == 0) {
            sides.prev.push_back({g, v});
            sides.next.push_back({g, v});
          }
      } else {
        // w4(h_{i-1}) is the tip of opp_next, w1(h_i) the tip of opp_prev;
        // a degree-3 tip is t/o according to the bucket of the vertex
        // across the triangle g_i, i.e. the other side's tip class
        auto tip_options = [&](FaceClass my_view, FaceClass other_view,
                               std::vector<SideOption>& side) {
          if (other_view == FaceClass::x) {
            // tip >= 4; C2 rules out v/u/w beside a 3-face
            for (VertexClass v : {VertexClass::p4, VertexClass::p5, VertexClass::p6})
              side.push_back({my_view, v});
          } else {
            side.push_back({my_view, my_view == FaceClass::x ? VertexClass::t
                                                             : VertexClass::o});
          }
        };
        tip_options(c.opp_prev, c.opp_next, sides.prev);
        tip_options(c.opp_next, c.opp_prev, sides.next);
      }
      break;
    default:
      for (FaceClass f : kFaceAsciiOrder)
        for (VertexClass v : kVertexAsciiOrder)
          if (flank_violation(v, std::nullopt, f) == 0) {
            sides.prev.push_back({f, v});
            sides.next.push_back({f, v});
          }
      break;
  }
  return sides;
}

// All corner cores in a fixed order.
inline std::vector<TriangleCorner> triangle_corner_cores() {
  std::vector<TriangleCorner> out;
  for (int deg : {3, 4, 5, 6}) {
    TriangleCorner c;
    c.deg = deg;
    if (deg == 3) {
      for (int b : {3, 4, 5, 6}) {
        c.off_bucket = b;
        out.push_back(c);
      }
    } else if (deg == 4) {
      for (int s : {3, 4, 5, 6}) {
        c.opp_size = s;
        if (s == 3) {
          for (FaceClass fp : {FaceClass::t, FaceClass::O, FaceClass::x})
            for (FaceClass fn : {FaceClass::t, FaceClass::O, FaceClass::x}) {
              c.opp_prev = fp;
              c.opp_next = fn;
              out.push_back(c);
            }
          c.opp_prev = c.opp_next = FaceClass{};
        } else {
          out.push_back(c);
        }
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Streams every consistent triangle context not excluded by `exclusions`
// (a context is excluded as soon as any of its three partially known hexagon
// rings is definitely matched).  Stops early once `limit` contexts were
// visited (limit < 0 = no limit); returns the number visited.
template <typename Fn>
long long enumerate_triangle_contexts(const ConfigSet& exclusions,
                                      const EnumOptions& opt, Fn&& fn,
                                      long long limit = -1) {
  const std::vector<TriangleCorner> cores = triangle_corner_cores();
  long long visited = 0;
  TriangleContext ctx;
  for (const TriangleCorner& c0 : cores)
    for (const TriangleCorner& c1 : cores)
      for (const TriangleCorner& c2 : cores) {
        ctx.corner = {c0, c1, c2};
        CornerSides s0 = expand_corner(c0), s1 = expand_corner(c1), s2 = expand_corner(c2);
        const CornerSides* sides[3] = {&s0, &s1, &s2};
        // hexagon h_i combines corner i's next side with corner (i+1)'s prev side
        for (const SideOption& n0 : sides[0]->next)
          for (const SideOption& p1 : sides[1]->prev) {
            ctx.f1[0] = n0.face; ctx.w1[0] = n0.vert;
            ctx.f3[0] = p1.face; ctx.w4[0] = p1.vert;
            if (exclusions.matches(ctx.partial_hex(0), opt.semantics, opt.reflection))
              continue;
            for (const SideOption& n1 : sides[1]->next)
              for (const SideOption& p2 : sides[2]->prev) {
                ctx.f1[1] = n1.face; ctx.w1[1] = n1.vert;
                ctx.f3[1] = p2.face; ctx.w4[1] = p2.vert;
                if (exclusions.matches(ctx.partial_hex(1), opt.semantics, opt.reflection))
                  continue;
                for (const SideOption& n2 : sides[2]->next)
                  for (const SideOption& p0 : sides[0]->prev) {
                    ctx.f1[2] = n2.face; ctx.w1[2] = n2.vert;
                    ctx.f3[2] = p0.face; ctx.w4[2] = p0.vert;
                    if (exclusions.matches(ctx.partial_hex(2), opt.semantics,
                                           opt.reflection))
                      continue;
                    fn(static_cast<const TriangleContext&>(ctx));
                    if (++visited == limit) return visited;
                  }
              }
          }
      }
  return visited;
}

// --- Vertex stars -------------------------------------------------------------
//
// The star of a degree-3 vertex v with neighbors n0 n1 n2 and incident faces
// f_i between n_i and n_{i+1}.  Faces of size 5/6 pay v through their window
// (cls(n_i | f_i), class of f_{i-1}, cls(v | f_i), class of f_{i+1},
// cls(n_{i+1} | f_i)); the flanking face classes are the star's own other
// faces as seen across v's edges, with tips inside the star when they are
// 3-faces.

struct VertexStar {
  std::array<int, 3> size{};        // face sizes, 3/4/5/6
  std::array<int, 3> nbr_bucket{};  // degree buckets of n0..n2
  // class of n_i relative to f_{i-1} / f_i; only meaningful when that face
  // has size 5 or 6
  std::array<VertexClass, 3> cls_prev{}, cls_next{};
  // for a degree-3 member of a 3-face: degree bucket (3 or 4 = >=4) of its
  // remaining neighbor, which decides the t/O tip class
  std::array<int, 3> rest_bucket{};

  bool face_is(int i, int s) const { return size[((i % 3) + 3) % 3] == s; }
  int at(int i) const { return ((i % 3) + 3) % 3; }

  // class of v relative to f_i: its off-face neighbor is n_{i+2}
  VertexClass center_class(int i) const {
    return nbr_bucket[at(i + 2)] >= 4 ? VertexClass::t : VertexClass::o;
  }
  // tip class of the 3-face f_j when viewed with tip n_k
  FaceClass tip_class(int k) const {
    if (nbr_bucket[k] >= 4) return FaceClass::x;
    return rest_bucket[k] >= 4 ? FaceClass::t : FaceClass::O;
  }
  // f_j's class as seen across the shared edge with f_i (j = i-1 or i+1)
  FaceClass face_class_from(int j, int tip_vertex) const {
    switch (size[at(j)]) {
      case 3: return tip_class(at(tip_vertex));
      case 4: return FaceClass::Q;
      case 5: return FaceClass::P;
      default: return FaceClass::H;
    }
  }

  // P/H window of face f_i at the center (valid when size[i] >= 5);
  // f_{i-1} is viewed with tip n_{i-1}, f_{i+1} with tip n_{i+2}
  PvWindow window(int i) const {
    return PvWindow{cls_next[at(i)], center_class(i), cls_prev[at(i + 1)],
                    face_class_from(i - 1, i - 1), face_class_from(i + 1, i + 2)};
  }

  PartialRing partial_face(int i) const {
    PartialRing p;
    p.size = size[at(i)];
    PvWindow w = window(i);
    p.vtypes[0] = w.v1;
    p.vtypes[1] = w.rcv;
    p.vtypes[2] = w.v3;
    p.ftypes[0] = w.f1;
    p.ftypes[1] = w.f2;
    return p;
  }

  std::string str() const {
    std::string out = "star(";
    for (int i = 0; i < 3; ++i) {
      if (i) out.push_back(',');
      out += std::to_string(size[i]);
    }
    out += ";n";
    for (int i = 0; i < 3; ++i) out += std::to_string(nbr_bucket[i]);
    out += ")";
    for (int i = 0; i < 3; ++i) {
      if (size[i] < 5) continue;
      out.push_back('[');
      out += window(i).str();
      out.push_back(']');
    }
    return out;
  }
};

namespace detail {

// enumerate the classes n_i can have relative to an incident 5/6-face,
// given the face on n_i's other side within the star (`other_size`), which
// decides whether the off-face neighbor is pinned inside the star and
// whether the in-star flank admits v/u/w
inline std::vector<VertexClass> star_neighbor_classes(int bucket, int other_size,
                                                      int pinned_bucket) {
  std::vector<VertexClass> out;
  if (bucket == 3) {
    if (other_size == 3)  // off-face neighbor is the third triangle vertex
      out = {pinned_bucket >= 4 ? VertexClass::t : VertexClass::o};
    else  // off-face neighbor lies outside the star
      out = {VertexClass::t, VertexClass::o};
  } else if (bucket == 4) {
    out = {VertexClass::p4};
    // v/u/w need 6-faces on both sides; the in-star flank is `other`
    if (other_size == 6) {
      out.push_back(VertexClass::v);
      out.push_back(VertexClass::u);
      out.push_back(VertexClass::w);
    }
  } else {
    out = {bucket == 5 ? VertexClass::p5 : VertexClass::p6};
  }
  return out;
}

}  // namespace detail

// Streams every consistent degree-3 star not excluded by `exclusions`.
// Star consistency: at most one 3-face, flanked by 6-faces; face sizes sum
// to >= 15 (facial degree >= 9 forces sum(sizes) >= 9 + 2*deg).
template <typename Fn>
long long enumerate_vertex_stars(const ConfigSet& exclusions, const EnumOptions& opt,
                                 Fn&& fn, long long limit = -1) {
  long long visited = 0;
  VertexStar st;
  static constexpr int sizes[] = {3, 4, 5, 6};
  for (int s0 : sizes)
    for (int s1 : sizes)
      for (int s2 : sizes) {
        st.size = {s0, s1, s2};
        if (s0 + s1 + s2 < 15) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          if (st.size[i] == 3 &&
              (st.size[st.at(i - 1)] != 6 || st.size[st.at(i + 1)] != 6))
            ok = false;
        if (!ok) continue;
        for (int b0 : sizes)
          for (int b1 : sizes)
            for (int b2 : sizes) {
              st.nbr_bucket = {b0, b1, b2};
              // remaining-neighbor buckets matter only for degree-3 members
              // of the 3-face (they decide its t/O tip class)
              std::array<std::vector<int>, 3> rest;
              for (int i = 0; i < 3; ++i) {
                bool in_triangle = st.size[i] == 3 || st.size[st.at(i - 1)] == 3;
                if (in_triangle && st.nbr_bucket[i] == 3)
                  rest[i] = {3, 4};
                else
                  rest[i] = {0};
              }
              std::array<std::vector<VertexClass>, 3> prev_cls, next_cls;
              for (int i = 0; i < 3; ++i) {
                // cls(n_i | f_i): the other flank of n_i is f_{i-1}, and a
                // 3-face there pins the off-face neighbor to n_{i-1}
                next_cls[i] = st.size[i] >= 5
                                  ? detail::star_neighbor_classes(
                                        st.nbr_bucket[i], st.size[st.at(i - 1)],
                                        st.nbr_bucket[st.at(i - 1)])
                                  : std::vector<VertexClass>{VertexClass::p4};
                // cls(n_i | f_{i-1}): other flank is f_i, 3-face pins n_{i+1}
                prev_cls[i] = st.size[st.at(i - 1)] >= 5
                                  ? detail::star_neighbor_classes(
                                        st.nbr_bucket[i], st.size[i],
                                        st.nbr_bucket[st.at(i + 1)])
                                  : std::vector<VertexClass>{VertexClass::p4};
              }
              for (int r0 : rest[0])
                for (int r1 : rest[1])
                  for (int r2 : rest[2]) {
                    st.rest_bucket = {r0, r1, r2};
                    for (VertexClass pc0 : prev_cls[0])
                      for (VertexClass nc0 : next_cls[0])
                        for (VertexClass pc1 : prev_cls[1])
                          for (VertexClass nc1 : next_cls[1])
                            for (VertexClass pc2 : prev_cls[2])
                              for (VertexClass nc2 : next_cls[2]) {
                                st.cls_prev = {pc0, pc1, pc2};
                                st.cls_next = {nc0, nc1, nc2};
                                bool excluded = false;
                                for (int i = 0; i < 3 && !excluded; ++i)
                                  if (st.size[i] >= 5 &&
                                      exclusions.matches(st.partial_face(i),
                                                         opt.semantics, opt.reflection))
                                    excluded = true;
                                if (excluded) continue;
                                fn(static_cast<const VertexStar&>(st));
                                if (++visited == limit) return visited;
                              }
                  }
            }
      }
  return visited;
}

// --- Degree profiles ----------------------------------------------------------

// Incident-face counts around a >=5-vertex: t 3-faces, q 4-faces, p >=5-faces.
// Every 3-face is flanked by 6-faces, which forces t <= p.
struct DegreeProfile {
  int d, t, q, p;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline std::vector<DegreeProfile> enumerate_profiles(int d) {
  if (d == 4) throw std::invalid_argument(
      "degree-4 vertices are pure relays and carry no profile check");
  if (d < 3) throw std::invalid_argument("degree below 3");
  std::vector<DegreeProfile> out;
  for (int t = 0; t <= d; ++t)
    for (int q = 0; t + q <= d; ++q) {
      int p = d - t - q;
      if (t <= p) out.push_back({d, t, q, p});
    }
  return out;
}

}  // namespace discharge
