#pragma once

// Ring descriptors: the cyclic sequence of vertex types and across-edge face
// types around one 5- or 6-face.  This is the finite object on which both the
// discharging rules and the reducible-configuration patterns are evaluated.

#include <algorithm>
#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "discharge/types.hpp"

namespace discharge {

struct RingDescriptor {
  int size = 6;  // 5 or 6
  std::array<VertexClass, 6> vtypes{};
  std::array<FaceClass, 6> ftypes{};  // ftypes[i] sits across edge v_i v_{i+1}

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

  VertexClass v(int i) const { return vtypes[mod(i)]; }
  FaceClass f(int i) const { return ftypes[mod(i)]; }
  int mod(int i) const {
    int m = i % size;
    return m < 0 ? m + size : m;
  }
};

inline std::string encode(const RingDescriptor& r) {
  std::string out = r.size == 5 ? "P:" : "H:";
  for (int i = 0; i < r.size; ++i) {
    out.push_back(to_char(r.vtypes[i]));
    out.push_back(to_char(r.ftypes[i]));
  }
  return out;
}

// Parses a fully concrete ring encoding ("P:" or "H:" plus 2k alternating
// vertex/face characters).  Wildcards are rejected; those belong to patterns.
inline RingDescriptor decode_ring(std::string_view text) {
  RingDescriptor r;
  if (text.size() < 2 || (text[0] != 'P' && text[0] != 'H') || text[1] != ':')
    throw ParseError("ring descriptor must start with \"P:\" or \"H:\"", 0);
  r.size = text[0] == 'P' ? 5 : 6;
  if (text.size() != std::size_t(2 + 2 * r.size))
    throw ParseError("ring descriptor has wrong length", text.size());
  for (int i = 0; i < r.size; ++i) {
    char vc = text[2 + 2 * i];
    char fc = text[3 + 2 * i];
    auto v = vertex_class_of(vc);
    if (!v) throw ParseError(std::string("not a concrete vertex type: ") + vc, 2 + 2 * i);
    auto f = face_class_of(fc);
    if (!f) throw ParseError(std::string("not a concrete face type: ") + fc, 3 + 2 * i);
    r.vtypes[i] = *v;
    r.ftypes[i] = *f;
  }
  return r;
}

inline RingDescriptor rotated(const RingDescriptor& r, int by) {
  RingDescriptor out = r;
  for (int i = 0; i < r.size; ++i) {
    out.vtypes[i] = r.vtypes[(i + by) % r.size];
    out.ftypes[i] = r.ftypes[(i + by) % r.size];
  }
  return out;
}

// Reflection reverses the vertex order; each face stays attached to its edge,
// so the face across (v'_j, v'_{j+1}) = (v_{d-j}, v_{d-j-1}) is f_{d-1-j}.
inline RingDescriptor reflected(const RingDescriptor& r) {
  RingDescriptor out = r;
  int d = r.size;
  for (int j = 0; j < d; ++j) {
    out.vtypes[j] = r.vtypes[(d - j) % d];
    out.ftypes[j] = r.ftypes[d - 1 - j];
  }
  return out;
}

// All 2d (or d, without reflection) symmetry images.
inline std::vector<RingDescriptor> symmetry_images(const RingDescriptor& r,
                                                   bool reflection = true) {
  std::vector<RingDescriptor> out;
  out.reserve(reflection ? 2 * r.size : r.size);
  for (int rot = 0; rot < r.size; ++rot) out.push_back(rotated(r, rot));
  if (reflection) {
    RingDescriptor m = reflected(r);
    for (int rot = 0; rot < r.size; ++rot) out.push_back(rotated(m, rot));
  }
  return out;
}

// Lexicographically least fully padded encoding over all symmetry images.
// Two rings are symmetry-equivalent iff their canonical forms are equal.
inline std::string canonical_form(const RingDescriptor& r, bool reflection = true) {
  std::string best = encode(r);
  for (const RingDescriptor& img : symmetry_images(r, reflection)) {
    std::string s = encode(img);
    if (s < best) best = s;
  }
  return best;
}

// True iff the ring's own encoding is its canonical form.  Allocation-free;
// this is the hot test of the enumerators.
inline bool is_canonical(const RingDescriptor& r, bool reflection = true) {
  const int d = r.size;
  auto cmp_image = [&](auto&& vat, auto&& fat) {
    // -1 image smaller, 1 image larger, 0 equal
    for (int j = 0; j < d; ++j) {
      char a = to_char(vat(j)), b = to_char(r.vtypes[j]);
      if (a != b) return a < b ? -1 : 1;
      a = to_char(fat(j));
      b = to_char(r.ftypes[j]);
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  };
  for (int k = 1; k < d; ++k) {
    if (cmp_image([&](int j) { return r.vtypes[(j + k) % d]; },
                  [&](int j) { return r.ftypes[(j + k) % d]; }) < 0)
      return false;
  }
  if (reflection) {
    for (int k = 0; k < d; ++k) {
      if (cmp_image([&](int j) { return r.vtypes[(2 * d - j - k) % d]; },
                    [&](int j) { return r.ftypes[(2 * d - 1 - j - k) % d]; }) < 0)
        return false;
    }
  }
  return true;
}

// --- Local consistency -----------------------------------------------------
//
// Structural constraints a descriptor must satisfy to possibly occur in a
// minimal counterexample (2-connected, min facial degree >= 9, no 3-face
// sharing an edge with a <=5-face):
//   C1  a 5-face has no 3-face across any edge
//   C2  a v/u/w vertex has 6-faces on both sides (its off-face triangle
//       shares an edge with each flanking face)
//   C3  a t/o vertex touches at most one 3-face among its two flanking
//       faces, and if one flank is a 3-face the other is a 6-face (both
//       flanks share the edge to the off-face neighbor)
//   C4  a 3-face flanking a t vertex has tip class x (the tip is the
//       off-face neighbor, a >=4-vertex)
//   C5  a 3-face flanking an o vertex has tip class t or O
//   C6  3-faces flanking 4/5/6-vertices are unconstrained
// The set errs on the side of enumerating too much: a descriptor passing all
// checks need not be realizable, which keeps the verification sound.

struct ConsistencyViolation {
  int constraint;  // 1..5
  int position;    // vertex index (C2..C5) or face index (C1)
};

// Checks one vertex against its two flanking faces; either flank may be
// unknown (partial windows).  Returns the violated constraint id or 0.
inline int flank_violation(VertexClass v, std::optional<FaceClass> left,
                           std::optional<FaceClass> right) {
  bool lt = left && is_triangle(*left);
  bool rt = right && is_triangle(*right);
  switch (v) {
    case VertexClass::v:
    case VertexClass::u:
    case VertexClass::w:
      if ((left && *left != FaceClass::H) || (right && *right != FaceClass::H))
        return 2;
      return 0;
    case VertexClass::t:
      if (lt && rt) return 3;
      if (lt && right && *right != FaceClass::H) return 3;
      if (rt && left && *left != FaceClass::H) return 3;
      if ((lt && *left != FaceClass::x) || (rt && *right != FaceClass::x)) return 4;
      return 0;
    case VertexClass::o:
      if (lt && rt) return 3;
      if (lt && right && *right != FaceClass::H) return 3;
      if (rt && left && *left != FaceClass::H) return 3;
      if ((lt && *left == FaceClass::x) || (rt && *right == FaceClass::x)) return 5;
      return 0;
    default:
      return 0;
  }
}

inline std::optional<ConsistencyViolation> consistency_check(const RingDescriptor& r) {
  if (r.size == 5) {
    for (int i = 0; i < 5; ++i)
      if (is_triangle(r.ftypes[i])) return ConsistencyViolation{1, i};
  }
  for (int i = 0; i < r.size; ++i) {
    int c = flank_violation(r.vtypes[i], r.f(i - 1), r.f(i));
    if (c != 0) return ConsistencyViolation{c, i};
  }
  return std::nullopt;
}

inline bool consistent(const RingDescriptor& r) { return !consistency_check(r); }

}  // namespace discharge
