#pragma once

// Core alphabet for describing the local structure around 5- and 6-faces of a
// plane graph with maximum face size six, in a minimal counterexample to
// cyclic 9-colorability.  A face is described by the cyclic sequence of its
// vertex types and of the types of the faces across each boundary edge.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace discharge {

// Concrete vertex types, relative to one described face:
//   t  - 3-vertex whose neighbor off the face is a >=4-vertex
//   o  - 3-vertex whose neighbor off the face is a 3-vertex
//   v  - 4-vertex in a 3-face with both triangle companions off the face,
//        both companions >=4-vertices
//   u  - as v, companions a 3-vertex and a >=4-vertex
//   w  - as v, both companions 3-vertices
//   p4 - any other 4-vertex (written '4')
//   p5 - 5-vertex (written '5')
//   p6 - >=6-vertex (written '6')
enum class VertexClass : std::uint8_t { t, o, v, u, w, p4, p5, p6 };

// Concrete face types, as seen across a shared edge:
//   t - 3-face whose tip is a 3-vertex with a >=4-vertex remaining neighbor
//   O - 3-face whose tip is a 3-vertex with a 3-vertex remaining neighbor
//   x - 3-face whose tip is a >=4-vertex
//   Q - 4-face,  P - 5-face,  H - 6-face
enum class FaceClass : std::uint8_t { t, O, x, Q, P, H };

inline constexpr int kVertexClassCount = 8;
inline constexpr int kFaceClassCount = 6;

using VertexMask = std::uint8_t;  // bit i = VertexClass(i)
using FaceMask = std::uint8_t;    // bit i = FaceClass(i)

inline constexpr VertexMask kAllVertices = 0xff;
inline constexpr FaceMask kAllFaces = 0x3f;

constexpr VertexMask mask_of(VertexClass c) {
  return VertexMask(1u << static_cast<unsigned>(c));
}
constexpr FaceMask mask_of(FaceClass c) {
  return FaceMask(1u << static_cast<unsigned>(c));
}

// Matching semantics for the vertex pattern character '4'.  The type tables
// call '4' simply "a 4-vertex" while v/u/w are refinements of 4-vertices;
// under Inclusive4 the character matches all of them, under Strict4 only the
// residual class p4.  Inclusive4 is the default; the lemma verifiers fail
// under Strict4, which settles the intended reading empirically.
enum class Semantics : std::uint8_t { Inclusive4, Strict4 };

constexpr char to_char(VertexClass c) {
  constexpr std::array<char, 8> chars = {'t', 'o', 'v', 'u', 'w', '4', '5', '6'};
  return chars[static_cast<unsigned>(c)];
}
constexpr char to_char(FaceClass c) {
  constexpr std::array<char, 6> chars = {'t', 'O', 'x', 'Q', 'P', 'H'};
  return chars[static_cast<unsigned>(c)];
}

constexpr std::optional<VertexClass> vertex_class_of(char ch) {
  switch (ch) {
    case 't': return VertexClass::t;
    case 'o': return VertexClass::o;
    case 'v': return VertexClass::v;
    case 'u': return VertexClass::u;
    case 'w': return VertexClass::w;
    case '4': return VertexClass::p4;
    case '5': return VertexClass::p5;
    case '6': return VertexClass::p6;
    default: return std::nullopt;
  }
}
constexpr std::optional<FaceClass> face_class_of(char ch) {
  switch (ch) {
    case 't': return FaceClass::t;
    case 'O': return FaceClass::O;
    case 'x': return FaceClass::x;
    case 'Q': return FaceClass::Q;
    case 'P': return FaceClass::P;
    case 'H': return FaceClass::H;
    default: return std::nullopt;
  }
}

// Match set of a vertex pattern character.  Empty mask = illegal character.
constexpr VertexMask vertex_char_mask(char ch, Semantics sem) {
  constexpr VertexMask m3 = mask_of(VertexClass::t) | mask_of(VertexClass::o);
  switch (ch) {
    case 't': return mask_of(VertexClass::t);
    case 'o': return mask_of(VertexClass::o);
    case 'v': return mask_of(VertexClass::v);
    case 'u': return mask_of(VertexClass::u);
    case 'w': return mask_of(VertexClass::w);
    case '4':
      return sem == Semantics::Inclusive4
                 ? VertexMask(mask_of(VertexClass::p4) | mask_of(VertexClass::v) |
                              mask_of(VertexClass::u) | mask_of(VertexClass::w))
                 : mask_of(VertexClass::p4);
    case '5': return mask_of(VertexClass::p5);
    case '6': return mask_of(VertexClass::p6);
    case '3': return m3;
    case 'x': return VertexMask(kAllVertices & ~m3);
    case '+': return VertexMask(mask_of(VertexClass::p5) | mask_of(VertexClass::p6));
    case '*': return kAllVertices;
    default: return 0;
  }
}

// Match set of a face pattern character.  Empty mask = illegal character.
constexpr FaceMask face_char_mask(char ch) {
  constexpr FaceMask triangles =
      mask_of(FaceClass::t) | mask_of(FaceClass::O) | mask_of(FaceClass::x);
  switch (ch) {
    case 't': return mask_of(FaceClass::t);
    case 'O': return mask_of(FaceClass::O);
    case 'x': return mask_of(FaceClass::x);
    case 'Q': return mask_of(FaceClass::Q);
    case 'P': return mask_of(FaceClass::P);
    case 'H': return mask_of(FaceClass::H);
    case '3': return FaceMask(mask_of(FaceClass::t) | mask_of(FaceClass::O));
    case 'T': return triangles;
    case 'F': return FaceMask(mask_of(FaceClass::Q) | mask_of(FaceClass::P) |
                              mask_of(FaceClass::H));
    case '*': return kAllFaces;
    default: return 0;
  }
}

constexpr bool char_matches(char pattern_ch, VertexClass c, Semantics sem) {
  return (vertex_char_mask(pattern_ch, sem) & mask_of(c)) != 0;
}
constexpr bool char_matches(char pattern_ch, FaceClass c) {
  return (face_char_mask(pattern_ch) & mask_of(c)) != 0;
}

constexpr bool is_triangle(FaceClass c) {
  return c == FaceClass::t || c == FaceClass::O || c == FaceClass::x;
}

// Degree bucket of a concrete vertex class: 3, 4, 5 or 6 (meaning >=6).
constexpr int degree_bucket(VertexClass c) {
  switch (c) {
    case VertexClass::t:
    case VertexClass::o: return 3;
    case VertexClass::v:
    case VertexClass::u:
    case VertexClass::w:
    case VertexClass::p4: return 4;
    case VertexClass::p5: return 5;
    default: return 6;
  }
}

constexpr int face_size(FaceClass c) {
  switch (c) {
    case FaceClass::Q: return 4;
    case FaceClass::P: return 5;
    case FaceClass::H: return 6;
    default: return 3;
  }
}

// Classes listed in ASCII order of their concrete characters, so that
// enumerating in this order yields streams sorted by encoded string.
inline constexpr std::array<VertexClass, 8> kVertexAsciiOrder = {
    VertexClass::p4, VertexClass::p5, VertexClass::p6, VertexClass::o,
    VertexClass::t,  VertexClass::u,  VertexClass::v,  VertexClass::w};
inline constexpr std::array<FaceClass, 6> kFaceAsciiOrder = {
    FaceClass::H, FaceClass::O, FaceClass::P,
    FaceClass::Q, FaceClass::t, FaceClass::x};

inline const char* semantics_name(Semantics s) {
  return s == Semantics::Inclusive4 ? "inclusive4" : "strict4";
}

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), pos(position) {}
  std::size_t pos;  // 0-based offset into the offending string
};

// FNV-1a, used for content hashes of rule tables and configuration sets.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace discharge
