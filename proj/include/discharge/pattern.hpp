#pragma once

// The configuration-string DSL: patterns over the vertex/face type alphabets
// with wildcards, parsed from strings like "P:v*3P3", "H:o3o" or
// "T:3H3x3Hx".  P/H patterns describe whole 5-/6-faces (trailing stars may
// be omitted); T patterns are the fixed-width 7-character windows used by
// the triangle-feeding rules.

#include <string>
#include <variant>
#include <vector>

#include "discharge/ring.hpp"

namespace discharge {

struct FacePattern {
  int size = 6;  // 5 for "P:", 6 for "H:"
  std::array<char, 6> vchar{{'*', '*', '*', '*', '*', '*'}};
  std::array<char, 6> fchar{{'*', '*', '*', '*', '*', '*'}};

  friend bool operator==(const FacePattern&, const FacePattern&) = default;

  std::string str() const {
    std::string out = size == 5 ? "P:" : "H:";
    for (int i = 0; i < size; ++i) {
      out.push_back(vchar[i]);
      out.push_back(fchar[i]);
    }
    return out;
  }
};

// Linear window v1 f1 v2 f2 v3 f3 v4 along a 6-face boundary; f2 is the
// 3-face the rule feeds, so its character must cover 3-face classes only.
struct TRulePattern {
  std::array<char, 4> vchar{{'*', '*', '*', '*'}};
  std::array<char, 3> fchar{{'*', '*', '*'}};

  friend bool operator==(const TRulePattern&, const TRulePattern&) = default;

  std::string str() const {
    std::string out = "T:";
    for (int i = 0; i < 3; ++i) {
      out.push_back(vchar[i]);
      out.push_back(fchar[i]);
    }
    out.push_back(vchar[3]);
    return out;
  }
};

using ParsedPattern = std::variant<FacePattern, TRulePattern>;

namespace detail {
inline void check_vertex_char(char ch, std::size_t pos) {
  if (vertex_char_mask(ch, Semantics::Inclusive4) == 0)
    throw ParseError(std::string("illegal vertex pattern character '") + ch + "'", pos);
}
inline void check_face_char(char ch, std::size_t pos) {
  if (face_char_mask(ch) == 0)
    throw ParseError(std::string("illegal face pattern character '") + ch + "'", pos);
}
}  // namespace detail

inline ParsedPattern parse_pattern(std::string_view text) {
  if (text.size() < 2 || text[1] != ':' ||
      (text[0] != 'P' && text[0] != 'H' && text[0] != 'T'))
    throw ParseError("pattern must start with \"P:\", \"H:\" or \"T:\"", 0);
  std::string_view body = text.substr(2);
  if (text[0] == 'T') {
    if (body.size() != 7)
      throw ParseError("T pattern body must be exactly 7 characters", text.size());
    TRulePattern p;
    for (int i = 0; i < 7; ++i) {
      char ch = body[i];
      if (i % 2 == 0) {
        detail::check_vertex_char(ch, 2 + i);
        p.vchar[i / 2] = ch;
      } else {
        detail::check_face_char(ch, 2 + i);
        p.fchar[i / 2] = ch;
      }
    }
    // the window's middle face is the rule's target and is always a 3-face
    if ((face_char_mask(p.fchar[1]) & ~face_char_mask('T')) != 0)
      throw ParseError("T pattern target face (position 5) must cover 3-faces only", 5 + 2);
    return p;
  }
  FacePattern p;
  p.size = text[0] == 'P' ? 5 : 6;
  if (body.size() > std::size_t(2 * p.size))
    throw ParseError("pattern body longer than face encoding", 2 + 2 * p.size);
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    if (i % 2 == 0) {
      detail::check_vertex_char(ch, 2 + i);
      p.vchar[i / 2] = ch;
    } else {
      detail::check_face_char(ch, 2 + i);
      p.fchar[i / 2] = ch;
    }
  }
  return p;  // omitted trailing positions stay '*'
}

inline FacePattern parse_face_pattern(std::string_view text) {
  ParsedPattern p = parse_pattern(text);
  if (!std::holds_alternative<FacePattern>(p))
    throw ParseError("expected a P: or H: pattern", 0);
  return std::get<FacePattern>(p);
}

// u/v/w substitution closure: a reducible configuration written with 'v'
// stands for the variants with 'u' and 'w' substituted as well, and one with
// 'u' also for the 'w' variant, independently per slot.  The original
// pattern is always first in the result.
inline std::vector<FacePattern> closure_expand(const FacePattern& config) {
  std::vector<FacePattern> out{config};
  for (int i = 0; i < config.size; ++i) {
    const char ch = config.vchar[i];
    const char* subs = nullptr;
    if (ch == 'v') subs = "uw";
    else if (ch == 'u') subs = "w";
    else continue;
    std::size_t n = out.size();
    for (const char* s = subs; *s; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        FacePattern var = out[j];
        var.vchar[i] = *s;
        out.push_back(var);
      }
    }
  }
  return out;
}

inline FacePattern rotated(const FacePattern& p, int by) {
  FacePattern out = p;
  for (int i = 0; i < p.size; ++i) {
    out.vchar[i] = p.vchar[(i + by) % p.size];
    out.fchar[i] = p.fchar[(i + by) % p.size];
  }
  return out;
}

inline FacePattern reflected(const FacePattern& p) {
  FacePattern out = p;
  int d = p.size;
  for (int j = 0; j < d; ++j) {
    out.vchar[j] = p.vchar[(d - j) % d];
    out.fchar[j] = p.fchar[d - 1 - j];
  }
  return out;
}

inline std::vector<FacePattern> pattern_images(const FacePattern& p,
                                               bool reflection = true) {
  std::vector<FacePattern> out;
  out.reserve(reflection ? 2 * p.size : p.size);
  for (int rot = 0; rot < p.size; ++rot) out.push_back(rotated(p, rot));
  if (reflection) {
    FacePattern m = reflected(p);
    for (int rot = 0; rot < p.size; ++rot) out.push_back(rotated(m, rot));
  }
  return out;
}

// Deduplication key for configurations: least rendered string over the
// pattern's symmetry images.
inline std::string pattern_canonical(const FacePattern& p, bool reflection = true) {
  std::string best = p.str();
  for (const FacePattern& img : pattern_images(p, reflection))
    best = std::min(best, img.str());
  return best;
}

// A ring with possibly unknown slots, as arises when only part of a face's
// boundary is determined (triangle contexts, vertex stars).  Unknown slots
// satisfy only the '*' pattern character, so a partial match certifies that
// every completion of the ring is matched.
struct PartialRing {
  int size = 6;
  std::array<std::optional<VertexClass>, 6> vtypes{};
  std::array<std::optional<FaceClass>, 6> ftypes{};

  static PartialRing of(const RingDescriptor& r) {
    PartialRing p;
    p.size = r.size;
    for (int i = 0; i < r.size; ++i) {
      p.vtypes[i] = r.vtypes[i];
      p.ftypes[i] = r.ftypes[i];
    }
    return p;
  }
};

inline bool matches_at(const FacePattern& img, const PartialRing& ring, Semantics sem) {
  for (int i = 0; i < ring.size; ++i) {
    if (ring.vtypes[i]) {
      if (!char_matches(img.vchar[i], *ring.vtypes[i], sem)) return false;
    } else if (img.vchar[i] != '*') {
      return false;
    }
    if (ring.ftypes[i]) {
      if (!char_matches(img.fchar[i], *ring.ftypes[i])) return false;
    } else if (img.fchar[i] != '*') {
      return false;
    }
  }
  return true;
}

inline bool match_partial(const FacePattern& config, const PartialRing& ring,
                          Semantics sem = Semantics::Inclusive4,
                          bool reflection = true) {
  if (config.size != ring.size) return false;
  for (const FacePattern& img : pattern_images(config, reflection))
    if (matches_at(img, ring, sem)) return true;
  return false;
}

// True iff some rotation of the ring, or of the reflected ring, satisfies the
// pattern at every slot.
inline bool match_ring(const FacePattern& config, const RingDescriptor& ring,
                       Semantics sem = Semantics::Inclusive4,
                       bool reflection = true) {
  return match_partial(config, PartialRing::of(ring), sem, reflection);
}

}  // namespace discharge
