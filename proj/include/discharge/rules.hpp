#pragma once

// The discharging rules and their application semantics.  T-rules transfer
// charge from a 6-face to an adjacent 3-face; P- and H-rules transfer charge
// between a 5-/6-face and one of its vertices (negative amounts mean the
// vertex pays the face).  Charge sent to a u/w vertex is relayed onward to
// that vertex's off-face triangle.

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "discharge/pattern.hpp"
#include "discharge/rules_data.hpp"

namespace discharge {

using Charge = int;  // counts 1/60 of one charge unit; exact arithmetic only

// Initial charge of a k-vertex or k-face: k-4 units = 60*(k-4) sixtieths.
inline Charge initial_charge(int k) {
  if (k < 3) throw std::invalid_argument("initial_charge: degree below 3");
  return 60 * (k - 4);
}

enum class RuleKind : std::uint8_t { T, P, H };

inline char rule_kind_char(RuleKind k) {
  return k == RuleKind::T ? 'T' : (k == RuleKind::P ? 'P' : 'H');
}

struct Rule {
  RuleKind kind;
  std::string text;  // as written, e.g. "T:3H3x3Hx"
  TRulePattern tpat;   // valid when kind == T
  FacePattern fpat;    // valid when kind == P/H; receiver is vertex slot 1
  Charge amount = 0;
  int table_row = 0, table_col = 0;  // position in the source table
};

struct RuleLoadError : std::runtime_error {
  RuleLoadError(const std::string& what, int line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

class RuleTable {
 public:
  const std::vector<Rule>& rules() const { return rules_; }
  int count(RuleKind k) const {
    return k == RuleKind::T ? n_t_ : (k == RuleKind::P ? n_p_ : n_h_);
  }
  int size() const { return int(rules_.size()); }

  // Canonical one-rule-per-line serialization; the embedded table reproduces
  // its source text (modulo comments) byte for byte.
  std::string serialize() const {
    std::string out;
    for (const Rule& r : rules_) {
      out += r.text;
      out.push_back(' ');
      out += std::to_string(r.amount);
      out += "/60\n";
    }
    return out;
  }

  std::string content_hash() const { return hex64(fnv1a64(serialize())); }

  static RuleTable load(std::string_view text);

 private:
  std::vector<Rule> rules_;
  int n_t_ = 0, n_p_ = 0, n_h_ = 0;
};

inline RuleTable RuleTable::load(std::string_view text) {
  RuleTable table;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (std::size_t h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t sp = line.find(' ');
    if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos)
      throw RuleLoadError("expected \"<pattern> <numerator>/60\"", lineno);
    std::string_view pat = line.substr(0, sp);
    std::string_view amt = line.substr(sp + 1);
    if (amt.size() < 4 || amt.substr(amt.size() - 3) != "/60")
      throw RuleLoadError("amount denominator must be 60", lineno);
    int numerator = 0;
    try {
      std::size_t used = 0;
      numerator = std::stoi(std::string(amt.substr(0, amt.size() - 3)), &used);
      if (used != amt.size() - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw RuleLoadError("malformed amount numerator", lineno);
    }

    Rule r;
    r.text = std::string(pat);
    r.amount = numerator;
    try {
      ParsedPattern parsed = parse_pattern(pat);
      if (std::holds_alternative<TRulePattern>(parsed)) {
        r.kind = RuleKind::T;
        r.tpat = std::get<TRulePattern>(parsed);
        if (r.amount <= 0)
          throw RuleLoadError("T-rule amounts must be positive", lineno);
      } else {
        const FacePattern& fp = std::get<FacePattern>(parsed);
        // P/H rules are 5-character windows; longer bodies would constrain
        // slots the application semantics never reads
        if (pat.size() != 7)
          throw RuleLoadError("P/H rule body must be exactly 5 characters", lineno);
        r.kind = fp.size == 5 ? RuleKind::P : RuleKind::H;
        r.fpat = fp;
      }
    } catch (const ParseError& e) {
      throw RuleLoadError(e.what(), lineno);
    }
    for (const Rule& prev : table.rules_)
      if (prev.text == r.text) throw RuleLoadError("duplicate pattern " + r.text, lineno);

    int& n = r.kind == RuleKind::T ? table.n_t_
             : r.kind == RuleKind::P ? table.n_p_ : table.n_h_;
    int per_row = r.kind == RuleKind::T ? 3 : 4;
    r.table_row = n / per_row + 1;
    r.table_col = n % per_row + 1;
    ++n;
    table.rules_.push_back(std::move(r));
  }
  return table;
}

inline const RuleTable& embedded_rules() {
  static const RuleTable table = RuleTable::load(kEmbeddedRulesText);
  return table;
}

// --- Windows ----------------------------------------------------------------

// P/H application window around receiver vertex v_i of a face:
// (v_{i-1}, f_{i-1}, v_i, f_i, v_{i+1}).
struct PvWindow {
  VertexClass v1, rcv, v3;
  FaceClass f1, f2;

  static constexpr int kCount = 8 * 6 * 8 * 6 * 8;  // 18432
  int index() const {
    return (((int(v1) * 6 + int(f1)) * 8 + int(rcv)) * 6 + int(f2)) * 8 + int(v3);
  }
  static PvWindow from_index(int ix) {
    PvWindow w{};
    w.v3 = VertexClass(ix % 8); ix /= 8;
    w.f2 = FaceClass(ix % 6); ix /= 6;
    w.rcv = VertexClass(ix % 8); ix /= 8;
    w.f1 = FaceClass(ix % 6); ix /= 6;
    w.v1 = VertexClass(ix);
    return w;
  }
  PvWindow reversed() const { return PvWindow{v3, rcv, v1, f2, f1}; }
  std::string str() const {
    return {to_char(v1), to_char(f1), to_char(rcv), to_char(f2), to_char(v3)};
  }
};

// T application window (v1, f1, v2, f2, v3, f3, v4); f2 is the paid 3-face.
struct TWindow {
  VertexClass v1, v2, v3, v4;
  FaceClass f1, f2, f3;

  static constexpr int kCount = 8 * 6 * 8 * 6 * 8 * 6 * 8;  // 884736
  int index() const {
    return ((((((int(v1) * 6 + int(f1)) * 8 + int(v2)) * 6 + int(f2)) * 8 + int(v3)) * 6 +
             int(f3)) * 8) + int(v4);
  }
  static TWindow from_index(int ix) {
    TWindow w{};
    w.v4 = VertexClass(ix % 8); ix /= 8;
    w.f3 = FaceClass(ix % 6); ix /= 6;
    w.v3 = VertexClass(ix % 8); ix /= 8;
    w.f2 = FaceClass(ix % 6); ix /= 6;
    w.v2 = VertexClass(ix % 8); ix /= 8;
    w.f1 = FaceClass(ix % 6); ix /= 6;
    w.v1 = VertexClass(ix);
    return w;
  }
  TWindow reversed() const { return TWindow{v4, v3, v2, v1, f3, f2, f1}; }
  std::string str() const {
    return {to_char(v1), to_char(f1), to_char(v2), to_char(f2),
            to_char(v3), to_char(f3), to_char(v4)};
  }
};

// Window consistency: the window is a contiguous stretch of some face's ring,
// so the flanking constraints apply wherever both data are known.
inline bool pv_window_consistent(const PvWindow& w, RuleKind host) {
  if (host == RuleKind::P && (is_triangle(w.f1) || is_triangle(w.f2))) return false;  // C1
  return flank_violation(w.v1, std::nullopt, w.f1) == 0 &&
         flank_violation(w.rcv, w.f1, w.f2) == 0 &&
         flank_violation(w.v3, w.f2, std::nullopt) == 0;
}

inline bool t_window_consistent(const TWindow& w) {
  if (!is_triangle(w.f2)) return false;  // the paid face is always a 3-face
  return flank_violation(w.v1, std::nullopt, w.f1) == 0 &&
         flank_violation(w.v2, w.f1, w.f2) == 0 &&
         flank_violation(w.v3, w.f2, w.f3) == 0 &&
         flank_violation(w.v4, w.f3, std::nullopt) == 0;
}

inline bool rule_matches(const Rule& r, const PvWindow& w, Semantics sem) {
  const FacePattern& p = r.fpat;
  return char_matches(p.vchar[0], w.v1, sem) && char_matches(p.fchar[0], w.f1) &&
         char_matches(p.vchar[1], w.rcv, sem) && char_matches(p.fchar[1], w.f2) &&
         char_matches(p.vchar[2], w.v3, sem);
}

inline bool rule_matches(const Rule& r, const TWindow& w, Semantics sem) {
  const TRulePattern& p = r.tpat;
  return char_matches(p.vchar[0], w.v1, sem) && char_matches(p.fchar[0], w.f1) &&
         char_matches(p.vchar[1], w.v2, sem) && char_matches(p.fchar[1], w.f2) &&
         char_matches(p.vchar[2], w.v3, sem) && char_matches(p.fchar[2], w.f3) &&
         char_matches(p.vchar[3], w.v4, sem);
}

struct AmbiguousRuleError : std::runtime_error {
  AmbiguousRuleError(const std::string& window, const std::string& a, const std::string& b)
      : std::runtime_error("rules " + a + " and " + b + " both apply to window " + window) {}
};

struct OverlapConflict {
  const Rule* a;
  const Rule* b;
  std::string window;  // witness, canonical direction
};

// Precomputed window -> rule assignment for one (table, semantics,
// reflection) choice.  A rule applies to a placement if its window matches
// read forward or (with reflection) backward; a palindromic match fires once.
// Double assignment of a consistent window is a table inconsistency and is
// kept for the overlap audit.
class RuleMatcher {
 public:
  RuleMatcher(const RuleTable& table, Semantics sem, bool reflection = true)
      : table_(&table), sem_(sem), reflection_(reflection) {
    pv_[0].assign(PvWindow::kCount, -1);
    pv_[1].assign(PvWindow::kCount, -1);
    t_.assign(TWindow::kCount, -1);
    for (int ri = 0; ri < table.size(); ++ri) {
      const Rule& r = table.rules()[ri];
      if (r.kind == RuleKind::T)
        cover_t(ri);
      else
        cover_pv(ri);
    }
  }

  const RuleTable& table() const { return *table_; }
  Semantics semantics() const { return sem_; }
  bool reflection() const { return reflection_; }

  // Unique applying rule for a window, or nullopt.  Throws on ambiguity.
  std::optional<const Rule*> match(RuleKind host, const PvWindow& w) const {
    int cell = pv_[host == RuleKind::P ? 0 : 1][w.index()];
    if (cell == kAmbiguous) throw_ambiguous(host, w.index(), w.str());
    if (cell < 0) return std::nullopt;
    return &table_->rules()[cell];
  }
  std::optional<const Rule*> match(const TWindow& w) const {
    int cell = t_[w.index()];
    if (cell == kAmbiguous) throw_ambiguous(RuleKind::T, w.index(), w.str());
    if (cell < 0) return std::nullopt;
    return &table_->rules()[cell];
  }

  // Signed amount shortcut; 0 when no rule applies.
  Charge amount(RuleKind host, const PvWindow& w) const {
    auto m = match(host, w);
    return m ? (*m)->amount : 0;
  }
  Charge amount(const TWindow& w) const {
    auto m = match(w);
    return m ? (*m)->amount : 0;
  }

  // Every consistent window assigned to two distinct rules of one kind, in
  // deterministic order; empty output certifies the at-most-one-rule claims.
  std::vector<OverlapConflict> conflicts() const {
    std::vector<OverlapConflict> out;
    for (const RawConflict& c : conflicts_) {
      if (c.kind == RuleKind::T) {
        TWindow w = TWindow::from_index(c.window_index);
        if (!t_window_consistent(w)) continue;
        if (reflection_ && w.reversed().index() < c.window_index) continue;  // mirror dup
        out.push_back({&table_->rules()[c.rule_a], &table_->rules()[c.rule_b],
                       "T:" + w.str()});
      } else {
        PvWindow w = PvWindow::from_index(c.window_index);
        if (!pv_window_consistent(w, c.kind)) continue;
        if (reflection_ && w.reversed().index() < c.window_index) continue;
        out.push_back({&table_->rules()[c.rule_a], &table_->rules()[c.rule_b],
                       std::string(1, rule_kind_char(c.kind)) + ":" + w.str()});
      }
    }
    return out;
  }

 private:
  static constexpr int kAmbiguous = -2;

  struct RawConflict {
    RuleKind kind;
    int window_index;
    int rule_a, rule_b;
  };

  [[noreturn]] void throw_ambiguous(RuleKind kind, int index, const std::string& w) const {
    for (const RawConflict& c : conflicts_)
      if (c.kind == kind && c.window_index == index)
        throw AmbiguousRuleError(w, table_->rules()[c.rule_a].text,
                                 table_->rules()[c.rule_b].text);
    throw AmbiguousRuleError(w, "?", "?");
  }

  void assign(RuleKind kind, std::vector<int>& cells, int ix, int ri) {
    int& cell = cells[ix];
    if (cell == ri || cell == kAmbiguous) return;
    if (cell == -1) {
      cell = ri;
      return;
    }
    conflicts_.push_back({kind, ix, cell, ri});
    cell = kAmbiguous;
  }

  template <typename Fn>
  static void for_each_in_masks(const std::vector<std::vector<int>>& choices,
                                std::vector<int>& pick, std::size_t depth, Fn&& fn) {
    if (depth == choices.size()) {
      fn(pick);
      return;
    }
    for (int c : choices[depth]) {
      pick[depth] = c;
      for_each_in_masks(choices, pick, depth + 1, fn);
    }
  }

  static std::vector<int> bits_of_vertex(char ch, Semantics sem) {
    std::vector<int> out;
    VertexMask m = vertex_char_mask(ch, sem);
    for (int i = 0; i < kVertexClassCount; ++i)
      if (m & (1u << i)) out.push_back(i);
    return out;
  }
  static std::vector<int> bits_of_face(char ch) {
    std::vector<int> out;
    FaceMask m = face_char_mask(ch);
    for (int i = 0; i < kFaceClassCount; ++i)
      if (m & (1u << i)) out.push_back(i);
    return out;
  }

  void cover_pv(int ri) {
    const Rule& r = table_->rules()[ri];
    std::vector<int>& cells = pv_[r.kind == RuleKind::P ? 0 : 1];
    const FacePattern& p = r.fpat;
    std::vector<std::vector<int>> choices = {
        bits_of_vertex(p.vchar[0], sem_), bits_of_face(p.fchar[0]),
        bits_of_vertex(p.vchar[1], sem_), bits_of_face(p.fchar[1]),
        bits_of_vertex(p.vchar[2], sem_)};
    std::vector<int> pick(choices.size());
    for_each_in_masks(choices, pick, 0, [&](const std::vector<int>& c) {
      PvWindow w{VertexClass(c[0]), VertexClass(c[2]), VertexClass(c[4]),
                 FaceClass(c[1]), FaceClass(c[3])};
      assign(r.kind, cells, w.index(), ri);
      if (reflection_) assign(r.kind, cells, w.reversed().index(), ri);
    });
  }

  void cover_t(int ri) {
    const Rule& r = table_->rules()[ri];
    const TRulePattern& p = r.tpat;
    std::vector<std::vector<int>> choices = {
        bits_of_vertex(p.vchar[0], sem_), bits_of_face(p.fchar[0]),
        bits_of_vertex(p.vchar[1], sem_), bits_of_face(p.fchar[1]),
        bits_of_vertex(p.vchar[2], sem_), bits_of_face(p.fchar[2]),
        bits_of_vertex(p.vchar[3], sem_)};
    std::vector<int> pick(choices.size());
    for_each_in_masks(choices, pick, 0, [&](const std::vector<int>& c) {
      TWindow w{VertexClass(c[0]), VertexClass(c[2]), VertexClass(c[4]),
                VertexClass(c[6]), FaceClass(c[1]), FaceClass(c[3]), FaceClass(c[5])};
      assign(RuleKind::T, t_, w.index(), ri);
      if (reflection_) assign(RuleKind::T, t_, w.reversed().index(), ri);
    });
  }

  const RuleTable* table_;
  Semantics sem_;
  bool reflection_;
  std::vector<int> pv_[2];  // [0] P-rules on 5-faces, [1] H-rules on 6-faces
  std::vector<int> t_;
  std::vector<RawConflict> conflicts_;
};

// The full audit over the concrete consistent window space.
inline std::vector<OverlapConflict> overlap_audit(const RuleTable& table,
                                                  Semantics sem,
                                                  bool reflection = true) {
  return RuleMatcher(table, sem, reflection).conflicts();
}

// --- Application on ring descriptors ----------------------------------------

inline PvWindow pv_window_of(const RingDescriptor& ring, int slot) {
  return PvWindow{ring.v(slot - 1), ring.v(slot), ring.v(slot + 1),
                  ring.f(slot - 1), ring.f(slot)};
}

inline TWindow t_window_of(const RingDescriptor& ring, int edge) {
  return TWindow{ring.v(edge - 1), ring.v(edge), ring.v(edge + 1), ring.v(edge + 2),
                 ring.f(edge - 1), ring.f(edge), ring.f(edge + 1)};
}

struct RuleApplication {
  const Rule* rule;
  Charge amount;  // signed as in the table
};

// Unique P/H rule applying between the ring's face and vertex `slot`.
inline std::optional<RuleApplication> match_pv_rule(const RuleMatcher& m,
                                                    const RingDescriptor& ring,
                                                    int slot) {
  auto r = m.match(ring.size == 5 ? RuleKind::P : RuleKind::H, pv_window_of(ring, slot));
  if (!r) return std::nullopt;
  return RuleApplication{*r, (*r)->amount};
}

// Unique T-rule applying between a 6-ring's face and the 3-face across
// `edge`; none when the across-edge face is not a 3-face.
inline std::optional<RuleApplication> match_t_rule(const RuleMatcher& m,
                                                   const RingDescriptor& ring,
                                                   int edge) {
  if (ring.size != 6 || !is_triangle(ring.f(edge))) return std::nullopt;
  auto r = m.match(t_window_of(ring, edge));
  if (!r) return std::nullopt;
  return RuleApplication{*r, (*r)->amount};
}

// One double-entry transfer: payer is debited and payee credited by the same
// positive amount.  A relayed transfer passes through a u/w vertex, which
// forwards everything to its off-face triangle and nets zero.
struct Transfer {
  std::string payer;
  std::string payee;
  Charge amount;  // always positive
  const Rule* rule;
  std::string relay;  // relay vertex id, empty if direct
};

// Element ids within a single-ring scenario: "f" the described face, "v<i>"
// its vertices, "e<i>" the face across edge i, "t<i>" the off-face triangle
// of the u/w vertex at slot i.
inline std::vector<Transfer> apply_rules(const RuleMatcher& m, const RingDescriptor& ring) {
  std::vector<Transfer> out;
  for (int i = 0; i < ring.size; ++i) {
    auto app = match_pv_rule(m, ring, i);
    if (!app) continue;
    std::string vid = "v" + std::to_string(i);
    if (app->amount > 0) {
      VertexClass rcv = ring.vtypes[i];
      if (rcv == VertexClass::u || rcv == VertexClass::w)
        out.push_back({"f", "t" + std::to_string(i), app->amount, app->rule, vid});
      else
        out.push_back({"f", vid, app->amount, app->rule, ""});
    } else {
      out.push_back({vid, "f", -app->amount, app->rule, ""});
    }
  }
  if (ring.size == 6) {
    for (int i = 0; i < 6; ++i) {
      if (!is_triangle(ring.ftypes[i])) continue;
      auto app = match_t_rule(m, ring, i);
      if (app)
        out.push_back({"f", "e" + std::to_string(i), app->amount, app->rule, ""});
    }
  }
  return out;
}

}  // namespace discharge
