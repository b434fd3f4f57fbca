#pragma once

// Reducible-configuration sets.  A configuration is a P/H pattern that
// cannot occur in a minimal counterexample; the enumerators skip every
// descriptor matched by one.  Sets are closed under the u/v/w substitution
// rule and deduplicated up to rotation and reflection.
//
// Only the configurations stated in prose ship with the engine (provenance
// "paper-text").  The remaining figure-only configurations of the full
// 193-entry set must be transcribed by the user; load() with
// assert_complete checks the pre-closure count.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "discharge/pattern.hpp"
#include "discharge/rules_data.hpp"

namespace discharge {

struct ConfigEntry {
  FacePattern pattern;
  std::string provenance;  // paper-text | paper-figure-transcription | user
};

struct ConfigLoadError : std::runtime_error {
  ConfigLoadError(const std::string& what, int line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

inline constexpr int kCompleteConfigCount = 193;

class ConfigSet {
 public:
  ConfigSet() = default;

  static ConfigSet load(std::string_view text, bool assert_complete = false);

  // Exact repetitions (up to rotation/reflection) are rejected; a pattern
  // that is new itself but already implied by another entry's u/v/w closure
  // only warns.
  void add(const FacePattern& p, const std::string& provenance) {
    std::string raw = pattern_canonical(p);
    if (!entry_canonical_.insert(raw).second)
      throw std::invalid_argument("duplicate configuration (up to symmetry): " + p.str());
    entries_.push_back({p, provenance});
    for (const FacePattern& var : closure_expand(p)) {
      std::string canon = pattern_canonical(var);
      if (!canonical_.insert(canon).second) {
        if (var == p)
          warnings_.push_back("configuration already implied by closure: " + p.str());
        continue;
      }
      expanded_.push_back(var);
      // rotations first, reflected images after, so rotation-only matching
      // can stop at pattern.size images
      images_.push_back(pattern_images(var, true));
    }
  }

  const std::vector<ConfigEntry>& entries() const { return entries_; }
  const std::vector<FacePattern>& expanded() const { return expanded_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  int pre_closure_count() const { return int(entries_.size()); }
  int post_closure_count() const { return int(expanded_.size()); }
  bool empty() const { return expanded_.empty(); }

  bool matches(const RingDescriptor& ring, Semantics sem = Semantics::Inclusive4,
               bool reflection = true) const {
    for (std::size_t i = 0; i < expanded_.size(); ++i)
      if (matches_one(i, ring, sem, reflection)) return true;
    return false;
  }
  // Definite match on a partially known ring: true only when every
  // completion is matched.
  bool matches(const PartialRing& ring, Semantics sem = Semantics::Inclusive4,
               bool reflection = true) const {
    for (std::size_t i = 0; i < expanded_.size(); ++i) {
      if (expanded_[i].size != ring.size) continue;
      std::size_t n = reflection ? images_[i].size() : images_[i].size() / 2;
      for (std::size_t k = 0; k < n; ++k)
        if (matches_at(images_[i][k], ring, sem)) return true;
    }
    return false;
  }
  std::vector<const FacePattern*> matching(const RingDescriptor& ring,
                                           Semantics sem = Semantics::Inclusive4,
                                           bool reflection = true) const {
    std::vector<const FacePattern*> out;
    for (std::size_t i = 0; i < expanded_.size(); ++i)
      if (matches_one(i, ring, sem, reflection)) out.push_back(&expanded_[i]);
    return out;
  }

  // Canonical file form: one pattern per line with a provenance comment.
  std::string serialize() const {
    std::string out;
    for (const ConfigEntry& e : entries_) {
      out += e.pattern.str();
      out += "  # ";
      out += e.provenance;
      out.push_back('\n');
    }
    return out;
  }

  std::string content_hash() const { return hex64(fnv1a64(serialize())); }

 private:
  bool matches_one(std::size_t i, const RingDescriptor& ring, Semantics sem,
                   bool reflection) const {
    const FacePattern& p = expanded_[i];
    if (p.size != ring.size) return false;
    std::size_t n = reflection ? images_[i].size() : images_[i].size() / 2;
    for (std::size_t k = 0; k < n; ++k) {
      const FacePattern& img = images_[i][k];
      bool ok = true;
      for (int s = 0; s < ring.size && ok; ++s)
        ok = char_matches(img.vchar[s], ring.vtypes[s], sem) &&
             char_matches(img.fchar[s], ring.ftypes[s]);
      if (ok) return true;
    }
    return false;
  }

  std::vector<ConfigEntry> entries_;
  std::vector<FacePattern> expanded_;
  std::vector<std::vector<FacePattern>> images_;  // parallel to expanded_
  std::set<std::string> entry_canonical_;
  std::set<std::string> canonical_;
  std::vector<std::string> warnings_;
};

inline ConfigSet ConfigSet::load(std::string_view text, bool assert_complete) {
  ConfigSet set;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string provenance = "user";
    if (std::size_t h = line.find('#'); h != std::string_view::npos) {
      std::string_view comment = line.substr(h + 1);
      line = line.substr(0, h);
      while (!comment.empty() && comment.front() == ' ') comment.remove_prefix(1);
      while (!comment.empty() && (comment.back() == ' ' || comment.back() == '\r'))
        comment.remove_suffix(1);
      if (comment == "paper-text" || comment == "paper-figure-transcription")
        provenance = std::string(comment);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      ParsedPattern p = parse_pattern(line);
      if (!std::holds_alternative<FacePattern>(p))
        throw ConfigLoadError("configurations must be P: or H: patterns", lineno);
      set.add(std::get<FacePattern>(p), provenance);
    } catch (const ParseError& e) {
      throw ConfigLoadError(e.what(), lineno);
    } catch (const std::invalid_argument& e) {
      throw ConfigLoadError(e.what(), lineno);
    }
  }
  if (assert_complete && set.pre_closure_count() != kCompleteConfigCount)
    throw ConfigLoadError("completeness asserted but file lists " +
                              std::to_string(set.pre_closure_count()) + " of " +
                              std::to_string(kCompleteConfigCount) + " configurations",
                          lineno);
  return set;
}

inline const ConfigSet& embedded_configs() {
  static const ConfigSet set = ConfigSet::load(kEmbeddedConfigsText);
  return set;
}

// Hypothesis of the 3-face lemma: the graph avoids these three patterns.
inline const ConfigSet& triangle_check_exclusions() {
  static const ConfigSet set = ConfigSet::load("H:o3o\nH:3T4T\nH:o34Q\n");
  return set;
}

// Hypothesis of the vertex lemma: no 3-face with three 3-vertices.
inline const ConfigSet& vertex_check_exclusions() {
  static const ConfigSet set = ConfigSet::load("H:o3o\n");
  return set;
}

struct ConfigDiff {
  std::vector<std::string> added;    // canonical forms in b, not in a
  std::vector<std::string> removed;  // canonical forms in a, not in b
};

// Symmetric difference on canonical forms after closure, so adding an
// implied variant (e.g. P:u* when P:v* is present) reports no change.
inline ConfigDiff diff_configs(const ConfigSet& a, const ConfigSet& b) {
  std::set<std::string> ca, cb;
  for (const FacePattern& p : a.expanded()) ca.insert(pattern_canonical(p));
  for (const FacePattern& p : b.expanded()) cb.insert(pattern_canonical(p));
  ConfigDiff d;
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(),
                      std::back_inserter(d.added));
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(),
                      std::back_inserter(d.removed));
  return d;
}

}  // namespace discharge
