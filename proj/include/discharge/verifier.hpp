#pragma once

// Exact charge accounting on enumerated descriptors and the three lemma
// checks:
//   verify_faces      every 5-/6-face sends out net at most d-4 units
//   verify_triangles  every admissible 3-face receives at least one unit
//   verify_vertices   3-vertices receive >= 1 unit; >=5-vertices keep their
//                     outflow within the initial charge, checked both from
//                     the exact rule amounts and via the closed-form bound
//
// All arithmetic is in 1/60 units.  Reports are deterministic: identical
// inputs give identical reports, independent of the worker count.

#include <atomic>
#include <map>
#include <thread>

#include "discharge/local_model.hpp"

namespace discharge {

inline constexpr const char* kConstraintSetVersion = "C1-C6/1";

struct ChargeBreakdown {
  std::string element;
  std::vector<Transfer> inflows;   // credited to element
  std::vector<Transfer> outflows;  // debited from element
  Charge net() const {             // inflow minus outflow
    Charge n = 0;
    for (const Transfer& t : inflows) n += t.amount;
    for (const Transfer& t : outflows) n -= t.amount;
    return n;
  }
};

// Net flow of the described face of a ring; outflow includes u/w relays and,
// for 6-rings, the T-rule payments to adjacent 3-faces.
inline ChargeBreakdown net_charge_of_face(const RuleMatcher& m, const RingDescriptor& ring) {
  ChargeBreakdown b;
  b.element = "f";
  for (Transfer& t : apply_rules(m, ring)) {
    if (t.payer == "f")
      b.outflows.push_back(std::move(t));
    else
      b.inflows.push_back(std::move(t));
  }
  return b;
}

struct Violation {
  std::string descriptor;
  Charge quantity;  // the bounded quantity (net outflow resp. total inflow)
  Charge bound;
  std::vector<Transfer> transfers;
};

struct VerificationReport {
  std::string lemma;
  Semantics semantics = Semantics::Inclusive4;
  bool reflection = true;
  int dmax = 0;  // vertices only
  std::string rules_hash;
  std::string configs_hash;
  int config_count = 0;
  long long checked = 0;
  long long violation_count = 0;
  std::vector<Violation> violations;  // at most max_violations entries
  long long max_violations = 1000;
  double elapsed_seconds = 0;  // diagnostics only, never serialized

  bool ok() const { return violation_count == 0; }
};

struct VerifyOptions {
  Semantics semantics = Semantics::Inclusive4;
  bool reflection = true;
  int jobs = 1;
  long long max_violations = 1000;
  int dmax = 20;
};

namespace detail {

inline void fill_common(VerificationReport& rep, const RuleTable& table,
                        const ConfigSet& configs, const VerifyOptions& opt) {
  rep.semantics = opt.semantics;
  rep.reflection = opt.reflection;
  rep.rules_hash = table.content_hash();
  rep.configs_hash = configs.content_hash();
  rep.config_count = configs.post_closure_count();
  rep.max_violations = opt.max_violations;
}

}  // namespace detail

// --- Face outflow ------------------------------------------------------------

inline VerificationReport verify_faces(int d, const RuleTable& table,
                                       const ConfigSet& configs,
                                       const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.lemma = d == 5 ? "faces-5" : "faces-6";
  detail::fill_common(rep, table, configs, opt);
  const RuleMatcher matcher(table, opt.semantics, opt.reflection);
  const EnumOptions eopt{opt.semantics, opt.reflection};
  const Charge bound = initial_charge(d);

  struct Part {
    long long checked = 0;
    std::vector<Violation> violations;
    long long violation_count = 0;
  };
  std::vector<Part> parts(kRingRootCount);
  auto run_root = [&](int root) {
    Part& part = parts[root];
    enumerate_rings(
        d, configs, eopt,
        [&](const RingDescriptor& ring) {
          ++part.checked;
          ChargeBreakdown b = net_charge_of_face(matcher, ring);
          Charge net_out = -b.net();
          if (net_out <= bound) return;
          ++part.violation_count;
          if (part.violation_count <= opt.max_violations) {
            Violation v{encode(ring), net_out, bound, {}};
            v.transfers = b.outflows;
            v.transfers.insert(v.transfers.end(), b.inflows.begin(), b.inflows.end());
            part.violations.push_back(std::move(v));
          }
        },
        root);
  };

  if (opt.jobs <= 1) {
    for (int root = 0; root < kRingRootCount; ++root) run_root(root);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < opt.jobs; ++j)
      pool.emplace_back([&] {
        for (int root = next.fetch_add(1); root < kRingRootCount;
             root = next.fetch_add(1))
          run_root(root);
      });
    for (std::thread& th : pool) th.join();
  }
  for (Part& part : parts) {
    rep.checked += part.checked;
    rep.violation_count += part.violation_count;
    for (Violation& v : part.violations)
      if ((long long)rep.violations.size() < opt.max_violations)
        rep.violations.push_back(std::move(v));
  }
  return rep;
}

// --- Triangle inflow ---------------------------------------------------------

// Amount a u/w vertex relays to its triangle when its opposite face is a
// 5-/6-face.  Determined by probing every consistent window with that
// receiver: the context never pins the opposite face's other fields, so the
// amount must not depend on them.
inline Charge relay_amount(const RuleMatcher& m, RuleKind host, VertexClass rcv) {
  bool seen = false;
  Charge amount = 0;
  for (int ix = 0; ix < PvWindow::kCount; ++ix) {
    PvWindow w = PvWindow::from_index(ix);
    if (w.rcv != rcv || !pv_window_consistent(w, host)) continue;
    Charge a = m.amount(host, w);
    if (!seen) {
      amount = a;
      seen = true;
    } else if (a != amount) {
      throw std::runtime_error(
          "relay amount for receiver class depends on window fields; "
          "triangle verification needs a constant relay rule");
    }
  }
  return seen ? amount : 0;
}

inline VerificationReport verify_triangles(const RuleTable& table,
                                           const ConfigSet& exclusions,
                                           const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.lemma = "triangles";
  detail::fill_common(rep, table, exclusions, opt);
  const RuleMatcher matcher(table, opt.semantics, opt.reflection);
  const Charge bound = 60;  // receives at least one unit

  Charge relay[2][8] = {};  // [P,H] x receiver class
  for (VertexClass c : {VertexClass::u, VertexClass::w, VertexClass::v}) {
    relay[0][int(c)] = relay_amount(matcher, RuleKind::P, c);
    relay[1][int(c)] = relay_amount(matcher, RuleKind::H, c);
  }

  // window -> (payment, excluded), memoized across cores
  std::vector<std::int8_t> excl_memo(TWindow::kCount, -1);
  auto window_excluded = [&](const TriangleContext& ctx, int i) {
    int ix = ctx.window(i).index();
    std::int8_t& cell = excl_memo[ix];
    if (cell < 0)
      cell = exclusions.matches(ctx.partial_hex(i), opt.semantics, opt.reflection) ? 1 : 0;
    return cell == 1;
  };

  struct Completion {
    SideOption next, prev;
    Charge pay;
  };

  const std::vector<TriangleCorner> cores = triangle_corner_cores();
  TriangleContext ctx;
  std::array<std::vector<Completion>, 3> comps;
  for (const TriangleCorner& c0 : cores)
    for (const TriangleCorner& c1 : cores)
      for (const TriangleCorner& c2 : cores) {
        ctx.corner = {c0, c1, c2};
        Charge relays = 0;
        for (int i = 0; i < 3; ++i) {
          const TriangleCorner& c = ctx.corner[i];
          if (c.deg != 4 || (c.opp_size != 5 && c.opp_size != 6)) continue;
          relays += relay[c.opp_size == 5 ? 0 : 1][int(ctx.relay_class(i))];
        }
        std::array<CornerSides, 3> sides = {expand_corner(c0), expand_corner(c1),
                                            expand_corner(c2)};
        bool any_empty = false;
        for (int i = 0; i < 3 && !any_empty; ++i) {
          comps[i].clear();
          for (const SideOption& ns : sides[i].next)
            for (const SideOption& ps : sides[(i + 1) % 3].prev) {
              ctx.f1[i] = ns.face;
              ctx.w1[i] = ns.vert;
              ctx.f3[i] = ps.face;
              ctx.w4[i] = ps.vert;
              if (window_excluded(ctx, i)) continue;
              comps[i].push_back({ns, ps, matcher.amount(ctx.window(i))});
            }
          any_empty = comps[i].empty();
        }
        if (any_empty) continue;
        rep.checked += (long long)comps[0].size() * comps[1].size() * comps[2].size();

        // distinct payment histograms make the under-60 count exact without
        // walking the full product space
        std::array<std::map<Charge, long long>, 3> hist;
        for (int i = 0; i < 3; ++i)
          for (const Completion& c : comps[i]) ++hist[i][c.pay];
        Charge need = bound - relays;
        long long bad = 0;
        for (auto& [a, na] : hist[0])
          for (auto& [b, nb] : hist[1]) {
            if (a + b >= need) continue;  // payments are non-negative
            for (auto& [c, nc] : hist[2]) {
              if (a + b + c < need) bad += na * nb * nc;
            }
          }
        if (bad == 0) continue;
        rep.violation_count += bad;
        if ((long long)rep.violations.size() >= opt.max_violations) continue;
        for (const Completion& m0 : comps[0]) {
          for (const Completion& m1 : comps[1]) {
            if (m0.pay + m1.pay >= need) continue;
            for (const Completion& m2 : comps[2]) {
              if (m0.pay + m1.pay + m2.pay >= need) continue;
              if ((long long)rep.violations.size() >= opt.max_violations) goto done;
              ctx.f1[0] = m0.next.face; ctx.w1[0] = m0.next.vert;
              ctx.f3[0] = m0.prev.face; ctx.w4[0] = m0.prev.vert;
              ctx.f1[1] = m1.next.face; ctx.w1[1] = m1.next.vert;
              ctx.f3[1] = m1.prev.face; ctx.w4[1] = m1.prev.vert;
              ctx.f1[2] = m2.next.face; ctx.w1[2] = m2.next.vert;
              ctx.f3[2] = m2.prev.face; ctx.w4[2] = m2.prev.vert;
              Violation v{ctx.str(), m0.pay + m1.pay + m2.pay + relays, bound, {}};
              for (int i = 0; i < 3; ++i) {
                auto rule = matcher.match(ctx.window(i));
                if (rule)
                  v.transfers.push_back({"h" + std::to_string(i), "T",
                                         (*rule)->amount, *rule, ""});
              }
              for (int i = 0; i < 3; ++i) {
                const TriangleCorner& c = ctx.corner[i];
                if (c.deg != 4 || (c.opp_size != 5 && c.opp_size != 6)) continue;
                Charge amt = relay[c.opp_size == 5 ? 0 : 1][int(ctx.relay_class(i))];
                if (amt != 0)
                  v.transfers.push_back({"g" + std::to_string(i), "T", amt, nullptr,
                                         "v" + std::to_string(i)});
              }
              rep.violations.push_back(std::move(v));
            }
          }
        }
      done:;
      }
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.descriptor < b.descriptor;
            });
  return rep;
}

// --- Vertex charges ----------------------------------------------------------

namespace detail {

// Worst-case outflow of a d-vertex over all cyclic face-size arrangements of
// a profile, with every >=5-face free to be a 5- or 6-face and every 3-face
// flanked by 6-faces.  Per-slot amounts come from the table's negative
// rules; outer window vertices never matter there.
class WorstOutflow {
 public:
  static constexpr Charge kNone = -1000000;

  WorstOutflow(const RuleMatcher& m, int d) : matcher_(&m), d_(d) {
    center_ = d == 5 ? VertexClass::p5 : VertexClass::p6;
    for (int k1 = 0; k1 < 4; ++k1)
      for (int slot = 0; slot < 4; ++slot)
        for (int k2 = 0; k2 < 4; ++k2) send_[k1][slot][k2] = slot_send(k1, slot, k2);
  }

  // maximum total outflow for profile (t, q, p), or nullopt when no cyclic
  // arrangement satisfies the flanking constraints
  std::optional<Charge> max_outflow(int t, int q, int p) const {
    if (t + q + p != d_) return std::nullopt;
    // kinds: 0 = 3-face, 1 = 4-face, 2 = 5-face, 3 = 6-face
    std::optional<Charge> best;
    std::vector<Charge> dp, ndp;
    auto at = [&](std::vector<Charge>& v, int tu, int qu, int p2, int p1) -> Charge& {
      return v[((tu * (q + 1) + qu) * 4 + p2) * 4 + p1];
    };
    const std::size_t states = std::size_t(t + 1) * (q + 1) * 16;
    for (int first = 0; first < 4; ++first) {
      for (int second = 0; second < 4; ++second) {
        int tu = (first == 0) + (second == 0);
        int qu = (first == 1) + (second == 1);
        if (tu > t || qu > q || count_p(first) + count_p(second) > p) continue;
        dp.assign(states, kNone);
        at(dp, tu, qu, first, second) = 0;
        for (int pos = 2; pos < d_; ++pos) {
          ndp.assign(states, kNone);
          for (int ktu = 0; ktu <= t; ++ktu)
            for (int kqu = 0; kqu <= q; ++kqu)
              for (int p2 = 0; p2 < 4; ++p2)
                for (int p1 = 0; p1 < 4; ++p1) {
                  Charge cur = at(dp, ktu, kqu, p2, p1);
                  if (cur == kNone) continue;
                  for (int k = 0; k < 4; ++k) {
                    int ntu = ktu + (k == 0), nqu = kqu + (k == 1);
                    if (ntu > t || nqu > q) continue;
                    if (pos + 1 - ntu - nqu > p) continue;
                    Charge s = send_[p2][p1][k];  // slot pos-1 now has both flanks
                    if (s == kNone) continue;
                    Charge& cell = at(ndp, ntu, nqu, p1, k);
                    cell = std::max(cell, cur + s);
                  }
                }
          dp.swap(ndp);
        }
        for (int p2 = 0; p2 < 4; ++p2)
          for (int p1 = 0; p1 < 4; ++p1) {
            Charge cur = at(dp, t, q, p2, p1);
            if (cur == kNone) continue;
            Charge wrap1 = send_[p2][p1][first];   // last slot
            Charge wrap2 = send_[p1][first][second];  // first slot
            if (wrap1 == kNone || wrap2 == kNone) continue;
            Charge total = cur + wrap1 + wrap2;
            if (!best || total > *best) best = total;
          }
      }
    }
    return best;
  }

 private:
  static int count_p(int kind) { return kind >= 2 ? 1 : 0; }

  static FaceClass flank_class(int kind) {
    switch (kind) {
      case 0: return FaceClass::x;  // tip class never matters to these rules
      case 1: return FaceClass::Q;
      case 2: return FaceClass::P;
      default: return FaceClass::H;
    }
  }

  // outflow through the middle slot given its cyclic neighbors
  Charge slot_send(int k1, int slot, int k2) const {
    if (slot == 0 && (k1 != 3 || k2 != 3)) return kNone;  // 3-face needs 6-flanks
    if (k1 == 0 && slot != 3) return kNone;
    if (k2 == 0 && slot != 3) return kNone;
    if (slot < 2) return 0;  // 3-/4-faces receive no vertex charge
    PvWindow w{VertexClass::p4, center_, VertexClass::p4, flank_class(k1),
               flank_class(k2)};
    Charge a = matcher_->amount(slot == 2 ? RuleKind::P : RuleKind::H, w);
    return a > 0 ? 0 : -a;  // positive amounts would be inflow, not outflow
  }

  const RuleMatcher* matcher_;
  int d_;
  VertexClass center_;
  Charge send_[4][4][4];
};

}  // namespace detail

// (a) every degree-3 star receives >= 60 from its >=5-faces; (b)/(c) the
// worst-case outflow of every d-vertex profile, computed from the actual
// rule amounts, stays within 60*(d-4) (within 60 for d = 5); (d) the
// closed-form bound 28t+12q+12p <= 60(d-4) holds for all profiles with
// t <= p up to dmax.
inline VerificationReport verify_vertices(const RuleTable& table,
                                          const ConfigSet& exclusions,
                                          const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.lemma = "vertices";
  rep.dmax = opt.dmax;
  detail::fill_common(rep, table, exclusions, opt);
  const RuleMatcher matcher(table, opt.semantics, opt.reflection);
  const EnumOptions eopt{opt.semantics, opt.reflection};

  auto add_violation = [&](Violation v) {
    ++rep.violation_count;
    if ((long long)rep.violations.size() < opt.max_violations)
      rep.violations.push_back(std::move(v));
  };

  // (a) degree-3 stars
  rep.checked += enumerate_vertex_stars(exclusions, eopt, [&](const VertexStar& st) {
    Charge inflow = 0;
    std::vector<Transfer> transfers;
    for (int i = 0; i < 3; ++i) {
      if (st.size[i] < 5) continue;
      PvWindow w = st.window(i);
      auto rule = matcher.match(st.size[i] == 5 ? RuleKind::P : RuleKind::H, w);
      if (!rule) continue;
      Charge a = (*rule)->amount;
      if (a > 0) {
        inflow += a;
        transfers.push_back({"f" + std::to_string(i), "v", a, *rule, ""});
      }
    }
    if (inflow < 60)
      add_violation({st.str(), inflow, 60, std::move(transfers)});
  });

  // (b) d = 5 and (c) 6 <= d <= dmax: per-profile exact worst case
  for (int d = 5; d <= opt.dmax; ++d) {
    detail::WorstOutflow wo(matcher, d);
    Charge bound = d == 5 ? 60 : initial_charge(d);
    for (const DegreeProfile& pr : enumerate_profiles(d)) {
      ++rep.checked;
      std::optional<Charge> worst = wo.max_outflow(pr.t, pr.q, pr.p);
      if (!worst) continue;  // no cyclic arrangement realizes this profile
      if (*worst > bound)
        add_violation({"profile(d=" + std::to_string(d) + ",t=" + std::to_string(pr.t) +
                           ",q=" + std::to_string(pr.q) + ",p=" + std::to_string(pr.p) +
                           ")",
                       *worst, bound, {}});
    }
  }

  // (d) the closed-form per-profile bound
  for (int d = 5; d <= opt.dmax; ++d) {
    for (const DegreeProfile& pr : enumerate_profiles(d)) {
      ++rep.checked;
      Charge formula = d == 5 ? 12 * (pr.t + pr.q + pr.p)
                              : 28 * pr.t + 12 * pr.q + 12 * pr.p;
      Charge bound = d == 5 ? 60 : initial_charge(d);
      if (formula > bound)
        add_violation({"formula(d=" + std::to_string(d) + ",t=" + std::to_string(pr.t) +
                           ",q=" + std::to_string(pr.q) + ",p=" + std::to_string(pr.p) +
                           ")",
                       formula, bound, {}});
    }
  }
  return rep;
}

// --- Explain -----------------------------------------------------------------

struct Explanation {
  RingDescriptor ring;
  std::optional<ConsistencyViolation> inconsistency;
  ChargeBreakdown breakdown;
  std::vector<std::string> matched_configs;
};

inline Explanation explain(std::string_view descriptor, const RuleTable& table,
                           const ConfigSet& configs, const VerifyOptions& opt = {}) {
  Explanation ex;
  ex.ring = decode_ring(descriptor);
  ex.inconsistency = consistency_check(ex.ring);
  const RuleMatcher matcher(table, opt.semantics, opt.reflection);
  ex.breakdown = net_charge_of_face(matcher, ex.ring);
  for (const FacePattern* p : configs.matching(ex.ring, opt.semantics, opt.reflection))
    ex.matched_configs.push_back(p->str());
  return ex;
}

}  // namespace discharge
