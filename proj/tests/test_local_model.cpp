#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discharge/local_model.hpp"
#include "oracle.hpp"

using namespace discharge;

TEST_CASE("consistency constraints") {
  // C1: a 5-face never borders a 3-face
  RingDescriptor r5 = decode_ring("P:4Q4Q4Q4Q4Q");
  CHECK(consistent(r5));
  r5.ftypes[2] = FaceClass::x;
  auto v = consistency_check(r5);
  REQUIRE(v);
  CHECK(v->constraint == 1);
  CHECK(v->position == 2);

  // C2: w needs 6-faces on both sides
  RingDescriptor r = decode_ring("H:wH4Q4Q4Q4Q4H");
  CHECK(consistent(r));
  r.ftypes[0] = FaceClass::Q;
  v = consistency_check(r);
  REQUIRE(v);
  CHECK(v->constraint == 2);
  CHECK(v->position == 0);

  // C3: a 3-vertex beside a 3-face has a 6-face on the other side
  RingDescriptor c3 = decode_ring("H:tHtxtH4Q4Q4Q");
  CHECK(consistent(c3));
  c3.ftypes[0] = FaceClass::Q;  // t at position 1 now flanked (Q, x)
  v = consistency_check(c3);
  REQUIRE(v);
  CHECK(v->constraint == 3);

  // C4: the 3-face beside a t vertex is x-tipped
  RingDescriptor c4 = decode_ring("H:tHtxtH4Q4Q4Q");
  c4.ftypes[1] = FaceClass::t;
  v = consistency_check(c4);
  REQUIRE(v);
  CHECK(v->constraint == 4);

  // C5: the 3-face beside an o vertex is 3-tipped
  RingDescriptor c5 = decode_ring("H:oOoH4Q4Q4Q4H");
  CHECK(consistent(c5));
  c5.ftypes[0] = FaceClass::x;
  v = consistency_check(c5);
  REQUIRE(v);
  CHECK(v->constraint == 5);

  // an all-4-vertex all-4-face ring triggers nothing
  CHECK(consistent(decode_ring("H:4Q4Q4Q4Q4Q4Q")));
}

TEST_CASE("enumerated rings are consistent, canonical, unique and sorted") {
  ConfigSet none;
  std::vector<std::string> seen;
  enumerate_rings(5, none, {}, [&](const RingDescriptor& r) {
    CHECK(consistent(r));
    CHECK(is_canonical(r));
    seen.push_back(encode(r));
  });
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.size() > 1000);
}

TEST_CASE("exclusions remove exactly the matched rings") {
  ConfigSet none;
  ConfigSet excl = ConfigSet::load("P:v*w\n");
  std::set<std::string> without, with;
  enumerate_rings(5, none, {}, [&](const RingDescriptor& r) { without.insert(encode(r)); });
  enumerate_rings(5, excl, {}, [&](const RingDescriptor& r) {
    with.insert(encode(r));
    CHECK_FALSE(excl.matches(r));
  });
  CHECK(with.size() < without.size());
  for (const std::string& s : without) {
    bool matched = excl.matches(decode_ring(s));
    CHECK(with.count(s) == (matched ? 0u : 1u));
  }
}

TEST_CASE("an all-wildcard exclusion empties the stream") {
  ConfigSet all5 = ConfigSet::load("P:\n");
  int n = 0;
  enumerate_rings(5, all5, {}, [&](const RingDescriptor&) { ++n; });
  CHECK(n == 0);
}

TEST_CASE("exclusion monotonicity") {
  ConfigSet a = ConfigSet::load("P:3Q\n");
  ConfigSet b = ConfigSet::load("P:3Q\nP:5P5\nP:v\n");
  std::set<std::string> sa, sb;
  enumerate_rings(5, a, {}, [&](const RingDescriptor& r) { sa.insert(encode(r)); });
  enumerate_rings(5, b, {}, [&](const RingDescriptor& r) { sb.insert(encode(r)); });
  CHECK(sb.size() < sa.size());
  for (const std::string& s : sb) CHECK(sa.count(s) == 1);
}

TEST_CASE("disabling reflection refines the symmetry classes") {
  ConfigSet none;
  EnumOptions base, norefl;
  norefl.reflection = false;
  long long with = 0, without = 0;
  enumerate_rings(5, none, base, [&](const RingDescriptor&) { ++with; });
  enumerate_rings(5, none, norefl, [&](const RingDescriptor& r) {
    ++without;
    CHECK(is_canonical(r, false));
  });
  CHECK(without >= with);
  CHECK(without <= 2 * with);
}

TEST_CASE("root-partitioned enumeration equals the full run") {
  ConfigSet none;
  std::vector<std::string> full, parts;
  enumerate_rings(5, none, {}, [&](const RingDescriptor& r) { full.push_back(encode(r)); });
  for (int root = 0; root < kRingRootCount; ++root)
    enumerate_rings(
        5, none, {}, [&](const RingDescriptor& r) { parts.push_back(encode(r)); }, root);
  CHECK(full == parts);
}

TEST_CASE("triangle context windows are consistent and the count factors") {
  ConfigSet none;
  long long streamed = 0;
  // restrict to a few thousand contexts; check every window
  enumerate_triangle_contexts(
      none, {},
      [&](const TriangleContext& ctx) {
        ++streamed;
        for (int i = 0; i < 3; ++i) CHECK(t_window_consistent(ctx.window(i)));
      },
      5000);
  CHECK(streamed == 5000);
}

TEST_CASE("H:o3o excludes every all-3-vertex triangle context") {
  const ConfigSet& excl = triangle_check_exclusions();
  // for an all-3 core every hexagon window is matched, whatever the outer
  // fields are
  TriangleContext ctx;
  for (int b0 : {3, 4, 5, 6})
    for (int b1 : {3, 4, 5, 6})
      for (int b2 : {3, 4, 5, 6}) {
        ctx.corner = {TriangleCorner{3, b0, 0, {}, {}}, TriangleCorner{3, b1, 0, {}, {}},
                      TriangleCorner{3, b2, 0, {}, {}}};
        CornerSides s0 = expand_corner(ctx.corner[0]);
        CornerSides s1 = expand_corner(ctx.corner[1]);
        for (const SideOption& ns : s0.next)
          for (const SideOption& ps : s1.prev) {
            ctx.f1[0] = ns.face;
            ctx.w1[0] = ns.vert;
            ctx.f3[0] = ps.face;
            ctx.w4[0] = ps.vert;
            CHECK(excl.matches(ctx.partial_hex(0)));
          }
      }
  // without exclusions the same contexts stream out
  ConfigSet none;
  bool found_all3 = false;
  enumerate_triangle_contexts(
      none, {},
      [&](const TriangleContext& c) {
        if (c.corner[0].deg == 3 && c.corner[1].deg == 3 && c.corner[2].deg == 3)
          found_all3 = true;
      },
      100);
  CHECK(found_all3);
}

TEST_CASE("triangle context stream matches the reported count on a slice") {
  // compare the visitor stream against the factored count for restricted
  // exclusions that leave only all-wildcard-free cores cheap to walk
  ConfigSet heavy = ConfigSet::load("H:*\n");  // excludes everything
  long long n = enumerate_triangle_contexts(heavy, {}, [](const TriangleContext&) {});
  CHECK(n == 0);
}

TEST_CASE("every corner-core combination yields consistent windows") {
  // walk one completion per hexagon for every (refined) corner triple, so
  // each derivation branch is exercised at least once
  const std::vector<TriangleCorner> cores = triangle_corner_cores();
  CHECK(cores.size() == 18);
  TriangleContext ctx;
  for (const TriangleCorner& c0 : cores)
    for (const TriangleCorner& c1 : cores)
      for (const TriangleCorner& c2 : cores) {
        ctx.corner = {c0, c1, c2};
        std::array<CornerSides, 3> s = {expand_corner(c0), expand_corner(c1),
                                        expand_corner(c2)};
        for (int i = 0; i < 3; ++i) {
          REQUIRE(!s[i].next.empty());
          REQUIRE(!s[i].prev.empty());
        }
        for (int i = 0; i < 3; ++i) {
          // first and last completions of hexagon i
          for (int pick : {0, 1}) {
            const SideOption& ns = pick ? s[i].next.back() : s[i].next.front();
            const SideOption& ps =
                pick ? s[(i + 1) % 3].prev.back() : s[(i + 1) % 3].prev.front();
            ctx.f1[i] = ns.face;
            ctx.w1[i] = ns.vert;
            ctx.f3[i] = ps.face;
            ctx.w4[i] = ps.vert;
            CHECK(t_window_consistent(ctx.window(i)));
          }
        }
      }
}

TEST_CASE("degree-3 stars: windows consistent, o3o honored, counts match") {
  const ConfigSet& excl = vertex_check_exclusions();
  long long with = enumerate_vertex_stars(excl, {}, [&](const VertexStar& st) {
    int sum = 0;
    for (int i = 0; i < 3; ++i) {
      sum += st.size[i];
      if (st.size[i] >= 5) CHECK(pv_window_consistent(st.window(i), st.size[i] == 5
                                                                        ? RuleKind::P
                                                                        : RuleKind::H));
      if (st.size[i] == 3) {
        CHECK(st.size[st.at(i - 1)] == 6);
        CHECK(st.size[st.at(i + 1)] == 6);
        // no 3-face with three 3-vertices once H:o3o is active
        CHECK((st.nbr_bucket[i] != 3 || st.nbr_bucket[st.at(i + 1)] != 3));
      }
    }
    CHECK(sum >= 15);  // facial degree >= 9
  });
  ConfigSet none;
  long long without = enumerate_vertex_stars(none, {}, [](const VertexStar&) {});
  CHECK(with < without);
  bool has_o3o_star = false;
  enumerate_vertex_stars(none, {}, [&](const VertexStar& st) {
    for (int i = 0; i < 3; ++i)
      if (st.size[i] == 3 && st.nbr_bucket[i] == 3 && st.nbr_bucket[st.at(i + 1)] == 3)
        has_o3o_star = true;
  });
  CHECK(has_o3o_star);
}

TEST_CASE("all-hexagon stars enumerate every neighbor-class combination") {
  ConfigSet none;
  std::set<std::string> seen;
  long long hhh = 0;
  enumerate_vertex_stars(none, {}, [&](const VertexStar& st) {
    if (st.size != std::array<int, 3>{6, 6, 6}) return;
    ++hhh;
    seen.insert(st.str());
  });
  // per neighbor: buckets 3/4/5/6 contribute 4+16+1+1 = 22 class pairs
  CHECK(hhh == 22 * 22 * 22);
  CHECK((long long)seen.size() == hhh);
}

TEST_CASE("no star hosts a 3-face beside a small face") {
  ConfigSet none;
  enumerate_vertex_stars(none, {}, [&](const VertexStar& st) {
    for (int i = 0; i < 3; ++i)
      if (st.size[i] == 3) {
        CHECK(st.size[st.at(i + 1)] == 6);
        CHECK(st.size[st.at(i - 1)] == 6);
      }
  });
}

TEST_CASE("degree profiles") {
  // the production enumerator against a direct triple scan
  for (int d : {5, 6, 7, 12, 20}) {
    std::vector<DegreeProfile> want;
    for (int t = 0; t <= d; ++t)
      for (int q = 0; q + t <= d; ++q)
        if (t <= d - t - q) want.push_back({d, t, q, d - t - q});
    CHECK(enumerate_profiles(d) == want);
  }
  for (const DegreeProfile& p : enumerate_profiles(6)) {
    CHECK(p.t + p.q + p.p == 6);
    CHECK(p.t <= p.p);
  }
  CHECK_THROWS_AS(enumerate_profiles(4), std::invalid_argument);
}
