#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "mapkit/algmap.hpp"
#include "mapkit/common.hpp"
#include "mapkit/gf.hpp"
#include "mapkit/group.hpp"
#include "mapkit/structure.hpp"

using namespace mapkit;

namespace {

Perm cyc(std::initializer_list<std::initializer_list<int>> cycles, int n) {
    std::vector<std::vector<int>> cs;
    for (auto& c : cycles) cs.emplace_back(c);
    return Perm::from_cycles(cs, n);
}

Group sym(int n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    return Group::generated_by(n, {Perm::from_cycles({full}, n), cyc({{0, 1}}, n)});
}

// Tetrahedron as the algebraic map M(S4; t=(0 1), r=(1 2), l=(2 3)).
UnorientedMap tetrahedron() {
    Group g = sym(4);
    return UnorientedMap::algebraic(g, cyc({{0, 1}}, 4), cyc({{1, 2}}, 4), cyc({{2, 3}}, 4));
}

// Flag map of the 3-vertex path: strict but not regular (valences 1,2,1).
UnorientedMap path_map() {
    Perm t = cyc({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 8);
    Perm r = cyc({{0, 1}, {2, 4}, {3, 5}, {6, 7}}, 8);
    Perm l = cyc({{0, 2}, {1, 3}, {4, 6}, {5, 7}}, 8);
    return UnorientedMap::combinatorial(t, r, l);
}

// metacyclic group <x,y | x^m = y^2 = 1, x^y = x^e> on m+2 points
Group metacyclic(int m, int e) {
    std::vector<int> xr(m + 2), yr(m + 2);
    for (int i = 0; i < m; ++i) xr[i] = (i + 1) % m;
    xr[m] = m;
    xr[m + 1] = m + 1;
    for (int i = 0; i < m; ++i) yr[i] = static_cast<int>((static_cast<long long>(e) * i) % m);
    yr[m] = m + 1;
    yr[m + 1] = m;
    return Group::generated_by(m + 2, {Perm(xr), Perm(yr)});
}

} // namespace

TEST_CASE("tetrahedron validates strictly and has the classical invariants") {
    UnorientedMap m = tetrahedron();
    auto rep = validate_unoriented(m, true);
    CHECK(rep.strict_pass);
    CHECK(rep.basic_pass);

    MapInvariants inv = invariants(m);
    CHECK(inv.v == 4);
    CHECK(inv.e == 6);
    CHECK(inv.f == 4);
    CHECK(inv.chi == 2);
    CHECK(inv.orientable);
    REQUIRE(inv.genus.has_value());
    CHECK(*inv.genus == 0);
    CHECK(inv.aut_order == 24);
    CHECK(inv.regular);
    CHECK(inv.semi_edges == 0);

    // <t,r> orbits on the 24 flags: 4 orbits of size 6
    auto perms = m.flag_perms();
    auto vorbs = orbits({perms[0], perms[1]}, 24);
    REQUIRE(vorbs.size() == 4);
    for (const auto& o : vorbs) CHECK(o.size() == 6);
}

TEST_CASE("axiom violations are reported, not thrown") {
    // t * l != l * t
    Perm t = cyc({{0, 1}}, 4);
    Perm l = cyc({{1, 2}}, 4);
    Perm r = cyc({{0, 1}, {2, 3}}, 4);
    UnorientedMap m = UnorientedMap::combinatorial(t, r, l);
    auto rep = validate_unoriented(m, false);
    CHECK_FALSE(rep.commute_tl);
    CHECK_FALSE(rep.basic_pass);
    CHECK(std::find(rep.failures.begin(), rep.failures.end(),
                    "t and l do not commute") != rep.failures.end());
}

TEST_CASE("redundant quotient (l = t) fails strict but passes non-strict") {
    // EM-style data: dihedral group with l = t
    Group d10 = metacyclic(5, 4); // e = -1 mod 5: honest dihedral of order 10
    REQUIRE(d10.order() == 10);
    Perm x = d10.generators()[0], y = d10.generators()[1];
    Perm t = y, r = x * y; // two reflections generating D10
    REQUIRE(t.order() == 2);
    REQUIRE(r.order() == 2);
    UnorientedMap em = UnorientedMap::algebraic(d10, t, r, t);
    auto rep = validate_unoriented(em, true);
    CHECK_FALSE(rep.strict_pass);
    CHECK(rep.basic_pass);
    CHECK(rep.degeneracy.l_equals_t);

    MapInvariants inv = invariants(em);
    CHECK(inv.v == 1);
    CHECK(inv.e == 5);
    CHECK(inv.semi_edges == 5);
    CHECK_FALSE(inv.genus.has_value());
    CHECK(inv.genus_tag == "sphere (redundant)");
}

TEST_CASE("oriented algebraic maps: S7 with a 7-cycle rotation") {
    Group s7 = sym(7);
    Perm r = cyc({{0, 1, 2, 3, 4, 5, 6}}, 7);
    Perm l = cyc({{0, 1}}, 7);
    OrientedMap m = OrientedMap::algebraic(s7, r, l);
    CHECK(m.dart_count() == 5040);
    MapInvariants inv = invariants(m);
    CHECK(inv.v == 720); // |S7 : <r>|
    CHECK(inv.aut_order == 5040);
    CHECK(inv.regular);
    REQUIRE(inv.reflexible.has_value());
    CHECK(*inv.reflexible);
}

TEST_CASE("non-generating elements are rejected") {
    Group s4 = sym(4);
    CHECK_THROWS_AS(OrientedMap::algebraic(s4, cyc({{0, 1, 2}}, 4), cyc({{0, 1}}, 4)),
                    domain_error);
    CHECK_THROWS_AS(
        UnorientedMap::algebraic(s4, cyc({{0, 1}}, 4), cyc({{0, 1}}, 4), cyc({{0, 1}}, 4)),
        domain_error);
}

TEST_CASE("S4 unoriented example: 24 flags, 3 vertices") {
    Group s4 = sym(4);
    // r=(1 3), t=(1 2)(3 4), l=(1 2) written 0-based
    Perm r = cyc({{0, 2}}, 4), t = cyc({{0, 1}, {2, 3}}, 4), l = cyc({{0, 1}}, 4);
    UnorientedMap m = UnorientedMap::algebraic(s4, t, r, l);
    CHECK(m.flag_count() == 24);
    MapInvariants inv = invariants(m);
    CHECK(inv.v == 3);
    CHECK(inv.e == 6);
    CHECK(inv.f == 4);
    CHECK_FALSE(inv.orientable); // even-word subgroup is all of S4
}

TEST_CASE("D(3,2): dipole map on the metacyclic group of order 6") {
    Group g = metacyclic(3, 2);
    REQUIRE(g.order() == 6);
    OrientedMap m = OrientedMap::algebraic(g, g.generators()[0], g.generators()[1]);
    MapInvariants inv = invariants(m);
    CHECK(inv.v == 2);
    CHECK(inv.e == 3);
    CHECK(inv.f == 3);
    CHECK(inv.chi == 2);
    REQUIRE(inv.genus.has_value());
    CHECK(*inv.genus == 0);

    GraphSummary gs = underlying_graph(m);
    CHECK(gs.dipole);
    CHECK(gs.param_m == 3);
    CHECK(gs.vertices == 2);
}

TEST_CASE("automorphism transport and the non-regular path fixture") {
    UnorientedMap p = path_map();
    auto rep = validate_unoriented(p, true);
    CHECK(rep.strict_pass);

    AutCount ac = automorphism_count(p);
    CHECK(ac.count < p.flag_count());
    CHECK_FALSE(ac.regular);

    // brute-force oracle: count permutations of the 8 flags commuting with
    // the monodromy generators
    auto perms = p.flag_perms();
    std::vector<int> base(8);
    std::iota(base.begin(), base.end(), 0);
    std::uint64_t oracle = 0;
    std::vector<int> im = base;
    do {
        Perm cand(im);
        bool commutes = true;
        for (const auto& g : {perms[0], perms[1], perms[2]})
            if (!(cand * g == g * cand)) {
                commutes = false;
                break;
            }
        if (commutes) ++oracle;
    } while (std::next_permutation(im.begin(), im.end()));
    CHECK(ac.count == oracle);
    // identity, the end-to-end mirror, the global side flip, their product
    CHECK(oracle == 4);

    // invariants of the path map: 3 vertices, 2 edges, 1 face, sphere
    MapInvariants inv = invariants(p);
    CHECK(inv.v == 3);
    CHECK(inv.e == 2);
    CHECK(inv.f == 1);
    CHECK(inv.chi == 2);
    CHECK(inv.orientable);
    CHECK_FALSE(inv.regular);
    CHECK(inv.aut_order == 4);
    GraphSummary gs = underlying_graph(p);
    CHECK(gs.degree_sequence == std::vector<std::uint64_t>{1, 1, 2});
    CHECK(gs.simple);
}

TEST_CASE("algebraic maps are regular: transport count equals the group order") {
    UnorientedMap t = tetrahedron();
    AutCount ac = automorphism_count(t);
    CHECK(ac.count == 24);
    CHECK(ac.regular);

    Group g = metacyclic(9, 8);
    OrientedMap m = OrientedMap::algebraic(g, g.generators()[0], g.generators()[1]);
    AutCount oc = automorphism_count(m);
    CHECK(oc.count == 18);
    CHECK(oc.regular);
}

TEST_CASE("reflexibility: graph trick against exhaustive automorphism search") {
    // chiral torus map on Z5 x| Z4 and a handful of reflexible maps
    std::vector<OrientedMap> maps;
    {
        Group f20 = metacyclic(5, 2); // x^y = x^2: y has order 4? no: y^2 maps i -> 4i != i
        // build F20 = <x of order 5, s of order 4 acting by 2> on 5 points + 4-cycle tail
        std::vector<int> xr(9), sr(9);
        for (int i = 0; i < 5; ++i) xr[i] = (i + 1) % 5;
        for (int i = 5; i < 9; ++i) xr[i] = i;
        for (int i = 0; i < 5; ++i) sr[i] = (2 * i) % 5;
        sr[5] = 6; sr[6] = 7; sr[7] = 8; sr[8] = 5;
        Group f20b = Group::generated_by(9, {Perm(xr), Perm(sr)});
        REQUIRE(f20b.order() == 20);
        Perm s = Perm(sr), x = Perm(xr);
        Perm l = s * s * x; // an involution outside <s>
        REQUIRE(l.order() == 2);
        maps.push_back(OrientedMap::algebraic(f20b, s, l));
        (void)f20;
    }
    {
        Group s7 = sym(7);
        maps.push_back(OrientedMap::algebraic(s7, cyc({{0, 1, 2, 3, 4, 5, 6}}, 7),
                                              cyc({{0, 1}}, 7)));
    }
    {
        Group g = metacyclic(7, 6);
        maps.push_back(OrientedMap::algebraic(g, g.generators()[0], g.generators()[1]));
    }

    for (const auto& m : maps) {
        bool quick = is_reflexible(m);
        const auto& a = m.algebraic_form();
        if (a.group.order() > 200) continue; // oracle below needs Aut(G)
        bool oracle = false;
        const auto& elems = a.group.elements();
        int ri = a.group.element_index(a.r), li = a.group.element_index(a.l);
        int rinv = a.group.element_index(a.r.inverse());
        for (const auto& amap : automorphisms(a.group).maps)
            if (amap[ri] == rinv && amap[li] == li) {
                oracle = true;
                break;
            }
        CHECK(quick == oracle);
        (void)elems;
    }

    // the F20 torus map is chiral, the S7 and dipole maps are reflexible
    CHECK_FALSE(is_reflexible(maps[0]));
    CHECK(is_reflexible(maps[1]));
    CHECK(is_reflexible(maps[2]));
}

TEST_CASE("underlying graph of semistars") {
    // DM(5)-style degenerate map: l = identity on D10
    Group d10 = metacyclic(5, 4);
    Perm x = d10.generators()[0], y = d10.generators()[1];
    UnorientedMap dm = UnorientedMap::algebraic(d10, y, x * y, Perm(7));
    GraphSummary gs = underlying_graph(dm);
    CHECK(gs.vertices == 1);
    CHECK(gs.semistar);
    CHECK(gs.param_m == 5);
    MapInvariants inv = invariants(dm);
    CHECK(inv.genus_tag == "disc (boundary)");
    CHECK(inv.chi == 1); // 1 - 5 + 5
}

TEST_CASE("quotient maps") {
    Group s4 = sym(4);
    UnorientedMap m = tetrahedron();

    // trivial quotient: an isomorphic copy
    UnorientedMap same = quotient_map(m, Group::trivial(4));
    MapInvariants a = invariants(m), b = invariants(same);
    CHECK(a.v == b.v);
    CHECK(a.e == b.e);
    CHECK(a.f == b.f);
    CHECK(a.orientable == b.orientable);

    // quotient by V4: S4/V4 = S3 acting on 6 flags
    Group v4 = normal_closure(s4, {cyc({{0, 1}, {2, 3}}, 4)});
    UnorientedMap q = quotient_map(m, v4);
    CHECK(q.flag_count() == 6);
    CHECK(q.has_algebraic());

    // non-normal subgroup is rejected
    Group syl3 = subgroup(s4, {cyc({{0, 1, 2}}, 4)});
    CHECK_THROWS_AS(quotient_map(m, syl3), domain_error);
}

TEST_CASE("quotients compose over nested normal subgroups") {
    // D8 x Z2-free example: use the S4 map and its chief series V4 < A4
    Group s4 = sym(4);
    UnorientedMap m = tetrahedron();
    Group v4 = normal_closure(s4, {cyc({{0, 1}, {2, 3}}, 4)});
    Group a4 = normal_closure(s4, {cyc({{0, 1, 2}}, 4)});

    UnorientedMap q1 = quotient_map(m, v4);
    // image of A4 in the quotient: generated by projected generators
    Quotient quo(s4, v4);
    std::vector<Perm> proj;
    for (const auto& g : a4.generators()) proj.push_back(quo.project(g));
    Group a4bar = Group::generated_by(q1.flag_count(), proj);
    UnorientedMap q2 = quotient_map(q1, a4bar);

    UnorientedMap direct = quotient_map(m, a4);
    MapInvariants x = invariants(q2), y = invariants(direct);
    CHECK(x.v == y.v);
    CHECK(x.e == y.e);
    CHECK(x.f == y.f);
    CHECK(q2.flag_count() == direct.flag_count());
}

TEST_CASE("strict map identities over an assortment of maps") {
    std::vector<UnorientedMap> maps = {tetrahedron(), path_map()};
    for (const auto& m : maps) {
        auto rep = validate_unoriented(m, true);
        if (!rep.strict_pass) continue;
        MapInvariants inv = invariants(m);
        CHECK(inv.chi == static_cast<std::int64_t>(inv.v) - static_cast<std::int64_t>(inv.e) +
                             static_cast<std::int64_t>(inv.f));
        if (inv.semi_edges == 0) CHECK(m.flag_count() == 4 * inv.e);
        // even-word subgroup has index 1 or 2
        auto perms = m.flag_perms();
        std::uint64_t mon = generated_order(perms[0].degree(), {perms[0], perms[1], perms[2]});
        std::uint64_t even = generated_order(
            perms[0].degree(), {perms[0] * perms[1], perms[1] * perms[2]});
        CHECK((mon == even || mon == 2 * even));
        if (inv.orientable) {
            // the even-word subgroup's two flag orbits are swapped by t
            auto horbs = orbits({perms[0] * perms[1], perms[1] * perms[2]},
                                perms[0].degree());
            REQUIRE(horbs.size() == 2);
            int image = perms[0](horbs[0][0]);
            CHECK(std::binary_search(horbs[1].begin(), horbs[1].end(), image));
        }
    }
}

TEST_CASE("oriented invariants: dart identities") {
    Group g = metacyclic(9, 8);
    OrientedMap m = OrientedMap::algebraic(g, g.generators()[0], g.generators()[1]);
    MapInvariants inv = invariants(m);
    CHECK(m.dart_count() == 2 * inv.e);
    CHECK(inv.chi % 2 == 0);
}
