#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

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

Group s4() { return sym(4); }

Group a4() { return Group::generated_by(4, {cyc({{0, 1, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)}); }

Group dihedral(int m) {
    std::vector<int> rot(m);
    for (int i = 0; i < m; ++i) rot[i] = (i + 1) % m;
    std::vector<int> ref(m);
    for (int i = 0; i < m; ++i) ref[i] = (m - i) % m;
    return Group::generated_by(m, {Perm(rot), Perm(ref)});
}

std::multiset<std::string> tag_multiset(const std::vector<RecognitionTag>& tags) {
    std::multiset<std::string> out;
    for (const auto& t : tags) out.insert(t.to_string());
    return out;
}

} // namespace

TEST_CASE("factorization and pi sets") {
    CHECK(pi_of(24) == PiSet{2, 3});
    CHECK(pi_of(1).empty());
    CHECK(pi_of(21) == PiSet{3, 7});
    CHECK_THROWS_AS(pi_of(0), domain_error);
    CHECK(pi_part(168, {2, 3}) == 24);
    CHECK(is_pi_number(72, {2, 3}));
    CHECK_FALSE(is_pi_number(70, {2, 3}));
    CHECK(pi_to_string({2, 3}) == "{2,3}");
    CHECK(pi_to_string({}) == "{}");
}

TEST_CASE("solvability") {
    CHECK(is_solvable(s4()));
    auto series = derived_series(s4());
    REQUIRE(series.size() == 4); // S4 > A4 > V4 > 1
    CHECK(series[1].order() == 12);
    CHECK(series[2].order() == 4);
    CHECK(series[3].order() == 1);

    CHECK_FALSE(is_solvable(psl2(7)));

    Group s7 = sym(7);
    CHECK_FALSE(is_solvable(s7));
    auto s7s = derived_series(s7);
    CHECK(s7s.back().order() == 2520); // stabilizes at A7
}

TEST_CASE("sylow subgroups") {
    Group syl2 = sylow(s4(), 2);
    CHECK(syl2.order() == 8);
    CHECK(recognize(syl2).kind == RecognitionTag::Kind::dihedral);

    CHECK(sylow(s4(), 5).order() == 1);

    Group g = psl2(7);
    REQUIRE(g.order() == 168);
    CHECK(sylow(g, 7).order() == 7);
    CHECK(sylow(g, 2).order() == 8);
}

TEST_CASE("pi cores") {
    CHECK(pi_core(s4(), {2}).order() == 4); // the Klein subgroup
    CHECK(pi_core(s4(), {2, 3}).order() == 24);
    // rotation subgroup of an odd dihedral group
    Group d30 = dihedral(15);
    REQUIRE(d30.order() == 30);
    CHECK(pi_core(d30, {3, 5}).order() == 15);
    CHECK(p_core(s4(), 3).order() == 1);
}

TEST_CASE("fitting subgroup") {
    CHECK(fitting(s4()).order() == 4);
    Group z12 = Group::generated_by(7, {cyc({{0, 1, 2, 3}, {4, 5, 6}}, 7)});
    CHECK(fitting(z12).order() == 12); // abelian group is its own Fitting subgroup
    Group s3 = sym(3);
    CHECK(fitting(s3).order() == 3);
}

TEST_CASE("fitting subgroup is nilpotent and self-centralizing for solvable groups") {
    for (const Group& g : {s4(), dihedral(6), dihedral(15), a4()}) {
        Group f = fitting(g);
        CHECK(is_normal(g, f));
        for (auto p : pi_of(f.order())) CHECK(is_normal(f, sylow(f, p)));
        if (f.order() > 1) {
            Group c = centralizer(g, f.generators());
            for (const auto& x : c.generators()) CHECK(f.contains(x)); // C_G(F) <= F
        }
    }
}

TEST_CASE("hall subgroups, solvable route") {
    auto h3 = hall(s4(), {3});
    REQUIRE(h3.status == HallResult::Status::found);
    CHECK(h3.subgroup->order() == 3);
    CHECK_FALSE(is_normal(s4(), *h3.subgroup)); // no normal Sylow-3 in S4

    auto whole = hall(s4(), {2, 3});
    REQUIRE(whole.status == HallResult::Status::found);
    CHECK(whole.subgroup->order() == 24);

    Group z5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5)});
    Group s3z5 = direct_product(sym(3), z5);
    REQUIRE(s3z5.order() == 30);
    auto h25 = hall(s3z5, {2, 5});
    REQUIRE(h25.status == HallResult::Status::found);
    CHECK(h25.subgroup->order() == 10);
    CHECK(std::gcd(h25.subgroup->order(), s3z5.order() / h25.subgroup->order()) == 1);

    // exercise the Gaschuetz complement on a case where the minimal normal
    // subgroup avoids pi: hall(S4, {3}) runs through it; also A4
    auto a4h = hall(a4(), {3});
    REQUIRE(a4h.status == HallResult::Status::found);
    CHECK(a4h.subgroup->order() == 3);
}

TEST_CASE("hall on insolvable groups") {
    Group a5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5), cyc({{0, 1, 2}}, 5)});
    REQUIRE(a5.order() == 60);
    auto h = hall(a5, {2, 3}); // A4 inside A5
    REQUIRE(h.status == HallResult::Status::found);
    CHECK(h.subgroup->order() == 12);
    auto h35 = hall(a5, {3, 5}); // no subgroup of order 15
    CHECK(h35.status == HallResult::Status::not_found_proved);
    auto h25 = hall(a5, {2, 5}); // no subgroup of order 20
    CHECK(h25.status == HallResult::Status::not_found_proved);

    auto hs4 = hall(psl2(7), {2, 3}); // S4 inside PSL(2,7)
    REQUIRE(hs4.status == HallResult::Status::found);
    CHECK(hs4.subgroup->order() == 24);
}

TEST_CASE("is_normal") {
    Group g = s4();
    CHECK(is_normal(g, normal_closure(g, {cyc({{0, 1}, {2, 3}}, 4)})));
    CHECK_FALSE(is_normal(g, subgroup(g, {cyc({{0, 1, 2}}, 4)})));
    CHECK(is_normal(g, g));
}

TEST_CASE("quotient groups") {
    Group g = s4();
    Group v4 = normal_closure(g, {cyc({{0, 1}, {2, 3}}, 4)});
    Quotient q(g, v4);
    CHECK(q.group().order() == 6);
    CHECK(recognize(q.group()).kind == RecognitionTag::Kind::dihedral); // S3 = D6
    CHECK(are_isomorphic(q.group(), sym(3)));

    Quotient triv(g, Group::trivial(4));
    CHECK(triv.group().order() == 24);
    CHECK(are_isomorphic(triv.group(), g));

    Quotient whole(g, g);
    CHECK(whole.group().order() == 1);
}

TEST_CASE("recognition") {
    CHECK(recognize(s4()).kind == RecognitionTag::Kind::sym4);
    CHECK(recognize(a4()).kind == RecognitionTag::Kind::alt4);

    Group z5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5)});
    auto t = recognize(z5);
    CHECK(t.kind == RecognitionTag::Kind::cyclic);
    CHECK(t.n == 5);

    Group g8 = psl2(8);
    REQUIRE(g8.order() == 504);
    auto t8 = recognize(g8);
    CHECK(t8.kind == RecognitionTag::Kind::psl2);
    CHECK(t8.n == 8);

    Group v4 = normal_closure(s4(), {cyc({{0, 1}, {2, 3}}, 4)});
    auto tv = recognize(v4);
    CHECK(tv.kind == RecognitionTag::Kind::elementary_abelian);
    CHECK(tv.n == 2);
    CHECK(tv.k == 2);

    auto td = recognize(dihedral(7));
    CHECK(td.kind == RecognitionTag::Kind::dihedral);
    CHECK(td.n == 14);

    // Q8: two-group that is neither cyclic, elementary abelian nor dihedral
    Group q8 = Group::generated_by(
        8, {Perm::from_cycles({{0, 1, 2, 3}, {4, 5, 6, 7}}, 8),
            Perm::from_cycles({{0, 4, 2, 6}, {1, 7, 3, 5}}, 8)});
    REQUIRE(q8.order() == 8);
    CHECK(recognize(q8).kind == RecognitionTag::Kind::two_group);
}

TEST_CASE("psl2 recognition never fires on solvable groups") {
    Group z60 = Group::generated_by(12, {cyc({{0, 1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 11}}, 12)});
    REQUIRE(z60.order() == 60);
    CHECK(recognize(z60).kind == RecognitionTag::Kind::cyclic);
}

TEST_CASE("composition factor tags") {
    auto tags = tag_multiset(composition_factor_tags(s4()));
    CHECK(tags == std::multiset<std::string>{"cyclic(2)", "cyclic(2)", "cyclic(2)", "cyclic(3)"});

    auto simple_tags = composition_factor_tags(psl2(7));
    REQUIRE(simple_tags.size() == 1);
    CHECK(simple_tags[0].kind == RecognitionTag::Kind::psl2);
    CHECK(simple_tags[0].n == 7);

    auto s7_tags = composition_factor_tags(sym(7));
    REQUIRE(s7_tags.size() == 2);
    CHECK(tag_multiset(s7_tags) == std::multiset<std::string>{"cyclic(2)", "other"});
}

TEST_CASE("isomorphism testing") {
    Group g = s4();
    Group v4 = normal_closure(g, {cyc({{0, 1}, {2, 3}}, 4)});
    CHECK(are_isomorphic(Quotient(g, v4).group(), sym(3)));
    CHECK(are_isomorphic(g, g));

    Group d8 = dihedral(4);
    Group z8 = Group::generated_by(8, {cyc({{0, 1, 2, 3, 4, 5, 6, 7}}, 8)});
    CHECK_FALSE(are_isomorphic(d8, z8));

    Group z6 = Group::generated_by(6, {cyc({{0, 1, 2, 3, 4, 5}}, 6)});
    CHECK_FALSE(are_isomorphic(z6, sym(3)));
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group_order(s4()) == 24);
    CHECK(automorphism_group_order(dihedral(4)) == 8);
    Group v4 = normal_closure(s4(), {cyc({{0, 1}, {2, 3}}, 4)});
    CHECK(automorphism_group_order(v4) == 6);
    Group z5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5)});
    CHECK(automorphism_group_order(z5) == 4);
}

TEST_CASE("automorphism maps are genuine automorphisms") {
    Group g = a4();
    const auto& elems = g.elements();
    const auto& auts = automorphisms(g);
    CHECK(auts.maps.size() == 24); // Aut(A4) = S4
    for (const auto& amap : auts.maps) {
        for (size_t i = 0; i < elems.size(); i += 3)
            for (size_t j = 0; j < elems.size(); j += 5) {
                int pij = g.element_index(elems[i] * elems[j]);
                CHECK(amap[pij] == g.element_index(elems[amap[i]] * elems[amap[j]]));
            }
    }
}

TEST_CASE("N/C embeds in Aut(H) for small subgroups") {
    Group g = s4();
    std::vector<Group> hs = {
        subgroup(g, {cyc({{0, 1, 2}}, 4)}),
        subgroup(g, {cyc({{0, 1, 2, 3}}, 4)}),
        normal_closure(g, {cyc({{0, 1}, {2, 3}}, 4)}),
        subgroup(g, {cyc({{0, 1}}, 4)}),
    };
    for (const auto& h : hs) {
        Group n = normalizer(g, h);
        Group c = centralizer(g, h.generators());
        CHECK(is_normal(n, c));
        std::uint64_t quot = n.order() / c.order();
        CHECK(automorphism_group_order(h) % quot == 0);
        // conjugation realizes exactly N/C distinct automorphisms of H
        std::set<std::vector<int>> realized;
        for (const auto& x : n.elements()) {
            std::vector<int> images;
            for (const auto& he : h.elements()) images.push_back(h.element_index(he.conjugated_by(x)));
            realized.insert(images);
        }
        CHECK(realized.size() == quot);
    }
}

TEST_CASE("normal p-complement when the smallest-prime Sylow is cyclic") {
    for (const Group& g : {sym(3), dihedral(5), dihedral(15),
                           Group::generated_by(6, {cyc({{0, 1, 2, 3, 4, 5}}, 6)})}) {
        auto ps = pi_of(g.order());
        std::uint64_t p = ps.front();
        Group syl = sylow(g, p);
        if (syl.order_profile().back().first == syl.order()) { // cyclic Sylow
            PiSet rest = pi_minus(ps, {p});
            CHECK(pi_core(g, rest).order() == pi_part(g.order(), rest));
        }
    }
}

TEST_CASE("psl2 and pgl2 constructions") {
    CHECK(psl2(7).order() == 168);
    CHECK(psl2(8).order() == 504);
    CHECK(pgl2(7).order() == 336);
    CHECK(psl2(5).order() == 60);
    CHECK(pgl2(5).order() == 120);

    GaloisField f8(8);
    CHECK(f8.primitive_element() == 2); // the polynomial x generates F8*
    CHECK(f8.mul(2, f8.inv(2)) == 1);
}

TEST_CASE("generating sequences are short and generate") {
    for (const Group& g : {s4(), a4(), psl2(7), dihedral(9)}) {
        auto seq = generating_sequence(g);
        CHECK(seq.size() <= 3);
        CHECK(generated_order(g.degree(), seq) == g.order());
    }
}
