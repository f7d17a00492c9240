#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "mapkit/common.hpp"
#include "mapkit/group.hpp"

using namespace mapkit;

namespace {

Perm cyc(std::initializer_list<std::initializer_list<int>> cycles, int n) {
    std::vector<std::vector<int>> cs;
    for (auto& c : cycles) cs.emplace_back(c);
    return Perm::from_cycles(cs, n);
}

// Naive closure oracle: repeated multiplication until stable.
std::vector<Perm> naive_closure(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> elems;
    elems.insert(Perm(degree));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> snapshot(elems.begin(), elems.end());
        for (const auto& e : snapshot)
            for (const auto& g : gens)
                if (elems.insert(e * g).second) grew = true;
    }
    return {elems.begin(), elems.end()};
}

// Union-find orbit oracle.
std::vector<std::vector<int>> uf_orbits(const std::vector<Perm>& gens, int n) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, pts] : by_root) out.push_back(pts);
    return out;
}

Group sym(int n) {
    if (n <= 1) return Group::trivial(std::max(n, 0));
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    std::vector<std::vector<int>> c = {full};
    return Group::generated_by(n, {Perm::from_cycles(c, n), cyc({{0, 1}}, n)});
}

} // namespace

TEST_CASE("group_generate matches the stated orders") {
    // S7 from the 7-cycle and a transposition
    Group s7 = Group::generated_by(7, {cyc({{0, 1, 2, 3, 4, 5, 6}}, 7), cyc({{0, 1}}, 7)});
    CHECK(s7.order() == 5040);

    Group triv = Group::generated_by(5, {Perm(5)});
    CHECK(triv.order() == 1);

    // A4 by brute-force closure
    std::vector<Perm> gens = {cyc({{0, 1, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)};
    Group a4 = Group::generated_by(4, gens);
    CHECK(a4.order() == naive_closure(4, gens).size());
    CHECK(a4.order() == 12);
}

TEST_CASE("enumeration agrees with naive closure on random generator sets") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Perm> gens;
        int k = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) {
            std::vector<int> im(n);
            for (int j = 0; j < n; ++j) im[j] = j;
            std::shuffle(im.begin(), im.end(), rng);
            gens.emplace_back(std::move(im));
        }
        Group g = Group::generated_by(n, gens);
        auto oracle = naive_closure(n, gens);
        CHECK(g.order() == oracle.size());
        CHECK(g.elements().size() == oracle.size());
        for (const auto& e : oracle) CHECK(g.contains(e));
    }
}

TEST_CASE("element table is lex sorted and indexable") {
    Group a4 = Group::generated_by(4, {cyc({{0, 1, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    const auto& elems = a4.elements();
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (size_t i = 0; i < elems.size(); ++i)
        CHECK(a4.element_index(elems[i]) == static_cast<int>(i));
    CHECK(a4.element_index(cyc({{0, 1}}, 4)) == -1);
    // Cayley tree reconstructs each element
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_identity()) continue;
        int p = a4.tree_parent(i), gi = a4.tree_gen(i);
        CHECK(elems[p] * a4.generators()[gi] == elems[i]);
    }
}

TEST_CASE("enumeration bound produces a resource error naming the bound") {
    Limits l = limits();
    l.enum_bound = 10;
    ScopedLimits guard(l);
    Group a4 = Group::generated_by(4, {cyc({{0, 1, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    CHECK(a4.order() == 12); // order itself works through the chain
    CHECK_THROWS_WITH_AS(a4.elements(), doctest::Contains("bound 10"), resource_error);
}

TEST_CASE("orbits") {
    auto orbs = orbits({cyc({{0, 1, 2, 3, 4, 5, 6}}, 7)}, 7);
    REQUIRE(orbs.size() == 1);
    CHECK(orbs[0].size() == 7);

    orbs = orbits({Perm(3)}, 3);
    CHECK(orbs.size() == 3);

    // deterministic: keyed by least point, ascending inside
    orbs = orbits({cyc({{1, 4}, {2, 3}}, 5)}, 5);
    REQUIRE(orbs.size() == 3);
    CHECK(orbs[0] == std::vector<int>{0});
    CHECK(orbs[1] == std::vector<int>{1, 4});
    CHECK(orbs[2] == std::vector<int>{2, 3});
}

TEST_CASE("orbits agree with the union-find oracle on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        std::vector<Perm> gens;
        for (int i = 0; i < 2; ++i) {
            std::vector<int> im(n);
            for (int j = 0; j < n; ++j) im[j] = j;
            std::shuffle(im.begin(), im.end(), rng);
            gens.emplace_back(std::move(im));
        }
        CHECK(orbits(gens, n) == uf_orbits(gens, n));
    }
}

TEST_CASE("subgroup construction and membership errors") {
    Group s4 = sym(4);
    Group d8 = subgroup(s4, {cyc({{0, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    CHECK(d8.order() == 8);

    Group t = subgroup(s4, {Perm(4)});
    CHECK(t.order() == 1);

    Group s3 = sym(3);
    CHECK_THROWS_AS(subgroup(s3, {cyc({{0, 1}}, 4)}), domain_error);
}

TEST_CASE("normal closure") {
    Group s4 = sym(4);
    Group v4 = normal_closure(s4, {cyc({{0, 1}, {2, 3}}, 4)});
    CHECK(v4.order() == 4);

    CHECK(normal_closure(s4, {Perm(4)}).order() == 1);

    // A5 is simple: every nontrivial normal closure is the whole group
    Group a5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5), cyc({{0, 1, 2}}, 5)});
    REQUIRE(a5.order() == 60);
    for (const auto& e : a5.elements()) {
        if (e.is_identity()) continue;
        CHECK(normal_closure(a5, {e}).order() == 60);
    }
}

TEST_CASE("centralizer, normalizer, core") {
    Group s4 = sym(4);
    CHECK(centralizer(s4, {cyc({{0, 1}, {2, 3}}, 4)}).order() == 8);
    CHECK(normalizer(s4, s4).order() == 24);

    Group d8 = subgroup(s4, {cyc({{0, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    Group k = core(s4, d8);
    CHECK(k.order() == 4);
    CHECK(is_normal(s4, k));
    // brute force: the core is exactly the elements all of whose S4-conjugates lie in D8
    for (const auto& e : s4.elements()) {
        bool all_in = true;
        for (const auto& x : s4.elements())
            if (!d8.contains(e.conjugated_by(x))) {
                all_in = false;
                break;
            }
        CHECK(all_in == k.contains(e));
    }
}

TEST_CASE("centralizer normalizer containment (Proposition-style sanity)") {
    Group s4 = sym(4);
    Group h = subgroup(s4, {cyc({{0, 1, 2}}, 4)});
    Group c = centralizer(s4, h.generators());
    Group n = normalizer(s4, h);
    CHECK(is_normal(n, c));
    CHECK(n.order() % c.order() == 0);
}

TEST_CASE("coset actions") {
    Group s4 = sym(4);
    Group syl3 = subgroup(s4, {cyc({{0, 1, 2}}, 4)});
    CosetAction act(s4, syl3);
    CHECK(act.index() == 8);
    CHECK(orbits(act.image().generators(), 8).size() == 1);

    CosetAction whole(s4, s4);
    CHECK(whole.index() == 1);
    CHECK(whole.image().order() == 1);

    // kernel of the action equals the core
    Group d8 = subgroup(s4, {cyc({{0, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    CosetAction on6(s4, d8);
    Group k = core(s4, d8);
    for (const auto& e : s4.elements())
        CHECK((on6.image_of(e).is_identity()) == k.contains(e));
}

TEST_CASE("primitivity and blocks") {
    CHECK(is_primitive(sym(4)));

    // D8 as the symmetries of a square 0-1-2-3: blocks are the diagonals
    Group d8 = Group::generated_by(4, {cyc({{0, 1, 2, 3}}, 4), cyc({{1, 3}}, 4)});
    REQUIRE(d8.order() == 8);
    BlockSystem bs = minimal_blocks(d8);
    CHECK_FALSE(bs.primitive);
    CHECK(bs.block == std::vector<int>{0, 2});
    REQUIRE(bs.blocks.size() == 2);
    CHECK(bs.blocks[1] == std::vector<int>{1, 3});

    Group intrans = Group::generated_by(4, {cyc({{0, 1}}, 4)});
    CHECK_THROWS_AS(minimal_blocks(intrans), domain_error);
}

TEST_CASE("quotient by a normal subgroup") {
    Group s4 = sym(4);
    Group v4 = normal_closure(s4, {cyc({{0, 1}, {2, 3}}, 4)});
    Quotient q(s4, v4);
    CHECK(q.group().order() == 6);
    // projection is a homomorphism
    std::mt19937 rng(3);
    const auto& elems = s4.elements();
    for (int i = 0; i < 40; ++i) {
        const Perm& a = elems[rng() % elems.size()];
        const Perm& b = elems[rng() % elems.size()];
        CHECK(q.project(a * b) == q.project(a) * q.project(b));
    }
    Group syl3 = subgroup(s4, {cyc({{0, 1, 2}}, 4)});
    CHECK_THROWS_AS(Quotient(s4, syl3), domain_error);
}

TEST_CASE("membership via the chain agrees with naive closure on random pairs") {
    std::mt19937 rng(555);
    Group s4 = sym(4);
    Group a4 = Group::generated_by(4, {cyc({{0, 1, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)});
    auto a4_set = naive_closure(4, a4.generators());
    std::set<Perm> in_a4(a4_set.begin(), a4_set.end());
    int checked = 0;
    for (const auto& e : s4.elements()) {
        CHECK(a4.contains(e) == (in_a4.count(e) > 0));
        ++checked;
    }
    CHECK(checked == 24);
}

TEST_CASE("Lagrange holds for computed subgroups") {
    Group s4 = sym(4);
    std::vector<Group> subs = {
        subgroup(s4, {cyc({{0, 1, 2}}, 4)}),
        subgroup(s4, {cyc({{0, 2}}, 4), cyc({{0, 1}, {2, 3}}, 4)}),
        subgroup(s4, {cyc({{0, 1, 2, 3}}, 4)}),
        normal_closure(s4, {cyc({{0, 1}, {2, 3}}, 4)}),
    };
    for (const auto& h : subs) CHECK(s4.order() % h.order() == 0);
}

TEST_CASE("degenerate degrees") {
    Group empty = Group::trivial(0);
    CHECK(empty.order() == 1);
    CHECK(empty.degree() == 0);
    Group one = Group::generated_by(1, {Perm(1)});
    CHECK(one.order() == 1);
    CHECK(orbits(one.generators(), 1).size() == 1);
}

TEST_CASE("direct products") {
    Group s3 = sym(3);
    Group z5 = Group::generated_by(5, {cyc({{0, 1, 2, 3, 4}}, 5)});
    Group prod = direct_product(s3, z5);
    CHECK(prod.order() == 30);
    CHECK(prod.degree() == 8);
}
