#include "doctest.h"

#include <algorithm>
#include <random>

#include "mapkit/common.hpp"
#include "mapkit/perm.hpp"

using namespace mapkit;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    return Perm(std::move(im));
}

} // namespace

TEST_CASE("from_cycles builds the stated permutations") {
    // 7-cycle, written 0-based
    Perm r = Perm::from_cycles({{0, 1, 2, 3, 4, 5, 6}}, 7);
    CHECK(r(0) == 1);
    CHECK(r(6) == 0);
    CHECK(r.order() == 7);

    // empty cycle list -> identity
    Perm id = Perm::from_cycles({}, 5);
    CHECK(id.is_identity());
    CHECK(id.degree() == 5);

    // product of two transpositions, order 2
    Perm invol = Perm::from_cycles({{0, 1}, {2, 3}}, 4);
    CHECK(invol.order() == 2);
    CHECK(invol(0) == 1);
    CHECK(invol(2) == 3);
}

TEST_CASE("from_cycles rejects bad input") {
    CHECK_THROWS_AS(Perm::from_cycles({{0, 1, 0}}, 4), domain_error);
    CHECK_THROWS_AS(Perm::from_cycles({{0, 1}, {1, 2}}, 4), domain_error);
    CHECK_THROWS_AS(Perm::from_cycles({{0, 4}}, 4), domain_error);
}

TEST_CASE("element orders") {
    CHECK(Perm(5).order() == 1);
    CHECK(Perm::from_cycles({{0, 1}, {2, 3, 4}}, 5).order() == 6); // lcm(2,3)
    CHECK(Perm::from_cycles({{0, 1, 2}, {3, 4, 5, 6}}, 7).order() == 12);
}

TEST_CASE("group axioms hold on random permutations") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Perm a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == Perm(n));
        CHECK(a.inverse() * a == Perm(n));
        CHECK(a.power(static_cast<std::int64_t>(a.order())) == Perm(n));
        // left factor applies first
        int x = static_cast<int>(rng() % n);
        CHECK((a * b)(x) == b(a(x)));
    }
}

TEST_CASE("conjugation and cycle structure") {
    std::mt19937 rng(99);
    Perm a = Perm::from_cycles({{0, 1, 2}}, 6);
    Perm g = random_perm(6, rng);
    Perm c = a.conjugated_by(g);
    CHECK(c == g.inverse() * a * g);
    CHECK(c.order() == a.order());
}

TEST_CASE("degenerate degree zero") {
    Perm p(0);
    CHECK(p.is_identity());
    CHECK(p.order() == 1);
    CHECK((p * p) == p);
}

TEST_CASE("cycle notation round trip") {
    Perm p = Perm::from_cycles({{1, 4}, {2, 3, 5}}, 6);
    auto cs = p.cycles();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<int>{1, 4});
    CHECK(cs[1] == std::vector<int>{2, 3, 5});
    CHECK(Perm::from_cycles(cs, 6) == p);
    CHECK(p.to_string() == "(1 4)(2 3 5)");
}
