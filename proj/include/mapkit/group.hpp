#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "mapkit/perm.hpp"

namespace mapkit {

// Deterministic Schreier-Sims stabilizer chain.  Transversals are stored as
// Schreier vectors, so memory stays O(depth * degree) even for large orbits.
class StabilizerChain {
public:
    StabilizerChain() : degree_(0) {}
    explicit StabilizerChain(int degree, const std::vector<Perm>& gens);

    std::uint64_t order() const;
    bool contains(const Perm& p) const;
    int degree() const { return degree_; }
    const std::vector<int>& base() const { return base_; }

private:
    struct Level {
        int base_point = 0;
        std::vector<Perm> gens;    // strong generators fixing all earlier base points
        std::vector<Perm> inv_gens;
        std::vector<int> orbit;    // discovery order; Schreier vectors are append-only
        std::vector<int> via_gen;  // generator index reaching pt, -1 unseen
        std::vector<int> parent;   // previous point on the path
        std::vector<char> in_orbit;
        // verified (orbit point, generator) pairs; both lists only append
        size_t done_orbit = 0, done_gens = 0;
    };

    void add_level(int point);
    void extend_orbit(size_t level);
    // Add g (fixing base[0..from-1]) to levels from..home and grow orbits.
    void add_strong_generator(const Perm& g, size_t from);
    // Sift through levels [level, end); returns residue reduced as far as possible.
    Perm sift_from(Perm g, size_t level) const;
    Perm transversal(size_t level, int pt) const;
    void verify();

    int degree_;
    std::vector<int> base_;
    std::deque<Level> levels_;
};

// Immutable permutation group.  Cheap to copy (shared internals) and safe to
// share across threads; lazy caches are built under a mutex.
class Group {
public:
    Group(); // trivial group of degree 0
    static Group generated_by(int degree, std::vector<Perm> gens);
    static Group trivial(int degree);

    int degree() const;
    const std::vector<Perm>& generators() const;
    std::uint64_t order() const;
    bool contains(const Perm& p) const;
    bool is_trivial() const { return order() == 1; }
    bool is_abelian() const;
    Perm identity() const { return Perm(degree()); }

    // Full element table, sorted lexicographically by image array.
    // Throws resource_error when order() exceeds the enumeration bound.
    const std::vector<Perm>& elements() const;
    // Index of p in elements(); -1 if absent.
    int element_index(const Perm& p) const;

    // Cayley BFS spanning tree over elements(): element i != identity was
    // first reached as elements()[tree_parent(i)] * generators()[tree_gen(i)].
    int tree_parent(int i) const;
    int tree_gen(int i) const;

    // Conjugacy classes as sorted element-index lists, ordered by least index.
    const std::vector<std::vector<int>>& conjugacy_classes() const;

    // Multiset of element orders (order -> count); cheap isomorphism filter.
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& order_profile() const;

    bool same_underlying(const Group& other) const { return impl_ == other.impl_; }
    const void* impl_id() const { return impl_.get(); }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Order of <gens> without constructing a Group (used in hot loops).
std::uint64_t generated_order(int degree, const std::vector<Perm>& gens);

// Orbits of <gens> on {0,...,npoints-1}; each orbit sorted ascending,
// orbits ordered by least point.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int npoints);

// <elems> inside G; throws domain_error if some element is not in G.
Group subgroup(const Group& g, const std::vector<Perm>& elems);

// Least normal subgroup of G containing elems.
Group normal_closure(const Group& g, const std::vector<Perm>& elems);

// Elements of G commuting with every element of S.  Needs the element table.
Group centralizer(const Group& g, const std::vector<Perm>& s);

// { x in G : H^x = H }.  Needs the element table of G.
Group normalizer(const Group& g, const Group& h);

// G `intersect` H (elementwise over the smaller table).
Group intersection(const Group& g, const Group& h);

// Largest normal subgroup of G contained in H (intersection of conjugates).
Group core(const Group& g, const Group& h);

// Right-coset space of H in G with the induced action of G.
class CosetAction {
public:
    CosetAction(const Group& g, const Group& h);

    std::uint64_t index() const { return reps_.size(); }
    const std::vector<Perm>& coset_reps() const { return reps_; }
    // Image of g as a permutation of coset indices (coset 0 = H).
    Perm image_of(const Perm& p) const;
    // The induced permutation group of degree index().
    const Group& image() const { return image_; }
    int coset_of(const Perm& p) const;

private:
    std::string coset_key(const Perm& p) const;

    std::vector<Perm> reps_;
    std::vector<Perm> subgroup_elems_; // empty when |H| == 1
    std::unordered_map<std::string, int> key_to_coset_;
    Group image_;
};

struct BlockSystem {
    bool primitive = false;
    // When imprimitive: a minimal nontrivial block containing the witness
    // pair, plus the full system it generates.
    std::vector<int> block;
    std::vector<std::vector<int>> blocks;
};

// Natural action of G on 0..degree-1; throws domain_error if intransitive
// or degree < 2.
BlockSystem minimal_blocks(const Group& g);
bool is_primitive(const Group& g);

// Quotient G/N as a faithful permutation group via the coset action.
// Throws domain_error when N is not normal in G.
class Quotient {
public:
    Quotient(const Group& g, const Group& n);
    const Group& group() const { return action_->image(); }
    Perm project(const Perm& p) const { return action_->image_of(p); }
    const CosetAction& action() const { return *action_; }

private:
    std::shared_ptr<CosetAction> action_;
};

bool is_normal(const Group& g, const Group& h);

// Direct product acting on the disjoint union of the point sets.
Group direct_product(const Group& a, const Group& b);
Perm embed_left(const Perm& p, int total_degree);
Perm embed_right(const Perm& p, int left_degree, int total_degree);

} // namespace mapkit
