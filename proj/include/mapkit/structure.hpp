#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapkit/group.hpp"

namespace mapkit {

// Sorted set of distinct primes.
using PiSet = std::vector<std::uint64_t>;

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
PiSet pi_of(std::uint64_t n); // throws domain_error on n == 0
bool is_pi_number(std::uint64_t n, const PiSet& pi);
std::uint64_t pi_part(std::uint64_t n, const PiSet& pi);
PiSet pi_complement_in(std::uint64_t n, const PiSet& pi); // primes of n outside pi
PiSet pi_union(const PiSet& a, const PiSet& b);
PiSet pi_minus(const PiSet& a, const PiSet& b);
std::string pi_to_string(const PiSet& pi); // "{2,3}" or "{}"

// Derived series G >= G' >= G'' >= ..., ending at the stable term.
std::vector<Group> derived_series(const Group& g);
bool is_solvable(const Group& g);

// A Sylow p-subgroup found by deterministic normalizer ascent.
Group sylow(const Group& g, std::uint64_t p);

// O_p(G) and O_pi(G): the largest normal p-/pi-subgroup.
Group p_core(const Group& g, std::uint64_t p);
Group pi_core(const Group& g, const PiSet& pi);

// Fitting subgroup: product of the p-cores over primes dividing |G|.
Group fitting(const Group& g);

struct HallResult {
    enum class Status { found, not_found_proved, unknown };
    Status status = Status::unknown;
    std::optional<Group> subgroup; // set when status == found
};

// A pi-Hall subgroup.  Constructive for solvable G; bounded generator
// search for insolvable G, exhaustive only under the configured bound.
HallResult hall(const Group& g, const PiSet& pi);

struct RecognitionTag {
    enum class Kind {
        cyclic,             // cyclic(n)
        dihedral,           // dihedral(2m), order 2m with m >= 2
        elementary_abelian, // elementary_abelian(p, k), k >= 2
        sym4,
        alt4,
        psl2,               // psl2(q)
        two_group,          // 2-group not covered by an earlier kind
        other,
    };
    Kind kind = Kind::other;
    std::uint64_t n = 0;           // cyclic order / dihedral order / p / q
    int k = 0;                     // elementary abelian rank
    std::vector<Perm> witness;     // verifying generator data when applicable
    std::string note;

    bool operator==(const RecognitionTag& o) const {
        return kind == o.kind && n == o.n && k == o.k;
    }
    std::string to_string() const;
};

RecognitionTag recognize(const Group& g);

// Multiset of composition factor tags via repeated minimal normal subgroups;
// abelian factors reported as cyclic(p).  Bounded by limits().factor_bound.
std::vector<RecognitionTag> composition_factor_tags(const Group& g);

// A minimal normal subgroup of a nontrivial group.
Group minimal_normal_subgroup(const Group& g);

// Generator-image backtracking with the graph-of-homomorphism test.
bool are_isomorphic(const Group& a, const Group& b);

// All automorphisms as permutations of the element table index space.
// Capped by limits().aut_bound.
struct AutomorphismSet {
    std::vector<std::vector<int>> maps; // maps[a][i] = index of alpha(elements[i])
};
const AutomorphismSet& automorphisms(const Group& g); // cached per group
std::uint64_t automorphism_group_order(const Group& g);

// Short generating sequence (greedy, highest element order first).
std::vector<Perm> generating_sequence(const Group& g);

} // namespace mapkit
