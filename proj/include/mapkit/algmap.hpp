#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapkit/group.hpp"
#include "mapkit/structure.hpp"

namespace mapkit {

enum class MapKind { oriented, unoriented };

struct DegeneracyFlags {
    bool t_identity = false;
    bool r_identity = false;
    bool l_identity = false;
    bool l_equals_t = false; // "redundant"
    bool any() const { return t_identity || r_identity || l_identity || l_equals_t; }
};

// A map carried on an abstract group: flags/darts are the group elements,
// the monodromy generators act by left translation and the full right
// translation group is the (regular) automorphism group.
struct AlgebraicForm {
    Group group;
    Perm t, r, l; // t is the identity placeholder for oriented maps
};

// Unoriented map (F; t, r, l).  Holds combinatorial flag permutations, an
// algebraic form, or both; immutable once built.
class UnorientedMap {
public:
    // Any same-degree triple is accepted; judgements come from validate().
    static UnorientedMap combinatorial(Perm t, Perm r, Perm l);
    // Requires <t,r,l> = G (throws domain_error otherwise); involution
    // conditions are reported through validate(), not enforced here.
    static UnorientedMap algebraic(const Group& g, const Perm& t, const Perm& r, const Perm& l);

    std::uint64_t flag_count() const { return flags_; }
    bool has_algebraic() const { return alg_.has_value(); }
    const AlgebraicForm& algebraic_form() const;
    bool has_combinatorial() const { return comb_.has_value(); }

    // Flag-level permutations {t, r, l}; expands the algebraic form on
    // demand (resource_error beyond the enumeration bound).
    std::array<Perm, 3> flag_perms() const;

    DegeneracyFlags degeneracy() const;

private:
    UnorientedMap() = default;
    std::uint64_t flags_ = 0;
    std::optional<std::array<Perm, 3>> comb_;
    std::optional<AlgebraicForm> alg_;
};

// Oriented map (D; r, l).
class OrientedMap {
public:
    static OrientedMap combinatorial(Perm r, Perm l);
    static OrientedMap algebraic(const Group& g, const Perm& r, const Perm& l);

    std::uint64_t dart_count() const { return darts_; }
    bool has_algebraic() const { return alg_.has_value(); }
    const AlgebraicForm& algebraic_form() const;
    bool has_combinatorial() const { return comb_.has_value(); }
    std::array<Perm, 2> dart_perms() const; // {r, l}
    DegeneracyFlags degeneracy() const;

private:
    OrientedMap() = default;
    std::uint64_t darts_ = 0;
    std::optional<std::array<Perm, 2>> comb_;
    std::optional<AlgebraicForm> alg_;
};

struct ValidationReport {
    bool nonempty = false;
    bool t_involution_or_identity = false;
    bool r_involution_or_identity = false;
    bool l_involution_or_identity = false;
    bool commute_tl = false;
    bool transitive = false;
    bool t_fpf = false, r_fpf = false, l_fpf = false;
    DegeneracyFlags degeneracy;
    bool basic_pass = false;  // axioms hold, degeneracies permitted
    bool strict_pass = false; // fixed-point-free involutions, no degeneracy
    std::vector<std::string> failures;
};

ValidationReport validate_unoriented(const UnorientedMap& m, bool strict);
ValidationReport validate_oriented(const OrientedMap& m, bool strict);

struct MapInvariants {
    std::uint64_t v = 0, e = 0, f = 0;
    std::int64_t chi = 0;
    bool orientable = false;
    std::optional<std::int64_t> genus; // absent for degenerate maps
    std::string genus_tag;             // "", "disc (boundary)", "sphere (redundant)", ...
    std::uint64_t aut_order = 0;
    bool regular = false;
    std::optional<bool> reflexible; // oriented algebraic maps only
    std::uint64_t semi_edges = 0;
    std::vector<std::uint64_t> multi_edge_profile; // sorted bundle multiplicities
};

MapInvariants invariants(const UnorientedMap& m);
MapInvariants invariants(const OrientedMap& m);

struct AutCount {
    std::uint64_t count = 0;
    bool regular = false;
};

// Flag-transport count of permutations commuting with the monodromy
// generators.  Bounded by limits().flag_bound.
AutCount automorphism_count(const UnorientedMap& m);
AutCount automorphism_count(const OrientedMap& m);

// r -> r^-1, l -> l extends to an automorphism of G (graph trick).
bool is_reflexible(const OrientedMap& m);

struct GraphSummary {
    std::uint64_t vertices = 0, edges = 0, loops = 0, semi_edges = 0;
    std::vector<std::uint64_t> degree_sequence;       // ascending
    std::vector<std::uint64_t> multi_edge_profile;    // sorted bundle multiplicities
    bool simple = false;
    bool dipole = false, semistar = false, cycle_power = false;
    std::uint64_t param_n = 0, param_m = 0; // C_n^(m); dipole/semistar use param_m
};

GraphSummary underlying_graph(const UnorientedMap& m);
GraphSummary underlying_graph(const OrientedMap& m);

// Quotient by a normal subgroup of the algebraic form's group; the result
// may be degenerate and carries the flags saying so.
UnorientedMap quotient_map(const UnorientedMap& m, const Group& n);
OrientedMap quotient_map(const OrientedMap& m, const Group& n);

} // namespace mapkit
