#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapkit/algmap.hpp"
#include "mapkit/group.hpp"

namespace mapkit {

struct CatalogEntry {
    std::string name;
    Group group;
};

// Standard constructions.
Group cyclic_group(int n);
Group symmetric_group(int n);
Group alternating_group(int n);
// dihedral group of order 2m, faithful for every m >= 1
Group dihedral_group(int m);
// <x, y | x^m = y^2 = 1, x^y = x^e>, requires e^2 = 1 (mod m)
Group metacyclic_group(int m, int e);
// right-multiplication action on the element table (degree = order)
Group regular_representation(const Group& g);

// All groups of order <= 63 up to isomorphism, as regular representations,
// named "sg<order>_<index>".  Backed by the generated table.
const std::vector<CatalogEntry>& small_group_catalog();

// Named fixture groups in their natural representations.
const std::vector<CatalogEntry>& named_fixture_groups();

// small_group_catalog + named_fixture_groups
std::vector<CatalogEntry> bundled_catalog();

std::optional<Group> catalog_group(const std::string& name);

// Bundled maps ("map:<name>" in the CLI).
struct NamedMapEntry {
    std::string name;
    MapKind kind;
    std::optional<UnorientedMap> unoriented;
    std::optional<OrientedMap> oriented;
};

UnorientedMap tetrahedron_map();
OrientedMap s7_oriented_example();     // r = (1 2 ... 7), l = (1 2)
OrientedMap psl27_example();           // unipotent r, Weyl involution l
OrientedMap psl28_example();           // r of order 7 built from the field generator
UnorientedMap s7_unoriented_example(); // orientable regular map of S7
UnorientedMap s8_unoriented_example(); // nonorientable regular map of S8
UnorientedMap s4_unoriented_example(); // r=(1 3), t=(1 2)(3 4), l=(1 2)
UnorientedMap pgl27_primitive_example(); // stabilizer D16, 21 vertices
// regular cover of the C(3,2) map by an elementary abelian 3-group:
// (F3^3 twisted) x| S4 of order 648, O_3 = kernel
UnorientedMap c32_cover_fixture();
UnorientedMap nonregular_path_fixture(); // strict but not regular

const std::vector<NamedMapEntry>& named_fixture_maps();
std::optional<NamedMapEntry> catalog_map(const std::string& name);

} // namespace mapkit
