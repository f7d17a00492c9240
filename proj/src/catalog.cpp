#include "mapkit/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "mapkit/common.hpp"
#include "mapkit/gf.hpp"
#include "mapkit/smallgroups_data.hpp"
#include "mapkit/structure.hpp"

namespace mapkit {

// ---------------------------------------------------------------------------
// Standard constructions

Group cyclic_group(int n) {
    if (n < 1) throw domain_error("cyclic_group: n must be positive");
    if (n == 1) return Group::generated_by(1, {Perm(1)});
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return Group::generated_by(n, {Perm(std::move(im))});
}

Group symmetric_group(int n) {
    if (n < 1) throw domain_error("symmetric_group: n must be positive");
    if (n == 1) return Group::generated_by(1, {Perm(1)});
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    return Group::generated_by(
        n, {Perm::from_cycles({full}, n), Perm::from_cycles({{0, 1}}, n)});
}

Group alternating_group(int n) {
    if (n < 3) return Group::generated_by(std::max(n, 1), {Perm(std::max(n, 1))});
    std::vector<Perm> gens;
    for (int i = 2; i < n; ++i) gens.push_back(Perm::from_cycles({{0, 1, i}}, n));
    return Group::generated_by(n, gens);
}

Group dihedral_group(int m) {
    if (m < 1) throw domain_error("dihedral_group: m must be positive");
    return metacyclic_group(m, m - 1 >= 0 ? (m == 1 ? 0 : m - 1) : 0);
}

Group metacyclic_group(int m, int e) {
    if (m < 1) throw domain_error("metacyclic_group: m must be positive");
    e = ((e % m) + m) % m;
    if ((static_cast<long long>(e) * e) % m != 1 % m)
        throw domain_error("metacyclic_group: e^2 must be 1 mod m");
    // x: m-cycle; y: i -> e*i plus a swapped 2-point tail keeping y faithful
    int deg = m + 2;
    std::vector<int> xr(deg), yr(deg);
    for (int i = 0; i < m; ++i) xr[i] = (i + 1) % m;
    xr[m] = m;
    xr[m + 1] = m + 1;
    for (int i = 0; i < m; ++i) yr[i] = static_cast<int>((static_cast<long long>(e) * i) % m);
    yr[m] = m + 1;
    yr[m + 1] = m;
    return Group::generated_by(deg, {Perm(std::move(xr)), Perm(std::move(yr))});
}

Group regular_representation(const Group& g) {
    const auto& elems = g.elements();
    const int n = static_cast<int>(elems.size());
    std::vector<Perm> gens;
    for (const auto& gen : g.generators()) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = g.element_index(elems[i] * gen);
        gens.push_back(Perm(std::move(im)));
    }
    if (gens.empty()) gens.push_back(Perm(n));
    return Group::generated_by(n, gens);
}

// ---------------------------------------------------------------------------
// Small-group catalog from the generated table

const std::vector<CatalogEntry>& small_group_catalog() {
    static std::mutex lock;
    static std::vector<CatalogEntry> catalog;
    std::lock_guard<std::mutex> lk(lock);
    if (!catalog.empty() || small_group_record_count == 0) return catalog;
    for (std::size_t i = 0; i < small_group_record_count; ++i) {
        const SmallGroupRecord& rec = small_group_records[i];
        std::vector<Perm> gens;
        const std::uint8_t* ptr = rec.images;
        for (int k = 0; k < rec.ngens; ++k) {
            std::vector<int> im(rec.order);
            for (int j = 0; j < rec.order; ++j) im[j] = *ptr++;
            gens.push_back(Perm(std::move(im)));
        }
        catalog.push_back({"sg" + std::to_string(rec.order) + "_" + std::to_string(rec.index),
                           Group::generated_by(rec.order, gens)});
    }
    return catalog;
}

// ---------------------------------------------------------------------------
// Named fixtures

namespace {

Perm c(std::initializer_list<std::initializer_list<int>> cycles, int n) {
    std::vector<std::vector<int>> cs;
    for (auto& cc : cycles) cs.emplace_back(cc);
    return Perm::from_cycles(cs, n);
}

// (F3^3, sign-twisted standard S4-module) x| S4 acting affinely on 27 points.
// Points encode vectors of F3^3 in base 3; sigma acts through the sum-zero
// model of F3^4 with a global sign twist, translations add.
struct C32Cover {
    // matrix action of (sigma, sign) on coordinates
    static std::array<int, 3> act(const std::array<int, 3>& v, const std::array<int, 4>& sigma_inv,
                                  bool negate) {
        // w in F3^4 with w_i = v_i (i < 3), w_3 = -(v0+v1+v2)
        std::array<int, 4> w{};
        for (int i = 0; i < 3; ++i) w[i] = v[i];
        w[3] = ((9 - v[0] - v[1] - v[2]) % 3 + 3) % 3;
        std::array<int, 4> sw{};
        for (int j = 0; j < 4; ++j) sw[j] = w[sigma_inv[j]];
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i) {
            int val = (sw[i] - sw[3] + 6) % 3;
            out[i] = negate ? (3 - val) % 3 : val;
        }
        return out;
    }

    static Perm lift(const std::array<int, 4>& sigma, bool odd, const std::array<int, 3>& trans) {
        std::array<int, 4> sigma_inv{};
        for (int i = 0; i < 4; ++i) sigma_inv[sigma[i]] = i;
        std::vector<int> im(27);
        for (int code = 0; code < 27; ++code) {
            std::array<int, 3> v{code % 3, (code / 3) % 3, code / 9};
            auto w = act(v, sigma_inv, odd);
            for (int i = 0; i < 3; ++i) w[i] = (w[i] + trans[i]) % 3;
            im[code] = w[0] + 3 * w[1] + 9 * w[2];
        }
        return Perm(std::move(im));
    }
};

std::vector<NamedMapEntry> build_named_maps(); // forward

} // namespace

UnorientedMap tetrahedron_map() {
    Group g = symmetric_group(4);
    return UnorientedMap::algebraic(g, c({{0, 1}}, 4), c({{1, 2}}, 4), c({{2, 3}}, 4));
}

OrientedMap s7_oriented_example() {
    Group g = symmetric_group(7);
    return OrientedMap::algebraic(g, c({{0, 1, 2, 3, 4, 5, 6}}, 7), c({{0, 1}}, 7));
}

OrientedMap psl27_example() {
    GaloisField f(7);
    Perm r = projective_action(f, {1, 1, 0, 1});
    Perm l = projective_action(f, {0, 6, 1, 0}); // [[0, -1], [1, 0]]
    Group g = Group::generated_by(8, {r, l});
    return OrientedMap::algebraic(g, r, l);
}

OrientedMap psl28_example() {
    GaloisField f(8);
    std::uint64_t a = f.primitive_element(), b = 1;
    // r = [[a, 0], [-ab + a^-1 b, a^-1]], l = [[1, b], [0, 1]]
    std::uint64_t lower = f.add(f.neg(f.mul(a, b)), f.mul(f.inv(a), b));
    Perm r = projective_action(f, {a, 0, lower, f.inv(a)});
    Perm l = projective_action(f, {1, b, 0, 1});
    Group g = Group::generated_by(9, {r, l});
    return OrientedMap::algebraic(g, r, l);
}

UnorientedMap s7_unoriented_example() {
    Group g = symmetric_group(7);
    // r = (2 7)(4 5)(3 6), t = (1 2)(3 7)(4 6), l = (1 2), written 0-based
    Perm r = c({{1, 6}, {3, 4}, {2, 5}}, 7);
    Perm t = c({{0, 1}, {2, 6}, {3, 5}}, 7);
    Perm l = c({{0, 1}}, 7);
    return UnorientedMap::algebraic(g, t, r, l);
}

UnorientedMap s8_unoriented_example() {
    Group g = symmetric_group(8);
    // r = (2 8)(3 7)(4 6), t = (1 2)(3 8)(4 7)(5 6), l = (1 2), written 0-based
    Perm r = c({{1, 7}, {2, 6}, {3, 5}}, 8);
    Perm t = c({{0, 1}, {2, 7}, {3, 6}, {4, 5}}, 8);
    Perm l = c({{0, 1}}, 8);
    return UnorientedMap::algebraic(g, t, r, l);
}

UnorientedMap s4_unoriented_example() {
    Group g = symmetric_group(4);
    return UnorientedMap::algebraic(g, c({{0, 1}, {2, 3}}, 4), c({{0, 2}}, 4), c({{0, 1}}, 4));
}

UnorientedMap pgl27_primitive_example() {
    Group g = pgl2(7);
    const auto& elems = g.elements();
    // least involution pair with <r, t> = D16, then least commuting l outside
    for (const auto& r : elems) {
        if (r.order() != 2) continue;
        for (const auto& t : elems) {
            if (t.order() != 2) continue;
            if (generated_order(g.degree(), {r, t}) != 16) continue;
            Group d16 = Group::generated_by(g.degree(), {r, t});
            for (const auto& l : elems) {
                if (l.order() != 2 || !(t * l == l * t) || d16.contains(l)) continue;
                if (generated_order(g.degree(), {r, t, l}) != g.order()) continue;
                return UnorientedMap::algebraic(g, t, r, l);
            }
        }
    }
    throw domain_error("pgl27_primitive_example: no valid triple found");
}

UnorientedMap c32_cover_fixture() {
    // base triple of the C(3,2) map: r = (1 3), t = (1 2)(3 4), l = (1 2)
    std::array<int, 4> r_sigma{2, 1, 0, 3}, t_sigma{1, 0, 3, 2}, l_sigma{1, 0, 2, 3};
    std::vector<std::array<int, 3>> vecs;
    for (int code = 0; code < 27; ++code)
        vecs.push_back({code % 3, (code / 3) % 3, code / 9});

    auto involution_lifts = [&](const std::array<int, 4>& sigma, bool odd) {
        std::vector<Perm> out;
        for (const auto& v : vecs) {
            Perm p = C32Cover::lift(sigma, odd, v);
            if (p.order() == 2) out.push_back(p);
        }
        return out;
    };
    auto ts = involution_lifts(t_sigma, false);
    auto rs = involution_lifts(r_sigma, true);
    auto ls = involution_lifts(l_sigma, true);

    for (const auto& t : ts)
        for (const auto& r : rs) {
            if (generated_order(27, {r, t}) != 8) continue;
            for (const auto& l : ls) {
                if (!(t * l == l * t)) continue;
                if (generated_order(27, {t, r, l}) != 648) continue;
                Group g = Group::generated_by(27, {t, r, l});
                return UnorientedMap::algebraic(g, t, r, l);
            }
        }
    throw domain_error("c32_cover_fixture: no generating lift found");
}

UnorientedMap nonregular_path_fixture() {
    Perm t = c({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 8);
    Perm r = c({{0, 1}, {2, 4}, {3, 5}, {6, 7}}, 8);
    Perm l = c({{0, 2}, {1, 3}, {4, 6}, {5, 7}}, 8);
    return UnorientedMap::combinatorial(t, r, l);
}

const std::vector<CatalogEntry>& named_fixture_groups() {
    static std::mutex lock;
    static std::vector<CatalogEntry> fixtures;
    std::lock_guard<std::mutex> lk(lock);
    if (!fixtures.empty()) return fixtures;
    fixtures.push_back({"S4", symmetric_group(4)});
    fixtures.push_back({"S5", symmetric_group(5)});
    fixtures.push_back({"S6", symmetric_group(6)});
    fixtures.push_back({"S7", symmetric_group(7)});
    fixtures.push_back({"S8", symmetric_group(8)});
    fixtures.push_back({"A4", alternating_group(4)});
    fixtures.push_back({"A5", alternating_group(5)});
    fixtures.push_back({"PSL(2,7)", psl2(7)});
    fixtures.push_back({"PSL(2,8)", psl2(8)});
    fixtures.push_back({"PGL(2,7)", pgl2(7)});
    fixtures.push_back({"C32cover", c32_cover_fixture().algebraic_form().group});
    return fixtures;
}

std::vector<CatalogEntry> bundled_catalog() {
    std::vector<CatalogEntry> out = small_group_catalog();
    for (const auto& e : named_fixture_groups()) out.push_back(e);
    return out;
}

std::optional<Group> catalog_group(const std::string& name) {
    for (const auto& e : small_group_catalog())
        if (e.name == name) return e.group;
    for (const auto& e : named_fixture_groups())
        if (e.name == name) return e.group;
    return std::nullopt;
}

namespace {

std::vector<NamedMapEntry> build_named_maps() {
    std::vector<NamedMapEntry> maps;
    auto push_u = [&](const std::string& name, UnorientedMap m) {
        maps.push_back({name, MapKind::unoriented, std::move(m), std::nullopt});
    };
    auto push_o = [&](const std::string& name, OrientedMap m) {
        maps.push_back({name, MapKind::oriented, std::nullopt, std::move(m)});
    };
    push_u("tetrahedron", tetrahedron_map());
    push_o("s7-oriented", s7_oriented_example());
    push_o("psl27-example", psl27_example());
    push_o("psl28-example", psl28_example());
    push_u("s7-example", s7_unoriented_example());
    push_u("s8-example", s8_unoriented_example());
    push_u("s4-example", s4_unoriented_example());
    push_u("pgl27-d16", pgl27_primitive_example());
    push_u("c32-cover", c32_cover_fixture());
    push_u("path3", nonregular_path_fixture());
    return maps;
}

} // namespace

const std::vector<NamedMapEntry>& named_fixture_maps() {
    static std::mutex lock;
    static std::vector<NamedMapEntry> maps;
    std::lock_guard<std::mutex> lk(lock);
    if (maps.empty()) maps = build_named_maps();
    return maps;
}

std::optional<NamedMapEntry> catalog_map(const std::string& name) {
    for (const auto& e : named_fixture_maps())
        if (e.name == name) return e;
    return std::nullopt;
}

} // namespace mapkit
