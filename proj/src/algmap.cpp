#include "mapkit/algmap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mapkit/common.hpp"

namespace mapkit {

namespace {

bool involution_or_identity(const Perm& p) { return p.order() <= 2; }

bool fixed_point_free(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) == i) return false;
    return p.degree() > 0;
}

// left-translation action of g on the element table
Perm left_translation(const Group& grp, const Perm& g) {
    const auto& elems = grp.elements();
    std::vector<int> im(elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
        im[i] = grp.element_index(g * elems[i]);
    return Perm(std::move(im));
}

std::uint64_t subgroup_index(const Group& g, const std::vector<Perm>& gens) {
    std::vector<Perm> nonid;
    for (const auto& p : gens)
        if (!p.is_identity()) nonid.push_back(p);
    return g.order() / generated_order(g.degree(), nonid);
}

} // namespace

// ---------------------------------------------------------------------------
// Construction

UnorientedMap UnorientedMap::combinatorial(Perm t, Perm r, Perm l) {
    if (t.degree() != r.degree() || r.degree() != l.degree())
        throw domain_error("map: flag permutations must share a degree");
    UnorientedMap m;
    m.flags_ = static_cast<std::uint64_t>(t.degree());
    m.comb_ = {std::move(t), std::move(r), std::move(l)};
    return m;
}

UnorientedMap UnorientedMap::algebraic(const Group& g, const Perm& t, const Perm& r,
                                       const Perm& l) {
    for (const Perm* p : {&t, &r, &l})
        if (!g.contains(*p)) throw domain_error("algebraic map: element outside the group");
    std::vector<Perm> nonid;
    for (const Perm* p : {&t, &r, &l})
        if (!p->is_identity()) nonid.push_back(*p);
    if (generated_order(g.degree(), nonid) != g.order())
        throw domain_error("algebraic map: the designated elements do not generate the group");
    UnorientedMap m;
    m.flags_ = g.order();
    m.alg_ = AlgebraicForm{g, t, r, l};
    return m;
}

const AlgebraicForm& UnorientedMap::algebraic_form() const {
    if (!alg_) throw domain_error("map has no algebraic form");
    return *alg_;
}

std::array<Perm, 3> UnorientedMap::flag_perms() const {
    if (comb_) return *comb_;
    const auto& a = *alg_;
    return {left_translation(a.group, a.t), left_translation(a.group, a.r),
            left_translation(a.group, a.l)};
}

DegeneracyFlags UnorientedMap::degeneracy() const {
    DegeneracyFlags d;
    const Perm* t;
    const Perm* r;
    const Perm* l;
    if (alg_) {
        t = &alg_->t;
        r = &alg_->r;
        l = &alg_->l;
    } else {
        t = &(*comb_)[0];
        r = &(*comb_)[1];
        l = &(*comb_)[2];
    }
    d.t_identity = t->is_identity();
    d.r_identity = r->is_identity();
    d.l_identity = l->is_identity();
    d.l_equals_t = !d.l_identity && (*l == *t);
    return d;
}

OrientedMap OrientedMap::combinatorial(Perm r, Perm l) {
    if (r.degree() != l.degree())
        throw domain_error("map: dart permutations must share a degree");
    OrientedMap m;
    m.darts_ = static_cast<std::uint64_t>(r.degree());
    m.comb_ = {std::move(r), std::move(l)};
    return m;
}

OrientedMap OrientedMap::algebraic(const Group& g, const Perm& r, const Perm& l) {
    for (const Perm* p : {&r, &l})
        if (!g.contains(*p)) throw domain_error("algebraic map: element outside the group");
    std::vector<Perm> nonid;
    for (const Perm* p : {&r, &l})
        if (!p->is_identity()) nonid.push_back(*p);
    if (generated_order(g.degree(), nonid) != g.order())
        throw domain_error("algebraic map: the designated elements do not generate the group");
    OrientedMap m;
    m.darts_ = g.order();
    m.alg_ = AlgebraicForm{g, Perm(g.degree()), r, l};
    return m;
}

const AlgebraicForm& OrientedMap::algebraic_form() const {
    if (!alg_) throw domain_error("map has no algebraic form");
    return *alg_;
}

std::array<Perm, 2> OrientedMap::dart_perms() const {
    if (comb_) return *comb_;
    const auto& a = *alg_;
    return {left_translation(a.group, a.r), left_translation(a.group, a.l)};
}

DegeneracyFlags OrientedMap::degeneracy() const {
    DegeneracyFlags d;
    if (alg_) {
        d.r_identity = alg_->r.is_identity();
        d.l_identity = alg_->l.is_identity();
    } else {
        d.r_identity = (*comb_)[0].is_identity();
        d.l_identity = (*comb_)[1].is_identity();
    }
    return d;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

ValidationReport validate_impl(const Perm& t, const Perm& r, const Perm& l, bool oriented,
                               const DegeneracyFlags& degen) {
    ValidationReport rep;
    rep.degeneracy = degen;
    int n = r.degree();
    rep.nonempty = n > 0;
    rep.t_involution_or_identity = involution_or_identity(t);
    rep.r_involution_or_identity = oriented ? !r.is_identity() : involution_or_identity(r);
    rep.l_involution_or_identity = involution_or_identity(l);
    rep.commute_tl = (t * l == l * t);
    std::vector<Perm> gens = oriented ? std::vector<Perm>{r, l} : std::vector<Perm>{t, r, l};
    rep.transitive = rep.nonempty && orbits(gens, n).size() == 1;
    rep.t_fpf = fixed_point_free(t);
    rep.r_fpf = fixed_point_free(r);
    rep.l_fpf = fixed_point_free(l);

    auto note = [&](bool ok, const char* what) {
        if (!ok) rep.failures.push_back(what);
        return ok;
    };
    rep.basic_pass = note(rep.nonempty, "empty flag set");
    rep.basic_pass &= note(rep.t_involution_or_identity, "t is not an involution or identity");
    rep.basic_pass &= note(rep.r_involution_or_identity,
                           oriented ? "r is the identity" : "r is not an involution or identity");
    rep.basic_pass &= note(rep.l_involution_or_identity, "l is not an involution or identity");
    rep.basic_pass &= note(rep.commute_tl, "t and l do not commute");
    rep.basic_pass &= note(rep.transitive, "monodromy group is not transitive");

    bool s = rep.basic_pass;
    if (!oriented) {
        s = s && rep.t_fpf && t.order() == 2;
        s = s && rep.r_fpf && r.order() == 2;
    } else {
        s = s && rep.r_fpf;
    }
    s = s && rep.l_fpf && l.order() == 2;
    s = s && !degen.any();
    rep.strict_pass = s;
    if (rep.basic_pass && !s) {
        if (!oriented && !(rep.t_fpf && t.order() == 2))
            rep.failures.push_back("strict: t is not a fixed-point-free involution");
        if (!oriented && !(rep.r_fpf && r.order() == 2))
            rep.failures.push_back("strict: r is not a fixed-point-free involution");
        if (oriented && !rep.r_fpf) rep.failures.push_back("strict: r has fixed points");
        if (!(rep.l_fpf && l.order() == 2))
            rep.failures.push_back("strict: l is not a fixed-point-free involution");
        if (degen.l_identity) rep.failures.push_back("degenerate: l = 1");
        if (degen.l_equals_t) rep.failures.push_back("redundant: l = t");
        if (degen.t_identity) rep.failures.push_back("degenerate: t = 1");
        if (degen.r_identity) rep.failures.push_back("degenerate: r = 1");
    }
    return rep;
}

} // namespace

ValidationReport validate_unoriented(const UnorientedMap& m, bool strict) {
    auto perms = m.flag_perms();
    ValidationReport rep = validate_impl(perms[0], perms[1], perms[2], false, m.degeneracy());
    (void)strict;
    return rep;
}

ValidationReport validate_oriented(const OrientedMap& m, bool strict) {
    auto perms = m.dart_perms();
    ValidationReport rep =
        validate_impl(Perm(perms[0].degree()), perms[0], perms[1], true, m.degeneracy());
    (void)strict;
    return rep;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

std::int64_t euler(std::uint64_t v, std::uint64_t e, std::uint64_t f) {
    return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(e) +
           static_cast<std::int64_t>(f);
}

void fill_genus(MapInvariants& inv, const DegeneracyFlags& degen, bool has_semi) {
    if (degen.any() || has_semi) {
        inv.genus.reset();
        if (degen.l_identity)
            inv.genus_tag = "disc (boundary)";
        else if (degen.l_equals_t)
            inv.genus_tag = "sphere (redundant)";
        else
            inv.genus_tag = "n/a (degenerate)";
        return;
    }
    inv.genus = inv.orientable ? (2 - inv.chi) / 2 : 2 - inv.chi;
    inv.genus_tag = "";
}

} // namespace

MapInvariants invariants(const UnorientedMap& m) {
    MapInvariants inv;
    DegeneracyFlags degen = m.degeneracy();
    if (m.has_algebraic()) {
        const auto& a = m.algebraic_form();
        const Group& g = a.group;
        inv.v = subgroup_index(g, {a.t, a.r});
        inv.e = subgroup_index(g, {a.t, a.l});
        inv.f = subgroup_index(g, {a.r, a.l});
        std::uint64_t edge_stab = g.order() / inv.e;
        inv.semi_edges = edge_stab < 4 ? inv.e : 0;
        inv.orientable = subgroup_index(g, {a.t * a.r, a.r * a.l}) == 2;
        inv.aut_order = g.order();
        inv.regular = true;
        if (g.order() <= limits().enum_bound) {
            GraphSummary gs = underlying_graph(m);
            inv.multi_edge_profile = gs.multi_edge_profile;
            inv.semi_edges = gs.semi_edges;
        }
    } else {
        auto perms = m.flag_perms();
        const Perm &t = perms[0], &r = perms[1], &l = perms[2];
        int n = t.degree();
        inv.v = orbits({t, r}, n).size();
        inv.f = orbits({r, l}, n).size();
        auto eorbs = orbits({t, l}, n);
        inv.e = eorbs.size();
        for (const auto& orb : eorbs)
            if (orb.size() < 4) ++inv.semi_edges;
        std::uint64_t mon = generated_order(n, {t, r, l});
        std::uint64_t even = generated_order(n, {t * r, r * l});
        inv.orientable = (mon / even) == 2;
        AutCount ac = automorphism_count(m);
        inv.aut_order = ac.count;
        inv.regular = ac.regular;
        GraphSummary gs = underlying_graph(m);
        inv.multi_edge_profile = gs.multi_edge_profile;
    }
    inv.chi = euler(inv.v, inv.e, inv.f);
    fill_genus(inv, degen, inv.semi_edges > 0);
    return inv;
}

MapInvariants invariants(const OrientedMap& m) {
    MapInvariants inv;
    DegeneracyFlags degen = m.degeneracy();
    if (m.has_algebraic()) {
        const auto& a = m.algebraic_form();
        const Group& g = a.group;
        inv.v = subgroup_index(g, {a.r});
        inv.e = subgroup_index(g, {a.l});
        inv.f = subgroup_index(g, {a.r * a.l});
        inv.semi_edges = a.l.is_identity() ? inv.e : 0;
        inv.aut_order = g.order();
        inv.regular = true;
        inv.reflexible = is_reflexible(m);
        if (g.order() <= limits().enum_bound) {
            GraphSummary gs = underlying_graph(m);
            inv.multi_edge_profile = gs.multi_edge_profile;
        }
    } else {
        auto perms = m.dart_perms();
        const Perm &r = perms[0], &l = perms[1];
        int n = r.degree();
        inv.v = orbits({r}, n).size();
        auto eorbs = orbits({l}, n);
        inv.e = eorbs.size();
        for (const auto& orb : eorbs)
            if (orb.size() < 2) ++inv.semi_edges;
        inv.f = orbits({r * l}, n).size();
        AutCount ac = automorphism_count(m);
        inv.aut_order = ac.count;
        inv.regular = ac.regular;
        GraphSummary gs = underlying_graph(m);
        inv.multi_edge_profile = gs.multi_edge_profile;
    }
    inv.orientable = true;
    inv.chi = euler(inv.v, inv.e, inv.f);
    fill_genus(inv, degen, inv.semi_edges > 0);
    return inv;
}

// ---------------------------------------------------------------------------
// Flag-transport automorphism counting

namespace {

AutCount transport_count(const std::vector<Perm>& gens, int n) {
    if (static_cast<std::uint64_t>(n) > limits().flag_bound)
        throw resource_error("automorphism_count: flag set exceeds bound " +
                             std::to_string(limits().flag_bound));
    AutCount out;
    if (n == 0) return out;
    if (orbits(gens, n).size() != 1)
        throw domain_error("automorphism_count: monodromy group is not transitive");
    std::vector<int> img(n), queue(n);
    for (int c = 0; c < n; ++c) {
        std::fill(img.begin(), img.end(), -1);
        img[0] = c;
        queue[0] = 0;
        int head = 0, tail = 1;
        bool ok = true;
        while (ok && head < tail) {
            int x = queue[head++];
            for (const auto& s : gens) {
                int y = s(x), want = s(img[x]);
                if (img[y] == -1) {
                    img[y] = want;
                    queue[tail++] = y;
                } else if (img[y] != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++out.count;
    }
    out.regular = out.count == static_cast<std::uint64_t>(n);
    return out;
}

} // namespace

AutCount automorphism_count(const UnorientedMap& m) {
    auto perms = m.flag_perms();
    return transport_count({perms[0], perms[1], perms[2]}, perms[0].degree());
}

AutCount automorphism_count(const OrientedMap& m) {
    auto perms = m.dart_perms();
    return transport_count({perms[0], perms[1]}, perms[0].degree());
}

// ---------------------------------------------------------------------------
// Reflexibility (graph trick)

bool is_reflexible(const OrientedMap& m) {
    const auto& a = m.algebraic_form();
    int n = a.group.degree();
    Perm gr = embed_left(a.r, 2 * n) * embed_right(a.r.inverse(), n, 2 * n);
    Perm gl = embed_left(a.l, 2 * n) * embed_right(a.l, n, 2 * n);
    return generated_order(2 * n, {gr, gl}) == a.group.order();
}

// ---------------------------------------------------------------------------
// Underlying graph

namespace {

GraphSummary graph_from_orbits(const std::vector<std::vector<int>>& vorbs,
                               const std::vector<std::vector<int>>& eorbs, bool oriented) {
    GraphSummary gs;
    gs.vertices = vorbs.size();
    gs.edges = eorbs.size();

    int n = 0;
    for (const auto& o : vorbs) n += static_cast<int>(o.size());
    std::vector<int> vertex_of(n);
    for (size_t vi = 0; vi < vorbs.size(); ++vi)
        for (int x : vorbs[vi]) vertex_of[x] = static_cast<int>(vi);

    const std::uint64_t full_orbit = oriented ? 2 : 4;
    std::map<std::pair<int, int>, std::uint64_t> bundles;
    std::vector<std::uint64_t> degree(vorbs.size(), 0);
    for (const auto& eo : eorbs) {
        std::set<int> ends;
        for (int x : eo) ends.insert(vertex_of[x]);
        if (eo.size() < full_orbit || ends.size() == 1) {
            if (eo.size() < full_orbit) {
                ++gs.semi_edges;
                degree[*ends.begin()] += 1;
            } else {
                ++gs.loops;
                degree[*ends.begin()] += 2;
            }
        } else {
            auto it = ends.begin();
            int u = *it++;
            int v = *it;
            bundles[{std::min(u, v), std::max(u, v)}]++;
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    for (auto& [pair, cnt] : bundles) gs.multi_edge_profile.push_back(cnt);
    std::sort(gs.multi_edge_profile.begin(), gs.multi_edge_profile.end());
    gs.degree_sequence = degree;
    std::sort(gs.degree_sequence.begin(), gs.degree_sequence.end());
    gs.simple = gs.loops == 0 && gs.semi_edges == 0 &&
                (gs.multi_edge_profile.empty() || gs.multi_edge_profile.back() == 1);

    if (gs.vertices == 2 && gs.loops == 0 && gs.semi_edges == 0 && bundles.size() == 1) {
        gs.dipole = true;
        gs.param_m = gs.edges;
    } else if (gs.vertices == 1 && gs.edges >= 1 && gs.semi_edges == gs.edges) {
        gs.semistar = true;
        gs.param_m = gs.edges;
    } else if (gs.vertices >= 3 && gs.loops == 0 && gs.semi_edges == 0 &&
               bundles.size() == gs.vertices) {
        bool uniform = true;
        std::uint64_t mult = gs.multi_edge_profile.front();
        for (auto c : gs.multi_edge_profile) uniform &= (c == mult);
        std::vector<int> nbr_count(vorbs.size(), 0);
        for (auto& [pair, cnt] : bundles) {
            nbr_count[pair.first]++;
            nbr_count[pair.second]++;
        }
        bool two_each =
            std::all_of(nbr_count.begin(), nbr_count.end(), [](int c) { return c == 2; });
        if (uniform && two_each) {
            gs.cycle_power = true;
            gs.param_n = gs.vertices;
            gs.param_m = mult;
        }
    }
    return gs;
}

} // namespace

GraphSummary underlying_graph(const UnorientedMap& m) {
    auto perms = m.flag_perms();
    int n = perms[0].degree();
    return graph_from_orbits(orbits({perms[0], perms[1]}, n), orbits({perms[0], perms[2]}, n),
                             false);
}

GraphSummary underlying_graph(const OrientedMap& m) {
    auto perms = m.dart_perms();
    int n = perms[0].degree();
    return graph_from_orbits(orbits({perms[0]}, n), orbits({perms[1]}, n), true);
}

// ---------------------------------------------------------------------------
// Quotient maps

UnorientedMap quotient_map(const UnorientedMap& m, const Group& n) {
    const auto& a = m.algebraic_form();
    Quotient q(a.group, n);
    return UnorientedMap::algebraic(q.group(), q.project(a.t), q.project(a.r), q.project(a.l));
}

OrientedMap quotient_map(const OrientedMap& m, const Group& n) {
    const auto& a = m.algebraic_form();
    Quotient q(a.group, n);
    return OrientedMap::algebraic(q.group(), q.project(a.r), q.project(a.l));
}

} // namespace mapkit
