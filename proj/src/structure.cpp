#include "mapkit/structure.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

#include "mapkit/common.hpp"
#include "mapkit/gf.hpp"

namespace mapkit {

// ---------------------------------------------------------------------------
// Arithmetic helpers

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

PiSet pi_of(std::uint64_t n) {
    if (n == 0) throw domain_error("pi_of: n must be positive");
    PiSet out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

bool is_pi_number(std::uint64_t n, const PiSet& pi) {
    for (auto& [p, e] : factorize(n))
        if (!std::binary_search(pi.begin(), pi.end(), p)) return false;
    return true;
}

std::uint64_t pi_part(std::uint64_t n, const PiSet& pi) {
    std::uint64_t part = 1;
    for (auto& [p, e] : factorize(n))
        if (std::binary_search(pi.begin(), pi.end(), p))
            for (int i = 0; i < e; ++i) part *= p;
    return part;
}

PiSet pi_complement_in(std::uint64_t n, const PiSet& pi) {
    PiSet out;
    for (auto p : pi_of(n))
        if (!std::binary_search(pi.begin(), pi.end(), p)) out.push_back(p);
    return out;
}

PiSet pi_union(const PiSet& a, const PiSet& b) {
    PiSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PiSet pi_minus(const PiSet& a, const PiSet& b) {
    PiSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string pi_to_string(const PiSet& pi) {
    std::string s = "{";
    for (size_t i = 0; i < pi.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pi[i]);
    }
    return s + "}";
}

namespace {

bool is_prime(std::uint64_t n) {
    auto f = factorize(n);
    return n > 1 && f.size() == 1 && f[0].second == 1;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(m),
                 nr = static_cast<std::int64_t>(a % m);
    while (nr) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw domain_error("mod_inverse: not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

} // namespace

// ---------------------------------------------------------------------------
// Derived series and solvability

namespace {

Group derived_subgroup(const Group& g) {
    std::vector<Perm> comms;
    const auto& gs = g.generators();
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j) {
            Perm c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure(g, comms);
}

} // namespace

std::vector<Group> derived_series(const Group& g) {
    std::vector<Group> series = {g};
    while (true) {
        Group d = derived_subgroup(series.back());
        if (d.order() == series.back().order()) break;
        series.push_back(d);
        if (d.order() == 1) break;
    }
    return series;
}

bool is_solvable(const Group& g) { return derived_series(g).back().order() == 1; }

// ---------------------------------------------------------------------------
// Sylow subgroups by deterministic normalizer ascent

Group sylow(const Group& g, std::uint64_t p) {
    if (!is_prime(p)) throw domain_error("sylow: p must be prime");
    std::uint64_t target = pi_part(g.order(), {p});
    if (target == 1) return Group::trivial(g.degree());

    // seed: p-part of the first element with order divisible by p
    Perm seed;
    for (const auto& x : g.elements()) {
        std::uint64_t o = x.order();
        if (o % p == 0) {
            seed = x.power(static_cast<std::int64_t>(o / pi_part(o, {p})));
            break;
        }
    }
    Group pgrp = Group::generated_by(g.degree(), {seed});
    while (pgrp.order() < target) {
        Group n = normalizer(g, pgrp);
        bool extended = false;
        for (const auto& y : n.elements()) {
            if (y.is_identity() || !is_power_of(y.order(), p) || pgrp.contains(y)) continue;
            std::vector<Perm> gens = pgrp.generators();
            gens.push_back(y);
            pgrp = Group::generated_by(g.degree(), gens);
            extended = true;
            break;
        }
        if (!extended) throw domain_error("sylow: normalizer ascent stalled");
    }
    return pgrp;
}

// ---------------------------------------------------------------------------
// pi-cores and the Fitting subgroup

Group pi_core(const Group& g, const PiSet& pi) {
    // O_pi(G) = < x : the normal closure of x is a pi-group >; scanning
    // conjugacy class representatives suffices since the condition is
    // conjugation invariant.
    std::vector<Perm> gens;
    Group acc = Group::trivial(g.degree());
    for (const auto& cls : g.conjugacy_classes()) {
        const Perm& x = g.elements()[cls.front()];
        if (x.is_identity() || !is_pi_number(x.order(), pi)) continue;
        if (acc.contains(x)) continue;
        Group n = normal_closure(g, {x});
        if (is_pi_number(n.order(), pi)) {
            for (const auto& y : n.generators()) gens.push_back(y);
            acc = Group::generated_by(g.degree(), gens);
        }
    }
    return acc;
}

Group p_core(const Group& g, std::uint64_t p) {
    if (!is_prime(p)) throw domain_error("p_core: p must be prime");
    return pi_core(g, {p});
}

Group fitting(const Group& g) {
    std::vector<Perm> gens;
    if (g.order() > 1)
        for (auto p : pi_of(g.order())) {
            Group op = p_core(g, p);
            for (const auto& x : op.generators()) gens.push_back(x);
        }
    return Group::generated_by(g.degree(), gens);
}

// ---------------------------------------------------------------------------
// Minimal normal subgroups

Group minimal_normal_subgroup(const Group& g) {
    if (g.order() == 1) throw domain_error("minimal_normal_subgroup: group is trivial");
    Group best = g;
    bool found = false;
    for (const auto& cls : g.conjugacy_classes()) {
        const Perm& x = g.elements()[cls.front()];
        if (x.is_identity()) continue;
        Group n = normal_closure(g, {x});
        if (!found || n.order() < best.order()) {
            best = n;
            found = true;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Hall subgroups

namespace {

// Gaschuetz averaging: complement to an abelian normal subgroup of coprime
// index m.  Corrects a transversal {t_i} by d(i) = (prod_j cocycle(i,j))^(1/m).
Group coprime_complement(const Group& k, const Group& n) {
    CosetAction act(k, n);
    const std::uint64_t m = act.index();
    const auto& reps = act.coset_reps();

    std::uint64_t expn = 1;
    for (const auto& x : n.generators()) expn = std::lcm(expn, x.order());
    if (expn == 1) return k;
    std::uint64_t minv = mod_inverse(m % expn, expn);

    auto cocycle = [&](int i, int j) {
        Perm prod = reps[i] * reps[j];
        return prod * reps[act.coset_of(prod)].inverse();
    };

    std::vector<Perm> cgens;
    for (const auto& gen : k.generators()) {
        int i = act.coset_of(gen);
        Perm e(k.degree());
        for (std::uint64_t j = 0; j < m; ++j) e = e * cocycle(i, static_cast<int>(j));
        Perm d = e.power(static_cast<std::int64_t>(minv));
        cgens.push_back(d.inverse() * reps[i]);
    }
    Group c = Group::generated_by(k.degree(), cgens);
    if (c.order() != m) throw domain_error("coprime_complement: averaging failed");
    return c;
}

HallResult hall_solvable(const Group& g, const PiSet& pi) {
    std::uint64_t target = pi_part(g.order(), pi);
    if (target == g.order()) return {HallResult::Status::found, g};
    if (target == 1) return {HallResult::Status::found, Group::trivial(g.degree())};

    Group n = minimal_normal_subgroup(g); // elementary abelian q-group
    std::uint64_t q = pi_of(n.order()).front();
    Quotient quo(g, n);
    HallResult sub = hall_solvable(quo.group(), pi);

    // preimage of the quotient Hall subgroup: the quotient acts regularly on
    // the cosets, so rep[hbar(0)] projects onto hbar
    std::vector<Perm> pre = n.generators();
    for (const auto& hbar : sub.subgroup->generators())
        pre.push_back(quo.action().coset_reps()[hbar(0)]);
    Group k = Group::generated_by(g.degree(), pre);

    if (std::binary_search(pi.begin(), pi.end(), q))
        return {HallResult::Status::found, k};
    return {HallResult::Status::found, coprime_complement(k, n)};
}

HallResult hall_insolvable(const Group& g, const PiSet& pi) {
    const std::uint64_t target = pi_part(g.order(), pi);
    const auto& elems = g.elements();

    std::vector<int> pi_elems;
    for (size_t i = 0; i < elems.size(); ++i)
        if (!elems[i].is_identity() && is_pi_number(elems[i].order(), pi))
            pi_elems.push_back(static_cast<int>(i));
    std::vector<int> reps;
    for (const auto& cls : g.conjugacy_classes()) {
        const Perm& x = elems[cls.front()];
        if (!x.is_identity() && is_pi_number(x.order(), pi)) reps.push_back(cls.front());
    }

    std::uint64_t budget = limits().hall_budget;
    std::vector<Perm> probe_gens;
    auto probe = [&](std::initializer_list<int> ids) -> int {
        if (budget == 0) return -1; // 1 found, 0 no, -1 budget exhausted
        --budget;
        probe_gens.clear();
        for (int i : ids) probe_gens.push_back(elems[i]);
        return generated_order(g.degree(), probe_gens) == target ? 1 : 0;
    };
    auto found = [&](std::initializer_list<int> ids) {
        std::vector<Perm> gens;
        for (int i : ids) gens.push_back(elems[i]);
        return HallResult{HallResult::Status::found, subgroup(g, gens)};
    };

    for (int r : reps) {
        int v = probe({r});
        if (v == 1) return found({r});
        if (v < 0) return {HallResult::Status::unknown, std::nullopt};
    }
    for (int r : reps)
        for (int y : pi_elems) {
            int v = probe({r, y});
            if (v == 1) return found({r, y});
            if (v < 0) return {HallResult::Status::unknown, std::nullopt};
        }
    for (int r : reps)
        for (int y : pi_elems)
            for (int z : pi_elems) {
                int v = probe({r, y, z});
                if (v == 1) return found({r, y, z});
                if (v < 0) return {HallResult::Status::unknown, std::nullopt};
            }

    // All generating sets of size <= 3 were covered up to conjugacy.  Since
    // d(H) <= max_p v_p(|H|) + 1, the scan is exhaustive when that bound is
    // at most 3; only then is failure a proof.
    int max_nu = 0;
    for (auto& [p, e] : factorize(target)) max_nu = std::max(max_nu, e);
    if (g.order() <= limits().hall_exhaustive_bound && max_nu + 1 <= 3)
        return {HallResult::Status::not_found_proved, std::nullopt};
    return {HallResult::Status::unknown, std::nullopt};
}

} // namespace

HallResult hall(const Group& g, const PiSet& pi) {
    std::uint64_t target = pi_part(g.order(), pi);
    if (target == g.order()) return {HallResult::Status::found, g};
    if (target == 1) return {HallResult::Status::found, Group::trivial(g.degree())};
    PiSet relevant;
    for (auto p : pi_of(g.order()))
        if (std::binary_search(pi.begin(), pi.end(), p)) relevant.push_back(p);
    if (relevant.size() == 1) // a Sylow subgroup always exists
        return {HallResult::Status::found, sylow(g, relevant.front())};
    if (is_solvable(g)) return hall_solvable(g, pi);
    return hall_insolvable(g, pi);
}

// ---------------------------------------------------------------------------
// Recognition

std::string RecognitionTag::to_string() const {
    switch (kind) {
        case Kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
        case Kind::dihedral: return "dihedral(" + std::to_string(n) + ")";
        case Kind::elementary_abelian:
            return "elementary_abelian(" + std::to_string(n) + "," + std::to_string(k) + ")";
        case Kind::sym4: return "sym4";
        case Kind::alt4: return "alt4";
        case Kind::psl2: return "psl2(" + std::to_string(n) + ")";
        case Kind::two_group: return "two_group";
        case Kind::other: return "other";
    }
    return "other";
}

namespace {

Group reference_s4() {
    return Group::generated_by(
        4, {Perm::from_cycles({{0, 1, 2, 3}}, 4), Perm::from_cycles({{0, 1}}, 4)});
}

Group reference_a4() {
    return Group::generated_by(
        4, {Perm::from_cycles({{0, 1, 2}}, 4), Perm::from_cycles({{0, 1}, {2, 3}}, 4)});
}

// q -> |PSL(2,q)| for prime powers 4 <= q <= 32 (below that PSL(2,q) is
// solvable and covered by other tags)
const std::vector<std::pair<std::uint64_t, std::uint64_t>>& psl2_orders() {
    static const std::vector<std::pair<std::uint64_t, std::uint64_t>> table = [] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
        for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
            t.emplace_back(q, q * (q * q - 1) / (q % 2 ? 2 : 1));
        }
        return t;
    }();
    return table;
}

bool is_simple_nonabelian(const Group& g) {
    if (g.order() == 1 || g.is_abelian()) return false;
    for (const auto& cls : g.conjugacy_classes()) {
        const Perm& x = g.elements()[cls.front()];
        if (x.is_identity()) continue;
        if (normal_closure(g, {x}).order() != g.order()) return false;
    }
    return true;
}

// element-order statistics comparison against the constructed reference
bool psl2_profile_matches(const Group& g, std::uint64_t q) {
    if (q * (q * q - 1) / (q % 2 ? 2 : 1) > limits().enum_bound) return true; // trust order+simplicity
    static std::mutex lock;
    static std::map<std::uint64_t, Group> refs;
    std::lock_guard<std::mutex> lk(lock);
    auto it = refs.find(q);
    if (it == refs.end()) it = refs.emplace(q, psl2(q)).first;
    return g.order_profile() == it->second.order_profile();
}

} // namespace

RecognitionTag recognize(const Group& g) {
    RecognitionTag tag;
    std::uint64_t n = g.order();
    if (n > limits().recognition_bound) {
        tag.note = "recognition bound exceeded";
        return tag;
    }
    if (n == 1) return {RecognitionTag::Kind::cyclic, 1, 0, {}, ""};

    const auto& profile = g.order_profile();
    std::uint64_t max_order = profile.back().first;
    if (max_order == n) {
        tag.kind = RecognitionTag::Kind::cyclic;
        tag.n = n;
        return tag;
    }

    auto fact = factorize(n);
    if (g.is_abelian()) {
        if (fact.size() == 1 && max_order == fact[0].first) {
            tag.kind = RecognitionTag::Kind::elementary_abelian;
            tag.n = fact[0].first;
            tag.k = fact[0].second;
            return tag;
        }
        if (fact.size() == 1 && fact[0].first == 2) tag.kind = RecognitionTag::Kind::two_group;
        return tag;
    }

    if (n == 24 && are_isomorphic(g, reference_s4())) {
        tag.kind = RecognitionTag::Kind::sym4;
        return tag;
    }
    if (n == 12 && are_isomorphic(g, reference_a4())) {
        tag.kind = RecognitionTag::Kind::alt4;
        return tag;
    }

    for (auto& [q, ord] : psl2_orders()) {
        if (ord != n) continue;
        if (is_simple_nonabelian(g) && psl2_profile_matches(g, q)) {
            tag.kind = RecognitionTag::Kind::psl2;
            tag.n = q;
            return tag;
        }
        break;
    }

    // dihedral(2m): cyclic subgroup of index 2 inverted by an outside involution
    if (n % 2 == 0 && n >= 6) {
        std::uint64_t m = n / 2;
        for (const auto& a : g.elements()) {
            if (a.order() != m) continue;
            Group cyc = Group::generated_by(g.degree(), {a});
            for (const auto& b : g.elements()) {
                if (b.order() != 2 || cyc.contains(b)) continue;
                if (a.conjugated_by(b) == a.inverse()) {
                    tag.kind = RecognitionTag::Kind::dihedral;
                    tag.n = n;
                    tag.witness = {a, b};
                    return tag;
                }
            }
        }
    }

    if (fact.size() == 1 && fact[0].first == 2) tag.kind = RecognitionTag::Kind::two_group;
    return tag;
}

std::vector<RecognitionTag> composition_factor_tags(const Group& g) {
    if (g.order() > limits().factor_bound)
        throw resource_error("composition_factor_tags: order " + std::to_string(g.order()) +
                             " exceeds bound " + std::to_string(limits().factor_bound));
    std::vector<RecognitionTag> tags;
    Group cur = g;
    while (cur.order() > 1) {
        Group n = minimal_normal_subgroup(cur);
        if (n.is_abelian()) {
            auto fact = factorize(n.order());
            RecognitionTag t;
            t.kind = RecognitionTag::Kind::cyclic;
            t.n = fact[0].first;
            for (int i = 0; i < fact[0].second; ++i) tags.push_back(t);
        } else {
            // chief factor: direct product of isomorphic nonabelian simples
            Group t = is_simple_nonabelian(n) ? n : minimal_normal_subgroup(n);
            RecognitionTag tag = recognize(t);
            if (tag.kind != RecognitionTag::Kind::psl2) {
                tag = RecognitionTag{};
                tag.kind = RecognitionTag::Kind::other;
                tag.n = t.order();
            }
            std::uint64_t copies = 1, rest = n.order();
            while (rest > t.order()) {
                rest /= t.order();
                ++copies;
            }
            for (std::uint64_t i = 0; i < copies; ++i) tags.push_back(tag);
        }
        cur = Quotient(cur, n).group();
    }
    return tags;
}

// ---------------------------------------------------------------------------
// Isomorphism and automorphisms

std::vector<Perm> generating_sequence(const Group& g) {
    if (g.order() == 1) return {};
    const auto& elems = g.elements();
    std::vector<int> idx(elems.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return elems[a].order() > elems[b].order(); });

    std::vector<Perm> seq;
    Group cur = Group::trivial(g.degree());
    for (int i : idx) {
        if (cur.order() == g.order()) break;
        if (elems[i].is_identity() || cur.contains(elems[i])) continue;
        seq.push_back(elems[i]);
        cur = Group::generated_by(g.degree(), seq);
    }
    return seq;
}

namespace {

struct IsoSearch {
    const Group& a;
    const Group& b;
    std::vector<Perm> gens;                 // generating sequence of a
    std::vector<std::uint64_t> part_orders; // |<g_0..g_j>|
    std::vector<std::vector<int>> cand;     // candidate image indices per level
    bool collect_all;
    std::vector<std::vector<Perm>> solutions;
    std::uint64_t cap;
    bool capped = false;
    std::vector<Perm> images;
    int total_degree;

    // collect_all: enumerate every embedding (used for Aut); otherwise stop
    // at the first isomorphism.  When a single solution is wanted the first
    // generator image may range over class representatives only.
    IsoSearch(const Group& a_, const Group& b_, bool all, std::uint64_t cap_)
        : a(a_), b(b_), collect_all(all), cap(cap_) {
        total_degree = a.degree() + b.degree();
        gens = generating_sequence(a);
        std::vector<Perm> partial;
        for (const auto& gp : gens) {
            partial.push_back(gp);
            part_orders.push_back(generated_order(a.degree(), partial));
        }
        const auto& belems = b.elements();
        for (size_t lvl = 0; lvl < gens.size(); ++lvl) {
            std::vector<int> c;
            std::uint64_t want = gens[lvl].order();
            if (lvl == 0 && !collect_all) {
                for (const auto& cls : b.conjugacy_classes())
                    if (belems[cls.front()].order() == want) c.push_back(cls.front());
            } else {
                for (size_t i = 0; i < belems.size(); ++i)
                    if (belems[i].order() == want) c.push_back(static_cast<int>(i));
            }
            cand.push_back(std::move(c));
        }
    }

    bool graph_ok(size_t upto) {
        std::vector<Perm> pairs;
        for (size_t i = 0; i <= upto; ++i)
            pairs.push_back(embed_left(gens[i], total_degree) *
                            embed_right(images[i], a.degree(), total_degree));
        return generated_order(total_degree, pairs) == part_orders[upto];
    }

    bool word_filter(size_t lvl) {
        for (size_t i = 0; i < lvl; ++i) {
            if ((gens[i] * gens[lvl]).order() != (images[i] * images[lvl]).order()) return false;
            if ((gens[i] * gens[lvl] * gens[i]).order() !=
                (images[i] * images[lvl] * images[i]).order())
                return false;
        }
        return true;
    }

    bool run(size_t lvl) { // true = stop the search
        if (lvl == gens.size()) {
            if (generated_order(b.degree(), images) != b.order()) return false;
            if (!collect_all) return true;
            solutions.push_back(images);
            if (cap && solutions.size() > cap) {
                capped = true;
                return true;
            }
            return false;
        }
        for (int ci : cand[lvl]) {
            images.resize(lvl + 1);
            images[lvl] = b.elements()[ci];
            if (!word_filter(lvl)) continue;
            if (!graph_ok(lvl)) continue;
            if (run(lvl + 1)) return true;
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const Group& a, const Group& b) {
    if (a.order() != b.order()) return false;
    if (a.order() == 1) return true;
    if (a.order() > limits().recognition_bound)
        throw resource_error("are_isomorphic: order exceeds recognition bound " +
                             std::to_string(limits().recognition_bound));
    if (a.order_profile() != b.order_profile()) return false;
    IsoSearch search(a, b, false, 0);
    return search.run(0);
}

namespace {

std::mutex aut_cache_lock;
std::map<const void*, std::pair<Group, AutomorphismSet>>& aut_cache() {
    static std::map<const void*, std::pair<Group, AutomorphismSet>> cache;
    return cache;
}

} // namespace

const AutomorphismSet& automorphisms(const Group& g) {
    std::lock_guard<std::mutex> lk(aut_cache_lock);
    auto& cache = aut_cache();
    auto it = cache.find(g.impl_id());
    if (it != cache.end()) return it->second.second;

    AutomorphismSet out;
    const auto& elems = g.elements();
    if (g.order() == 1) {
        out.maps.push_back({0});
    } else {
        IsoSearch search(g, g, true, limits().aut_bound);
        search.run(0);
        if (search.capped)
            throw resource_error("automorphisms: more than " + std::to_string(limits().aut_bound) +
                                 " automorphisms (bound)");
        // realize each automorphism as a permutation of element indices via
        // BFS over the generating sequence
        const auto& gens = search.gens;
        int id_index = g.element_index(Perm(g.degree()));
        for (const auto& imgs : search.solutions) {
            std::vector<int> amap(elems.size(), -1);
            std::vector<Perm> cur(elems.size());
            amap[id_index] = id_index;
            cur[id_index] = Perm(g.degree());
            std::vector<int> queue = {id_index};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int x = queue[qi];
                for (size_t k = 0; k < gens.size(); ++k) {
                    int ni = g.element_index(elems[x] * gens[k]);
                    if (amap[ni] >= 0) continue;
                    Perm img = cur[x] * imgs[k];
                    amap[ni] = g.element_index(img);
                    cur[ni] = std::move(img);
                    queue.push_back(ni);
                }
            }
            out.maps.push_back(std::move(amap));
        }
        std::sort(out.maps.begin(), out.maps.end());
    }
    auto [pos, ins] = cache.emplace(g.impl_id(), std::make_pair(g, std::move(out)));
    return pos->second.second;
}

std::uint64_t automorphism_group_order(const Group& g) {
    if (g.order() > limits().recognition_bound)
        throw resource_error("automorphism_group_order: order exceeds recognition bound");
    return automorphisms(g).maps.size();
}

} // namespace mapkit
