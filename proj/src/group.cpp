#include "mapkit/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>

#include "mapkit/common.hpp"

namespace mapkit {

namespace {

std::string perm_key(const Perm& p) {
    return std::string(reinterpret_cast<const char*>(p.images().data()),
                       p.images().size() * sizeof(int));
}

int least_moved_point(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) != i) return i;
    return -1;
}

} // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(int degree, const std::vector<Perm>& gens)
    : degree_(degree) {
    for (const auto& g : gens) {
        if (g.degree() != degree) throw domain_error("generator degree mismatch");
        if (!g.is_identity()) add_strong_generator(g, 0);
    }
    verify();
}

void StabilizerChain::add_level(int point) {
    Level lvl;
    lvl.base_point = point;
    lvl.orbit = {point};
    lvl.via_gen.assign(degree_, -1);
    lvl.parent.assign(degree_, -1);
    lvl.in_orbit.assign(degree_, 0);
    lvl.in_orbit[point] = 1;
    base_.push_back(point);
    levels_.push_back(std::move(lvl));
}

void StabilizerChain::extend_orbit(size_t li) {
    Level& lvl = levels_[li];
    for (size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
        int pt = lvl.orbit[qi];
        for (size_t gi = 0; gi < lvl.gens.size(); ++gi) {
            int img = lvl.gens[gi](pt);
            if (!lvl.in_orbit[img]) {
                lvl.in_orbit[img] = 1;
                lvl.via_gen[img] = static_cast<int>(gi);
                lvl.parent[img] = pt;
                lvl.orbit.push_back(img);
            }
        }
    }
}

void StabilizerChain::add_strong_generator(const Perm& g, size_t from) {
    size_t home = from;
    while (home < levels_.size() && g(levels_[home].base_point) == levels_[home].base_point)
        ++home;
    if (home == levels_.size()) add_level(least_moved_point(g));
    Perm inv = g.inverse();
    for (size_t j = from; j <= home; ++j) {
        levels_[j].gens.push_back(g);
        levels_[j].inv_gens.push_back(inv);
        extend_orbit(j);
    }
}

Perm StabilizerChain::sift_from(Perm g, size_t level) const {
    for (size_t i = level; i < levels_.size(); ++i) {
        const Level& lvl = levels_[i];
        int pt = g(lvl.base_point);
        if (!lvl.in_orbit[pt]) return g; // non-membership residue
        while (pt != lvl.base_point) {
            int gi = lvl.via_gen[pt];
            g = g * lvl.inv_gens[gi];
            pt = lvl.parent[pt];
        }
    }
    return g;
}

Perm StabilizerChain::transversal(size_t li, int pt) const {
    const Level& lvl = levels_[li];
    std::vector<int> steps;
    while (pt != lvl.base_point) {
        steps.push_back(lvl.via_gen[pt]);
        pt = lvl.parent[pt];
    }
    Perm u(degree_);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) u = u * lvl.gens[*it];
    return u;
}

// Iterate Schreier generators until every one sifts to the identity.  Orbit
// data is append-only, so previously verified pairs never need revisiting.
void StabilizerChain::verify() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t li = levels_.size(); li-- > 0;) {
            Level& lvl = levels_[li];
            size_t norb = lvl.orbit.size(), ngen = lvl.gens.size();
            if (lvl.done_orbit == norb && lvl.done_gens == ngen) continue;
            for (size_t qi = 0; qi < norb; ++qi) {
                for (size_t gi = 0; gi < ngen; ++gi) {
                    if (qi < lvl.done_orbit && gi < lvl.done_gens) continue;
                    int pt = lvl.orbit[qi];
                    Perm u = transversal(li, pt);
                    Perm v = transversal(li, lvl.gens[gi](pt));
                    Perm res = sift_from(u * lvl.gens[gi] * v.inverse(), li + 1);
                    if (!res.is_identity()) {
                        add_strong_generator(res, li + 1);
                        changed = true;
                    }
                }
            }
            // adding deeper generators never touches this level's lists
            lvl.done_orbit = norb;
            lvl.done_gens = ngen;
        }
    }
}

std::uint64_t StabilizerChain::order() const {
    std::uint64_t n = 1;
    for (const auto& lvl : levels_) n *= lvl.orbit.size();
    return n;
}

bool StabilizerChain::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    return sift_from(p, 0).is_identity();
}

std::uint64_t generated_order(int degree, const std::vector<Perm>& gens) {
    return StabilizerChain(degree, gens).order();
}

// ---------------------------------------------------------------------------
// Group

struct Group::Impl {
    int degree = 0;
    std::vector<Perm> gens;
    StabilizerChain chain;

    mutable std::mutex lock;
    mutable bool elems_built = false;
    mutable std::vector<Perm> elems; // lex-sorted
    mutable std::unordered_map<std::string, int> index;
    mutable std::vector<int> tree_parent, tree_gen;
    mutable bool classes_built = false;
    mutable std::vector<std::vector<int>> classes;
    mutable bool profile_built = false;
    mutable std::vector<std::pair<std::uint64_t, std::uint64_t>> profile;

    void build_elements() const {
        if (elems_built) return;
        std::uint64_t n = chain.order();
        if (n > limits().enum_bound)
            throw resource_error("group order " + std::to_string(n) +
                                 " exceeds enumeration bound " +
                                 std::to_string(limits().enum_bound));
        // BFS closure recording the spanning tree, then remap to lex order.
        std::vector<Perm> bfs;
        std::vector<std::pair<int, int>> tree; // (parent bfs index, gen index)
        std::unordered_map<std::string, int> seen;
        bfs.emplace_back(degree);
        tree.emplace_back(-1, -1);
        seen.emplace(perm_key(bfs[0]), 0);
        for (size_t qi = 0; qi < bfs.size(); ++qi) {
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                Perm nxt = bfs[qi] * gens[gi];
                auto [it, ins] = seen.emplace(perm_key(nxt), static_cast<int>(bfs.size()));
                if (ins) {
                    bfs.push_back(std::move(nxt));
                    tree.emplace_back(static_cast<int>(qi), static_cast<int>(gi));
                }
            }
        }
        std::vector<int> order_of(bfs.size());
        std::vector<int> by_lex(bfs.size());
        for (size_t i = 0; i < bfs.size(); ++i) by_lex[i] = static_cast<int>(i);
        std::sort(by_lex.begin(), by_lex.end(),
                  [&](int a, int b) { return bfs[a] < bfs[b]; });
        for (size_t r = 0; r < by_lex.size(); ++r) order_of[by_lex[r]] = static_cast<int>(r);

        elems.resize(bfs.size());
        tree_parent.assign(bfs.size(), -1);
        tree_gen.assign(bfs.size(), -1);
        index.clear();
        for (size_t i = 0; i < bfs.size(); ++i) {
            int r = order_of[i];
            elems[r] = bfs[i];
            if (tree[i].first >= 0) {
                tree_parent[r] = order_of[tree[i].first];
                tree_gen[r] = tree[i].second;
            }
            index.emplace(perm_key(elems[r]), r);
        }
        elems_built = true;
    }

    void build_classes() const {
        if (classes_built) return;
        build_elements();
        const int n = static_cast<int>(elems.size());
        std::vector<char> seen(n, 0);
        classes.clear();
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<int> cls = {i};
            seen[i] = 1;
            for (size_t qi = 0; qi < cls.size(); ++qi) {
                for (const auto& g : gens) {
                    Perm c = elems[cls[qi]].conjugated_by(g);
                    int j = index.at(perm_key(c));
                    if (!seen[j]) {
                        seen[j] = 1;
                        cls.push_back(j);
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        classes_built = true;
    }

    void build_profile() const {
        if (profile_built) return;
        build_classes();
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        for (const auto& cls : classes)
            counts[elems[cls.front()].order()] += cls.size();
        profile.assign(counts.begin(), counts.end());
        std::sort(profile.begin(), profile.end());
        profile_built = true;
    }
};

Group::Group() : impl_(std::make_shared<Impl>()) {}

Group Group::generated_by(int degree, std::vector<Perm> gens) {
    Group g;
    auto impl = std::make_shared<Impl>();
    impl->degree = degree;
    for (auto& p : gens)
        if (p.degree() != degree) throw domain_error("generator degree mismatch");
    impl->gens = std::move(gens);
    impl->chain = StabilizerChain(degree, impl->gens);
    g.impl_ = std::move(impl);
    return g;
}

Group Group::trivial(int degree) { return generated_by(degree, {}); }

int Group::degree() const { return impl_->degree; }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }
std::uint64_t Group::order() const { return impl_->chain.order(); }

bool Group::contains(const Perm& p) const {
    if (p.degree() != degree()) return false;
    return impl_->chain.contains(p);
}

bool Group::is_abelian() const {
    const auto& gs = impl_->gens;
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j)
            if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
    return true;
}

const std::vector<Perm>& Group::elements() const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_elements();
    return impl_->elems;
}

int Group::element_index(const Perm& p) const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_elements();
    auto it = impl_->index.find(perm_key(p));
    return it == impl_->index.end() ? -1 : it->second;
}

int Group::tree_parent(int i) const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_elements();
    return impl_->tree_parent[i];
}

int Group::tree_gen(int i) const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_elements();
    return impl_->tree_gen[i];
}

const std::vector<std::vector<int>>& Group::conjugacy_classes() const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_classes();
    return impl_->classes;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& Group::order_profile() const {
    std::lock_guard<std::mutex> lk(impl_->lock);
    impl_->build_profile();
    return impl_->profile;
}

// ---------------------------------------------------------------------------
// Orbits and subgroup constructions

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int npoints) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(npoints, 0);
    for (int p = 0; p < npoints; ++p) {
        if (seen[p]) continue;
        std::vector<int> orb = {p};
        seen[p] = 1;
        for (size_t qi = 0; qi < orb.size(); ++qi)
            for (const auto& g : gens) {
                int img = g(orb[qi]);
                if (!seen[img]) {
                    seen[img] = 1;
                    orb.push_back(img);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

Group subgroup(const Group& g, const std::vector<Perm>& elems) {
    for (const auto& e : elems)
        if (!g.contains(e))
            throw domain_error("subgroup generator " + e.to_string() + " is not in the group");
    return Group::generated_by(g.degree(), elems);
}

Group normal_closure(const Group& g, const std::vector<Perm>& elems) {
    for (const auto& e : elems)
        if (!g.contains(e)) throw domain_error("normal_closure: element outside the group");
    std::vector<Perm> gens;
    for (const auto& e : elems)
        if (!e.is_identity()) gens.push_back(e);
    Group n = Group::generated_by(g.degree(), gens);
    for (size_t i = 0; i < gens.size(); ++i) {
        for (const auto& c : g.generators()) {
            Perm t = gens[i].conjugated_by(c);
            if (!n.contains(t)) {
                gens.push_back(t);
                n = Group::generated_by(g.degree(), gens);
            }
        }
    }
    return n;
}

Group centralizer(const Group& g, const std::vector<Perm>& s) {
    for (const auto& e : s)
        if (!g.contains(e)) throw domain_error("centralizer: element outside the group");
    std::vector<Perm> kept;
    for (const auto& x : g.elements()) {
        bool ok = true;
        for (const auto& e : s)
            if (!(x * e == e * x)) {
                ok = false;
                break;
            }
        if (ok && !x.is_identity()) kept.push_back(x);
    }
    return Group::generated_by(g.degree(), kept);
}

Group normalizer(const Group& g, const Group& h) {
    std::vector<Perm> kept;
    for (const auto& x : g.elements()) {
        bool ok = true;
        for (const auto& hg : h.generators())
            if (!h.contains(hg.conjugated_by(x))) {
                ok = false;
                break;
            }
        if (ok && !x.is_identity()) kept.push_back(x);
    }
    return Group::generated_by(g.degree(), kept);
}

Group intersection(const Group& g, const Group& h) {
    const Group& small = g.order() <= h.order() ? g : h;
    const Group& big = g.order() <= h.order() ? h : g;
    std::vector<Perm> kept;
    for (const auto& x : small.elements())
        if (!x.is_identity() && big.contains(x)) kept.push_back(x);
    return Group::generated_by(g.degree(), kept);
}

Group core(const Group& g, const Group& h) {
    Group k = h;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : g.generators()) {
            std::vector<Perm> conj;
            for (const auto& kg : k.generators()) conj.push_back(kg.conjugated_by(c));
            Group kc = Group::generated_by(g.degree(), conj);
            if (kc.order() != k.order() || !std::all_of(conj.begin(), conj.end(),
                                                        [&](const Perm& p) { return k.contains(p); })) {
                Group meet = intersection(k, kc);
                if (meet.order() != k.order()) {
                    k = meet;
                    changed = true;
                }
            }
        }
    }
    return k;
}

bool is_normal(const Group& g, const Group& h) {
    for (const auto& hg : h.generators()) {
        if (!g.contains(hg)) throw domain_error("is_normal: H is not a subgroup of G");
        for (const auto& c : g.generators())
            if (!h.contains(hg.conjugated_by(c))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Coset action

CosetAction::CosetAction(const Group& g, const Group& h) {
    if (h.degree() != g.degree()) throw domain_error("coset_action: degree mismatch");
    for (const auto& hg : h.generators())
        if (!g.contains(hg)) throw domain_error("coset_action: H is not a subgroup of G");
    if (h.order() > 1) subgroup_elems_ = h.elements();

    reps_.push_back(g.identity());
    key_to_coset_.emplace(coset_key(reps_[0]), 0);
    for (size_t qi = 0; qi < reps_.size(); ++qi) {
        for (const auto& gen : g.generators()) {
            Perm cand = reps_[qi] * gen;
            std::string key = coset_key(cand);
            auto [it, ins] = key_to_coset_.emplace(key, static_cast<int>(reps_.size()));
            if (ins) reps_.push_back(std::move(cand));
        }
    }

    std::vector<Perm> image_gens;
    for (const auto& gen : g.generators()) image_gens.push_back(image_of(gen));
    image_ = Group::generated_by(static_cast<int>(reps_.size()), image_gens);
}

std::string CosetAction::coset_key(const Perm& p) const {
    if (subgroup_elems_.empty()) return perm_key(p);
    // canonical coset label: lexicographic minimum of H * p
    Perm best = p;
    for (const auto& h : subgroup_elems_) {
        Perm cand = h * p;
        if (cand < best) best = cand;
    }
    return perm_key(best);
}

Perm CosetAction::image_of(const Perm& p) const {
    std::vector<int> im(reps_.size());
    for (size_t i = 0; i < reps_.size(); ++i) im[i] = coset_of(reps_[i] * p);
    return Perm(std::move(im));
}

int CosetAction::coset_of(const Perm& p) const {
    auto it = key_to_coset_.find(coset_key(p));
    if (it == key_to_coset_.end()) throw domain_error("coset_of: element outside the group");
    return it->second;
}

// ---------------------------------------------------------------------------
// Blocks / primitivity

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

// Minimal block system whose block contains {p, q} (Atkinson).
std::vector<int> block_classes(const Group& g, int p, int q) {
    const int n = g.degree();
    UnionFind uf(n);
    uf.unite(p, q);
    std::deque<std::pair<int, int>> queue = {{p, q}};
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& gen : g.generators()) {
            int ga = gen(a), gb = gen(b);
            if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
        }
    }
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = uf.find(i);
    return cls;
}

} // namespace

BlockSystem minimal_blocks(const Group& g) {
    const int n = g.degree();
    if (n < 2) throw domain_error("minimal_blocks: degree must be at least 2");
    if (orbits(g.generators(), n).size() != 1)
        throw domain_error("minimal_blocks: action is not transitive");

    BlockSystem out;
    for (int q = 1; q < n; ++q) {
        auto cls = block_classes(g, 0, q);
        int root0 = cls[0];
        std::vector<int> block;
        for (int i = 0; i < n; ++i)
            if (cls[i] == root0) block.push_back(i);
        if (static_cast<int>(block.size()) < n) {
            out.primitive = false;
            out.block = std::move(block);
            std::unordered_map<int, std::vector<int>> by_root;
            for (int i = 0; i < n; ++i) by_root[cls[i]].push_back(i);
            for (auto& [root, pts] : by_root) out.blocks.push_back(std::move(pts));
            std::sort(out.blocks.begin(), out.blocks.end());
            return out;
        }
    }
    out.primitive = true;
    return out;
}

bool is_primitive(const Group& g) { return minimal_blocks(g).primitive; }

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(const Group& g, const Group& n) {
    if (!is_normal(g, n)) throw domain_error("quotient: subgroup is not normal");
    action_ = std::make_shared<CosetAction>(g, n);
}

// ---------------------------------------------------------------------------
// Direct products

Perm embed_left(const Perm& p, int total_degree) {
    std::vector<int> im(total_degree);
    for (int i = 0; i < total_degree; ++i) im[i] = i;
    for (int i = 0; i < p.degree(); ++i) im[i] = p(i);
    return Perm(std::move(im));
}

Perm embed_right(const Perm& p, int left_degree, int total_degree) {
    std::vector<int> im(total_degree);
    for (int i = 0; i < total_degree; ++i) im[i] = i;
    for (int i = 0; i < p.degree(); ++i) im[left_degree + i] = left_degree + p(i);
    return Perm(std::move(im));
}

Group direct_product(const Group& a, const Group& b) {
    int n = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (const auto& g : a.generators()) gens.push_back(embed_left(g, n));
    for (const auto& g : b.generators()) gens.push_back(embed_right(g, a.degree(), n));
    return Group::generated_by(n, gens);
}

} // namespace mapkit
