// Enumerates all groups of order <= 63 up to isomorphism and emits
// src/smallgroups_data.cpp.
//
// Every group of order < 64 is solvable except A5, and every nontrivial
// solvable group has a normal subgroup of prime index.  So the groups of
// order n are exactly the cyclic extensions of groups of order n/p by Z_p
// (plus A5 at order 60): pick N, an automorphism alpha and z in N with
// alpha(z) = z and alpha^p = conjugation by z, and multiply on N x {0..p-1}
// in crossed-product normal form.  Candidates are deduplicated by explicit
// isomorphism tests; per-order counts are checked against gnu(n).

#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mapkit/catalog.hpp"
#include "mapkit/common.hpp"
#include "mapkit/group.hpp"
#include "mapkit/structure.hpp"

using namespace mapkit;

namespace {

// gnu(n) for n = 1..63 (OEIS A000001)
const int kGnu[64] = {0,  1, 1, 1, 2,  1, 2, 1, 5, 2, 2,  1, 5, 1, 2, 1,
                      14, 1, 5, 1, 5,  2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1,
                      51, 1, 2, 1, 14, 1, 2, 2, 14, 1, 6, 1, 4, 2, 2, 1,
                      52, 2, 5, 1, 5,  1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4};

struct Fingerprint {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> class_profile;
    std::vector<std::uint64_t> derived_orders;
    std::uint64_t center_order = 0;
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g) {
    Fingerprint f;
    f.order_profile = g.order_profile();
    for (const auto& cls : g.conjugacy_classes())
        f.class_profile.emplace_back(cls.size(), g.elements()[cls.front()].order());
    std::sort(f.class_profile.begin(), f.class_profile.end());
    for (const auto& d : derived_series(g)) f.derived_orders.push_back(d.order());
    f.center_order = centralizer(g, g.generators()).order();
    return f;
}

// crossed product N x Z_p for (alpha, z) with alpha(z) = z, alpha^p = inn(z)
Group cyclic_extension(const Group& n, std::uint64_t p, const Perm& alpha, int z_index) {
    const auto& elems = n.elements();
    const int nn = static_cast<int>(elems.size());
    const int total = nn * static_cast<int>(p);

    std::vector<std::vector<int>> alpha_inv_pow(p, std::vector<int>(nn));
    Perm ainv = alpha.inverse();
    for (int i = 0; i < nn; ++i) alpha_inv_pow[0][i] = i;
    for (std::uint64_t k = 1; k < p; ++k)
        for (int i = 0; i < nn; ++i) alpha_inv_pow[k][i] = ainv(alpha_inv_pow[k - 1][i]);

    auto nmul = [&](int a, int b) { return n.element_index(elems[a] * elems[b]); };

    // (x, i) * (y, j) = (x . alpha^{-i}(y) . z^{[i+j >= p]}, (i+j) mod p)
    auto mul = [&](int a, int b) {
        int xa = a % nn, ia = a / nn, xb = b % nn, ib = b / nn;
        int prod = nmul(xa, alpha_inv_pow[ia][xb]);
        int isum = ia + ib;
        if (isum >= static_cast<int>(p)) {
            prod = nmul(prod, z_index);
            isum -= static_cast<int>(p);
        }
        return isum * nn + prod;
    };

    auto right_mult = [&](int h) {
        std::vector<int> im(total);
        for (int a = 0; a < total; ++a) im[a] = mul(a, h);
        return Perm(std::move(im));
    };

    std::vector<Perm> gens;
    for (const auto& g : n.generators()) gens.push_back(right_mult(n.element_index(g)));
    gens.push_back(right_mult(nn + n.element_index(Perm(n.degree()))));
    return Group::generated_by(total, gens);
}

} // namespace

int main() {
    Limits lim = limits();
    lim.enum_bound = 60000; // Aut((Z2)^4) has 20160 elements
    lim.aut_bound = 1u << 18;
    lim.recognition_bound = 4000;
    limits() = lim;

    std::map<int, std::vector<Group>> groups;
    std::map<int, std::vector<Fingerprint>> prints;
    groups[1] = {Group::generated_by(1, {Perm(1)})};
    prints[1] = {fingerprint(groups[1][0])};

    for (int order = 2; order <= 63; ++order) {
        std::vector<Group>& out = groups[order];
        std::vector<Fingerprint>& fps = prints[order];
        auto consider = [&](const Group& g) {
            if (g.order() != static_cast<std::uint64_t>(order))
                throw domain_error("extension has the wrong order");
            Fingerprint fp = fingerprint(g);
            for (size_t i = 0; i < out.size(); ++i) {
                if (!(fps[i] == fp)) continue;
                if (are_isomorphic(out[i], g)) return;
            }
            out.push_back(g);
            fps.push_back(std::move(fp));
        };

        for (std::uint64_t p : pi_of(order)) {
            int m = order / static_cast<int>(p);
            for (const Group& n : groups[m]) {
                const auto& elems = n.elements();
                const int nn = static_cast<int>(elems.size());
                const auto& auts = automorphisms(n);
                std::vector<Perm> aut_perms;
                for (const auto& amap : auts.maps)
                    aut_perms.push_back(Perm(std::vector<int>(amap.begin(), amap.end())));
                // short generating subset for the automorphism group
                std::vector<Perm> agens;
                Group agrp = Group::trivial(nn);
                for (const auto& ap : aut_perms) {
                    if (agrp.contains(ap)) continue;
                    agens.push_back(ap);
                    agrp = Group::generated_by(nn, agens);
                    if (agrp.order() == aut_perms.size()) break;
                }
                if (agrp.order() != aut_perms.size())
                    throw domain_error("automorphism group closure mismatch");

                for (const auto& cls : agrp.conjugacy_classes()) {
                    const Perm& alpha = agrp.elements()[cls.front()];
                    std::vector<int> ap(nn);
                    for (int i = 0; i < nn; ++i) ap[i] = i;
                    for (std::uint64_t k = 0; k < p; ++k)
                        for (int i = 0; i < nn; ++i) ap[i] = alpha(ap[i]);
                    for (int z = 0; z < nn; ++z) {
                        if (alpha(z) != z) continue;
                        Perm zinv = elems[z].inverse();
                        bool ok = true;
                        for (int i = 0; i < nn && ok; ++i)
                            ok = (ap[i] == n.element_index(zinv * elems[i] * elems[z]));
                        if (!ok) continue;
                        consider(cyclic_extension(n, p, alpha, z));
                    }
                }
            }
        }
        if (order == 60) consider(regular_representation(alternating_group(5)));

        if (static_cast<int>(out.size()) != kGnu[order]) {
            std::fprintf(stderr, "order %d: found %zu groups, expected %d\n", order,
                         out.size(), kGnu[order]);
            return 1;
        }
        std::fprintf(stderr, "order %2d: %2zu groups\n", order, out.size());
    }

    FILE* f = std::fopen("src/smallgroups_data.cpp", "w");
    if (!f) {
        std::perror("src/smallgroups_data.cpp");
        return 1;
    }
    std::fprintf(f, "// Generated by tools/gen_smallgroups.cpp; do not edit by hand.\n");
    std::fprintf(f, "// Regular representations of all groups of order <= 63.\n\n");
    std::fprintf(f, "#include \"mapkit/smallgroups_data.hpp\"\n\nnamespace mapkit {\n\n");
    std::fprintf(f, "namespace {\n\nconst std::uint8_t bytes[] = {\n");

    struct Meta {
        int order, index, ngens;
        size_t offset;
    };
    std::vector<Meta> metas;
    size_t offset = 0;
    std::string line;
    auto flush_line = [&]() {
        if (!line.empty()) {
            std::fprintf(f, "%s\n", line.c_str());
            line.clear();
        }
    };
    for (int order = 1; order <= 63; ++order) {
        int index = 1;
        for (const Group& g : groups[order]) {
            Group reg = regular_representation(g);
            std::vector<Perm> gens = generating_sequence(reg);
            if (gens.empty()) gens.push_back(Perm(reg.degree()));
            metas.push_back({order, index, static_cast<int>(gens.size()), offset});
            for (const auto& p : gens)
                for (int i = 0; i < p.degree(); ++i) {
                    line += std::to_string(p(i)) + ",";
                    ++offset;
                    if (line.size() > 100) flush_line();
                }
            ++index;
        }
    }
    flush_line();
    std::fprintf(f, "};\n\n} // namespace\n\n");
    std::fprintf(f, "const SmallGroupRecord small_group_records[] = {\n");
    for (const auto& m : metas)
        std::fprintf(f, "    {%d, %d, %d, bytes + %zu},\n", m.order, m.index, m.ngens,
                     m.offset);
    std::fprintf(f, "};\n\nconst std::size_t small_group_record_count = %zu;\n\n",
                 metas.size());
    std::fprintf(f, "} // namespace mapkit\n");
    std::fclose(f);
    std::fprintf(stderr, "total: %zu groups\n", metas.size());
    return 0;
}
