#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mapkit {

// A permutation of {0, ..., n-1}.  Products apply the left factor first:
// (a * b)(x) == b(a(x)).  Conjugation a.conjugated_by(g) == g^-1 * a * g.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree) : images_(degree) {
        for (int i = 0; i < degree; ++i) images_[i] = i;
    }
    explicit Perm(std::vector<int> images);

    // Disjoint-cycle constructor; entries not mentioned are fixed.
    // Throws domain_error on repeated points or points >= degree.
    static Perm from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int p) const { return images_[p]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm operator*(const Perm& rhs) const;
    Perm conjugated_by(const Perm& g) const;
    Perm power(std::int64_t k) const;

    // Least k >= 1 with p^k = id; equals lcm of cycle lengths.
    std::uint64_t order() const;

    // Nontrivial cycles, each starting at its least point, sorted by it.
    std::vector<std::vector<int>> cycles() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    std::string to_string() const; // cycle notation, "()" for identity

private:
    std::vector<int> images_;
};

} // namespace mapkit
