#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mapkit/common.hpp"
#include "mapkit/group.hpp"
#include "mapkit/perm.hpp"

namespace mapkit {

// Small Galois field F_{p^k} for the prime powers this project needs
// (q <= 32).  Elements are encoded as integers 0..q-1 whose base-p digits
// are polynomial coefficients: value(sum c_i x^i) = sum c_i p^i.
class GaloisField {
public:
    explicit GaloisField(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;

    // Least element generating the multiplicative group.
    std::uint64_t primitive_element() const;

private:
    std::uint64_t q_, p_;
    int k_;
    std::vector<std::uint64_t> reduction_; // x^k = sum reduction_[i] x^i
};

// Permutation of the projective line P^1(F_q), on q+1 points:
// point i < q is [i : 1], point q is [1 : 0], induced by the invertible
// matrix [[a, b], [c, d]] acting by x -> (a x + c) / (b x + d) in row form.
Perm projective_action(const GaloisField& f, std::array<std::uint64_t, 4> m);

// PSL(2,q) and PGL(2,q) in their natural degree-(q+1) representations.
Group psl2(std::uint64_t q);
Group pgl2(std::uint64_t q);

} // namespace mapkit
