#include "mapkit/perm.hpp"

#include <algorithm>
#include <numeric>

#include "mapkit/common.hpp"

namespace mapkit {

Limits& limits() {
    static Limits l;
    return l;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw domain_error("image array is not a bijection on {0,...," +
                               std::to_string(degree() - 1) + "}");
        seen[v] = 1;
    }
}

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    if (degree < 0) throw domain_error("negative degree");
    Perm p(degree);
    std::vector<char> seen(degree, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            if (a < 0 || a >= degree)
                throw domain_error("cycle point " + std::to_string(a) +
                                   " out of range for degree " + std::to_string(degree));
            if (seen[a])
                throw domain_error("point " + std::to_string(a) + " repeated in cycles");
            seen[a] = 1;
            p.images_[a] = cyc[(i + 1) % cyc.size()];
        }
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Perm p;
    p.images_ = std::move(inv);
    return p;
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[i] = rhs.images_[images_[i]];
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::power(std::int64_t k) const {
    const int n = degree();
    if (n == 0) return *this;
    std::uint64_t ord = order();
    std::int64_t r = k % static_cast<std::int64_t>(ord);
    if (r < 0) r += static_cast<std::int64_t>(ord);
    Perm acc(n), base = *this;
    std::uint64_t e = static_cast<std::uint64_t>(r);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = 1;
            continue;
        }
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cs) {
        s += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

} // namespace mapkit
