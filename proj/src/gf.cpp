#include "mapkit/gf.hpp"

namespace mapkit {

namespace {

struct FieldSpec {
    std::uint64_t q, p;
    int k;
    std::vector<std::uint64_t> reduction; // x^k = sum reduction[i] x^i (coefficients)
};

FieldSpec spec_for(std::uint64_t q) {
    switch (q) {
        case 4: return {4, 2, 2, {1, 1}};        // x^2 + x + 1
        case 8: return {8, 2, 3, {1, 1, 0}};     // x^3 + x + 1
        case 9: return {9, 3, 2, {2, 0}};        // x^2 + 1
        case 16: return {16, 2, 4, {1, 1, 0, 0}}; // x^4 + x + 1
        case 25: return {25, 5, 2, {4, 4}};      // x^2 + x + 1
        case 27: return {27, 3, 3, {2, 1, 0}};   // x^3 + 2x + 1
        case 32: return {32, 2, 5, {1, 0, 1, 0, 0}}; // x^5 + x^2 + 1
        default: break;
    }
    // prime fields
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) throw domain_error("GaloisField: unsupported prime power " + std::to_string(q));
    if (q < 2) throw domain_error("GaloisField: q must be at least 2");
    return {q, q, 1, {}};
}

std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, int k) {
    std::vector<std::uint64_t> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

} // namespace

GaloisField::GaloisField(std::uint64_t q) {
    FieldSpec s = spec_for(q);
    q_ = s.q;
    p_ = s.p;
    k_ = s.k;
    reduction_ = s.reduction;
}

std::uint64_t GaloisField::add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + b) % p_;
    auto da = digits(a, p_, k_), db = digits(b, p_, k_);
    for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

std::uint64_t GaloisField::neg(std::uint64_t a) const {
    if (k_ == 1) return (p_ - a % p_) % p_;
    auto da = digits(a, p_, k_);
    for (int i = 0; i < k_; ++i) da[i] = (p_ - da[i]) % p_;
    return undigits(da, p_);
}

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a * b) % p_;
    auto da = digits(a, p_, k_), db = digits(b, p_, k_);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce x^m for m >= k using x^k = reduction_
    for (int m = 2 * k_ - 2; m >= k_; --m) {
        std::uint64_t c = prod[m];
        if (!c) continue;
        prod[m] = 0;
        for (int i = 0; i < k_; ++i)
            prod[m - k_ + i] = (prod[m - k_ + i] + c * reduction_[i]) % p_;
    }
    prod.resize(k_);
    return undigits(prod, p_);
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
    if (a == 0) throw domain_error("GaloisField: inverse of zero");
    // q is tiny; scan
    for (std::uint64_t b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw domain_error("GaloisField: no inverse found");
}

std::uint64_t GaloisField::primitive_element() const {
    for (std::uint64_t a = 2; a < q_; ++a) {
        std::uint64_t x = a, ord = 1;
        while (x != 1) {
            x = mul(x, a);
            ++ord;
        }
        if (ord == q_ - 1) return a;
    }
    return 1; // q == 2
}

Perm projective_action(const GaloisField& f, std::array<std::uint64_t, 4> m) {
    const std::uint64_t q = f.q();
    auto [a, b, c, d] = m;
    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
        throw domain_error("projective_action: singular matrix");
    std::vector<int> im(q + 1);
    for (std::uint64_t t = 0; t < q; ++t) {
        std::uint64_t num = f.add(f.mul(t, a), c), den = f.add(f.mul(t, b), d);
        im[t] = den ? static_cast<int>(f.mul(num, f.inv(den))) : static_cast<int>(q);
    }
    im[q] = b ? static_cast<int>(f.mul(a, f.inv(b))) : static_cast<int>(q);
    return Perm(std::move(im));
}

Group psl2(std::uint64_t q) {
    GaloisField f(q);
    Perm e = projective_action(f, {1, 0, 1, 1});
    Perm t = projective_action(f, {1, 1, 0, 1});
    if (q == f.p()) return Group::generated_by(static_cast<int>(q + 1), {e, t});
    // over proper prime powers the two unit transvections only reach the
    // prime subfield; add the split torus diag(a, a^-1)
    std::uint64_t a = f.primitive_element();
    Perm d = projective_action(f, {a, 0, 0, f.inv(a)});
    return Group::generated_by(static_cast<int>(q + 1), {e, t, d});
}

Group pgl2(std::uint64_t q) {
    GaloisField f(q);
    std::vector<Perm> gens = psl2(q).generators();
    Perm d = projective_action(f, {f.primitive_element(), 0, 0, 1});
    gens.push_back(d);
    return Group::generated_by(static_cast<int>(q + 1), gens);
}

} // namespace mapkit
