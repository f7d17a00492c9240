#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mapkit {

// Thrown when a computation would exceed a configured resource bound.
// The message names the bound so callers can raise it deliberately.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on violated mathematical preconditions (non-membership,
// non-normality, malformed cycles, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

struct Limits {
    // Full element enumeration (element tables, conjugacy classes, scans).
    std::uint64_t enum_bound = 20000;
    // Flag sets accepted by the transport automorphism counter.
    std::uint64_t flag_bound = 100000;
    // Largest group the census will enumerate tuples for.
    std::uint64_t census_bound = 2000;
    // Largest group recognize()/are_isomorphic() accept.
    std::uint64_t recognition_bound = 2000;
    // Largest group composition_factor_tags() accepts.
    std::uint64_t factor_bound = 10000;
    // Cap on the number of automorphisms enumerated per group.
    std::uint64_t aut_bound = 1u << 17;
    // Generated-subgroup probes allowed in the insolvable Hall search.
    std::uint64_t hall_budget = 2000000;
    // |G| up to which a failed Hall search counts as proof of nonexistence.
    std::uint64_t hall_exhaustive_bound = 200;
};

// Global limits, read by the library.  Set them before spawning census
// workers; they are not meant to change mid-run.
Limits& limits();

// RAII override used by tests.
class ScopedLimits {
public:
    explicit ScopedLimits(const Limits& l) : saved_(limits()) { limits() = l; }
    ~ScopedLimits() { limits() = saved_; }
    ScopedLimits(const ScopedLimits&) = delete;
    ScopedLimits& operator=(const ScopedLimits&) = delete;

private:
    Limits saved_;
};

} // namespace mapkit
