#pragma once

#include <cstddef>
#include <cstdint>

namespace mapkit {

// Generated by tools/gen_smallgroups.cpp; regular representations, so the
// degree equals the order and the image arrays have `order` entries each.
struct SmallGroupRecord {
    std::uint16_t order;
    std::uint16_t index; // 1-based within the order, enumeration order
    std::uint8_t ngens;
    const std::uint8_t* images; // ngens consecutive image arrays
};

extern const SmallGroupRecord small_group_records[];
extern const std::size_t small_group_record_count;

} // namespace mapkit
