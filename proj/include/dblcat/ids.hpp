#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace dblcat {

template <class Tag>
struct Id {
    std::uint32_t value = 0;
    friend auto operator<=>(const Id&, const Id&) = default;
};

using ObjectId = Id<struct ObjectTag>;
using HArrowId = Id<struct HArrowTag>;
using VArrowId = Id<struct VArrowTag>;
using SquareId = Id<struct SquareTag>;
using OneCellId = Id<struct OneCellTag>;
using TwoCellId = Id<struct TwoCellTag>;

inline constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b)
{
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace dblcat

template <class Tag>
struct std::hash<dblcat::Id<Tag>> {
    std::size_t operator()(const dblcat::Id<Tag>& id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
