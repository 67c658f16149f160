#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "core/instance.hpp"

namespace ugfpc {

inline constexpr std::uint64_t kDefaultLiftBudget = std::uint64_t{1} << 22;

/// Label-lifted instance: one variable "v#g" per base vertex v and group
/// element g, and for each base constraint x_v1 - x_v2 = z and all g1, g2 a
/// constraint between v1#g1 and v2#g2 with shift z + g1 + g2. Throws
/// Error(Budget) when the lifted constraint count exceeds `budget`.
GroupUgInstance lift(const GroupUgInstance& u, std::uint64_t budget = kDefaultLiftBudget);

/// "v#0101" for base vertex name v and label g.
std::string lifted_name(std::string_view base, const Gf2Vector& g);

struct LiftedName {
  std::string base;
  Gf2Vector label;
};

/// Splits at the last '#'; nullopt when the name has no well-formed suffix.
std::optional<LiftedName> parse_lifted_name(std::string_view name);

/// Lifts a base witness: x_v^g := a(v) + g.
Assignment lift_assignment(const GroupUgInstance& base, const GroupUgInstance& lifted, const Assignment& a);

}  // namespace ugfpc
