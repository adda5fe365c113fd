// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qperf {

/// A calendar day, stored as days since 1970-01-01.
struct Day {
  std::int32_t serial = 0;

  friend constexpr auto operator<=>(Day, Day) = default;
  constexpr Day next() const { return Day{serial + 1}; }
};

/// Parses a strict `YYYY-MM-DD` date. Throws DataError on anything else.
Day parse_day(std::string_view text);

std::string format_day(Day day);

}  // namespace qperf
