#ifndef VERBA_CAPS_HPP
#define VERBA_CAPS_HPP

#include <cstdint>

namespace verba {

/// Resource limits. Enumeration bounds the number of group elements that may
/// be listed; tuples bounds |G|^arity in generic word-value scans. Exceeding
/// either raises CapExceeded instead of truncating.
struct Caps {
  std::uint64_t enumeration = 100'000;
  std::uint64_t tuples = 100'000'000;
};

/// Process-wide limits. Set once at startup (CLI reads VERBA_ENUM_CAP and
/// VERBA_TUPLE_CAP); not synchronized against concurrent mutation.
Caps& global_caps();

}  // namespace verba

#endif
