#pragma once

#include "cfsym/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cfsym {

/// Geometric precision schedule: initial_bits, initial_bits * growth, ...
/// capped at max_bits.
struct PrecisionContext {
  int initial_bits = 128;
  int max_bits = 1 << 20;
  int growth_factor = 2;

  /// Throws DomainError when the invariants do not hold.
  void validate() const;

  /// Next precision after `bits`, or 0 when `bits` already reached `cap`.
  int next(int bits, int cap) const {
    if (bits >= cap) return 0;
    long long grown = static_cast<long long>(bits) * growth_factor;
    return static_cast<int>(std::min<long long>(grown, cap));
  }
};

/// Calls `fn(bits)` along the context's schedule until it stops throwing
/// InsufficientPrecision. `ceiling` lowers max_bits further (for seeds whose
/// information content is finite).
template <class Fn>
auto with_escalation(const PrecisionContext& ctx, int ceiling, Fn&& fn)
    -> decltype(fn(0)) {
  ctx.validate();
  int cap = std::max(ctx.initial_bits, std::min(ctx.max_bits, ceiling));
  for (int bits = ctx.initial_bits;;) {
    try {
      return fn(bits);
    } catch (const InsufficientPrecision& e) {
      int next = ctx.next(bits, cap);
      if (next == 0)
        throw PrecisionExhausted(std::string("precision exhausted at ") + std::to_string(bits) +
                                 " bits: " + e.what());
      bits = next;
    }
  }
}

}  // namespace cfsym
