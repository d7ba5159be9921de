#pragma once

namespace dualref {

// Per-scalar-type operations the series algorithms need.  Specialized for
// each coefficient field (exact rationals, bounded reals); the primary
// template is intentionally undefined so that instantiating series code
// with an unsupported scalar fails loudly.
template <class R>
struct scalar_ops;

}  // namespace dualref
