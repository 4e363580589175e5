// qinv — exact invariants and reduction types of plane quartics.
//
// arith.cpp: out-of-line storage for the thread-local prime-field context.

#include "qinv/arith/fp.hpp"

namespace qinv {

// Each thread starts with a harmless small modulus; real computations
// install their prime with Fp::ScopedModulus.
thread_local FpCtx Fp::tl_ctx_ = FpCtx(3);

}  // namespace qinv
