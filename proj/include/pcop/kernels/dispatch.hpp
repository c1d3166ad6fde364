#pragma once

namespace pcop::kernels {

enum class Isa { Scalar, Avx2 };

/// Instruction set used by the batch kernels. AVX2 is chosen when the build
/// includes it and the CPU supports it, unless PCOP_FORCE_SCALAR is set.
Isa active_isa();

const char* isa_name(Isa isa);

}  // namespace pcop::kernels
