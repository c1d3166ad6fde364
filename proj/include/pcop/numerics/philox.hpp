#pragma once

#include <array>
#include <cstdint>

namespace pcop {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Stateless: output depends only on (counter, key).
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// Reproducible random stream for one Monte Carlo path. Streams with different
/// path indices use disjoint counter ranges under the same key, so results do
/// not depend on how paths are distributed across workers.
class PathStream {
  public:
    PathStream(std::uint64_t seed, std::uint64_t path_index);

    /// Uniform on the open interval (0,1) with 53 random bits.
    double uniform();
    /// Standard normal variate (Box-Muller on a fresh counter block).
    double normal();

  private:
    Philox4x32::Counter next_block();

    Philox4x32::Key key_;
    std::uint64_t path_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_words_ = 0;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace pcop
