#ifndef HJUMP_RNG_HPP
#define HJUMP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace hjump {

// Splitmix64 stream. std::mt19937_64 would also be portable, but the
// standard distributions are implementation-defined, and the sampler and
// solver reports must be byte-identical across toolchains for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform on the open unit simplex, i.e. Dirichlet(1,...,1)
    std::vector<double> next_simplex_point(int n) {
        std::vector<double> w(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            // exponential variate; 1 - U avoids log(0)
            w[i] = -std::log(1.0 - next_double());
            total += w[i];
        }
        if (total <= 0.0) total = 1.0;
        for (int i = 0; i < n; ++i) w[i] /= total;
        return w;
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream for a worker/restart/retry index so that
// results do not depend on thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng mix(seed ^ (0xd1342543de82ef95ULL * (stream + 1)));
    return mix.next_u64();
}

}  // namespace hjump

#endif
