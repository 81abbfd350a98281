#ifndef SL2AB_TESTS_GEN_HPP_
#define SL2AB_TESTS_GEN_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sl2ab/numtheory.hpp"
#include "sl2ab/splitting.hpp"

namespace gen {

// fixed-seed source shared by the property tests
class source {
  public:
    explicit source(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin() { return range(0, 1) == 1; }

    template <class T>
    T const& pick(std::vector<T> const& v)
    {
        return v[std::size_t(range(0, std::int64_t(v.size()) - 1))];
    }

    // squarefree d != 0, 1 with |d| <= bound
    std::int64_t squarefree(std::int64_t bound)
    {
        for (;;) {
            std::int64_t d = range(-bound, bound);
            if (d != 0 && d != 1 && sl2ab::is_squarefree(d))
                return d;
        }
    }

    /* A random splitting of p in a degree-n field: a multiset of (e, f)
     * with sum e f = n. */
    sl2ab::splitting_data splitting(unsigned p, unsigned n)
    {
        sl2ab::splitting_data sd{p, n, {}};
        unsigned left = n;
        while (left > 0) {
            unsigned const e = unsigned(range(1, left));
            unsigned const f = unsigned(range(1, left / e));
            sd.primes.push_back({p, e, f, "P" + std::to_string(sd.primes.size())});
            left -= e * f;
        }
        return sd;
    }

    // (r1, r2) with r1 + 2 r2 = n
    sl2ab::signature signature(unsigned n)
    {
        unsigned const r2 = unsigned(range(0, n / 2));
        return {n - 2 * r2, r2};
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace gen

#endif /* SL2AB_TESTS_GEN_HPP_ */
