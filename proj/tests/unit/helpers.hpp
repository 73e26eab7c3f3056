#ifndef MINVAR_TEST_HELPERS_HPP
#define MINVAR_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "minvar/exactlat.hpp"
#include "minvar/matgroup.hpp"

namespace minvar::test {

inline IntMatrix g1()
{
    return {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
}

inline IntMatrix minus_identity(std::size_t n)
{
    return -IntMatrix::identity(n);
}

inline IntMatrix permutation(const std::vector<std::size_t>& images)
{
    IntMatrix m(images.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        m(images[j], j) = 1;
    return m;
}

inline MatGroup symmetric3()
{
    std::vector<IntMatrix> gens{permutation({1, 0, 2}), permutation({0, 2, 1})};
    return MatGroup::generate(gens);
}

inline MatGroup symmetric4()
{
    std::vector<IntMatrix> gens{permutation({1, 0, 2, 3}), permutation({1, 2, 3, 0})};
    return MatGroup::generate(gens);
}

inline MatGroup cyclic_group(const IntMatrix& g)
{
    std::vector<IntMatrix> gens{g};
    return MatGroup::generate(gens);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6)
{
    IntMatrix t = IntMatrix::identity(n);
    if (n < 2)
        return rng() % 2 ? t : -t;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = coef(rng);
        t = t * e;
    }
    return t;
}

}  // namespace minvar::test

#endif
