#include "enriques/corpus.hpp"

#include "enriques/errors.hpp"

#include <random>

namespace enriques::corpus {

namespace {

long long grid_square(const std::array<long long, kRank>& v)
{
    long long q = 0;
    const auto& g = gram_matrix();
    for (int i = 0; i < kRank; ++i) {
        if (v[i] == 0)
            continue;
        for (int j = 0; j < kRank; ++j)
            if (g[i][j] != 0 && v[j] != 0)
                q += g[i][j] * v[i] * v[j];
    }
    return q;
}

NumClass to_class(const std::array<long long, kRank>& v)
{
    std::array<Int, kRank> coords;
    for (int i = 0; i < kRank; ++i)
        coords[i] = v[i];
    return NumClass(coords);
}

} // namespace

std::vector<NumClass> phi_corpus()
{
    std::vector<NumClass> out;

    // Lexicographic walk of the [0,2]^10 grid; stop at 30 positive classes.
    std::array<long long, kRank> v{};
    auto advance = [&]() -> bool {
        for (int i = kRank - 1; i >= 0; --i) {
            if (v[i] < 2) {
                ++v[i];
                for (int j = i + 1; j < kRank; ++j)
                    v[j] = 0;
                return true;
            }
        }
        return false;
    };
    while (out.size() < 30) {
        if (!advance())
            throw InternalBoundViolationError("grid exhausted early");
        const long long q = grid_square(v);
        if (q > 0 && q <= 60)
            out.push_back(to_class(v));
    }

    // 20 reproducible random classes.
    std::mt19937_64 rng(0x5eed0e11dull);
    std::uniform_int_distribution<int> coord(0, 3);
    while (out.size() < 50) {
        std::array<long long, kRank> r{};
        for (int i = 0; i < kRank; ++i)
            r[i] = coord(rng);
        const long long q = grid_square(r);
        if (q > 0 && q <= 60)
            out.push_back(to_class(r));
    }
    return out;
}

std::vector<NumClass> grid_corpus(const Int& max_square)
{
    std::vector<NumClass> out;
    std::array<long long, kRank> v{};
    const long long cap = static_cast<long long>(max_square);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == kRank) {
            const long long q = grid_square(v);
            if (q > 0 && q <= cap)
                out.push_back(to_class(v));
            return;
        }
        for (long long c = 0; c <= 3; ++c) {
            v[idx] = c;
            self(self, idx + 1);
        }
        v[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

} // namespace enriques::corpus
