#pragma once

#include "pdwbc/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace pdwbc {

/*
 * Deterministic stream of small rationals (numerators/denominators bounded by
 * 20) for the seeded verification trials. Same seed, same stream.
 */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    Rational small_rational(long max_abs_num = 20, long max_den = 20) {
        std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return Rational(num(gen_), den(gen_));
    }

    // Rational strictly inside (0, 1).
    Rational unit_rational(long max_den = 20) {
        std::uniform_int_distribution<long> den(2, max_den);
        const long q = den(gen_);
        std::uniform_int_distribution<long> num(1, q - 1);
        return Rational(num(gen_), q);
    }

    std::vector<Rational> distinct_unit_rationals(size_t count, long max_den = 20) {
        return distinct(count, [&] { return unit_rational(max_den); });
    }

    std::vector<Rational> distinct_small_rationals(size_t count, long max_abs_num = 20,
                                                   long max_den = 20) {
        return distinct(count, [&] { return small_rational(max_abs_num, max_den); });
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::vector<Rational> distinct(size_t count, const std::function<Rational()>& draw) {
        std::vector<Rational> out;
        while (out.size() < count) {
            Rational r = draw();
            bool fresh = true;
            for (const auto& x : out) {
                if (x == r) { fresh = false; break; }
            }
            if (fresh) out.push_back(r);
        }
        return out;
    }

    std::mt19937_64 gen_;
};

} // namespace pdwbc
