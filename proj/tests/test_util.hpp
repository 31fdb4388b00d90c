#pragma once

#include <random>

#include "x33/biform.hpp"
#include "x33/binform.hpp"

namespace testutil {

using x33::BiForm;
using x33::BinForm;
using x33::Monomial6;
using x33::Rat;

inline Rat rand_rat(std::mt19937_64& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return x33::rat(num(rng), den(rng));
}

inline BinForm rand_binform(std::mt19937_64& rng, int degree, bool allow_zero = true) {
    while (true) {
        std::vector<Rat> c;
        for (int k = 0; k <= degree; ++k) c.push_back(rand_rat(rng));
        BinForm f = BinForm::from_coeffs(degree, std::move(c));
        if (allow_zero || !f.is_zero()) return f;
    }
}

inline Monomial6 rand_monomial(std::mt19937_64& rng, int d1, int d2) {
    std::uniform_int_distribution<int> pick1(0, d1), pick2(0, d2);
    int i = pick1(rng);
    int j = std::uniform_int_distribution<int>(0, d1 - i)(rng);
    int p = pick2(rng);
    int q = std::uniform_int_distribution<int>(0, d2 - p)(rng);
    return Monomial6{{i, j, d1 - i - j, p, q, d2 - p - q}};
}

inline BiForm rand_biform(std::mt19937_64& rng, int d1, int d2, int terms = 4) {
    BiForm f(d1, d2);
    for (int t = 0; t < terms; ++t) f.add_term(rand_monomial(rng, d1, d2), rand_rat(rng));
    return f;
}

}  // namespace testutil
