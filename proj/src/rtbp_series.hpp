#pragma once

// Literal transcription of the coefficient series. Each series is a list of
// blocks; a block is prefactor * (sum of terms) / denominator * A^(half_power/2).
// Radicals keep their printed form: sqrt((1-mu)^2) and sqrt((-1+mu)^2) become
// |1-mu|, sqrt(mu^2) becomes |mu|, while (1-mu)^n and (-1+mu)^n keep their sign.

#include <array>
#include <vector>

#include "birkhoff/rtbpmodel.hpp"

namespace birkhoff::rtbp::detail {

/// Integer powers of the building blocks of every printed term.
struct Factors {
    int sqrt3 = 0;
    int q = 0;
    int Q = 0;
    int one_minus_q = 0;
    int mu = 0;
    int one_minus_mu = 0;      // (1 - mu)^n
    int mu_minus_one = 0;      // (-1 + mu)^n
    int abs_one_minus_mu = 0;  // sqrt((1-mu)^2)^n, sqrt((-1+mu)^2)^n
    int abs_mu = 0;            // sqrt(mu^2)^n
};

struct Term {
    double coefficient;
    Factors factors;
};

struct Block {
    int half_power;
    double prefactor;
    Factors denominator;
    std::vector<Term> terms;
};

using SeriesTable = std::array<std::vector<Block>, kSeriesCount>;

const SeriesTable& series_table();

double evaluate(const Factors& f, const ModelParams& p);

} // namespace birkhoff::rtbp::detail
