#include "rtbp_series.hpp"

#include <cmath>

namespace birkhoff::rtbp::detail {

namespace {

double ipow(double x, int n)
{
    if (n == 0) {
        return 1.0;
    }
    return n > 0 ? std::pow(x, n) : 1.0 / std::pow(x, -n);
}

} // namespace

double evaluate(const Factors& f, const ModelParams& p)
{
    return ipow(std::sqrt(3.0), f.sqrt3) * ipow(p.q, f.q) * ipow(p.Q, f.Q) *
           ipow(1.0 - p.q, f.one_minus_q) * ipow(p.mu, f.mu) * ipow(1.0 - p.mu, f.one_minus_mu) *
           ipow(p.mu - 1.0, f.mu_minus_one) * ipow(std::abs(1.0 - p.mu), f.abs_one_minus_mu) *
           ipow(std::abs(p.mu), f.abs_mu);
}

// Series order: a, c, a1, a2, a3, a4, b1, b3, b5. A block is
// {half_power, prefactor, denominator, {{coefficient, factors}, ...}}.
const SeriesTable& series_table()
{
    static const SeriesTable table{{
    // a
    {{
        {0, 1, {},
         {
             {1, {.one_minus_mu = 1}},
         }},
        {3, 6, {.Q = 1, .mu = 1},
         {
             {1, {.sqrt3 = 1, .one_minus_q = 1, .one_minus_mu = 1}},
         }},
    }},
    // c
    {{
        {1, 1, {},
         {
             {1, {.sqrt3 = 1}},
         }},
        {4, -9, {.Q = 1, .mu = 1},
         {
             {1, {.q = 1, .one_minus_mu = 1}},
         }},
    }},
    // a1
    {{
        {0, 1, {.mu = 4, .mu_minus_one = 2, .abs_one_minus_mu = 1},
         {
             {-1, {.q = 1, .mu = 4}},
             {1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-2, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {2, -5, {.mu = 6, .mu_minus_one = 4, .abs_one_minus_mu = 1},
         {
             {-3, {.q = 1, .mu = 6}},
             {2, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-8, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-8, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {2, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {12, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {3, 24, {.Q = 1, .mu = 6, .mu_minus_one = 2, .abs_one_minus_mu = 1},
         {
             {1, {.sqrt3 = 1, .q = 1, .mu = 5}},
             {-1, {.sqrt3 = 1, .q = 2, .mu = 5}},
             {1, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-1, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-3, {.sqrt3 = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {3, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-1, {.sqrt3 = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {3, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
             {-3, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {4, -945.0 / 8, {.mu = 8, .mu_minus_one = 6, .abs_one_minus_mu = 1},
         {
             {1, {.q = 1, .mu = 8}},
             {1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-6, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-20, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {15, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-6, {.Q = 1, .mu = 5, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.Q = 1, .mu = 6, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {15, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
    }},
    // a2
    {{
        {1, 1, {},
         {
             {-6, {.sqrt3 = 1, .q = 1, .abs_one_minus_mu = -5}},
             {15.0 / 2, {.sqrt3 = 1, .q = 1, .mu = 1, .abs_one_minus_mu = -5}},
             {-3.0 / 2, {.sqrt3 = 1, .q = 1, .mu = 1, .one_minus_mu = -6, .abs_one_minus_mu = 1}},
             {-6, {.sqrt3 = 1, .Q = 1, .mu = -5, .abs_mu = 1}},
         }},
        {3, -135.0 / 2, {.mu_minus_one = 5, .abs_one_minus_mu = 1},
         {
             {1, {.sqrt3 = 1, .q = 1}},
         }},
        {4, 54, {.Q = 1, .mu = 7, .mu_minus_one = 3, .abs_one_minus_mu = 1},
         {
             {-10, {.q = 1, .mu = 6}},
             {9, {.q = 2, .mu = 6}},
             {1, {.q = 2, .mu = 7}},
             {10, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-10, {.q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-40, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {39, {.q = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-40, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {34, {.q = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {10, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-6, {.q = 1, .Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-1, {.q = 1, .Q = 1, .mu = 5, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {60, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
             {-56, {.q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
    }},
    // a3
    {{
        {0, 1, {},
         {
             {3.0 / 2, {.q = 1, .one_minus_mu = 1, .abs_one_minus_mu = -5}},
             {-3.0 / 2, {.q = 1, .mu = 1, .one_minus_mu = 1, .abs_one_minus_mu = -5}},
             {-3.0 / 2, {.Q = 1, .mu = -4, .abs_mu = 1}},
         }},
        {2, 1, {},
         {
             {-45.0 / 2, {.q = 1, .one_minus_mu = 1, .abs_one_minus_mu = -7}},
             {-45.0 / 4, {.q = 1, .one_minus_mu = -1, .abs_one_minus_mu = -5}},
             {45.0 / 2, {.q = 1, .mu = 1, .one_minus_mu = 1, .abs_one_minus_mu = -7}},
             {45.0 / 4, {.q = 1, .mu = 1, .one_minus_mu = -1, .abs_one_minus_mu = -5}},
             {45.0 / 2, {.Q = 1, .mu = -6, .abs_mu = 1}},
         }},
        {3, 1, {},
         {
             {36, {.sqrt3 = 1, .q = 1, .Q = -1, .one_minus_q = 1, .one_minus_mu = 1, .abs_one_minus_mu = -5}},
             {-36, {.sqrt3 = 1, .q = 1, .Q = -1, .one_minus_q = 1, .mu = -1, .one_minus_mu = 1, .abs_one_minus_mu = -5}},
             {-36, {.sqrt3 = 1, .mu = -6, .abs_mu = 1}},
             {36, {.sqrt3 = 1, .q = 1, .mu = -6, .abs_mu = 1}},
             {36, {.sqrt3 = 1, .mu = -5, .abs_mu = 1}},
             {-36, {.sqrt3 = 1, .q = 1, .mu = -5, .abs_mu = 1}},
         }},
        {4, 1, {},
         {
             {945.0 / 4, {.q = 1, .one_minus_mu = -1, .abs_one_minus_mu = -7}},
             {945.0 / 16, {.q = 1, .one_minus_mu = -3, .abs_one_minus_mu = -5}},
             {-945.0 / 4, {.q = 1, .mu = 1, .one_minus_mu = -1, .abs_one_minus_mu = -7}},
             {-945.0 / 16, {.q = 1, .mu = 1, .one_minus_mu = -3, .abs_one_minus_mu = -5}},
             {4725.0 / 16, {.Q = 1, .mu = -8, .abs_mu = 1}},
         }},
    }},
    // a4
    {{
        {1, 1, {},
         {
             {3.0 / 2, {.sqrt3 = 1, .q = 1, .abs_one_minus_mu = -5}},
             {-3.0 / 2, {.sqrt3 = 1, .q = 1, .mu = 1, .one_minus_mu = -6, .abs_one_minus_mu = 1}},
             {3.0 / 2, {.sqrt3 = 1, .Q = 1, .mu = -5, .abs_mu = 1}},
         }},
        {3, 75.0 / 4, {.mu_minus_one = 5, .abs_one_minus_mu = 1},
         {
             {1, {.sqrt3 = 1, .q = 1}},
         }},
        {4, 3.0 / 2, {},
         {
             {9, {.q = 2, .Q = -1, .abs_one_minus_mu = -5}},
             {-9, {.q = 2, .Q = -1, .mu = -1, .abs_one_minus_mu = -5}},
             {-90, {.q = 1, .Q = -1, .one_minus_q = 1, .mu = -1, .abs_one_minus_mu = -5}},
         }},
        {4, 1, {},
         {
             {135, {.q = 1, .Q = -1, .one_minus_mu = -6, .abs_one_minus_mu = 1}},
             {-243.0 / 2, {.q = 2, .Q = -1, .one_minus_mu = -6, .abs_one_minus_mu = 1}},
             {-27.0 / 2, {.q = 2, .Q = -1, .mu = 1, .one_minus_mu = -6, .abs_one_minus_mu = 1}},
             {135, {.mu = -7, .abs_mu = 1}},
             {-135, {.q = 1, .mu = -7, .abs_mu = 1}},
             {-135, {.mu = -6, .abs_mu = 1}},
             {243.0 / 2, {.q = 1, .mu = -6, .abs_mu = 1}},
             {27.0 / 2, {.q = 1, .mu = -5, .abs_mu = 1}},
         }},
    }},
    // b1
    {{
        {0, 1, {.mu = 5, .mu_minus_one = 3, .abs_one_minus_mu = 1},
         {
             {-1, {.q = 1, .mu = 5}},
             {-1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {3, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-3, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {2, -15.0 / 2, {.mu = 7, .mu_minus_one = 5, .abs_one_minus_mu = 1},
         {
             {-3, {.q = 1, .mu = 7}},
             {-2, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {10, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {20, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-10, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {2, {.Q = 1, .mu = 5, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-20, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {3, 30, {.Q = 1, .mu = 7, .mu_minus_one = 3, .abs_one_minus_mu = 1},
         {
             {1, {.sqrt3 = 1, .q = 1, .mu = 6}},
             {-1, {.sqrt3 = 1, .q = 2, .mu = 6}},
             {-1, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {4, {.sqrt3 = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-4, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {4, {.sqrt3 = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-4, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-1, {.sqrt3 = 1, .Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-6, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
             {6, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {4, -945.0 / 4, {.mu = 9, .mu_minus_one = 7, .abs_one_minus_mu = 1},
         {
             {1, {.q = 1, .mu = 9}},
             {-1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {7, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {35, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-35, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {21, {.Q = 1, .mu = 5, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-7, {.Q = 1, .mu = 6, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.Q = 1, .mu = 7, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-21, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
    }},
    // b3
    {{
        {0, 1, {},
         {
             {-3, {.q = 1, .abs_one_minus_mu = -5}},
             {3, {.q = 1, .mu = 1, .abs_one_minus_mu = -5}},
             {15.0 / 4, {.Q = 1, .mu = -7, .abs_mu = 1}},
             {-15.0 / 4, {.Q = 1, .mu = -7, .one_minus_mu = 2, .abs_mu = 1}},
             {-15.0 / 2, {.Q = 1, .mu = -6, .abs_mu = 1}},
             {3.0 / 4, {.Q = 1, .mu = -5, .abs_mu = 1}},
         }},
        {2, 1, {},
         {
             {945.0 / 8, {.q = 1, .abs_one_minus_mu = -7}},
             {-45.0 / 8, {.q = 1, .one_minus_mu = -2, .abs_one_minus_mu = -5}},
             {-45.0 / 4, {.q = 1, .one_minus_mu = -8, .abs_one_minus_mu = 1}},
             {-945.0 / 8, {.q = 1, .mu = 1, .abs_one_minus_mu = -7}},
             {45.0 / 8, {.q = 1, .mu = 1, .one_minus_mu = -2, .abs_one_minus_mu = -5}},
             {45.0 / 4, {.q = 1, .mu = 1, .one_minus_mu = -8, .abs_one_minus_mu = 1}},
             {135.0 / 2, {.Q = 1, .mu = -7, .abs_mu = 1}},
         }},
        {3, -90, {.Q = 1, .mu = 7, .mu_minus_one = 3, .abs_one_minus_mu = 1},
         {
             {1, {.sqrt3 = 1, .q = 1, .mu = 6}},
             {-1, {.sqrt3 = 1, .q = 2, .mu = 6}},
             {-1, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {4, {.sqrt3 = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-4, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {4, {.sqrt3 = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-4, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-1, {.sqrt3 = 1, .Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.sqrt3 = 1, .q = 1, .Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-6, {.sqrt3 = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
             {6, {.sqrt3 = 1, .q = 1, .Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
        {4, 4725.0 / 4, {.mu = 9, .mu_minus_one = 7, .abs_one_minus_mu = 1},
         {
             {1, {.q = 1, .mu = 9}},
             {-1, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {7, {.Q = 1, .mu = 1, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {35, {.Q = 1, .mu = 3, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-35, {.Q = 1, .mu = 4, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {21, {.Q = 1, .mu = 5, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-7, {.Q = 1, .mu = 6, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {1, {.Q = 1, .mu = 7, .abs_one_minus_mu = 1, .abs_mu = 1}},
             {-21, {.Q = 1, .abs_one_minus_mu = 1, .abs_mu = 3}},
         }},
    }},
    // b5
    {{
        {0, 1, {},
         {
             {3.0 / 8, {.q = 1, .abs_one_minus_mu = -5}},
             {-3.0 / 8, {.q = 1, .mu = 1, .abs_one_minus_mu = -5}},
             {3.0 / 8, {.Q = 1, .mu = -5, .abs_mu = 1}},
         }},
        {2, 1, {},
         {
             {-45.0 / 16, {.q = 1, .one_minus_mu = -2, .abs_one_minus_mu = -5}},
             {-45.0 / 4, {.q = 1, .one_minus_mu = -8, .abs_one_minus_mu = 1}},
             {45.0 / 16, {.q = 1, .mu = 1, .one_minus_mu = -2, .abs_one_minus_mu = -5}},
             {45.0 / 4, {.q = 1, .mu = 1, .one_minus_mu = -8, .abs_one_minus_mu = 1}},
             {-75.0 / 8, {.Q = 1, .mu = -7, .abs_mu = 1}},
         }},
        {3, 1, {},
         {
             {45.0 / 4, {.sqrt3 = 1, .q = 1, .Q = -1, .one_minus_q = 1, .abs_one_minus_mu = -5}},
             {-45.0 / 4, {.sqrt3 = 1, .q = 1, .Q = -1, .one_minus_q = 1, .mu = -1, .abs_one_minus_mu = -5}},
             {45.0 / 4, {.sqrt3 = 1, .mu = -7, .abs_mu = 1}},
             {-45.0 / 4, {.sqrt3 = 1, .q = 1, .mu = -7, .abs_mu = 1}},
             {-45.0 / 4, {.sqrt3 = 1, .mu = -6, .abs_mu = 1}},
             {45.0 / 4, {.sqrt3 = 1, .q = 1, .mu = -6, .abs_mu = 1}},
         }},
        {4, 1, {},
         {
             {945.0 / 64, {.q = 1, .one_minus_mu = -4, .abs_one_minus_mu = -5}},
             {315.0 / 2, {.q = 1, .one_minus_mu = -10, .abs_one_minus_mu = 1}},
             {-945.0 / 64, {.q = 1, .mu = 1, .one_minus_mu = -4, .abs_one_minus_mu = -5}},
             {-315.0 / 2, {.q = 1, .mu = 1, .one_minus_mu = -10, .abs_one_minus_mu = 1}},
             {-11025.0 / 64, {.Q = 1, .mu = -9, .abs_mu = 1}},
         }},
    }},
    }};
    return table;
}

} // namespace birkhoff::rtbp::detail
