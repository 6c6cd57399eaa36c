#pragma once

#include <bqf/forms.hpp>

inline bqf::Form F(long a, long b, long c) { return bqf::Form(bqf::Int(a), bqf::Int(b), bqf::Int(c)); }

inline bqf::Matrix M(long p, long q, long r, long s) { return bqf::unimodular(p, q, r, s); }

inline std::vector<bqf::Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
