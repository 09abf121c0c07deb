#pragma once

#include <initializer_list>

#include "avelab/linalg.hpp"

namespace testing {

inline avelab::Matrix mat(int n, std::initializer_list<double> entries) {
    avelab::Matrix a(n, n);
    auto it = entries.begin();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = *it++;
    }
    return a;
}

inline avelab::Vector vec(std::initializer_list<double> entries) {
    avelab::Vector v(static_cast<Eigen::Index>(entries.size()));
    int i = 0;
    for (double x : entries) v[i++] = x;
    return v;
}

inline const avelab::Matrix B = mat(2, {1, -1, 1, -1});
inline const avelab::Matrix C = mat(2, {2, 0, 0, 2});
inline avelab::Matrix D(double eps) { return mat(2, {1, -0.5 - eps, 0.5, 0}); }

}  // namespace testing
