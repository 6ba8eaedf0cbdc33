// oracle.hpp - dense SVD reference for the discretized operator
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "hardysn/operator.hpp"

namespace hardysn {

/// Dense kernel matrix of the operator on a uniform m-point grid over its
/// domain. Row i applies the weight v at the output point, column j the
/// weight u and the overlap of cell j with the integration range. With the
/// base at the left end the matrix is lower triangular with h on the
/// strict lower part and h/2 on the diagonal (times the weights).
struct KernelMatrix {
    int size = 0;
    Interval interval{0.0, 1.0};
    double base = 0.0;
    double h = 0.0;
    std::vector<double> data;  // row-major size x size

    double at(int i, int j) const { return data[static_cast<size_t>(i) * size + j]; }
};

KernelMatrix discretize(const OperatorSpec& op, int m);

/// Largest k singular values of the kernel matrix, descending. On the
/// uniform grid these are the L^2 s-numbers of the discretized operator.
std::vector<double> svd_snumbers(const KernelMatrix& km, int k);

/// L^2 oracle for the deviation-from-span functional: the largest singular
/// value of (I - vv^T/|v|^2) A, i.e. the operator followed by projection
/// onto the orthogonal complement of v.
double projected_deviation_l2(const Interval& j, const WeightPair& w, int m);

}  // namespace hardysn
