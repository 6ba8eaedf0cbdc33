// oracle.cpp - dense SVD reference for the discretized operator
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

extern "C" {
void dgesdd_(const char* jobz, const int* m, const int* n, double* a,
             const int* lda, double* s, double* u, const int* ldu, double* vt,
             const int* ldvt, double* work, const int* lwork, int* iwork,
             int* info);
}

namespace hardysn {

KernelMatrix discretize(const OperatorSpec& op, int m) {
    if (m < 16 || m > 8192)
        throw std::invalid_argument("oracle grid wants 16..8192 cells");
    KernelMatrix km;
    km.size = m;
    km.interval = op.domain;
    km.base = op.base;
    km.h = op.domain.length() / m;
    km.data.assign(static_cast<size_t>(m) * m, 0.0);
    const double a = op.domain.a;
    const double h = km.h;
    for (int i = 0; i < m; ++i) {
        const double xi = a + (i + 0.5) * h;
        const double vi = op.weights.v.value_at(xi);
        const double lo = std::min(op.base, xi);
        const double hi = std::max(op.base, xi);
        const double sgn = xi >= op.base ? 1.0 : -1.0;
        for (int j = 0; j < m; ++j) {
            const double cl = a + j * h;
            const double overlap = std::min(hi, cl + h) - std::max(lo, cl);
            if (overlap <= 0.0) continue;
            const double xj = cl + 0.5 * h;
            km.data[static_cast<size_t>(i) * m + j] =
                sgn * vi * op.weights.u.value_at(xj) * overlap;
        }
    }
    return km;
}

namespace {

// Singular values of a row-major square matrix. The buffer is handed to
// LAPACK as if column-major, i.e. transposed, which leaves the singular
// values unchanged. Destroys the input copy.
std::vector<double> singular_values(std::vector<double> a, int n) {
    std::vector<double> s(n);
    std::vector<int> iwork(static_cast<size_t>(8) * n);
    int info = 0;
    int lwork = -1;
    double wsize = 0.0;
    const char jobz = 'N';
    dgesdd_(&jobz, &n, &n, a.data(), &n, s.data(), nullptr, &n, nullptr, &n,
            &wsize, &lwork, iwork.data(), &info);
    if (info != 0)
        throw std::runtime_error("SVD workspace query failed (info=" +
                                 std::to_string(info) + ")");
    lwork = static_cast<int>(wsize);
    std::vector<double> work(static_cast<size_t>(lwork));
    dgesdd_(&jobz, &n, &n, a.data(), &n, s.data(), nullptr, &n, nullptr, &n,
            work.data(), &lwork, iwork.data(), &info);
    if (info != 0)
        throw std::runtime_error("SVD did not converge (info=" +
                                 std::to_string(info) + ")");
    return s;
}

}  // namespace

std::vector<double> svd_snumbers(const KernelMatrix& km, int k) {
    if (k < 1 || k > km.size)
        throw std::invalid_argument("requested rank outside 1..size");
    std::vector<double> s = singular_values(km.data, km.size);
    s.resize(k);
    return s;
}

double projected_deviation_l2(const Interval& j, const WeightPair& w, int m) {
    OperatorSpec op(j, j.a, w, SpaceSpec::constant(2.0));
    KernelMatrix km = discretize(op, m);
    std::vector<double> vhat(m);
    double nrm2 = 0.0;
    for (int i = 0; i < m; ++i) {
        vhat[i] = w.v.value_at(j.a + (i + 0.5) * km.h);
        nrm2 += vhat[i] * vhat[i];
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (double& x : vhat) x *= inv;
    std::vector<double> row(m, 0.0);  // vhat^T A
    for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < m; ++jj) row[jj] += vhat[i] * km.at(i, jj);
    std::vector<double> b = km.data;
    for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < m; ++jj)
            b[static_cast<size_t>(i) * m + jj] -= vhat[i] * row[jj];
    std::vector<double> s = singular_values(std::move(b), m);
    return s[0];
}

}  // namespace hardysn
