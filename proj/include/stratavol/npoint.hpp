#pragma once

#include <vector>

#include "stratavol/hpoly.hpp"
#include "stratavol/minimal.hpp"
#include "stratavol/zseries.hpp"

namespace stratavol::npoint {

// Shape of the one-point series fed to the splitting recursion, fixed by a
// calibration run (see calibrate_one_point). With cap c on the variable:
//   literal: sum_{k <= c+1} h_k z^{k-1}
//   half:    sum_{k <= c}  (1/2) h_k z^k
enum class OnePointConvention { literal, half };

// Two-point kernel K(z1,z2) = z1 z2 A / (1 - (1/2) z1 z2 B) with
//   s_k = sum_{a+b=k-1} z1^a z2^b,  A = sum_k (k+1) h_k s_k,
//   B = sum_k h_k s_k,
// expanded exactly up to the degree caps. Symmetric in z1, z2; the
// coefficient of z1^{k1} z2^{k2} is weighted-homogeneous of h-degree
// k1 + k2 under weight(h_j) = j + 1.
struct Kernel2 {
    ZSeries<HPoly> series; // caps (d1, d2)
    HPoly coeff(int k1, int k2) const { return series.coeff({k1, k2}); }
};

Kernel2 two_point_kernel(int d1, int d2);

// Series over the variables z_i for i in a strictly increasing index set;
// series variable p corresponds to indices[p].
struct NPointSeries {
    std::vector<int> indices;
    ZSeries<HPoly> series;
};

NPointSeries one_point_series(int index, int cap, OnePointConvention conv);

// D2(f,g) = sum_{k1,k2>=1} c_{k1,k2} (df/dh_{k1}) (dg/dh_{k2}) over the
// disjoint union of the two index sets, with c_{k1,k2} the kernel
// coefficients. Only h-indices actually present in f resp. g contribute;
// the kernel caps must cover all of them.
NPointSeries d2_pair(const NPointSeries& f, const NPointSeries& g, const Kernel2& kernel);

// The splitting recursion: |I| = 1 is the configured one-point series,
// |I| = 2 the kernel, and for |I| > 2
//   H_I = 1/(2(|I|-1)) sum over ordered splits I = I' u I'' (both nonempty)
//         of D2(H_{I'}, H_{I''}).
// Subset results are memoized internally; cost grows with 3^|I|.
NPointSeries npoint_series(const std::vector<int>& indices, const std::vector<int>& caps,
                           OnePointConvention conv = OnePointConvention::half);

// Ring morphism h_k -> 2k a((k)) into t-polynomials at the table's cap.
class EvMap {
public:
    explicit EvMap(const minimal::MinimalTable& table) : table_(table) {}
    TPoly apply(const HPoly& p) const; // needs table max_k >= every h-index
private:
    const minimal::MinimalTable& table_;
};

// Generating polynomial of the n-zero stratum family:
//   a(mu) = 1/(2|mu|) ev([z^mu] H_{{1..n}})   for n >= 2,
// and the minimal table entry for n = 1. Requires table.max_k >= |mu| - 1
// for the ev image (configuration error otherwise).
TPoly a_poly(const Partition& mu, const minimal::MinimalTable& table,
             OnePointConvention conv = OnePointConvention::half);

// Compares a_poly((2,2,2)) under both one-point conventions against the
// reference combination 3 a((3,2)) + a((1)) a((2,1)) built from convention-
// independent one- and two-point values. The convention that reproduces the
// reference is locked; when neither does, both candidates are recorded and
// half stays the default.
struct CalibrationResult {
    TPoly target;
    TPoly literal_value;
    TPoly half_value;
    bool literal_matches = false;
    bool half_matches = false;
    OnePointConvention chosen = OnePointConvention::half;
};

CalibrationResult calibrate_one_point(const minimal::MinimalTable& table);

} // namespace stratavol::npoint
