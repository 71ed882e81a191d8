#pragma once

#include "amazing/report.hpp"

namespace amazing {

/// Every exact identity of the library for 1 <= n <= max_n: row sums,
/// spectrum, stationary law, multiplicativity, Foulkes/Worpitzky inverse
/// pair and determinant, Worpitzky evaluation, triangularity, descent
/// polynomial mass, and (for n within the oracle bounds) agreement with the
/// group-algebra and enumeration oracles.
Report verify_all(int max_n);

/// F W = I.
Report verify_foulkes_worpitzky_inverse(int n);

/// det F = 1! 2! ... n!.
Report verify_foulkes_determinant(int n);

/// sum_i F(k,i) C(x+n-i, n) = x^k for x = 1..max_x and every k.
Report verify_worpitzky_evaluation(int n, int max_x);

/// A(n,i) - S_n^[i] lies in the span of S_n^[m], m < i.
Report verify_triangularity(int n);

/// Closed-form descent polynomial equals enumeration, m = b^r.
Report verify_descent_polynomial_oracle(int n, long long b, int r);

/// Coefficient mass equals (b^r)^n.
Report verify_descent_polynomial_mass(int n, long long b, int r);

}  // namespace amazing
