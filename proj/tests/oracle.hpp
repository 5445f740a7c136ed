// Test-only dense matrix oracle. Deliberately a separate, naive
// implementation: nothing here shares code with the engines under test.
#pragma once

#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = std::vector<std::vector<cd>>;

Mat identity(size_t dim);
Mat kron(const Mat& a, const Mat& b);
Mat mul(const Mat& a, const Mat& b);
Mat dagger(const Mat& a);
Vec apply(const Mat& m, const Vec& v);
Mat add(const Mat& a, const Mat& b);
Mat scale(cd s, const Mat& a);

Mat pauli(char p);  // 'I','X','Y','Z'
Mat hadamard();
Mat phase_s();      // exp(-i pi Z/4) ~ diag(1, i)
Mat cz();
Mat cnot();         // control = first (most significant) qubit
Mat rx(double angle);
Mat rz(double angle);

// Embeds a gate acting on the listed qubits (qubit i owns bit n-1-i) into an
// n-qubit operator.
Mat embed(const Mat& gate, const std::vector<int>& qubits, int n);

double max_abs_diff(const Mat& a, const Mat& b);
double vec_distance(const Vec& a, const Vec& b);
bool vecs_equal_up_to_phase(const Vec& a, const Vec& b, double tol);
bool commutator_zero(const Mat& a, const Mat& b, double tol);

}  // namespace oracle
