#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

Mat identity(size_t dim) {
    Mat m(dim, Vec(dim, cd(0, 0)));
    for (size_t i = 0; i < dim; ++i) {
        m[i][i] = 1;
    }
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    size_t ra = a.size(), ca = a[0].size();
    size_t rb = b.size(), cb = b[0].size();
    Mat m(ra * rb, Vec(ca * cb, cd(0, 0)));
    for (size_t i = 0; i < ra; ++i) {
        for (size_t j = 0; j < ca; ++j) {
            for (size_t k = 0; k < rb; ++k) {
                for (size_t l = 0; l < cb; ++l) {
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

Mat mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out(n, Vec(m, cd(0, 0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == cd(0, 0)) {
                continue;
            }
            for (size_t l = 0; l < m; ++l) {
                out[i][l] += a[i][j] * b[j][l];
            }
        }
    }
    return out;
}

Mat dagger(const Mat& a) {
    Mat out(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < a[0].size(); ++j) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

Vec apply(const Mat& m, const Vec& v) {
    Vec out(m.size(), cd(0, 0));
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

Mat add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < a[0].size(); ++j) {
            out[i][j] += b[i][j];
        }
    }
    return out;
}

Mat scale(cd s, const Mat& a) {
    Mat out = a;
    for (auto& row : out) {
        for (auto& x : row) {
            x *= s;
        }
    }
    return out;
}

Mat pauli(char p) {
    switch (p) {
        case 'I':
            return identity(2);
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, cd(0, -1)}, {cd(0, 1), 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
    }
    throw std::invalid_argument("bad pauli");
}

Mat hadamard() {
    double r = 1 / std::sqrt(2.0);
    return {{r, r}, {r, -r}};
}

Mat phase_s() {
    return {{1, 0}, {0, cd(0, 1)}};
}

Mat cz() {
    Mat m = identity(4);
    m[3][3] = -1;
    return m;
}

Mat cnot() {
    Mat m(4, Vec(4, cd(0, 0)));
    m[0][0] = m[1][1] = 1;
    m[2][3] = m[3][2] = 1;
    return m;
}

Mat rx(double angle) {
    double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {{c, cd(0, -s)}, {cd(0, -s), c}};
}

Mat rz(double angle) {
    return {{std::exp(cd(0, -angle / 2)), 0}, {0, std::exp(cd(0, angle / 2))}};
}

Mat embed(const Mat& gate, const std::vector<int>& qubits, int n) {
    size_t dim = size_t{1} << n;
    size_t gdim = gate.size();
    Mat out(dim, Vec(dim, cd(0, 0)));
    for (size_t col = 0; col < dim; ++col) {
        // Extract gate-local index from col.
        size_t gcol = 0;
        for (size_t q = 0; q < qubits.size(); ++q) {
            int bit = n - 1 - qubits[q];
            if ((col >> bit) & 1) {
                gcol |= size_t{1} << (qubits.size() - 1 - q);
            }
        }
        for (size_t grow = 0; grow < gdim; ++grow) {
            if (gate[grow][gcol] == cd(0, 0)) {
                continue;
            }
            size_t row = col;
            for (size_t q = 0; q < qubits.size(); ++q) {
                int bit = n - 1 - qubits[q];
                size_t want = (grow >> (qubits.size() - 1 - q)) & 1;
                row = (row & ~(size_t{1} << bit)) | (want << bit);
            }
            out[row][col] += gate[grow][gcol];
        }
    }
    return out;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < a[0].size(); ++j) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

double vec_distance(const Vec& a, const Vec& b) {
    double d2 = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        d2 += std::norm(a[i] - b[i]);
    }
    return std::sqrt(d2);
}

bool vecs_equal_up_to_phase(const Vec& a, const Vec& b, double tol) {
    cd ip(0, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        ip += std::conj(a[i]) * b[i];
    }
    if (std::abs(ip) < 1e-15) {
        return false;
    }
    cd phase = ip / std::abs(ip);
    Vec a2 = a;
    for (auto& x : a2) {
        x *= phase;
    }
    return vec_distance(a2, b) <= tol;
}

bool commutator_zero(const Mat& a, const Mat& b, double tol) {
    return max_abs_diff(mul(a, b), mul(b, a)) <= tol;
}

}  // namespace oracle
