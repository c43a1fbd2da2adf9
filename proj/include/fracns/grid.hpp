#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fracns {

/// Uniform periodic grid on the box [-L,L]^d with n points per axis.
/// Wavevector convention: xi = pi*k/L with integer k in {-n/2,...,n/2-1}.
struct SpaceGrid {
    int d = 3;
    int n = 16;
    double L = M_PI;

    SpaceGrid() = default;
    SpaceGrid(int d_, int n_, double L_) : d(d_), n(n_), L(L_) {
        if (d < 1 || d > 3) throw std::invalid_argument("SpaceGrid: d must be 1, 2 or 3");
        if (n < 4 || (n & (n - 1)) != 0) throw std::invalid_argument("SpaceGrid: n must be a power of two >= 4");
        if (!(L > 0)) throw std::invalid_argument("SpaceGrid: L must be positive");
    }

    double h() const { return 2.0 * L / n; }
    Eigen::Index size() const {
        Eigen::Index s = 1;
        for (int a = 0; a < d; ++a) s *= n;
        return s;
    }

    /// Physical coordinate of sample index j in one axis: x_j = -L + j*h.
    double coord(int j) const { return -L + j * h(); }

    /// Signed integer wavenumber of FFT slot j: {0..n/2-1, -n/2..-1}.
    int wavenumber(int j) const { return j < n / 2 ? j : j - n; }

    /// Physical frequency of FFT slot j. With zero_nyquist the unpaired
    /// -n/2 mode maps to 0, which keeps odd (derivative-type) multipliers
    /// real-field safe.
    double xi(int j, bool zero_nyquist = false) const {
        int k = wavenumber(j);
        if (zero_nyquist && k == -n / 2) k = 0;
        return M_PI * k / L;
    }

    std::array<int, 3> unflatten(Eigen::Index idx) const {
        std::array<int, 3> j{0, 0, 0};
        for (int a = d - 1; a >= 0; --a) {
            j[a] = static_cast<int>(idx % n);
            idx /= n;
        }
        return j;
    }

    Eigen::Index flatten(const std::array<int, 3>& j) const {
        Eigen::Index idx = 0;
        for (int a = 0; a < d; ++a) idx = idx * n + j[a];
        return idx;
    }

    bool operator==(const SpaceGrid& o) const { return d == o.d && n == o.n && L == o.L; }
};

/// Graded time grid t_k = T (k/N)^kappa, k = 1..N. Node t = 0 is excluded;
/// the quadrature cell of node k is [t_{k-1}, t_k] with t_0 = 0, which
/// absorbs the t^{-b} endpoint singularities of the Duhamel integrands.
struct TimeGrid {
    double T = 1.0;
    int N = 32;
    double kappa = 2.0;
    Eigen::ArrayXd nodes;

    TimeGrid() { init(1.0, 32, 2.0); }

    static TimeGrid graded(double T, int N, double kappa = 2.0) {
        TimeGrid g;
        g.init(T, N, kappa);
        return g;
    }

    double node(int k) const { return nodes[k]; }
    double cell_left(int k) const { return k == 0 ? 0.0 : nodes[k - 1]; }
    double cell_width(int k) const { return nodes[k] - cell_left(k); }

    bool operator==(const TimeGrid& o) const { return T == o.T && N == o.N && kappa == o.kappa; }

private:
    void init(double T_, int N_, double kappa_) {
        if (!(T_ > 0) || N_ < 1 || !(kappa_ >= 1.0))
            throw std::invalid_argument("TimeGrid: need T>0, N>=1, kappa>=1");
        T = T_;
        N = N_;
        kappa = kappa_;
        nodes.resize(N);
        for (int k = 1; k <= N; ++k) nodes[k - 1] = T * std::pow(static_cast<double>(k) / N, kappa);
    }
};

}  // namespace fracns
