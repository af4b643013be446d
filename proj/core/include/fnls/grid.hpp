#ifndef FNLS_GRID_HPP
#define FNLS_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace fnls {

/** Uniform periodic box [-l,l)^d with the discrete wave-vector table.
 *
 * Points per axis n must be even and 5-smooth (prime factors 2/3/5), which
 * covers the power-of-two sizes as well as the 48^3 preset; the axis
 * frequencies are k_j = (pi/l)*m with m in {-n/2,...,n/2-1}, stored in FFT
 * layout (non-negative m first, then negative). Physical coordinates are
 * x_j = -l + j*dx with dx = 2l/n. Copies are cheap: the per-point tables
 * are shared and immutable.
 */
struct Grid {
    int d = 0;
    int n = 0;
    double l = 0.0;
    double dx = 0.0;

    struct Tables {
        std::vector<double> axis_k;  // per-axis frequency, length n, FFT order
        std::vector<double> axis_x;  // per-axis coordinate, length n
        std::vector<double> k2;      // |k|^2 per flat spectral index, length n^d
        std::vector<double> r2;      // |x|^2 per flat physical index, length n^d
        double kmax = 0.0;           // max Euclidean |k| on the grid
        double k2_median = 0.0;      // median of |k|^2 over all modes
    };
    std::shared_ptr<const Tables> tables;

    std::size_t size() const;
    double volume() const { return cell() * static_cast<double>(size()); }
    double cell() const;  // quadrature weight dx^d

    const std::vector<double>& k2() const { return tables->k2; }
    const std::vector<double>& r2() const { return tables->r2; }
    const std::vector<double>& axis_k() const { return tables->axis_k; }
    const std::vector<double>& axis_x() const { return tables->axis_x; }
    double kmax() const { return tables->kmax; }
    double k2_median() const { return tables->k2_median; }

    /// Decompose a flat (row-major) index into per-axis indices.
    void unflatten(std::size_t flat, int* idx) const;

    bool compatible(const Grid& other) const {
        return d == other.d && n == other.n && l == other.l;
    }
};

/// Build a grid; throws std::invalid_argument unless d in 1..3, n an even
/// 5-smooth size >= 16 and l > 0.
Grid make_grid(int d, int n, double l);

}  // namespace fnls

#endif
