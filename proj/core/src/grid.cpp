#include "fnls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fnls {

namespace {

// even and 5-smooth: the sizes the transform handles at full speed, and the
// ones for which the symmetric mode range {-n/2,...,n/2-1} makes sense
bool fft_friendly(int n) {
    if (n <= 0 || n % 2 != 0) return false;
    for (int f : {2, 3, 5})
        while (n % f == 0) n /= f;
    return n == 1;
}

}  // namespace

std::size_t Grid::size() const {
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<std::size_t>(n);
    return total;
}

double Grid::cell() const {
    double w = 1.0;
    for (int a = 0; a < d; ++a) w *= dx;
    return w;
}

void Grid::unflatten(std::size_t flat, int* idx) const {
    for (int a = d - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % static_cast<std::size_t>(n));
        flat /= static_cast<std::size_t>(n);
    }
}

Grid make_grid(int d, int n, double l) {
    if (d < 1 || d > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (!fft_friendly(n) || n < 16)
        throw std::invalid_argument(
            "grid points per axis must be >= 16, even, with prime factors 2/3/5");
    if (!(l > 0.0)) throw std::invalid_argument("grid half-length must be positive");

    Grid g;
    g.d = d;
    g.n = n;
    g.l = l;
    g.dx = 2.0 * l / n;

    auto tab = std::make_shared<Grid::Tables>();
    const double dk = std::numbers::pi / l;
    tab->axis_k.resize(n);
    tab->axis_x.resize(n);
    for (int j = 0; j < n; ++j) {
        int m = (j < n / 2) ? j : j - n;
        tab->axis_k[j] = dk * m;
        tab->axis_x[j] = -l + j * g.dx;
    }

    const std::size_t total = g.size();
    tab->k2.resize(total);
    tab->r2.resize(total);
    int idx[3] = {0, 0, 0};
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int a = d - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        double k2 = 0.0, r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            const double k = tab->axis_k[idx[a]];
            const double x = tab->axis_x[idx[a]];
            k2 += k * k;
            r2 += x * x;
        }
        tab->k2[flat] = k2;
        tab->r2[flat] = r2;
    }
    tab->kmax = std::sqrt(*std::max_element(tab->k2.begin(), tab->k2.end()));
    std::vector<double> sorted = tab->k2;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    tab->k2_median = sorted[sorted.size() / 2];

    g.tables = std::move(tab);
    return g;
}

}  // namespace fnls
