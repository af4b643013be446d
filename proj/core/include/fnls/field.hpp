#ifndef FNLS_FIELD_HPP
#define FNLS_FIELD_HPP

#include <complex>
#include <vector>

#include "fnls/grid.hpp"

namespace fnls {

enum class Space { physical, spectral };

/** Complex scalar state on a Grid, tagged with the space its values live in.
 *
 * Spectral values are DFT coefficients normalized so that
 * u(x_j) = sum_k uhat_k exp(i k.x_j); Parseval then reads
 * ||u||_L2^2 = V * sum_k |uhat_k|^2 with V the box volume.
 */
struct ComplexField {
    Grid grid;
    Space space = Space::physical;
    std::vector<std::complex<double>> values;

    ComplexField() = default;
    ComplexField(const Grid& g, Space sp)
        : grid(g), space(sp), values(g.size(), {0.0, 0.0}) {}

    std::size_t size() const { return values.size(); }
};

/// In-place transform to the target space (no-op when already there).
void transform_in_place(ComplexField& u, Space target);

ComplexField to_physical(const ComplexField& u);
ComplexField to_spectral(const ComplexField& u);

/// Returns a copy with the k = 0 (mean) mode removed.
ComplexField drop_zero_mode(const ComplexField& u);

bool all_finite(const ComplexField& u);

namespace detail {
// Raw in-place DFTs on a grid-shaped buffer; forward applies the 1/n^d
// analysis normalization. Thread-safe (plan creation is serialized).
void fft_forward(const Grid& g, std::complex<double>* data);
void fft_backward(const Grid& g, std::complex<double>* data);
}  // namespace detail

}  // namespace fnls

#endif
