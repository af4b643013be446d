#include "fnls/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fnls {

static_assert(std::endian::native == std::endian::little,
              "checkpoint format is little-endian; add byte swapping for this platform");

namespace {

constexpr char kMagic[4] = {'F', 'N', 'L', 'S'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T take(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("checkpoint truncated while reading header");
    return v;
}

}  // namespace

void write_checkpoint(const ComplexField& u, const std::string& path, double t,
                      const PhysParams& params) {
    ComplexField phys = to_physical(u);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open checkpoint for writing: " + path);
    out.write(kMagic, 4);
    put(out, kVersion);
    put(out, static_cast<std::uint32_t>(phys.grid.d));
    put(out, static_cast<std::uint32_t>(phys.grid.n));
    put(out, phys.grid.l);
    put(out, params.s);
    put(out, params.p);
    put(out, static_cast<std::uint8_t>(params.sign == Sign::focusing ? 0 : 1));
    put(out, t);
    for (const auto& v : phys.values) {
        put(out, v.real());
        put(out, v.imag());
    }
    if (!out) throw std::runtime_error("checkpoint write failed: " + path);
}

CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint: " + path);

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("bad checkpoint magic in " + path +
                                 " (expected \"FNLS\")");
    const auto version = take<std::uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("unsupported checkpoint version " + std::to_string(version) +
                                 " in " + path + " (reader supports version 1)");
    const auto d = take<std::uint32_t>(in);
    const auto n = take<std::uint32_t>(in);
    const double l = take<double>(in);
    const double s = take<double>(in);
    const double p = take<double>(in);
    const auto sign_byte = take<std::uint8_t>(in);
    if (sign_byte > 1) throw std::runtime_error("bad sign byte in " + path);
    const double t = take<double>(in);

    CheckpointData data;
    data.params = make_params(static_cast<int>(d), s, p,
                              sign_byte == 0 ? Sign::focusing : Sign::defocusing);
    Grid grid = make_grid(static_cast<int>(d), static_cast<int>(n), l);
    data.field = ComplexField(grid, Space::physical);
    data.time = t;

    const std::size_t total = grid.size();
    std::vector<double> buf(2 * total);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != buf.size() * sizeof(double))
        throw std::runtime_error("checkpoint payload shorter than header promises in " + path);
    in.peek();
    if (!in.eof())
        throw std::runtime_error("checkpoint payload longer than header promises in " + path);
    for (std::size_t i = 0; i < total; ++i)
        data.field.values[i] = {buf[2 * i], buf[2 * i + 1]};
    return data;
}

}  // namespace fnls
