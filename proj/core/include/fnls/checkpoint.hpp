#ifndef FNLS_CHECKPOINT_HPP
#define FNLS_CHECKPOINT_HPP

#include <string>

#include "fnls/field.hpp"
#include "fnls/params.hpp"

namespace fnls {

/** Binary field checkpoint, little-endian:
 *   magic "FNLS" | version u32=1 | d u32 | n u32 | l f64 | s f64 | p f64 |
 *   sign u8 (0 focusing, 1 defocusing) | t f64 |
 *   n^d interleaved (re f64, im f64), row-major physical order.
 */
struct CheckpointData {
    ComplexField field;
    PhysParams params;
    double time = 0.0;
};

void write_checkpoint(const ComplexField& u, const std::string& path, double t,
                      const PhysParams& params);

/// Throws std::runtime_error with a structured message on bad magic,
/// unsupported version, or a payload size that disagrees with the header.
CheckpointData read_checkpoint(const std::string& path);

}  // namespace fnls

#endif
