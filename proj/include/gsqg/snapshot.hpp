#pragma once

#include "gsqg/field.hpp"

#include <string>

namespace gsqg {

struct Snapshot {
    Field field;
    double time = 0.0;
    double beta = 0.0;
};

/// Binary snapshot, little-endian: magic "GSQG1", u32 N, f64 L, f64 t,
/// f64 beta, then N^2 float64 physical samples row-major.
void write_snapshot(const std::string& path, const Field& field, double time,
                    double beta);
Snapshot read_snapshot(const std::string& path);

} // namespace gsqg
