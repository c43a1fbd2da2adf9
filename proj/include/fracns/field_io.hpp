#pragma once

#include <string>

#include "fracns/field.hpp"

namespace fracns {

/// Flat binary snapshot: magic "FRNSFLD1", int32 d, int32 n, float64 L,
/// int32 component count, then row-major float64 payload per component.
void save_field_binary(const VectorField& field, const std::string& path);
VectorField load_field_binary(const std::string& path);

/// CSV dump (small grids): header x1[,x2[,x3]],c0[,c1...] then one row per
/// grid point.
void save_field_csv(const VectorField& field, const std::string& path);

}  // namespace fracns
