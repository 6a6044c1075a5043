#pragma once

/**
 * @file snapshot.hpp
 * @brief Text snapshot files for grid fields.
 *
 * Layout (one file per scalar field or face component):
 *
 *   # congestion-field v1
 *   # dim=<1|2>
 *   # n=<cells per axis>
 *   # length=<period>
 *   # time=<t>
 *   # field=<name>
 *   # location=<cell|node|face_x|face_y>
 *   <value>            one line per entry, storage order (j * n + i)
 *
 * Values are printed with 17 significant digits so that a round trip is exact.
 */

#include <filesystem>
#include <string>
#include <vector>

#include "congestion/grid.hpp"

namespace congestion {

struct Snapshot {
    Grid grid;
    double time = 0.0;
    std::string field;
    std::string location;
    std::vector<double> values;
};

void write_snapshot(const std::filesystem::path& path, const Snapshot& snapshot);
/// Throws ConfigError on a malformed file.
Snapshot read_snapshot(const std::filesystem::path& path);

Snapshot make_snapshot(const ScalarField& s, double time, std::string name);
Snapshot make_snapshot(const FaceVectorField& u, int axis, double time, std::string name);

}  // namespace congestion
