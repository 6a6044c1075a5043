#include "congestion/snapshot.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "congestion/errors.hpp"

namespace congestion {

void write_snapshot(const std::filesystem::path& path, const Snapshot& s) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open snapshot file " + path.string());
    out.precision(17);
    out << "# congestion-field v1\n"
        << "# dim=" << s.grid.dim << '\n'
        << "# n=" << s.grid.n << '\n'
        << "# length=" << s.grid.length << '\n'
        << "# time=" << s.time << '\n'
        << "# field=" << s.field << '\n'
        << "# location=" << s.location << '\n';
    for (double v : s.values) out << v << '\n';
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open snapshot file " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "# congestion-field v1")
        throw ConfigError("not a congestion field snapshot: " + path.string());

    std::map<std::string, std::string> header;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ConfigError("malformed snapshot header: " + line);
            header[line.substr(2, eq - 2)] = line.substr(eq + 1);
            continue;
        }
        values.push_back(std::stod(line));
    }
    for (const char* key : {"dim", "n", "length", "time", "field", "location"})
        if (!header.count(key)) throw ConfigError(std::string("snapshot header lacks ") + key);

    Snapshot s;
    s.grid = make_grid(std::stoi(header["dim"]), std::stoi(header["n"]), std::stod(header["length"]));
    s.time = std::stod(header["time"]);
    s.field = header["field"];
    s.location = header["location"];
    s.values = std::move(values);
    if (s.values.size() != s.grid.cells()) throw ConfigError("snapshot value count does not match its header");
    return s;
}

Snapshot make_snapshot(const ScalarField& s, double time, std::string name) {
    const auto v = s.values();
    return {s.grid(), time, std::move(name), "cell", {v.begin(), v.end()}};
}

Snapshot make_snapshot(const FaceVectorField& u, int axis, double time, std::string name) {
    const auto v = u.component(axis);
    return {u.grid(), time, std::move(name), axis == 0 ? "face_x" : "face_y", {v.begin(), v.end()}};
}

}  // namespace congestion
