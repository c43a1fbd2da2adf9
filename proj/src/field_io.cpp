#include "fracns/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fracns {
namespace {
constexpr char kMagic[8] = {'F', 'R', 'N', 'S', 'F', 'L', 'D', '1'};
}

void save_field_binary(const VectorField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_field_binary: cannot open " + path);
    out.write(kMagic, 8);
    const std::int32_t d = field.grid.d, n = field.grid.n, ncomp = field.ncomp();
    const double L = field.grid.L;
    out.write(reinterpret_cast<const char*>(&d), 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&L), 8);
    out.write(reinterpret_cast<const char*>(&ncomp), 4);
    for (const auto& c : field.comp)
        out.write(reinterpret_cast<const char*>(c.data()), static_cast<std::streamsize>(c.size() * 8));
    if (!out) throw std::runtime_error("save_field_binary: write failed on " + path);
}

VectorField load_field_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_field_binary: cannot open " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("load_field_binary: bad magic in " + path);
    std::int32_t d = 0, n = 0, ncomp = 0;
    double L = 0.0;
    in.read(reinterpret_cast<char*>(&d), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&L), 8);
    in.read(reinterpret_cast<char*>(&ncomp), 4);
    VectorField field(SpaceGrid(d, n, L), ncomp);
    for (auto& c : field.comp)
        in.read(reinterpret_cast<char*>(c.data()), static_cast<std::streamsize>(c.size() * 8));
    if (!in) throw std::runtime_error("load_field_binary: truncated payload in " + path);
    return field;
}

void save_field_csv(const VectorField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_field_csv: cannot open " + path);
    const SpaceGrid& g = field.grid;
    for (int a = 0; a < g.d; ++a) out << "x" << (a + 1) << ",";
    for (int c = 0; c < field.ncomp(); ++c) out << "c" << c << (c + 1 < field.ncomp() ? "," : "\n");
    out.precision(17);
    for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
        auto j = g.unflatten(idx);
        for (int a = 0; a < g.d; ++a) out << g.coord(j[a]) << ",";
        for (int c = 0; c < field.ncomp(); ++c)
            out << field.comp[c][idx] << (c + 1 < field.ncomp() ? "," : "\n");
    }
}

}  // namespace fracns
