#include "gsqg/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace gsqg {

namespace {
constexpr char magic[5] = {'G', 'S', 'Q', 'G', '1'};
static_assert(sizeof(double) == 8);
} // namespace

void write_snapshot(const std::string& path, const Field& field, double time,
                    double beta) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
    os.write(magic, sizeof(magic));
    const std::uint32_t n = static_cast<std::uint32_t>(field.grid().n);
    const double l = field.grid().length;
    os.write(reinterpret_cast<const char*>(&n), sizeof(n));
    os.write(reinterpret_cast<const char*>(&l), sizeof(l));
    os.write(reinterpret_cast<const char*>(&time), sizeof(time));
    os.write(reinterpret_cast<const char*>(&beta), sizeof(beta));
    const auto& p = field.physical();
    os.write(reinterpret_cast<const char*>(p.data()),
             static_cast<std::streamsize>(p.size() * sizeof(double)));
    if (!os) throw std::runtime_error("write_snapshot: short write to " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
    char head[5];
    is.read(head, sizeof(head));
    if (!is || std::memcmp(head, magic, sizeof(magic)) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path);
    std::uint32_t n = 0;
    double l = 0.0, time = 0.0, beta = 0.0;
    is.read(reinterpret_cast<char*>(&n), sizeof(n));
    is.read(reinterpret_cast<char*>(&l), sizeof(l));
    is.read(reinterpret_cast<char*>(&time), sizeof(time));
    is.read(reinterpret_cast<char*>(&beta), sizeof(beta));
    if (!is) throw std::runtime_error("read_snapshot: truncated header in " + path);
    TorusGrid grid(static_cast<int>(n), l);
    std::vector<double> samples(static_cast<std::size_t>(n) * n);
    is.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(samples.size() * sizeof(double)));
    if (!is) throw std::runtime_error("read_snapshot: truncated payload in " + path);
    return Snapshot{Field::from_physical(grid, std::move(samples)), time, beta};
}

} // namespace gsqg
