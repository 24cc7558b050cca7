#include "maxmin/cellfree/geometry.hpp"

#include "maxmin/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace maxmin::cellfree {

NetworkGeometry make_geometry(Index L, Index M_ant, Index K, double area_side,
                              std::uint64_t seed) {
    if (L < 1 || M_ant < 1 || K < 1)
        throw std::invalid_argument("make_geometry: counts must be >= 1");
    if (!(area_side > 0.0))
        throw std::invalid_argument("make_geometry: area side must be positive");
    const auto grid = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(L))));
    if (grid * grid != L)
        throw std::invalid_argument("make_geometry: L must be a perfect square");

    NetworkGeometry geo;
    geo.L = L;
    geo.M_ant = M_ant;
    geo.K = K;
    geo.area_side = area_side;

    geo.ap_positions.resize(L, 2);
    const double pitch = area_side / static_cast<double>(grid);
    for (Index ix = 0; ix < grid; ++ix)
        for (Index iy = 0; iy < grid; ++iy) {
            const Index l = ix * grid + iy;
            geo.ap_positions(l, 0) = (static_cast<double>(ix) + 0.5) * pitch;
            geo.ap_positions(l, 1) = (static_cast<double>(iy) + 0.5) * pitch;
        }

    rng::Stream ue_stream(seed, "ue_positions");
    geo.ue_positions.resize(K, 2);
    for (Index k = 0; k < K; ++k) {
        geo.ue_positions(k, 0) = ue_stream.uniform(0.0, area_side);
        geo.ue_positions(k, 1) = ue_stream.uniform(0.0, area_side);
    }
    return geo;
}

double ap_ue_distance(const NetworkGeometry& geo, Index l, Index k) {
    const double dx = geo.ap_positions(l, 0) - geo.ue_positions(k, 0);
    const double dy = geo.ap_positions(l, 1) - geo.ue_positions(k, 1);
    return std::sqrt(dx * dx + dy * dy + geo.height_diff * geo.height_diff);
}

} // namespace maxmin::cellfree
