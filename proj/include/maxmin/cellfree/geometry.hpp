#ifndef MAXMIN_CELLFREE_GEOMETRY_HPP
#define MAXMIN_CELLFREE_GEOMETRY_HPP

#include "maxmin/problem.hpp"

#include <cstdint>

namespace maxmin::cellfree {

using Points = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// AP/UE layout of one network realization. APs sit at the cell centers of a
/// sqrt(L) x sqrt(L) partition of the square; UEs are i.i.d. uniform.
struct NetworkGeometry {
    Index L = 0;
    Index M_ant = 0;
    Index K = 0;
    double area_side = 0.0;    ///< meters
    double height_diff = 10.0; ///< AP-UE height difference, meters
    Points ap_positions;       ///< L x 2
    Points ue_positions;       ///< K x 2
};

/// Deterministic given the seed. Throws when L is not a perfect square or a
/// count is nonpositive.
NetworkGeometry make_geometry(Index L, Index M_ant, Index K, double area_side,
                              std::uint64_t seed);

/// 3-D distance between AP l and UE k, including the height difference.
double ap_ue_distance(const NetworkGeometry& geo, Index l, Index k);

} // namespace maxmin::cellfree

#endif
