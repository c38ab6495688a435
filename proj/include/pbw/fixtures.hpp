#pragma once

#include <vector>

#include "pbw/liealg.hpp"

namespace pbw::fixtures {

LieAlg abelian(int d);
LieAlg a2();                ///< [x,y] = y
LieAlg heisenberg();        ///< [x,y] = z
LieAlg sl2();               ///< basis e,h,f
LieAlg aff1();              ///< [h,x] = x
LieAlg gl11();              ///< gl(1|1): E11, E22 in degree 0; E12 in degree 1, E21 in degree -1
LieAlg super_heisenberg();  ///< t in degree 1, h in degree 2, [t,t] = h
LieAlg semidirect_h3();     ///< d, x, y, z with [x,y]=z, [d,x]=x, [d,y]=-y

/// Not Lie: [x,y]=z, [x,z]=y, [y,z]=y.
LieAlg bad_xyz();
/// Not Lie: x, t, w in degrees 0, 1, 2 with [t,t]=w, [x,t]=t and [x,w]=0.
LieAlg bad_super();

/// abelian(2), A2, H3, sl2, aff(1), gl(1|1).
std::vector<LieAlg> standard_set();

}  // namespace pbw::fixtures
