#pragma once

#include "edgeiso/blockgeom.hpp"
#include "edgeiso/certifier.hpp"
#include "edgeiso/compression.hpp"
#include "edgeiso/downsets.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/explorer.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/json_io.hpp"
#include "edgeiso/named.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/partition.hpp"
#include "edgeiso/rank_space.hpp"
#include "edgeiso/solver.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {
inline constexpr const char* version = "0.1.0";
}
