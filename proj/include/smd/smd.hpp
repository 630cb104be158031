#pragma once

#include "smd/distance.hpp"
#include "smd/error.hpp"
#include "smd/families.hpp"
#include "smd/fixtures.hpp"
#include "smd/graph_io.hpp"
#include "smd/resolve.hpp"
#include "smd/sign.hpp"
#include "smd/signed_graph.hpp"
#include "smd/trees.hpp"
#include "smd/verify.hpp"
