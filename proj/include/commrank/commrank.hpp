#pragma once

#include "commrank/bench.hpp"
#include "commrank/centrality.hpp"
#include "commrank/errors.hpp"
#include "commrank/graph.hpp"
#include "commrank/label_propagation.hpp"
#include "commrank/multilevel.hpp"
#include "commrank/ordering.hpp"
#include "commrank/partition.hpp"
#include "commrank/quality.hpp"
#include "commrank/rng.hpp"
#include "commrank/stats.hpp"
