#pragma once

// Community Guided Attachment graphs and (alpha, beta)-clusters.

#include "bounds.hpp"
#include "cluster.hpp"
#include "config.hpp"
#include "edge_list.hpp"
#include "experiments.hpp"
#include "generator.hpp"
#include "graph.hpp"
#include "numeric.hpp"
#include "rng.hpp"
#include "search.hpp"
#include "tree.hpp"
