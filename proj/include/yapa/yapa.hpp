#pragma once

// Umbrella header for the young-age preferential attachment toolkit.

#include "yapa/connectivity.hpp"
#include "yapa/dag.hpp"
#include "yapa/degree_stats.hpp"
#include "yapa/generator.hpp"
#include "yapa/io.hpp"
#include "yapa/model.hpp"
#include "yapa/parallel.hpp"
#include "yapa/path_metrics.hpp"
#include "yapa/quadrature.hpp"
#include "yapa/rng.hpp"
#include "yapa/stats.hpp"
#include "yapa/theory.hpp"
