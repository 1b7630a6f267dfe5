#pragma once

#include "majorkit/apportionment.hpp"
#include "majorkit/catchability.hpp"
#include "majorkit/circle_covering.hpp"
#include "majorkit/epidemics.hpp"
#include "majorkit/errors.hpp"
#include "majorkit/lorenz.hpp"
#include "majorkit/majorization.hpp"
#include "majorkit/paired_comparisons.hpp"
#include "majorkit/pattern_waiting.hpp"
#include "majorkit/phase_type.hpp"
#include "majorkit/random.hpp"
#include "majorkit/random_graph.hpp"
#include "majorkit/schur_harness.hpp"
#include "majorkit/sum_max.hpp"
#include "majorkit/vector_types.hpp"
