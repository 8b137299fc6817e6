#pragma once

#include "skorokhod/cadlag.hpp"
#include "skorokhod/embeddings.hpp"
#include "skorokhod/exact.hpp"
#include "skorokhod/functionals.hpp"
#include "skorokhod/generators.hpp"
#include "skorokhod/markov_lab.hpp"
#include "skorokhod/metrics.hpp"
#include "skorokhod/oscillation.hpp"
#include "skorokhod/point.hpp"
#include "skorokhod/random.hpp"
#include "skorokhod/scenarios.hpp"
#include "skorokhod/serialization.hpp"
