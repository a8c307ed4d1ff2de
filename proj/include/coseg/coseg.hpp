#pragma once

#include "coseg/batch.hpp"
#include "coseg/construction.hpp"
#include "coseg/document.hpp"
#include "coseg/errors.hpp"
#include "coseg/generators.hpp"
#include "coseg/geometry.hpp"
#include "coseg/graph.hpp"
#include "coseg/rational.hpp"
#include "coseg/representation.hpp"
#include "coseg/svg.hpp"
#include "coseg/verifier.hpp"
