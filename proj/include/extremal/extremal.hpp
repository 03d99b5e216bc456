#pragma once

#include "extremal/error.hpp"
#include "extremal/field.hpp"
#include "extremal/matrix.hpp"
#include "extremal/sparse.hpp"
#include "extremal/graph.hpp"
#include "extremal/diagram.hpp"
#include "extremal/sandwich.hpp"
#include "extremal/lfspace.hpp"
#include "extremal/lie_algebra.hpp"
#include "extremal/chevalley.hpp"
#include "extremal/generic.hpp"
#include "extremal/io.hpp"
