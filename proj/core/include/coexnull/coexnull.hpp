#pragma once

#include "coexnull/array.hpp"
#include "coexnull/coexistence.hpp"
#include "coexnull/emit.hpp"
#include "coexnull/error.hpp"
#include "coexnull/harness.hpp"
#include "coexnull/optimizer.hpp"
#include "coexnull/rate.hpp"
#include "coexnull/scenario.hpp"
#include "coexnull/units.hpp"
