// Umbrella header.
#pragma once

#include "zdkit/exact.hpp"
#include "zdkit/ring.hpp"
#include "zdkit/function_table.hpp"
#include "zdkit/spectrum.hpp"
#include "zdkit/construct.hpp"
#include "zdkit/codes.hpp"
#include "zdkit/dss.hpp"
#include "zdkit/fhs.hpp"
#include "zdkit/io.hpp"
#include "zdkit/reproduce.hpp"
