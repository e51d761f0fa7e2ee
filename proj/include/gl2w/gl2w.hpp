#pragma once

#include "couples.hpp"
#include "diamond.hpp"
#include "filtration.hpp"
#include "principal_series.hpp"
#include "tuples.hpp"
#include "weight.hpp"
