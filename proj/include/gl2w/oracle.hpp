#pragma once

#include "oracle/fq.hpp"
#include "oracle/linalg.hpp"
#include "oracle/module.hpp"
#include "oracle/structure.hpp"
#include "oracle/verify.hpp"
