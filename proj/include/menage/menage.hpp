#pragma once

#include "menage/core.hpp"
#include "menage/counted_integer.hpp"
#include "menage/exact_integer.hpp"
#include "menage/oracles.hpp"
#include "menage/output.hpp"
#include "menage/verify.hpp"
