#pragma once

#include "vfroe/core.hpp"
#include "vfroe/io.hpp"
#include "vfroe/oracle.hpp"
#include "vfroe/riemann.hpp"
#include "vfroe/scenarios.hpp"
#include "vfroe/scheme.hpp"
#include "vfroe/validation.hpp"
