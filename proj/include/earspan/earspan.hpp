#pragma once

// Umbrella header for the whole library.

#include "earspan/bounds.hpp"
#include "earspan/decompose.hpp"
#include "earspan/ears.hpp"
#include "earspan/errors.hpp"
#include "earspan/evenmin.hpp"
#include "earspan/gadget.hpp"
#include "earspan/generate.hpp"
#include "earspan/graph.hpp"
#include "earspan/io.hpp"
#include "earspan/nicify.hpp"
#include "earspan/oracle.hpp"
#include "earspan/pendantize.hpp"
#include "earspan/pipeline.hpp"
#include "earspan/trace.hpp"

namespace earspan {
inline constexpr const char* version = "1.0.0";
}
