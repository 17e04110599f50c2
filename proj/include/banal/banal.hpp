#pragma once

/// Umbrella header for the multisegment library.

#include <banal/error.hpp>
#include <banal/lines.hpp>
#include <banal/segment.hpp>
#include <banal/multisegment.hpp>
#include <banal/shuffle.hpp>
#include <banal/classify.hpp>
#include <banal/lifting.hpp>
#include <banal/literal.hpp>
