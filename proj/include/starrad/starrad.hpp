#pragma once

#include "bisection.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "published.hpp"
#include "radii.hpp"
#include "regions.hpp"
#include "verify.hpp"
