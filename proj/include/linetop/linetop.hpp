#pragma once

#include "atlas.hpp"
#include "bounds.hpp"
#include "core.hpp"
#include "dot.hpp"
#include "generators.hpp"
#include "json_io.hpp"
#include "order.hpp"
#include "space.hpp"
#include "splitting.hpp"
#include "verify.hpp"
