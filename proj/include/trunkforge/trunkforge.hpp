#pragma once

#include "trunkforge/catalog.hpp"
#include "trunkforge/compose.hpp"
#include "trunkforge/errors.hpp"
#include "trunkforge/invariants.hpp"
#include "trunkforge/morse.hpp"
#include "trunkforge/moves.hpp"
#include "trunkforge/profile.hpp"
#include "trunkforge/render.hpp"
#include "trunkforge/search.hpp"
#include "trunkforge/serialize.hpp"
