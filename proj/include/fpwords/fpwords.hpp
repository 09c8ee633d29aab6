#pragma once

// Umbrella header: word analysis in free products of two finite groups.

#include "fpwords/cancellation.hpp"
#include "fpwords/classify.hpp"
#include "fpwords/enumerate.hpp"
#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/position.hpp"
#include "fpwords/words.hpp"
