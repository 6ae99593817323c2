#pragma once

// Umbrella header for the succession-counting library.

#include "succession/big_count.hpp"
#include "succession/counting.hpp"
#include "succession/cycles.hpp"
#include "succession/enumeration.hpp"
#include "succession/problem.hpp"
#include "succession/tables.hpp"
#include "succession/verification.hpp"
