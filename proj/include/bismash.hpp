#pragma once

#include "bismash/characters.hpp"
#include "bismash/cyclotomic.hpp"
#include "bismash/error.hpp"
#include "bismash/group.hpp"
#include "bismash/hopf.hpp"
#include "bismash/indicators.hpp"
#include "bismash/matched_pair.hpp"
#include "bismash/partition.hpp"
#include "bismash/permutation.hpp"
