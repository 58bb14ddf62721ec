#pragma once

// Umbrella header.
#include "bicell/characters.hpp"
#include "bicell/charsum.hpp"
#include "bicell/closed_form.hpp"
#include "bicell/counting.hpp"
#include "bicell/error.hpp"
#include "bicell/oracle.hpp"
#include "bicell/partition.hpp"
#include "bicell/permutation.hpp"
#include "bicell/ratpoly.hpp"
#include "bicell/rational.hpp"
#include "bicell/yseries.hpp"
#include "bicell/zeros.hpp"
