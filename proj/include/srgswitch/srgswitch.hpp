#pragma once

#include "srgswitch/bits.hpp"
#include "srgswitch/canon.hpp"
#include "srgswitch/catalog.hpp"
#include "srgswitch/config.hpp"
#include "srgswitch/closure.hpp"
#include "srgswitch/embedding.hpp"
#include "srgswitch/error.hpp"
#include "srgswitch/exact_rank.hpp"
#include "srgswitch/families.hpp"
#include "srgswitch/graph.hpp"
#include "srgswitch/graph6.hpp"
#include "srgswitch/rational.hpp"
#include "srgswitch/search.hpp"
#include "srgswitch/srg.hpp"
#include "srgswitch/switching.hpp"
#include "srgswitch/two_graph.hpp"
