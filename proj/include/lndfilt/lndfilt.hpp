#pragma once

#include "lndfilt/automorphisms.hpp"
#include "lndfilt/families.hpp"
#include "lndfilt/filtration.hpp"
#include "lndfilt/lnd_search.hpp"
#include "lndfilt/selftest.hpp"
