#pragma once

#include "devlat/adjust.hpp"
#include "devlat/amalgam.hpp"
#include "devlat/deviation.hpp"
#include "devlat/errors.hpp"
#include "devlat/io.hpp"
#include "devlat/lattice.hpp"
#include "devlat/poset.hpp"
#include "devlat/rational.hpp"
#include "devlat/semilinear.hpp"
#include "devlat/vlat.hpp"
#include "devlat/vlterm.hpp"
#include "devlat/witness.hpp"
