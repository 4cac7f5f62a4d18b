#pragma once
// Umbrella header for the wlink core library.

#include "wlink/errors.hpp"
#include "wlink/klt.hpp"
#include "wlink/milnor.hpp"
#include "wlink/moduli.hpp"
#include "wlink/number.hpp"
#include "wlink/orb.hpp"
#include "wlink/scan.hpp"
#include "wlink/topo.hpp"
#include "wlink/wring.hpp"
