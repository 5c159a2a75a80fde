// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "skyplan/antenna.hpp"
#include "skyplan/capacity.hpp"
#include "skyplan/channel.hpp"
#include "skyplan/config.hpp"
#include "skyplan/errors.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/montecarlo.hpp"
#include "skyplan/power.hpp"
#include "skyplan/ppp.hpp"
#include "skyplan/quadrature.hpp"
#include "skyplan/rng.hpp"
#include "skyplan/sweep.hpp"
#include "skyplan/validate.hpp"
