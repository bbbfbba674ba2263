#pragma once

#include "ergo/bounds.hpp"
#include "ergo/ergotropy.hpp"
#include "ergo/errors.hpp"
#include "ergo/linalg.hpp"
#include "ergo/majorization.hpp"
#include "ergo/oracles.hpp"
#include "ergo/states.hpp"
#include "ergo/version.hpp"
