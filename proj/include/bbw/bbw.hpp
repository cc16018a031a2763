#pragma once

#include "bbw/bott.hpp"
#include "bbw/grassmann.hpp"
#include "bbw/schur.hpp"
#include "bbw/totalspace.hpp"
#include "bbw/weights.hpp"
