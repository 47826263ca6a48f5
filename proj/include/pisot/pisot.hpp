#pragma once

#include "pisot/analysis.hpp"
#include "pisot/capset.hpp"
#include "pisot/errors.hpp"
#include "pisot/iet.hpp"
#include "pisot/numeration.hpp"
#include "pisot/qfield.hpp"
#include "pisot/spectrum.hpp"
#include "pisot/window.hpp"
