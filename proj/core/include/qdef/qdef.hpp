#pragma once

#include "qdef/algebra.hpp"
#include "qdef/colour.hpp"
#include "qdef/coupling.hpp"
#include "qdef/hopf.hpp"
#include "qdef/json.hpp"
#include "qdef/qarith.hpp"
#include "qdef/report.hpp"
#include "qdef/reps.hpp"
