#pragma once

#include "qpart/checked_int.hpp"
#include "qpart/classical.hpp"
#include "qpart/colored.hpp"
#include "qpart/identities.hpp"
#include "qpart/laurent.hpp"
#include "qpart/parallel.hpp"
#include "qpart/report.hpp"
#include "qpart/series.hpp"
