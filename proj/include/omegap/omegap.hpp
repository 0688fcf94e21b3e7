// Umbrella header.
#pragma once

#include "omegap/certify.hpp"
#include "omegap/io.hpp"
#include "omegap/laws.hpp"
#include "omegap/matrix.hpp"
#include "omegap/pnorm.hpp"
#include "omegap/radius.hpp"
#include "omegap/random.hpp"
#include "omegap/report_io.hpp"
#include "omegap/schatten.hpp"
#include "omegap/suite.hpp"
#include "omegap/version.hpp"
