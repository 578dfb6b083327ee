#ifndef CARASTAR_CARASTAR_HPP
#define CARASTAR_CARASTAR_HPP

#include "carastar/analytic.hpp"
#include "carastar/criteria.hpp"
#include "carastar/disk_opt.hpp"
#include "carastar/errors.hpp"
#include "carastar/harness.hpp"
#include "carastar/report_io.hpp"
#include "carastar/subordination.hpp"

#endif
