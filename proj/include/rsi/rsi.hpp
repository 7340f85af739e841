#pragma once

#include "rsi/cli.hpp"
#include "rsi/errors.hpp"
#include "rsi/model.hpp"
#include "rsi/operators.hpp"
#include "rsi/report.hpp"
#include "rsi/sampling.hpp"
#include "rsi/specfun.hpp"
#include "rsi/verify.hpp"
#include "rsi/wavefun.hpp"
