#pragma once

#include "proflik/dataset.hpp"
#include "proflik/errors.hpp"
#include "proflik/likelihood.hpp"
#include "proflik/model.hpp"
#include "proflik/noise.hpp"
#include "proflik/numfmt.hpp"
#include "proflik/optimize.hpp"
#include "proflik/parameter_vector.hpp"
#include "proflik/predict.hpp"
#include "proflik/profile.hpp"
#include "proflik/rng.hpp"
#include "proflik/specfun.hpp"
