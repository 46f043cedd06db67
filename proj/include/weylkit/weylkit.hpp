#ifndef WEYLKIT_WEYLKIT_HPP
#define WEYLKIT_WEYLKIT_HPP

#include "weylkit/errors.hpp"
#include "weylkit/raster.hpp"
#include "weylkit/planar_geometry.hpp"
#include "weylkit/spectral_sets.hpp"
#include "weylkit/connectivity.hpp"
#include "weylkit/weyl_checker.hpp"
#include "weylkit/symbol.hpp"
#include "weylkit/symbol_parser.hpp"
#include "weylkit/quadrature.hpp"
#include "weylkit/eigen_solver.hpp"
#include "weylkit/bergman_toeplitz.hpp"
#include "weylkit/operator_catalog.hpp"
#include "weylkit/json_io.hpp"

#endif  // WEYLKIT_WEYLKIT_HPP
