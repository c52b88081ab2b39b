// Copyright 2026 The lattice-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lattice_interp/constants.hpp"
#include "lattice_interp/curves.hpp"
#include "lattice_interp/eigensolvers.hpp"
#include "lattice_interp/errors.hpp"
#include "lattice_interp/fourier_side.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/higher_order.hpp"
#include "lattice_interp/lattice.hpp"
#include "lattice_interp/lattice_oracle.hpp"
#include "lattice_interp/numerics.hpp"
#include "lattice_interp/parallel.hpp"
#include "lattice_interp/sharp_constant.hpp"
#include "lattice_interp/specfun.hpp"
#include "lattice_interp/spectral.hpp"
#include "lattice_interp/verify.hpp"
