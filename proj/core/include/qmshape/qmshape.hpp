// Copyright 2026 The qmshape Authors
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

#include "qmshape/bessel.hpp"
#include "qmshape/converter.hpp"
#include "qmshape/driving.hpp"
#include "qmshape/dynamics.hpp"
#include "qmshape/error.hpp"
#include "qmshape/gaussian.hpp"
#include "qmshape/grid.hpp"
#include "qmshape/kernels.hpp"
#include "qmshape/modes.hpp"
#include "qmshape/profile.hpp"
#include "qmshape/schmidt.hpp"
#include "qmshape/shaper.hpp"
