// Copyright 2026 The permlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMLO_PERMLO_HPP
#define PERMLO_PERMLO_HPP

#include "permlo/charfn.hpp"
#include "permlo/core/enumeration.hpp"
#include "permlo/core/instance.hpp"
#include "permlo/core/moments.hpp"
#include "permlo/core/monte_carlo.hpp"
#include "permlo/dio.hpp"
#include "permlo/error.hpp"
#include "permlo/gap.hpp"
#include "permlo/io.hpp"
#include "permlo/lcd.hpp"
#include "permlo/parallel.hpp"
#include "permlo/polyroots/descartes.hpp"
#include "permlo/polyroots/experiments.hpp"
#include "permlo/polyroots/polynomial.hpp"
#include "permlo/polyroots/real_roots.hpp"
#include "permlo/polyroots/weights.hpp"
#include "permlo/rational.hpp"
#include "permlo/rng.hpp"
#include "permlo/stats.hpp"

#endif  // PERMLO_PERMLO_HPP
