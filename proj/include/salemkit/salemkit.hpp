/*
   Copyright 2026 The salemkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SALEMKIT_SALEMKIT_HPP
#define SALEMKIT_SALEMKIT_HPP

#include "bounds.hpp"
#include "certify.hpp"
#include "construct.hpp"
#include "cyclo.hpp"
#include "error.hpp"
#include "interlace.hpp"
#include "interval.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "primes.hpp"
#include "sturm.hpp"
#include "trace_polynomial.hpp"

#endif // SALEMKIT_SALEMKIT_HPP
