#pragma once

#include "hermitian/curve.hpp"
#include "hermitian/errors.hpp"
#include "hermitian/field.hpp"
#include "hermitian/integer.hpp"
#include "hermitian/linalg.hpp"
#include "hermitian/onepoint.hpp"
#include "hermitian/picard.hpp"
#include "hermitian/prospector.hpp"
#include "hermitian/weight.hpp"
#include "hermitian/zeta.hpp"
