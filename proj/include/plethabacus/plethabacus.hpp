#pragma once

#include "plethabacus/abacus.hpp"
#include "plethabacus/error.hpp"
#include "plethabacus/json_io.hpp"
#include "plethabacus/oracle.hpp"
#include "plethabacus/partition.hpp"
#include "plethabacus/schur_expansion.hpp"
#include "plethabacus/strips.hpp"
#include "plethabacus/symfunc.hpp"
#include "plethabacus/verify.hpp"
