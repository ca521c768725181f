#pragma once

#include "mzv/coefficients.hpp"
#include "mzv/identities.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/memo.hpp"
#include "mzv/numerics.hpp"
#include "mzv/oracle.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/words.hpp"
