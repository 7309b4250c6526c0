#pragma once

#include "erdos/brute.hpp"
#include "erdos/certify.hpp"
#include "erdos/dense.hpp"
#include "erdos/digamma.hpp"
#include "erdos/divisor_sums.hpp"
#include "erdos/erdosian.hpp"
#include "erdos/factored.hpp"
#include "erdos/golden.hpp"
#include "erdos/l_one.hpp"
#include "erdos/moments.hpp"
#include "erdos/okada.hpp"
#include "erdos/products.hpp"
#include "erdos/rational.hpp"
#include "erdos/serialize.hpp"
#include "erdos/sieve.hpp"
