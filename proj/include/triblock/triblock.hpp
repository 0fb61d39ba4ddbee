#pragma once

#include "triblock/error.hpp"
#include "triblock/picard.hpp"
#include "triblock/kclass.hpp"
#include "triblock/blockcalc.hpp"
#include "triblock/markov.hpp"
#include "triblock/catalog.hpp"
#include "triblock/weyl.hpp"
#include "triblock/io.hpp"
