#pragma once

// Structured 2x2 complex matrices a I + b phi, their closed-form matrix
// exponential, the fast parity power rule, and acoustic transfer-matrix
// cascades built on alpha = S/c.

#include "chain_io.hpp"
#include "duct.hpp"
#include "errors.hpp"
#include "mat2.hpp"
#include "matexp.hpp"
#include "tclass.hpp"
