#pragma once

#include "theta/arith.hpp"
#include "theta/cosets.hpp"
#include "theta/errors.hpp"
#include "theta/kernels.hpp"
#include "theta/multiplier.hpp"
#include "theta/oracle.hpp"
#include "theta/residue_lemmas.hpp"
#include "theta/root24.hpp"
#include "theta/sl2z.hpp"
#include "theta/verify.hpp"
