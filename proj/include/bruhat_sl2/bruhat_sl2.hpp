#ifndef BRUHAT_SL2_BRUHAT_SL2_HPP
#define BRUHAT_SL2_BRUHAT_SL2_HPP

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/diagnostics.hpp"
#include "bruhat_sl2/errors.hpp"
#include "bruhat_sl2/interval.hpp"
#include "bruhat_sl2/linear_operator.hpp"
#include "bruhat_sl2/permutation.hpp"
#include "bruhat_sl2/polynomial.hpp"
#include "bruhat_sl2/schubert.hpp"
#include "bruhat_sl2/serialize.hpp"
#include "bruhat_sl2/sl2.hpp"
#include "bruhat_sl2/sperner.hpp"

#endif  // BRUHAT_SL2_BRUHAT_SL2_HPP
